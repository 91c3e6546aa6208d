#include "ordens/field.hpp"

namespace ordens {

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::quadratic(std::int64_t d) {
    if (d == 0 || d == 1) throw DomainError("D must not be 0 or 1");
    if (!is_squarefree(d)) throw DomainError("D = " + std::to_string(d) + " is not squarefree");
    FieldSpec f;
    f.kind_ = Kind::quadratic;
    f.d_ = d;
    return f;
}

std::int64_t FieldSpec::discriminant() const {
    if (is_rationals()) return 1;
    const std::int64_t r = ((d_ % 4) + 4) % 4;
    return r == 1 ? d_ : 4 * d_;
}

std::string FieldSpec::str() const {
    if (is_rationals()) return "Q";
    return "Q(sqrt " + std::to_string(d_) + ")";
}

Element::Element(FieldSpec field, Rational x, Rational y)
    : field_(field), x_(std::move(x)), y_(std::move(y)) {
    if (field_.is_rationals() && !y_.is_zero())
        throw DomainError("nonzero sqrt coordinate over Q");
}

Element Element::sqrt_d(const FieldSpec& f) {
    if (f.is_rationals()) throw DomainError("Q has no sqrt(D) generator");
    return Element(f, Rational(0), Rational(1));
}

void Element::require_same_field(const Element& o) const {
    if (!(field_ == o.field_))
        throw DomainError("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Element Element::conjugate() const { return Element(field_, x_, -y_); }

Rational Element::norm() const {
    if (field_.is_rationals()) return x_;
    return x_ * x_ - y_ * y_ * Rational(field_.d());
}

Rational Element::trace() const {
    if (field_.is_rationals()) return x_;
    return x_ * Rational(2);
}

Element Element::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (field_.is_rationals()) return Element(field_, x_.inverse());
    const Rational n = norm();
    return Element(field_, x_ / n, -y_ / n);
}

Element Element::pow(unsigned long k) const {
    Element result = one(field_);
    Element base = *this;
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Element& Element::operator+=(const Element& o) {
    require_same_field(o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_field(o);
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
}

Element& Element::operator*=(const Element& o) {
    require_same_field(o);
    if (field_.is_rationals()) {
        x_ *= o.x_;
        return *this;
    }
    const Rational d(field_.d());
    Rational nx = x_ * o.x_ + y_ * o.y_ * d;
    Rational ny = x_ * o.y_ + o.x_ * y_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

Element& Element::operator/=(const Element& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

std::string Element::str() const {
    if (y_.is_zero()) return x_.str();
    const std::string root = "*sqrt(" + std::to_string(field_.d()) + ")";
    if (x_.is_zero()) return y_.str() + root;
    if (y_.sign() < 0) return x_.str() + "-" + y_.abs().str() + root;
    return x_.str() + "+" + y_.str() + root;
}

bool lex_less(const Element& a, const Element& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
}

Element arith(const Element& lhs, const Element& rhs, ArithOp op) {
    switch (op) {
        case ArithOp::add: return lhs + rhs;
        case ArithOp::sub: return lhs - rhs;
        case ArithOp::mul: return lhs * rhs;
        case ArithOp::div: return lhs / rhs;
    }
    throw DomainError("unknown arithmetic op");
}

}  // namespace ordens
