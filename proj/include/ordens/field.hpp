#pragma once

#include "ordens/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordens {

/// Raised for inputs outside an operation's mathematical domain
/// (a = 0, non-squarefree D, n > m, mismatched fields, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The base field: Q, or Q(sqrt D) with D squarefree and D not in {0, 1}.
/// Q is its own kind rather than D = 1.
class FieldSpec {
public:
    enum class Kind { rationals, quadratic };

    static FieldSpec rationals() { return FieldSpec(); }
    /// Throws DomainError unless D is squarefree and D not in {0, 1}.
    static FieldSpec quadratic(std::int64_t d);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    /// Radicand D; 0 for Q.
    std::int64_t d() const { return d_; }
    /// Field discriminant: 1 for Q, D if D = 1 mod 4, else 4D.
    std::int64_t discriminant() const;

    /// "Q" or "Q(sqrt D)".
    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec() = default;
    Kind kind_ = Kind::rationals;
    std::int64_t d_ = 0;
};

bool is_squarefree(std::int64_t n);

/// x + y*sqrt(D), with y = 0 over Q. Coordinates are canonical rationals,
/// so equality is coordinate-wise.
class Element {
public:
    Element(FieldSpec field, Rational x, Rational y = Rational());

    static Element one(const FieldSpec& f) { return Element(f, Rational(1)); }
    static Element zero(const FieldSpec& f) { return Element(f, Rational(0)); }
    /// 0 + 1*sqrt(D). Throws DomainError over Q.
    static Element sqrt_d(const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const { return y_.is_zero(); }

    Element conjugate() const;
    /// x^2 - D y^2; over Q the degree-1 convention norm(x) = x.
    Rational norm() const;
    /// 2x; over Q the degree-1 convention trace(x) = x.
    Rational trace() const;
    Element inverse() const;
    Element pow(unsigned long k) const;

    /// Grammar-compatible text: "x", "y*sqrt(D)", "x+y*sqrt(D)".
    std::string str() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o);
    Element& operator/=(const Element& o);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator/(Element a, const Element& b) { return a /= b; }
    friend Element operator-(const Element& a) { return Element(a.field_, -a.x_, -a.y_); }

    friend bool operator==(const Element& a, const Element& b) {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    void require_same_field(const Element& o) const;

    FieldSpec field_;
    Rational x_;
    Rational y_;
};

/// Lexicographic (x, y) order; used to make root sets and chosen
/// representatives deterministic.
bool lex_less(const Element& a, const Element& b);

enum class ArithOp { add, sub, mul, div };

Element arith(const Element& lhs, const Element& rhs, ArithOp op);

inline Element pow_int(const Element& e, unsigned long k) { return e.pow(k); }

}  // namespace ordens
