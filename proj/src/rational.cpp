#include "ordens/rational.hpp"

#include <stdexcept>

namespace ordens {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("sign without digits");
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
        }
        // mpz_class rejects a leading '+'
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s), 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be a positive integer");
    const Integer den = parse_int(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned long k) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Integer n = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
    const Integer d = q_.get_den() * 2;
    Integer scaled = n / d;  // floor(|q| * 10^digits + 1/2)
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sign() < 0 && scaled != 0 ? "-" : "") + body;
}

Rational rational_power(long ell, long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(ell),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::optional<Integer> integer_nth_root(const Integer& v, unsigned long k) {
    if (k == 0) throw std::invalid_argument("zeroth root");
    if (v < 0 && k % 2 == 0) return std::nullopt;
    Integer root;
    const int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return root;
}

std::vector<Rational> rational_nth_root(const Rational& q, unsigned long k) {
    const auto n = integer_nth_root(q.num(), k);
    if (!n) return {};
    const auto d = integer_nth_root(q.den(), k);
    if (!d) return {};
    Rational r(*n, *d);
    if (k % 2 == 0 && !r.is_zero()) return {r, -r};
    return {r};
}

unsigned long valuation(const Integer& v, unsigned long ell) {
    if (v == 0) throw std::domain_error("valuation of zero");
    Integer w = v;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(w.get_mpz_t(), ell)) {
        mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), ell);
        ++e;
    }
    return e;
}

unsigned long valuation(std::uint64_t v, std::uint64_t ell) {
    if (v == 0) throw std::domain_error("valuation of zero");
    unsigned long e = 0;
    while (v % ell == 0) {
        v /= ell;
        ++e;
    }
    return e;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % p == 0) return n == p;
    }
    Integer z(std::to_string(n), 10);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace ordens
