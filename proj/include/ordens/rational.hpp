#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ordens {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;  // throws std::domain_error on zero
    Rational pow(unsigned long k) const;

    /// Canonical "p/q" (or "p" when the denominator is 1).
    std::string str() const;
    /// Fixed-point decimal approximation, rounded half away from zero.
    std::string decimal(int digits = 6) const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// ell^e as an exact rational; negative exponents give 1/ell^|e|.
Rational rational_power(long ell, long e);

/// Exact integer k-th root, if it exists. For even k only the nonnegative
/// root is returned.
std::optional<Integer> integer_nth_root(const Integer& v, unsigned long k);

/// All rationals r with r^k = q. Empty when q has no rational k-th root;
/// for even k both signs are returned (positive first), for odd k the
/// unique real root.
std::vector<Rational> rational_nth_root(const Rational& q, unsigned long k);

/// Exponent of the prime ell in |v| (v nonzero).
unsigned long valuation(const Integer& v, unsigned long ell);
unsigned long valuation(std::uint64_t v, std::uint64_t ell);

bool is_prime(std::uint64_t n);

}  // namespace ordens
