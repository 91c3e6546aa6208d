#pragma once

#include "ordens/density.hpp"
#include "ordens/parse.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace ordens;

inline FieldSpec field_of(std::int64_t d) { return d == 0 ? FieldSpec::rationals() : FieldSpec::quadratic(d); }

inline Element el(const FieldSpec& f, const std::string& text) { return parse_element(text, f); }

/// Radicands covering every cyclotomic class: Q, Q(i), Q(sqrt -3),
/// Q(sqrt +-2), real and imaginary fields outside the 2-power tower, and
/// Q(sqrt 5), Q(sqrt -7) which sit in the 5- and 7-cyclotomic fields.
inline const std::vector<std::int64_t>& radicands() {
    static const std::vector<std::int64_t> ds{0, -1, -3, 2, -2, 3, -5, 5, -7, 6, -15, 7};
    return ds;
}

inline Rational random_rational(std::mt19937_64& rng, long max_abs) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Element random_element(std::mt19937_64& rng, const FieldSpec& f, long max_abs) {
    const Rational x = random_rational(rng, max_abs);
    const Rational y = f.is_rationals() ? Rational() : random_rational(rng, max_abs);
    return Element(f, x, y);
}

inline Element random_nonzero(std::mt19937_64& rng, const FieldSpec& f, long max_abs) {
    for (;;) {
        Element e = random_element(rng, f, max_abs);
        if (!e.is_zero()) return e;
    }
}

}  // namespace testing_support
