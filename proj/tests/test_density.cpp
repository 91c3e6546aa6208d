#include "support.hpp"

#include "ordens/golden.hpp"

#include <doctest.h>

using namespace ordens;
using namespace testing_support;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

Rational D(std::int64_t d, const char* a, unsigned long ell, unsigned long n = 0) {
    const FieldSpec f = field_of(d);
    return density(el(f, a), ell, n).value;
}

const char* const kElements[] = {"2",  "-2", "3",   "-3",  "4",    "-4",   "9",   "16",  "-16",
                                 "81", "6",  "1/2", "-27", "2^9",  "5/9",  "12",  "-1/8", "7"};

}  // namespace

TEST_CASE("closed-form examples") {
    CHECK(D(3, "2", 3) == r("5/8"));
    CHECK(D(-1, "-4", 2) == r("2/3"));
    CHECK(D(2, "16", 2) == r("5/6"));
    CHECK(D(-3, "2^9*zeta3", 3) == r("1/36"));
    CHECK(D(-3, "zeta3", 3) == r("0"));
    CHECK(D(-3, "zeta3", 2) == r("1"));
    CHECK(D(-1, "i", 2) == r("0"));
    CHECK(D(0, "-1", 3) == r("1"));
    CHECK(D(0, "3", 2, 2) == r("1/6"));
    CHECK(D(0, "2", 2, 1) == r("7/24"));
}

TEST_CASE("series examples") {
    CHECK(density_series(el(FieldSpec::quadratic(3), "2"), 3).value == r("5/8"));
    CHECK(density_series(el(FieldSpec::quadratic(-1), "4*i"), 2).value == r("1/24"));
    CHECK(density_series(el(FieldSpec::quadratic(3), "-81"), 2).value == r("1/24"));
    CHECK_THROWS_AS(density_series(el(FieldSpec::quadratic(-1), "i"), 2), DomainError);
}

TEST_CASE("derivation trace") {
    const DensityValue v = density(el(FieldSpec::quadratic(3), "2"), 2, 0);
    CHECK(v.derivation.family == "noncyclic-two");
    CHECK(v.derivation.epsilon == r("1/2"));
    CHECK(v.derivation.s == 2);
    const DensityValue w = density(el(FieldSpec::quadratic(-3), "8*zeta3"), 3, 0);
    CHECK(w.derivation.family == "cyclotomic-trivial");
    CHECK(w.derivation.kind == DecompCase::power_times_unit);
    CHECK(w.derivation.d == 1);
    CHECK(w.derivation.r == 1);
    const DensityValue x = density(el(FieldSpec::quadratic(5), "2"), 3, 0);
    CHECK(x.derivation.family == "cyclotomic-nontrivial");
    CHECK(density(el(FieldSpec::rationals(), "3"), 2, 2).derivation.family == "valuation-difference");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(density(Element::zero(FieldSpec::rationals()), 2, 0), DomainError);
    CHECK_THROWS_AS(density(el(FieldSpec::rationals(), "2"), 4, 0), DomainError);
}

TEST_CASE("closed form equals the series on every field class") {
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL, 5UL, 7UL}) {
            for (const char* a : kElements) {
                const Element e = el(f, a);
                INFO(f.str(), " a=", a, " ell=", ell);
                CHECK(density_closed(e, ell).value == density_series(e, ell).value);
            }
        }
    }
}

TEST_CASE("valuation densities: telescoping, range and the raised shortcut") {
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL}) {
            for (const char* a : kElements) {
                const Element e = el(f, a);
                const Decomposition dec = decompose(e, ell);
                INFO(f.str(), " a=", a, " ell=", ell);
                Rational sum;
                Element power = e;
                for (unsigned long n = 0; n <= 6; ++n) {
                    const Rational v = density(dec, n).value;
                    CHECK(v.sign() >= 0);
                    CHECK(v <= Rational(1));
                    sum += v;
                    CHECK(sum == density_closed(dec.raised(n)).value);
                    // explicit exponentiation agrees with the shortcut
                    if (n <= 3) CHECK(density_closed(power, ell).value == density_closed(dec.raised(n)).value);
                    power = power.pow(ell);
                }
                CHECK(sum <= Rational(1));
            }
        }
    }
}

TEST_CASE("density is invariant under powers prime to ell") {
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL, 5UL}) {
            for (const char* a : kElements) {
                const Element e = el(f, a);
                const Rational base = density_closed(e, ell).value;
                for (unsigned long k : {2UL, 3UL, 5UL, 7UL}) {
                    if (k % ell == 0) continue;
                    CHECK(density_closed(e.pow(k), ell).value == base);
                }
            }
        }
    }
}

TEST_CASE("sign identities over Q") {
    const FieldSpec q = FieldSpec::rationals();
    for (const char* a : {"2", "3", "5", "6", "7", "4", "9", "16", "1/2", "2/3", "8", "12", "256", "3^8"}) {
        const Element e = el(q, a);
        INFO("a=", a);
        CHECK(density(e, 2, 1).value == density(-e, 2, 0).value);
        CHECK(density(-e, 2, 1).value == density(e, 2, 0).value);
        for (unsigned long n = 2; n <= 6; ++n) CHECK(density(e, 2, n).value == density(-e, 2, n).value);
    }
}

TEST_CASE("shape checks") {
    auto rep = shape_check(el(FieldSpec::quadratic(3), "2"), 3);
    CHECK(rep.shape == Shape::degree_formula);
    CHECK(rep.holds);
    CHECK(rep.value == r("5/8"));

    rep = shape_check(el(FieldSpec::quadratic(-3), "8"), 3);
    CHECK(rep.shape == Shape::reciprocal_family);
    CHECK(rep.holds);
    CHECK(rep.complement);
    CHECK(rep.exponent == 0UL);

    for (const char* a : {"2*i", "-2*i"}) {
        rep = shape_check(el(FieldSpec::quadratic(-1), a), 2);
        CHECK(rep.shape == Shape::reciprocal_family);
        CHECK(rep.holds);
        CHECK_FALSE(rep.complement);
        CHECK(rep.value == r("1/3"));
    }

    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL, 5UL, 7UL})
            for (const char* a : kElements) {
                INFO(f.str(), " a=", a, " ell=", ell);
                CHECK(shape_check(el(f, a), ell).holds);
            }
    }
}

TEST_CASE("golden table 1 closed forms") {
    CHECK(table1_expected(true, 0, false, 0) == r("7/24"));
    CHECK(table1_expected(true, 1, false, 0) == r("7/12"));
    CHECK(table1_expected(true, 1, true, 0) == r("1/3"));
    CHECK(table1_expected(false, 0, false, 2) == r("1/6"));
    for (int w = 1; w <= 4; ++w)
        for (const GoldenRow& row : evaluate_table(w)) {
            INFO("table ", w, " ", row.entry.label);
            CHECK(row.match);
        }
    CHECK(golden_table(2).size() == 12);
    CHECK(golden_table(3).size() == 18);
    CHECK(golden_table(4).size() == 24);
    CHECK(golden_table(1).size() == 120);
    CHECK_THROWS_AS(golden_table(5), std::out_of_range);
}
