#include "support.hpp"

#include "ordens/poly.hpp"
#include "ordens/prime_scan.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ordens;
using namespace testing_support;

namespace {

bool contains(const std::vector<Element>& v, const Element& e) { return std::find(v.begin(), v.end(), e) != v.end(); }

std::size_t mu_ell_count(const FieldSpec& f, unsigned long ell) {
    if (ell == 2) return 2;
    return (ell == 3 && !f.is_rationals() && f.d() == -3) ? 3 : 1;
}

// Every ell^k-th root of c, by iterating lth_roots over all branches.
std::vector<Element> iterated_roots(const Element& c, unsigned long ell, unsigned long k) {
    std::vector<Element> level{c};
    for (unsigned long i = 0; i < k && !level.empty(); ++i) {
        std::vector<Element> next;
        for (const Element& e : level)
            for (const Element& r : lth_roots(e, ell)) next.push_back(r);
        level = std::move(next);
    }
    return level;
}

}  // namespace

TEST_CASE("integer polynomial root isolation") {
    // (x - 3)(x + 5)(x - 7)(x^2 + 1)
    const poly::IntPoly p{Integer(105), Integer(-29), Integer(100), Integer(-28), Integer(-5), Integer(1)};
    CHECK(poly::integer_roots(p) == std::vector<Integer>{Integer(-5), Integer(3), Integer(7)});
    // x^2 - 1/4
    const poly::RatPoly q{Rational::parse("-1/4"), Rational(0), Rational(1)};
    CHECK(poly::rational_roots_monic(q) == std::vector<Rational>{Rational::parse("-1/2"), Rational::parse("1/2")});
    // x^2 - 2 has no rational root
    CHECK(poly::rational_roots_monic({Rational(-2), Rational(0), Rational(1)}).empty());
}

TEST_CASE("integer polynomial roots agree with a brute-force scan") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> root(-12, 12);
    for (int i = 0; i < 200; ++i) {
        // product of (x - r_j) times x^2 + c with c > 0 (no real roots)
        poly::IntPoly p{Integer(1 + static_cast<long>(i % 5)), Integer(0), Integer(1)};
        const int k = 1 + i % 3;
        for (int j = 0; j < k; ++j) {
            const Integer r(root(rng));
            poly::IntPoly next(p.size() + 1, Integer(0));
            for (std::size_t e = 0; e < p.size(); ++e) {
                next[e + 1] += p[e];
                next[e] -= r * p[e];
            }
            p = next;
        }
        std::vector<Integer> brute;
        for (long x = -40; x <= 40; ++x)
            if (poly::eval(p, Integer(x)) == 0) brute.push_back(Integer(x));
        CHECK(poly::integer_roots(p) == brute);
    }
}

TEST_CASE("roots of unity") {
    const auto q_i = roots_of_unity(FieldSpec::quadratic(-1), 2);
    CHECK(q_i.t == 2);
    CHECK(q_i.elements.size() == 4);
    const auto q_m3 = roots_of_unity(FieldSpec::quadratic(-3), 3);
    CHECK(q_m3.t == 1);
    CHECK(q_m3.elements.size() == 3);
    const auto q_r3 = roots_of_unity(FieldSpec::quadratic(3), 3);
    CHECK(q_r3.t == 0);
    CHECK(q_r3.elements == std::vector<Element>{Element::one(FieldSpec::quadratic(3))});
    CHECK(roots_of_unity(FieldSpec::rationals(), 2).t == 1);
    CHECK(all_roots_of_unity(FieldSpec::quadratic(-3)).size() == 6);

    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (const Element& z : all_roots_of_unity(f)) {
            const auto ord = root_of_unity_order(z);
            REQUIRE(ord.has_value());
            CHECK(z.pow(*ord) == Element::one(f));
            for (unsigned long k = 1; k < *ord; ++k) CHECK_FALSE(z.pow(k) == Element::one(f));
        }
        CHECK_FALSE(root_of_unity_order(el(f, "2")).has_value());
    }
}

TEST_CASE("lth_roots examples") {
    const FieldSpec m1 = FieldSpec::quadratic(-1);
    CHECK(lth_roots(el(m1, "-9"), 2) == std::vector<Element>{el(m1, "-3*i"), el(m1, "3*i")});
    CHECK(lth_roots(el(FieldSpec::rationals(), "8"), 2).empty());
    const FieldSpec r2 = FieldSpec::quadratic(2);
    CHECK(lth_roots(el(r2, "2"), 2) == std::vector<Element>{el(r2, "-1*sqrt(2)"), el(r2, "1*sqrt(2)")});
    const FieldSpec r3 = FieldSpec::quadratic(3);
    CHECK(lth_roots(el(r3, "12"), 2) == std::vector<Element>{el(r3, "-2*sqrt(3)"), el(r3, "2*sqrt(3)")});
    const FieldSpec m3 = FieldSpec::quadratic(-3);
    CHECK(lth_roots(el(m3, "8"), 3).size() == 3);
}

TEST_CASE("lth_roots is complete on all small integer bases") {
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        const long ymax = f.is_rationals() ? 0 : 5;
        for (unsigned long ell : {2UL, 3UL}) {
            for (long x = -5; x <= 5; ++x)
                for (long y = -ymax; y <= ymax; ++y) {
                    const Element b(f, Rational(x), Rational(y));
                    if (b.is_zero()) continue;
                    const Element c = b.pow(ell);
                    const std::vector<Element> roots = lth_roots(c, ell);
                    CHECK_MESSAGE(contains(roots, b), f.str() << " b=" << b.str() << " ell=" << ell);
                    CHECK(roots.size() == mu_ell_count(f, ell));
                    for (const Element& r : roots) CHECK(r.pow(ell) == c);
                    CHECK(std::is_sorted(roots.begin(), roots.end(), lex_less));
                }
        }
    }
}

TEST_CASE("lth_roots finds nothing for certified non-powers") {
    std::mt19937_64 rng(17);
    std::size_t certified = 0;
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL, 5UL}) {
            for (int i = 0; i < 10; ++i) {
                const Element c = random_nonzero(rng, f, 50);
                const auto roots = lth_roots(c, ell);
                for (const Element& r : roots) CHECK(r.pow(ell) == c);
                // a residue-field obstruction proves there is no root at all
                if (local_non_power_witness(c, ell, 20000)) {
                    ++certified;
                    CHECK(roots.empty());
                }
            }
        }
    }
    CHECK(certified > 300);
}

TEST_CASE("strong indivisibility") {
    const FieldSpec m1 = FieldSpec::quadratic(-1);
    CHECK(is_strongly_indivisible(el(m1, "3*i"), 2));
    CHECK_FALSE(is_strongly_indivisible(el(m1, "2"), 2));
    const FieldSpec r2 = FieldSpec::quadratic(2);
    CHECK(is_strongly_indivisible(el(r2, "1*sqrt(2)"), 2));
    CHECK(indivisibility(el(m1, "i"), 2) == Indivisibility::root_of_unity);
    CHECK(indivisibility(el(FieldSpec::rationals(), "-4"), 2) == Indivisibility::has_twisted_root);
}

TEST_CASE("decompose examples") {
    const FieldSpec m1 = FieldSpec::quadratic(-1);
    auto dec = decompose(el(m1, "4"), 2);
    CHECK(dec.kind == DecompCase::power_times_unit);
    CHECK(dec.d == 2);
    CHECK(dec.b == el(m1, "1+1*sqrt(-1)"));
    CHECK(dec.xi == el(m1, "-1"));
    CHECK(dec.r == 1);

    const FieldSpec r2 = FieldSpec::quadratic(2);
    dec = decompose(el(r2, "16"), 2);
    CHECK(dec.kind == DecompCase::power);
    CHECK(dec.d == 3);
    CHECK(dec.b == el(r2, "1*sqrt(2)"));

    const FieldSpec m3 = FieldSpec::quadratic(-3);
    dec = decompose(el(m3, "8*zeta3"), 3);
    CHECK(dec.kind == DecompCase::power_times_unit);
    CHECK(dec.d == 1);
    CHECK(dec.b == el(m3, "2"));
    CHECK(dec.xi == el(m3, "zeta3"));
    CHECK(dec.r == 1);

    dec = decompose(el(m1, "-9"), 2);
    CHECK(dec.kind == DecompCase::power);
    CHECK(dec.d == 1);
    CHECK(dec.b == el(m1, "3*i"));
    CHECK(dec.r == 0);

    dec = decompose(el(m1, "-i"), 2);
    CHECK(dec.kind == DecompCase::trivial_root_of_unity);
    CHECK(dec.xi == el(m1, "-i"));

    CHECK_THROWS_AS(decompose(Element::zero(m1), 2), DomainError);
}

TEST_CASE("decompose round-trips and is maximal") {
    std::mt19937_64 rng(23);
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL}) {
            const std::vector<Element> mu = roots_of_unity(f, ell).elements;
            std::uniform_int_distribution<std::size_t> pick(0, mu.size() - 1);
            std::uniform_int_distribution<unsigned long> depth(0, 3);
            for (int i = 0; i < 12; ++i) {
                const Element base = random_nonzero(rng, f, 9);
                if (root_of_unity_order(base)) continue;
                const unsigned long k = depth(rng);
                unsigned long ek = 1;
                for (unsigned long j = 0; j < k; ++j) ek *= ell;
                const Element a = base.pow(ek) * mu[pick(rng)];
                const Decomposition dec = decompose(a, ell);
                INFO(f.str(), " a=", a.str(), " ell=", ell);
                REQUIRE(dec.kind != DecompCase::trivial_root_of_unity);
                CHECK(dec.d >= k);

                unsigned long ed = 1;
                for (unsigned long j = 0; j < dec.d; ++j) ed *= ell;
                CHECK(dec.b.pow(ed) * dec.xi == a);
                CHECK(is_strongly_indivisible(dec.b, ell));
                unsigned long er = 1;
                for (unsigned long j = 0; j < dec.r; ++j) er *= ell;
                CHECK(*root_of_unity_order(dec.xi) == er);
                CHECK((dec.kind == DecompCase::power) == (dec.xi == Element::one(f)));

                // no twist of a has an ell^(d+1)-th root
                for (const Element& z : mu) CHECK(iterated_roots(a / z, ell, dec.d + 1).empty());

                // (d, r) do not depend on which representation is chosen
                for (const Element& u : mu) {
                    const Decomposition other = decompose(a * u.pow(ed), ell);
                    CHECK(other.d == dec.d);
                    CHECK(other.r == dec.r);
                    CHECK(other.kind == dec.kind);
                }
                const Decomposition conj = decompose(a.conjugate(), ell);
                CHECK(conj.d == dec.d);
                CHECK(conj.r == dec.r);
            }
        }
    }
}

TEST_CASE("raised(k) matches decomposing the explicit power") {
    std::mt19937_64 rng(29);
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (unsigned long ell : {2UL, 3UL}) {
            const std::vector<Element> mu = all_roots_of_unity(f);
            for (int i = 0; i < 6; ++i) {
                const Element a = random_nonzero(rng, f, 6) * mu[static_cast<std::size_t>(i) % mu.size()];
                const Decomposition dec = decompose(a, ell);
                for (unsigned long k = 1; k <= 3; ++k) {
                    unsigned long ek = 1;
                    for (unsigned long j = 0; j < k; ++j) ek *= ell;
                    const Decomposition direct = decompose(a.pow(ek), ell);
                    const Decomposition fast = dec.raised(k);
                    INFO(f.str(), " a=", a.str(), " ell=", ell, " k=", k);
                    CHECK(fast.kind == direct.kind);
                    CHECK(fast.d == direct.d);
                    CHECK(fast.r == direct.r);
                    CHECK(fast.xi == direct.xi);
                    if (direct.kind != DecompCase::trivial_root_of_unity) CHECK(fast.b == direct.b);
                }
            }
        }
    }
}
