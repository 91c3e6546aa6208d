#include "support.hpp"

#include <doctest.h>

using namespace ordens;
using namespace testing_support;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
    CHECK(Rational::parse("-10/5").str() == "-2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK(Rational(Integer(1), Integer(12)).decimal(6) == "0.083333");
    CHECK(Rational(Integer(-2), Integer(3)).decimal(6) == "-0.666667");
    CHECK(rational_power(2, -3) == Rational(Integer(1), Integer(8)));
}

TEST_CASE("rational str round-trips through parse") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational q = random_rational(rng, 1000);
        CHECK(Rational::parse(q.str()) == q);
        CHECK(Rational::parse(q.str()).str() == q.str());
    }
}

TEST_CASE("nth roots of rationals") {
    CHECK(rational_nth_root(Rational::parse("8/27"), 3) == std::vector<Rational>{Rational::parse("2/3")});
    CHECK(rational_nth_root(Rational::parse("-8/27"), 3) == std::vector<Rational>{Rational::parse("-2/3")});
    CHECK(rational_nth_root(Rational::parse("4/9"), 2) ==
          std::vector<Rational>{Rational::parse("2/3"), Rational::parse("-2/3")});
    CHECK(rational_nth_root(Rational(-4), 2).empty());
    CHECK(rational_nth_root(Rational(2), 2).empty());
    CHECK(valuation(Integer(96), 2) == 5);
    CHECK(valuation(std::uint64_t{81}, std::uint64_t{3}) == 4);
}

TEST_CASE("field specs") {
    CHECK(FieldSpec::quadratic(-1).discriminant() == -4);
    CHECK(FieldSpec::quadratic(-3).discriminant() == -3);
    CHECK(FieldSpec::quadratic(5).discriminant() == 5);
    CHECK(FieldSpec::quadratic(2).discriminant() == 8);
    CHECK(FieldSpec::rationals().discriminant() == 1);
    CHECK_THROWS_AS(FieldSpec::quadratic(8), DomainError);
    CHECK_THROWS_AS(FieldSpec::quadratic(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::quadratic(0), DomainError);
    CHECK_THROWS_AS(FieldSpec::quadratic(-12), DomainError);
    CHECK(parse_field("Q(sqrt -3)") == FieldSpec::quadratic(-3));
    CHECK(parse_field(" Q( sqrt(5) ) ") == FieldSpec::quadratic(5));
    CHECK(parse_field("QQ") == FieldSpec::rationals());
    CHECK_THROWS_AS(parse_field("Q(sqrt x)"), ParseError);
    CHECK_THROWS_AS(parse_field("R"), ParseError);
    CHECK_THROWS_AS(parse_field("Q(sqrt 4)"), DomainError);
}

TEST_CASE("element grammar") {
    const FieldSpec m3 = FieldSpec::quadratic(-3);
    const FieldSpec m1 = FieldSpec::quadratic(-1);
    const FieldSpec r2 = FieldSpec::quadratic(2);
    const FieldSpec q = FieldSpec::rationals();

    CHECK(el(m3, "zeta3") == Element(m3, Rational::parse("-1/2"), Rational::parse("1/2")));
    CHECK(el(m3, "zeta3^3") == Element::one(m3));
    CHECK(el(m1, "i^2") == Element(m1, Rational(-1)));
    CHECK(el(r2, "1/2-3/4*sqrt(2)") == Element(r2, Rational::parse("1/2"), Rational::parse("-3/4")));
    CHECK(el(r2, "-1+1*sqrt(2)") == Element(r2, Rational(-1), Rational(1)));
    CHECK(el(r2, "-3*sqrt(2)") == Element(r2, Rational(), Rational(-3)));
    CHECK(el(q, "-3^2") == Element(q, Rational(-9)));
    CHECK(el(q, "(-3)^2") == Element(q, Rational(9)));
    CHECK(el(q, "2^9") == Element(q, Rational(512)));
    CHECK(el(m1, "-4*i") == Element(m1, Rational(), Rational(-4)));
    CHECK(el(m3, "2^9*zeta3") == Element(m3, Rational(-256), Rational(256)));
    CHECK(el(r2, "(1+1*sqrt(2))^2") == Element(r2, Rational(3), Rational(2)));

    CHECK_THROWS_AS(el(q, "i"), ParseError);
    CHECK_THROWS_AS(el(r2, "zeta3"), ParseError);
    CHECK_THROWS_AS(el(r2, "1*sqrt(3)"), ParseError);
    CHECK_THROWS_AS(el(q, "1*sqrt(2)"), ParseError);
    CHECK_THROWS_AS(el(q, ""), ParseError);
    CHECK_THROWS_AS(el(q, "2+"), ParseError);
    CHECK_THROWS_AS(el(q, "1/0"), ParseError);
    CHECK_THROWS_AS(el(q, "(2"), ParseError);
}

TEST_CASE("str output parses back to the same element") {
    std::mt19937_64 rng(5);
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (int i = 0; i < 100; ++i) {
            const Element e = random_element(rng, f, 60);
            CHECK(el(f, e.str()) == e);
        }
    }
}

TEST_CASE("field axioms, conjugation and norm on random elements") {
    std::mt19937_64 rng(7);
    for (std::int64_t d : radicands()) {
        const FieldSpec f = field_of(d);
        for (int i = 0; i < 60; ++i) {
            const Element a = random_element(rng, f, 30);
            const Element b = random_element(rng, f, 30);
            const Element c = random_nonzero(rng, f, 30);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == Element::zero(f));
            CHECK(c * c.inverse() == Element::one(f));
            CHECK((a / c) * c == a);
            CHECK((a * b).norm() == a.norm() * b.norm());
            CHECK((a + b).trace() == a.trace() + b.trace());
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
            if (!f.is_rationals()) {
                CHECK(a * a.conjugate() == Element(f, a.norm()));
                CHECK(a + a.conjugate() == Element(f, a.trace()));
            }
            CHECK(a.pow(5) == a * a * a * a * a);
            CHECK(arith(a, b, ArithOp::sub) == a - b);
            CHECK(pow_int(c, 0) == Element::one(f));
        }
    }
}

TEST_CASE("mixing fields or dividing by zero is rejected") {
    const FieldSpec f = FieldSpec::quadratic(2);
    const FieldSpec g = FieldSpec::quadratic(3);
    CHECK_THROWS_AS(Element::one(f) + Element::one(g), DomainError);
    CHECK_THROWS_AS(Element::zero(f).inverse(), DomainError);
    CHECK_THROWS_AS(Element(FieldSpec::rationals(), Rational(1), Rational(1)), DomainError);
    CHECK_THROWS_AS(Element::sqrt_d(FieldSpec::rationals()), DomainError);
}
