#include "ordens/golden.hpp"

#include "ordens/parse.hpp"

#include <stdexcept>

namespace ordens {

namespace {

Rational q(const char* text) { return Rational::parse(text); }

GoldenEntry entry(std::string label, std::vector<GoldenEntry::Instance> inst, unsigned long ell, const char* value) {
    GoldenEntry e;
    e.label = std::move(label);
    e.instances = std::move(inst);
    e.ell = ell;
    e.expected = q(value);
    return e;
}

std::vector<GoldenEntry> table2() {
    const std::string r3 = "Q(sqrt 3)";
    const std::string m3 = "Q(sqrt -3)";
    return {
        entry("2", {{r3, "2"}}, 3, "5/8"),
        entry("8", {{r3, "8"}}, 3, "7/8"),
        entry("2^9", {{r3, "2^9"}}, 3, "23/24"),
        entry("3", {{r3, "3"}}, 3, "5/8"),
        entry("27", {{r3, "27"}}, 3, "7/8"),
        entry("2/3", {{r3, "2/3"}}, 3, "5/8"),
        entry("2", {{m3, "2"}}, 3, "1/4"),
        entry("8", {{m3, "8"}}, 3, "3/4"),
        entry("2^9", {{m3, "2^9"}}, 3, "11/12"),
        entry("2*zeta3", {{m3, "2*zeta3"}}, 3, "1/4"),
        entry("8*zeta3", {{m3, "8*zeta3"}}, 3, "1/12"),
        entry("2^9*zeta3", {{m3, "2^9*zeta3"}}, 3, "1/36"),
    };
}

std::vector<GoldenEntry> table3() {
    const std::string k = "Q(sqrt -1)";
    auto plain = [&](const char* a, const char* v) { return entry(a, {{k, a}}, 2, v); };
    auto twisted = [&](const char* c, const char* v) {
        const std::string s(c);
        return entry("±" + s + "*i", {{k, s + "*i"}, {k, "-" + s + "*i"}}, 2, v);
    };
    return {
        plain("3", "1/6"),   plain("-3", "1/6"),   twisted("3", "1/6"),
        plain("9", "1/3"),   plain("-9", "1/3"),   twisted("9", "1/12"),
        plain("81", "2/3"),  plain("-81", "1/6"),  twisted("81", "1/24"),
        plain("2", "1/12"),  plain("-2", "1/12"),  twisted("2", "1/3"),
        plain("4", "1/6"),   plain("-4", "2/3"),   twisted("4", "1/24"),
        plain("16", "5/6"),  plain("-16", "1/12"), twisted("16", "1/48"),
    };
}

std::vector<GoldenEntry> table4() {
    const std::string r3 = "Q(sqrt 3)";
    const std::string p2 = "Q(sqrt 2)";
    const std::string m2 = "Q(sqrt -2)";
    auto in_r3 = [&](const char* a, const char* v) { return entry(a, {{r3, a}}, 2, v); };
    auto in_pm2 = [&](const char* a, const char* v) { return entry(a, {{p2, a}, {m2, a}}, 2, v); };
    return {
        in_r3("3", "2/3"),   in_r3("-3", "1/6"),
        in_r3("9", "5/6"),   in_r3("-9", "1/12"),
        in_r3("81", "11/12"), in_r3("-81", "1/24"),
        in_r3("2", "7/24"),  in_r3("-2", "7/24"),
        in_r3("4", "7/12"),  in_r3("-4", "1/3"),
        in_r3("16", "11/12"), in_r3("-16", "1/24"),
        in_pm2("3", "7/24"), in_pm2("-3", "7/24"),
        in_pm2("9", "7/12"), in_pm2("-9", "1/12"),
        in_pm2("81", "2/3"), in_pm2("-81", "1/6"),
        // ±2 is 2 in Q(sqrt 2) and -2 in Q(sqrt -2); ∓2 the opposite
        entry("±2", {{p2, "2"}, {m2, "-2"}}, 2, "7/12"),
        entry("∓2", {{p2, "-2"}, {m2, "2"}}, 2, "1/12"),
        in_pm2("4", "2/3"),  in_pm2("-4", "1/6"),
        in_pm2("16", "5/6"), in_pm2("-16", "1/12"),
    };
}

std::vector<GoldenEntry> table1() {
    std::vector<GoldenEntry> out;
    for (bool two_class : {false, true}) {
        const std::string b = two_class ? "2" : "3";
        for (unsigned long d = 0; d <= 4; ++d) {
            for (bool negative : {false, true}) {
                const std::string a = (negative ? "-" : "") + b + "^" + std::to_string(1UL << d);
                for (unsigned long n = 0; n <= 5; ++n) {
                    GoldenEntry e;
                    e.label = "b=" + b + " d=" + std::to_string(d) + " a=" + a + " n=" + std::to_string(n);
                    e.instances = {{"Q", a}};
                    e.ell = 2;
                    e.n = n;
                    e.expected = table1_expected(two_class, d, negative, n);
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

}  // namespace

Rational table1_expected(bool b_is_two_class, unsigned long d, bool negative, unsigned long n) {
    const long dl = static_cast<long>(d);
    const long nl = static_cast<long>(n);
    const Rational half_d = rational_power(2, -dl);
    Rational pos, neg;  // D(|a|, 0) and D(-|a|, 0)
    if (!b_is_two_class) {
        pos = Rational(1) - q("2/3") * half_d;
        neg = q("1/3") * half_d;
    } else if (d == 0) {
        pos = q("7/24");
        neg = q("7/24");
    } else if (d == 1) {
        pos = q("7/12");
        neg = q("1/3");
    } else {
        pos = Rational(1) - q("1/3") * half_d;
        neg = q("1/6") * half_d;
    }
    if (n == 0) return negative ? neg : pos;
    if (n == 1) return negative ? pos : neg;
    if (!b_is_two_class) {
        if (n == 2) return q("1/6") * half_d;
        return q("2/3") * rational_power(2, -dl - nl);
    }
    if (n == 2) return d == 0 ? q("1/3") : q("1/12") * half_d;
    return q("1/3") * rational_power(2, -dl - nl);
}

std::vector<GoldenEntry> golden_table(int which) {
    switch (which) {
        case 1: return table1();
        case 2: return table2();
        case 3: return table3();
        case 4: return table4();
    }
    throw std::out_of_range("no golden table " + std::to_string(which));
}

std::vector<GoldenRow> evaluate_table(int which) {
    std::vector<GoldenRow> rows;
    for (GoldenEntry& e : golden_table(which)) {
        GoldenRow row;
        row.match = true;
        for (const auto& inst : e.instances) {
            const FieldSpec f = parse_field(inst.field);
            const Rational v = density(parse_element(inst.element, f), e.ell, e.n).value;
            row.match = row.match && v == e.expected;
            row.computed.push_back(v);
        }
        row.entry = std::move(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ordens
