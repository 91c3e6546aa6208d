#pragma once

#include "ordens/density.hpp"

#include <string>
#include <vector>

namespace ordens {

/// One published density. An entry may stand for several (field, element)
/// instances, e.g. "±3*i", or "±2" read as 2 over Q(sqrt 2) and -2 over
/// Q(sqrt -2); every instance must reproduce the expected value.
struct GoldenEntry {
    struct Instance {
        std::string field;
        std::string element;
    };
    std::string label;
    std::vector<Instance> instances;
    unsigned long ell = 2;
    unsigned long n = 0;
    Rational expected;
};

/// Tables 1-4. Table 1 (K = Q, ell = 2) is the family a = ±b^(2^d) for
/// b in {3, 2} (Q(sqrt b) different from / equal to Q(sqrt 2)), d = 0..4,
/// n = 0..5. Table 2 is ell = 3; tables 3 and 4 are ell = 2 with and
/// without zeta4. Throws std::out_of_range for other numbers.
std::vector<GoldenEntry> golden_table(int which);

/// Expected D_2(a, n) over Q for a = sign * b^(2^d), where `b_is_two_class`
/// says whether Q(sqrt b) = Q(sqrt 2).
Rational table1_expected(bool b_is_two_class, unsigned long d, bool negative, unsigned long n);

struct GoldenRow {
    GoldenEntry entry;
    std::vector<Rational> computed;
    bool match = false;
};

std::vector<GoldenRow> evaluate_table(int which);

}  // namespace ordens
