#pragma once

#include "ordens/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordens {

/// The ell-power roots of unity of a field, in canonical order, together
/// with t: the greatest t such that a primitive ell^t-th root of unity lies
/// in the field.
struct RootsOfUnity {
    std::vector<Element> elements;
    unsigned t = 0;
};

/// Every root of unity of the field in canonical order:
/// Q and real fields: 1, -1; D = -1: 1, -1, i, -i;
/// D = -3: 1, zeta3, zeta3^2, -1, -zeta3, -zeta3^2.
std::vector<Element> all_roots_of_unity(const FieldSpec& field);

RootsOfUnity roots_of_unity(const FieldSpec& field, unsigned long ell);

/// Multiplicative order of e if it is a root of unity.
std::optional<unsigned long> root_of_unity_order(const Element& e);

/// Every b in the field with b^ell = c, sorted by lex_less. Over Q this is a
/// rational root; over Q(sqrt D) the candidates come from the norm-trace
/// resolvent and each one is confirmed by exact exponentiation.
std::vector<Element> lth_roots(const Element& c, unsigned long ell);

enum class Indivisibility { strongly_indivisible, has_twisted_root, root_of_unity };

/// Distinguishes roots of unity (never strongly indivisible) from elements
/// where some a*xi, xi an ell-power root of unity, is an ell-th power.
Indivisibility indivisibility(const Element& a, unsigned long ell);

inline bool is_strongly_indivisible(const Element& a, unsigned long ell) {
    return indivisibility(a, ell) == Indivisibility::strongly_indivisible;
}

enum class DecompCase { power, power_times_unit, trivial_root_of_unity };

std::string to_string(DecompCase c);

/// a = b^(ell^d) * xi with b strongly indivisible and xi an ell-power root
/// of unity of order ell^r. d is maximal; among representations with that
/// d, xi has minimal order (ties broken by the canonical root order), so
/// xi = 1 exactly when a itself is an ell^d-th power. b is the
/// lex-greatest ell^d-th root of a / xi.
///
/// For trivial_root_of_unity, xi holds the (raised) root of unity itself
/// and d, b, r are unused.
struct Decomposition {
    unsigned long ell = 0;
    /// The decomposed element is a^(ell^a_power); a_power is nonzero only
    /// for results of raised().
    Element a = Element::one(FieldSpec::rationals());
    unsigned long a_power = 0;
    DecompCase kind = DecompCase::trivial_root_of_unity;
    unsigned long d = 0;
    Element b = Element::one(FieldSpec::rationals());
    Element xi = Element::one(FieldSpec::rationals());
    unsigned long r = 0;
    /// t of roots_of_unity(field, ell), kept for the absorption rule.
    unsigned t = 0;

    /// Decomposition of a^(ell^k) without exponentiating a. d grows by k;
    /// xi^(ell^k) is absorbed into b when it becomes an ell^(d+k)-th power.
    Decomposition raised(unsigned long k) const;
};

/// Throws DomainError for a = 0 and when d exceeds the 64-level guard.
Decomposition decompose(const Element& a, unsigned long ell);

}  // namespace ordens
