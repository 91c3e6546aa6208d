#pragma once

#include "ordens/field.hpp"

#include <string>

namespace ordens {

/// Classification of K ∩ Q(zeta_{2^inf}) for ell = 2: Q (trivial),
/// Q(sqrt 2) (plus), Q(sqrt -2) (minus), Q(i) (i_adjoined).
enum class TowerType { trivial, plus, minus, i_adjoined };

std::string to_string(TowerType t);

/// Cyclotomic parameters of K at ell. Writing K_m for K(zeta_{ell^m}):
///
/// - deg_K_ell = [K_1 : K].
/// - t: for odd ell, the greatest t with K_1 = K_t; for ell = 2 with
///   zeta4 in K, the greatest t with K = K_t; otherwise 1.
/// - s: ell = 2 without zeta4 only, the greatest s with K_2 = K_s
///   (0 when not applicable).
struct CycloProfile {
    unsigned long ell = 0;
    bool contains_zeta_ell = false;
    /// Whether i lies in K, independent of ell.
    bool contains_zeta4 = false;
    unsigned long deg_K_ell = 1;
    unsigned t = 1;
    unsigned s = 0;
    TowerType tower_type = TowerType::trivial;

    /// ell = 2 and zeta4 not in K: the case with a non-cyclic tower.
    bool noncyclic_two() const { return ell == 2 && !contains_zeta4; }
};

/// Finite case analysis over Q and quadratic fields. The only quadratic
/// subfield of Q(zeta_{ell^inf}) for odd ell is Q(sqrt ell*), with
/// ell* = (-1)^((ell-1)/2) ell, so t = 1 for odd ell. The quadratic
/// subfields of Q(zeta_{2^inf}) are Q(i), Q(sqrt 2) and Q(sqrt -2); K(i)
/// contains zeta8 exactly when D is 2 or -2, which gives s = 3, else s = 2.
/// Throws DomainError if ell is not prime.
CycloProfile cyclo_profile(const FieldSpec& field, unsigned long ell);

/// [K(zeta_{ell^m}) : K] for m >= 1.
Integer cyclotomic_degree(const CycloProfile& profile, unsigned long m);

/// For ell = 2 with zeta4 not in K and b strongly indivisible: whether
/// K(sqrt b) lies in K(zeta_{2^inf}). Holds iff K ∩ Q(zeta_{2^inf}) is
/// Q(zeta_{2^s} + zeta_{2^s}^-1) and b or -b is g times a square, where
/// g = zeta_{2^s} + zeta_{2^s}^-1 + 2 (2 for s = 2, 2 + sqrt 2 for s = 3).
bool special_case_flag(const FieldSpec& field, const CycloProfile& profile, const Element& b);

}  // namespace ordens
