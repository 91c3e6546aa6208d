#pragma once

#include "ordens/cyclo.hpp"
#include "ordens/roots.hpp"

namespace ordens {

/// Scalar view of a decomposition; the degree formulas need nothing else.
struct DecompParams {
    DecompCase kind = DecompCase::power;
    unsigned long d = 0;
    unsigned long r = 0;

    static DecompParams of(const Decomposition& dec) { return {dec.kind, dec.d, dec.r}; }
};

/// Degree query for K(zeta_{ell^m}, ell^n-th root of a) with n <= m.
/// `special` is the special_case_flag of b (ell = 2 without zeta4 only).
struct KummerQuery {
    unsigned long m = 1;
    unsigned long n = 0;
    DecompParams decomp;
    CycloProfile profile;
    bool special = false;
};

/// [K_{ell^m}(ell^n-th root of a) : K_{ell^m}], a power of ell.
///
/// ell odd or zeta4 in K: ell^max(0, n-d) when a = b^(ell^d), and
/// ell^max(0, n-d, n+r-m) when a = b^(ell^d) xi with m lifted to at least t.
///
/// ell = 2 without zeta4: 2^max(0, n-d), lowered to 2^max(0, n-d-1) when
/// special and m >= s+1. For a = -b^(2^d) the degree of -a is evaluated
/// first and then corrected: m = n = 1 gives 2; m = n >= s with -a-degree 1
/// gives 2; special with m = n = s = d+1 and -a-degree 2 gives 1.
///
/// n = 0 gives 1. Invalid levels and root-of-unity decompositions throw
/// DomainError.
Integer kummer_relative_degree(const KummerQuery& q);

/// [K_{ell^m}(ell^n-th root of a) : K].
Integer total_degree(const KummerQuery& q);

}  // namespace ordens
