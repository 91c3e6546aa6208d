#include "ordens/kummer.hpp"

#include <algorithm>

namespace ordens {

namespace {

Integer ell_pow(unsigned long ell, long e) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), ell, static_cast<unsigned long>(std::max(0L, e)));
    return v;
}

long as_long(unsigned long v) { return static_cast<long>(v); }

// Degree for a = b^(2^d), ell = 2, zeta4 not in K.
Integer noncyclic_power_degree(const KummerQuery& q) {
    const long n = as_long(q.n);
    const long d = as_long(q.decomp.d);
    if (q.special && q.m >= q.profile.s + 1UL) return ell_pow(2, n - d - 1);
    return ell_pow(2, n - d);
}

}  // namespace

Integer kummer_relative_degree(const KummerQuery& q) {
    if (q.m == 0) throw DomainError("Kummer query needs m >= 1");
    if (q.n > q.m) throw DomainError("Kummer query needs n <= m");
    if (q.decomp.kind == DecompCase::trivial_root_of_unity)
        throw DomainError("Kummer degree of a root of unity is not handled by the degree formulas");
    if (q.n == 0) return 1;

    const unsigned long ell = q.profile.ell;
    const long n = as_long(q.n);
    const long d = as_long(q.decomp.d);

    if (!q.profile.noncyclic_two()) {
        if (q.decomp.kind == DecompCase::power) return ell_pow(ell, n - d);
        // the fields K_{ell^m} coincide for 1 <= m <= t
        const long m = std::max(as_long(q.m), static_cast<long>(q.profile.t));
        const long r = as_long(q.decomp.r);
        return ell_pow(ell, std::max({0L, n - d, n + r - m}));
    }

    const Integer h = noncyclic_power_degree(q);
    if (q.decomp.kind == DecompCase::power) return h;

    // a = -b^(2^d), d > 0
    const unsigned long s = q.profile.s;
    if (q.m == 1 && q.n == 1) return 2;
    if (q.m == q.n && q.n >= s && h == 1) return 2;
    if (q.special && q.m == q.n && q.n == s && s == q.decomp.d + 1 && h == 2) return 1;
    return h;
}

Integer total_degree(const KummerQuery& q) {
    return cyclotomic_degree(q.profile, q.m) * kummer_relative_degree(q);
}

}  // namespace ordens
