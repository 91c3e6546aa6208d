#pragma once

#include "ordens/kummer.hpp"

#include <optional>
#include <string>

namespace ordens {

enum class DensityMethod { closed_form, series, root_of_unity };

std::string to_string(DensityMethod m);

/// Which formula produced a density, with the parameters it used.
struct Derivation {
    DensityMethod method = DensityMethod::closed_form;
    /// "cyclotomic-nontrivial", "cyclotomic-trivial", "noncyclic-two",
    /// "root-of-unity", "valuation-difference", or "series".
    std::string family;
    std::string branch;
    DecompCase kind = DecompCase::power;
    unsigned long d = 0;
    unsigned long r = 0;
    unsigned t = 0;
    unsigned s = 0;
    /// 1/2 when K(sqrt b) lies in the 2-power cyclotomic tower, else 1;
    /// present for ell = 2 without zeta4 only.
    std::optional<Rational> epsilon;
    unsigned long n = 0;
};

/// Density of primes p of K with v_ell(ord(a mod p)) = n, in [0, 1].
struct DensityValue {
    Rational value;
    Derivation derivation;
};

/// D_ell(a) = D_ell(a, 0) from the closed forms. Roots of unity give 1 when
/// their order is prime to ell and 0 otherwise. Throws DomainError for a = 0.
DensityValue density_closed(const Element& a, unsigned long ell);
DensityValue density_closed(const Decomposition& dec);

/// D_ell(a, n) = D_ell(a^(ell^n)) - D_ell(a^(ell^(n-1))) for n >= 1. The
/// powers are handled through Decomposition::raised, which is exact.
DensityValue density(const Element& a, unsigned long ell, unsigned long n);
DensityValue density(const Decomposition& dec, unsigned long n);

/// D_ell(a) as the sum over i >= 0 of
///   1/[K_{ell^i}(ell^i-th root of a) : K] - 1/[K_{ell^(i+1)}(ell^i-th root of a) : K]
/// built only from cyclotomic_degree and kummer_relative_degree. Terms are
/// summed up to M = d + r + t + s + 4; the last three terms must shrink by
/// ell^2 each, and the remaining geometric tail is added exactly. A failed
/// stabilization check throws std::logic_error. Roots of unity are rejected
/// with DomainError.
DensityValue density_series(const Element& a, unsigned long ell);
DensityValue density_series(const Decomposition& dec);

/// Which simplified shape a density must have.
enum class Shape {
    not_applicable,
    /// zeta_ell not in K and t = 1:
    /// D = 1 - (1/[K(zeta_ell):K]) * ell^(1-d) / (ell+1).
    degree_formula,
    /// zeta_ell in K (ell odd) or zeta4 in K:
    /// D = 1 - 1/(ell^k (ell+1)) or D = 1/(ell^k (ell+1)) for some k >= 0.
    reciprocal_family,
};

std::string to_string(Shape s);

struct ShapeReport {
    Shape shape = Shape::not_applicable;
    bool holds = true;
    Rational value;
    /// degree_formula: the predicted value.
    std::optional<Rational> expected;
    /// reciprocal_family: the exponent k that matched.
    std::optional<unsigned long> exponent;
    /// reciprocal_family: true for the 1 - 1/(...) form.
    bool complement = false;
};

ShapeReport shape_check(const Element& a, unsigned long ell);

}  // namespace ordens
