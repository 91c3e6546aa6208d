#pragma once

#include "ordens/density.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ordens {

// ---------------------------------------------------------------------------
// word-size modular helpers (p < 2^32 in practice; products use 128 bits)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Kronecker symbol (a | n) for n > 0.
int kronecker(std::int64_t a, std::uint64_t n);

/// Square root of a quadratic residue a modulo an odd prime p
/// (Tonelli-Shanks). Returns nullopt for non-residues.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// ---------------------------------------------------------------------------

enum class SplitType { split, inert };

/// A prime of K above the rational prime p. Split (and Q) slots have norm
/// p; split slots carry the residue r with r^2 = D (mod p) that defines
/// them. Inert slots have norm p^2 and no residue.
struct PrimeSlot {
    std::uint64_t p = 0;
    SplitType split_type = SplitType::split;
    std::uint64_t norm = 0;
    std::optional<std::uint64_t> sqrt_residue;
};

/// Slots of norm <= norm_bound in increasing order of p. Ramified primes
/// and members of `exclusions` are skipped. For quadratic fields with odd
/// discriminant, p = 2 is skipped too: x + y sqrt D does not reduce through
/// a square root of D mod 2 there.
std::vector<PrimeSlot> enumerate(const FieldSpec& field, std::uint64_t norm_bound,
                                 const std::set<std::uint64_t>& exclusions = {});

/// Rational primes at which the reduction of a is undefined or zero:
/// divisors of ell * disc_K * L * (X^2 - D Y^2) for a = (X + Y sqrt D) / L,
/// restricted to p <= limit.
std::set<std::uint64_t> bad_primes(const Element& a, unsigned long ell, std::uint64_t limit);

/// v_ell of the multiplicative order of a mod the slot's prime. The caller
/// guarantees the reduction is a unit; otherwise DomainError is thrown.
unsigned long order_valuation(const Element& a, const PrimeSlot& slot, unsigned long ell);

struct ScanOptions {
    /// 0: ORDENS_THREADS if set, else hardware concurrency.
    unsigned threads = 0;
    std::set<std::uint64_t> exclusions;
};

/// Worker count actually used for `requested` (see ScanOptions::threads).
unsigned resolve_threads(unsigned requested);

struct ScanReport {
    FieldSpec field = FieldSpec::rationals();
    Element a = Element::one(FieldSpec::rationals());
    unsigned long ell = 0;
    std::uint64_t bound = 0;
    std::uint64_t counted = 0;
    /// Rational primes <= bound skipped because of a, ell or the caller.
    std::vector<std::uint64_t> excluded_primes;
    std::map<unsigned long, std::uint64_t> histogram;
    std::map<unsigned long, Rational> empirical;
    std::map<unsigned long, DensityValue> exact;
    /// max over valuations 0..max observed of |empirical - exact|.
    Rational max_abs_error;

    std::uint64_t excluded() const { return excluded_primes.size(); }
};

/// Histogram of v_ell(ord(a mod p)) over the primes of K of norm <= bound,
/// with the exact densities attached. Aggregation is deterministic for any
/// worker count.
ScanReport empirical_density(const Element& a, unsigned long ell, std::uint64_t bound,
                             const ScanOptions& options = {});

/// Fraction of counted slots that split completely in
/// K(zeta_{ell^m}, ell^n-th root of a): q = 1 (mod ell^m) and
/// a^((q-1)/ell^n) = 1 in the residue field. Approximates 1/total_degree.
Rational split_fraction(const Element& a, unsigned long ell, unsigned long m, unsigned long n,
                        std::uint64_t bound, const ScanOptions& options = {});

/// A degree-one prime p <= bound with p = 1 (mod ell) at which c is not an
/// ell-th power in the residue field, if any. Such a prime certifies that c
/// has no ell-th root in K.
std::optional<std::uint64_t> local_non_power_witness(const Element& c, unsigned long ell,
                                                     std::uint64_t bound);

}  // namespace ordens
