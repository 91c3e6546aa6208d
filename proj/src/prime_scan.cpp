#include "ordens/prime_scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ordens {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mulmod(result, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DomainError("inverse of 0 mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}

int kronecker(std::int64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("kronecker with n = 0");
    int result = 1;
    // factor out 2 from n using (a|2)
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        const std::int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (a|n), n odd
    std::uint64_t x = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                                                 static_cast<std::int64_t>(n));
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::uint64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

    unsigned m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        unsigned i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

namespace {

// Residue field F_p or F_p[T]/(T^2 - D); elements are (c0, c1).
struct ResidueField {
    std::uint64_t p;
    bool extension;
    std::uint64_t dmod;
    std::uint64_t order() const { return extension ? p * p : p; }
};

using Residue = std::pair<std::uint64_t, std::uint64_t>;

Residue mul(const ResidueField& f, const Residue& a, const Residue& b) {
    if (!f.extension) return {mulmod(a.first, b.first, f.p), 0};
    const std::uint64_t c0 = (mulmod(a.first, b.first, f.p) + mulmod(f.dmod, mulmod(a.second, b.second, f.p), f.p)) % f.p;
    const std::uint64_t c1 = (mulmod(a.first, b.second, f.p) + mulmod(a.second, b.first, f.p)) % f.p;
    return {c0, c1};
}

Residue pow(const ResidueField& f, Residue base, std::uint64_t e) {
    Residue acc{1 % f.p, 0};
    while (e > 0) {
        if (e & 1) acc = mul(f, acc, base);
        base = mul(f, base, base);
        e >>= 1;
    }
    return acc;
}

bool is_one(const ResidueField& f, const Residue& r) { return r.first == 1 % f.p && r.second == 0; }

std::uint64_t mod_of(const Integer& v, std::uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

// a = (X + Y sqrt D) / L with integers X, Y, L > 0.
class Reducer {
public:
    explicit Reducer(const Element& a) : d_(a.field().is_rationals() ? 0 : a.field().d()) {
        mpz_lcm(l_.get_mpz_t(), a.x().den().get_mpz_t(), a.y().den().get_mpz_t());
        x_ = (a.x() * Rational(l_)).num();
        y_ = (a.y() * Rational(l_)).num();
        norm_int_ = x_ * x_ - Integer(static_cast<long>(d_)) * y_ * y_;
        if (d_ == 0) norm_int_ = x_;
    }

    // Divisibility by p of L * (X^2 - D Y^2): where reduction is not a unit.
    bool bad_at(std::uint64_t p) const { return mod_of(l_, p) == 0 || mod_of(norm_int_, p) == 0; }

    std::optional<Residue> reduce(const PrimeSlot& slot, ResidueField& field) const {
        const std::uint64_t p = slot.p;
        field.p = p;
        field.extension = slot.split_type == SplitType::inert;
        field.dmod = static_cast<std::uint64_t>(((d_ % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
        const std::uint64_t lm = mod_of(l_, p);
        if (lm == 0) return std::nullopt;
        const std::uint64_t linv = invmod(lm, p);
        const std::uint64_t xm = mulmod(mod_of(x_, p), linv, p);
        const std::uint64_t ym = mulmod(mod_of(y_, p), linv, p);
        Residue r;
        if (field.extension) {
            r = {xm, ym};
        } else if (slot.sqrt_residue) {
            r = {(xm + mulmod(ym, *slot.sqrt_residue % p, p)) % p, 0};
        } else {
            r = {xm, 0};
        }
        if (r.first == 0 && r.second == 0) return std::nullopt;
        return r;
    }

private:
    std::int64_t d_;
    Integer l_, x_, y_, norm_int_;
};

unsigned long valuation_in(const ResidueField& f, const Residue& a, unsigned long ell) {
    std::uint64_t m = f.order() - 1;
    unsigned long v = 0;
    while (m % ell == 0) {
        m /= ell;
        ++v;
    }
    Residue w = pow(f, a, m);
    unsigned long k = 0;
    while (!is_one(f, w)) {
        w = pow(f, w, ell);
        if (++k > v) throw std::logic_error("order valuation exceeded v_ell(q - 1)");
    }
    return k;
}

// Runs fn(worker_index, begin, end) over contiguous index chunks and
// returns once every worker finished.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, count))));
    if (threads == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t step = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(count, w * step);
        const std::size_t end = std::min(count, begin + step);
        pool.emplace_back(fn, w, begin, end);
    }
    for (auto& t : pool) t.join();
}

std::uint32_t checked_bound(std::uint64_t bound) {
    if (bound < 2) throw DomainError("norm bound must be at least 2");
    if (bound > 0xFFFFFFFFULL) throw DomainError("norm bound must be below 2^32");
    return static_cast<std::uint32_t>(bound);
}

struct PreparedScan {
    std::vector<PrimeSlot> slots;
    std::vector<std::uint64_t> excluded;
};

PreparedScan prepare(const Element& a, unsigned long ell, std::uint64_t bound, const ScanOptions& options) {
    if (a.is_zero()) throw DomainError("cannot scan a = 0");
    if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
    checked_bound(bound);
    std::set<std::uint64_t> skip = bad_primes(a, ell, bound);
    for (std::uint64_t p : options.exclusions) {
        if (p <= bound && is_prime(p)) skip.insert(p);
    }
    if (!a.field().is_rationals() && a.field().discriminant() % 2 != 0) skip.insert(2);
    PreparedScan out;
    out.slots = enumerate(a.field(), bound, skip);
    out.excluded.assign(skip.begin(), skip.end());
    return out;
}

}  // namespace

std::vector<PrimeSlot> enumerate(const FieldSpec& field, std::uint64_t norm_bound,
                                 const std::set<std::uint64_t>& exclusions) {
    const std::uint32_t bound = checked_bound(norm_bound);
    std::vector<PrimeSlot> out;
    const std::int64_t disc = field.discriminant();
    for (std::uint32_t p32 : primes_up_to(bound)) {
        const std::uint64_t p = p32;
        if (exclusions.count(p)) continue;
        if (field.is_rationals()) {
            out.push_back({p, SplitType::split, p, std::nullopt});
            continue;
        }
        if (p == 2 && disc % 2 != 0) continue;
        const int k = kronecker(disc, p);
        if (k == 0) continue;
        if (k > 0) {
            const std::uint64_t dmod = static_cast<std::uint64_t>(((field.d() % static_cast<std::int64_t>(p)) +
                                                                   static_cast<std::int64_t>(p)) %
                                                                  static_cast<std::int64_t>(p));
            const std::uint64_t r = *sqrt_mod(dmod, p);
            const std::uint64_t r2 = (p - r) % p;
            out.push_back({p, SplitType::split, p, std::min(r, r2)});
            out.push_back({p, SplitType::split, p, std::max(r, r2)});
        } else if (p * p <= norm_bound) {
            out.push_back({p, SplitType::inert, p * p, std::nullopt});
        }
    }
    return out;
}

std::set<std::uint64_t> bad_primes(const Element& a, unsigned long ell, std::uint64_t limit) {
    const Reducer red(a);
    const std::int64_t disc = a.field().discriminant();
    std::set<std::uint64_t> out;
    for (std::uint32_t p32 : primes_up_to(checked_bound(std::max<std::uint64_t>(limit, 2)))) {
        const std::uint64_t p = p32;
        if (p > limit) break;
        if (ell % p == 0 || disc % static_cast<std::int64_t>(p) == 0 || red.bad_at(p)) out.insert(p);
    }
    return out;
}

unsigned long order_valuation(const Element& a, const PrimeSlot& slot, unsigned long ell) {
    ResidueField f{};
    const auto r = Reducer(a).reduce(slot, f);
    if (!r) throw DomainError("a does not reduce to a unit at p = " + std::to_string(slot.p));
    return valuation_in(f, *r, ell);
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ORDENS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

ScanReport empirical_density(const Element& a, unsigned long ell, std::uint64_t bound, const ScanOptions& options) {
    PreparedScan prep = prepare(a, ell, bound, options);
    const unsigned threads = resolve_threads(options.threads);
    const Reducer red(a);

    std::vector<std::vector<std::uint64_t>> partial(threads);
    std::vector<std::uint64_t> counted(threads, 0);
    parallel_chunks(prep.slots.size(), threads, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& hist = partial[w];
        for (std::size_t k = begin; k < end; ++k) {
            ResidueField f{};
            const auto r = red.reduce(prep.slots[k], f);
            if (!r) continue;
            const unsigned long v = valuation_in(f, *r, ell);
            if (hist.size() <= v) hist.resize(v + 1, 0);
            ++hist[v];
            ++counted[w];
        }
    });

    ScanReport rep;
    rep.field = a.field();
    rep.a = a;
    rep.ell = ell;
    rep.bound = bound;
    rep.excluded_primes = std::move(prep.excluded);
    for (unsigned w = 0; w < partial.size(); ++w) {
        rep.counted += counted[w];
        for (std::size_t v = 0; v < partial[w].size(); ++v) {
            if (partial[w][v] > 0) rep.histogram[v] += partial[w][v];
        }
    }
    if (rep.counted == 0) return rep;

    const Decomposition dec = decompose(a, ell);
    const unsigned long top = rep.histogram.empty() ? 0 : rep.histogram.rbegin()->first;
    for (unsigned long v = 0; v <= top; ++v) {
        const auto it = rep.histogram.find(v);
        const std::uint64_t c = it == rep.histogram.end() ? 0 : it->second;
        rep.empirical[v] = Rational(Integer(static_cast<unsigned long>(c)), Integer(static_cast<unsigned long>(rep.counted)));
        rep.exact.emplace(v, density(dec, v));
        const Rational err = (rep.empirical[v] - rep.exact.at(v).value).abs();
        if (err > rep.max_abs_error) rep.max_abs_error = err;
    }
    return rep;
}

Rational split_fraction(const Element& a, unsigned long ell, unsigned long m, unsigned long n, std::uint64_t bound,
                        const ScanOptions& options) {
    if (n > m) throw DomainError("split_fraction needs n <= m");
    if (m == 0) throw DomainError("split_fraction needs m >= 1");
    PreparedScan prep = prepare(a, ell, bound, options);
    const unsigned threads = resolve_threads(options.threads);
    const Reducer red(a);

    // saturates above the bound, where no q - 1 can be divisible by it
    std::uint64_t ell_m = 1;
    for (unsigned long k = 0; k < m && ell_m <= bound; ++k) ell_m *= ell;
    std::uint64_t ell_n = 1;
    for (unsigned long k = 0; k < n; ++k) ell_n *= ell;

    std::vector<std::uint64_t> split(threads, 0);
    std::vector<std::uint64_t> counted(threads, 0);
    parallel_chunks(prep.slots.size(), threads, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            ResidueField f{};
            const auto r = red.reduce(prep.slots[k], f);
            if (!r) continue;
            ++counted[w];
            const std::uint64_t q = f.order();
            if ((q - 1) % ell_m != 0) continue;
            if (is_one(f, pow(f, *r, (q - 1) / ell_n))) ++split[w];
        }
    });
    std::uint64_t s = 0, c = 0;
    for (unsigned w = 0; w < threads; ++w) {
        s += split[w];
        c += counted[w];
    }
    if (c == 0) throw DomainError("no primes counted below the bound");
    return Rational(Integer(static_cast<unsigned long>(s)), Integer(static_cast<unsigned long>(c)));
}

std::optional<std::uint64_t> local_non_power_witness(const Element& c, unsigned long ell, std::uint64_t bound) {
    const ScanOptions single{1, {}};
    PreparedScan prep = prepare(c, ell, bound, single);
    const Reducer red(c);
    for (const PrimeSlot& slot : prep.slots) {
        if (slot.split_type != SplitType::split || (slot.p - 1) % ell != 0) continue;
        ResidueField f{};
        const auto r = red.reduce(slot, f);
        if (!r) continue;
        if (!is_one(f, pow(f, *r, (slot.p - 1) / ell))) return slot.p;
    }
    return std::nullopt;
}

}  // namespace ordens
