#include "ordens/density.hpp"

#include <stdexcept>

namespace ordens {

namespace {

Rational pw(unsigned long ell, long e) { return rational_power(static_cast<long>(ell), e); }

long sl(unsigned long v) { return static_cast<long>(v); }

void require_range(const Rational& v, const char* where) {
    if (v.sign() < 0 || v > Rational(1))
        throw std::logic_error(std::string(where) + ": density " + v.str() + " outside [0, 1]");
}

struct Context {
    CycloProfile profile;
    bool special = false;
};

Context context_for(const Decomposition& dec) {
    const FieldSpec& field = dec.a.field();
    Context ctx{cyclo_profile(field, dec.ell), false};
    if (dec.kind != DecompCase::trivial_root_of_unity && ctx.profile.noncyclic_two())
        ctx.special = special_case_flag(field, ctx.profile, dec.b);
    return ctx;
}

DensityValue root_of_unity_density(const Decomposition& dec, DensityMethod method) {
    const unsigned long order = *root_of_unity_order(dec.xi);
    DensityValue out;
    out.value = order % dec.ell == 0 ? Rational(0) : Rational(1);
    out.derivation.method = method;
    out.derivation.family = "root-of-unity";
    out.derivation.branch = "order " + std::to_string(order);
    out.derivation.kind = DecompCase::trivial_root_of_unity;
    return out;
}

// ell = 2 without zeta4, a = b^(2^d).
Rational noncyclic_power_closed(unsigned long d, unsigned s, const Rational& eps, std::string& branch) {
    const Rational third(Integer(1), Integer(3));
    if (d == 0) {
        branch = "d = 0";
        return Rational(Integer(1), Integer(4)) + eps * third * pw(2, -static_cast<long>(s));
    }
    if (d < s) {
        branch = "0 < d < s";
        return Rational(Integer(1), Integer(2)) + eps * third * pw(2, sl(d) - s);
    }
    branch = "d >= s";
    return Rational(1) - eps / Rational(6) * pw(2, static_cast<long>(s) - sl(d));
}

}  // namespace

std::string to_string(DensityMethod m) {
    switch (m) {
        case DensityMethod::closed_form: return "closed_form";
        case DensityMethod::series: return "series";
        case DensityMethod::root_of_unity: return "root_of_unity";
    }
    return "?";
}

std::string to_string(Shape s) {
    switch (s) {
        case Shape::not_applicable: return "not_applicable";
        case Shape::degree_formula: return "degree_formula";
        case Shape::reciprocal_family: return "reciprocal_family";
    }
    return "?";
}

DensityValue density_closed(const Element& a, unsigned long ell) {
    if (a.is_zero()) throw DomainError("density of 0 is undefined");
    if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
    return density_closed(decompose(a, ell));
}

DensityValue density_closed(const Decomposition& dec) {
    if (dec.kind == DecompCase::trivial_root_of_unity)
        return root_of_unity_density(dec, DensityMethod::closed_form);

    const Context ctx = context_for(dec);
    const CycloProfile& pr = ctx.profile;
    const unsigned long ell = dec.ell;
    const long d = sl(dec.d);
    const long t = pr.t;
    const Rational l(static_cast<long>(ell));
    const Rational l1(static_cast<long>(ell + 1));

    DensityValue out;
    Derivation& dv = out.derivation;
    dv.method = DensityMethod::closed_form;
    dv.kind = dec.kind;
    dv.d = dec.d;
    dv.r = dec.r;
    dv.t = pr.t;
    dv.s = pr.s;

    if (pr.noncyclic_two()) {
        const Rational eps = ctx.special ? Rational(Integer(1), Integer(2)) : Rational(1);
        dv.family = "noncyclic-two";
        dv.epsilon = eps;
        const unsigned s = pr.s;
        std::string branch;
        const Rational positive = noncyclic_power_closed(dec.d, s, eps, branch);
        if (dec.kind == DecompCase::power) {
            dv.branch = "a = b^(2^d), " + branch;
            out.value = positive;
        } else {
            // a = -b^(2^d), d > 0: D(a) = D(-a) - correction, cross-checked
            // against the direct expression.
            if (dec.d == 0) throw std::logic_error("negated power with d = 0");
            Rational via_difference;
            Rational direct;
            if (d < static_cast<long>(s) - 1) {
                dv.branch = "a = -b^(2^d), 0 < d < s-1";
                via_difference = positive - Rational(Integer(1), Integer(2));
                direct = eps / Rational(3) * pw(2, d - s);
            } else if (d == static_cast<long>(s) - 1) {
                dv.branch = "a = -b^(2^d), d = s-1";
                via_difference = positive - eps / Rational(2);
                direct = (Rational(6) * eps).inverse();
            } else {
                dv.branch = "a = -b^(2^d), d >= s";
                via_difference = positive - Rational(1) + eps / Rational(4) * pw(2, static_cast<long>(s) - d);
                direct = eps / Rational(12) * pw(2, static_cast<long>(s) - d);
            }
            if (via_difference != direct)
                throw std::logic_error("negated-power density forms disagree: " + via_difference.str() +
                                       " vs " + direct.str());
            out.value = direct;
        }
    } else if (pr.deg_K_ell > 1) {
        // K != K(zeta_ell); only odd ell reaches here, and mu_{ell^inf}(K) = 1.
        if (dec.kind != DecompCase::power) throw std::logic_error("unit twist without ell-power roots of unity");
        dv.family = "cyclotomic-nontrivial";
        const Rational delta = Rational(Integer(1), Integer(pr.deg_K_ell));
        if (d <= t) {
            dv.branch = "d <= t";
            out.value = Rational(1) - delta * (Rational(1) - l / l1 * pw(ell, d - t));
        } else {
            dv.branch = "d > t";
            out.value = Rational(1) - delta / l1 * pw(ell, t - d);
        }
    } else {
        dv.family = "cyclotomic-trivial";
        if (dec.kind == DecompCase::power) {
            if (d <= t) {
                dv.branch = "a = b^(ell^d), d <= t";
                out.value = l / l1 * pw(ell, d - t);
            } else {
                dv.branch = "a = b^(ell^d), d > t";
                out.value = Rational(1) - pw(ell, t - d) / l1;
            }
        } else {
            const long r = sl(dec.r);
            if (d == 0 || r <= std::max(0L, t - d))
                throw std::logic_error("unit-twisted decomposition violates r > max(0, t - d)");
            dv.branch = "a = b^(ell^d) xi, ord xi = ell^r";
            out.value = l / l1 * pw(ell, -2 * r + t - d);
        }
    }
    require_range(out.value, "density_closed");
    return out;
}

DensityValue density(const Element& a, unsigned long ell, unsigned long n) {
    if (a.is_zero()) throw DomainError("density of 0 is undefined");
    if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
    return density(decompose(a, ell), n);
}

DensityValue density(const Decomposition& dec, unsigned long n) {
    if (n == 0) return density_closed(dec);
    const DensityValue upper = density_closed(dec.raised(n));
    const DensityValue lower = density_closed(dec.raised(n - 1));
    DensityValue out;
    out.value = upper.value - lower.value;
    out.derivation = upper.derivation;
    out.derivation.family = "valuation-difference";
    out.derivation.branch = "D(a^(ell^n)) - D(a^(ell^(n-1))); upper: " + upper.derivation.family + ", " +
                            upper.derivation.branch;
    out.derivation.n = n;
    require_range(out.value, "density");
    return out;
}

DensityValue density_series(const Element& a, unsigned long ell) {
    if (a.is_zero()) throw DomainError("density of 0 is undefined");
    if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
    return density_series(decompose(a, ell));
}

DensityValue density_series(const Decomposition& dec) {
    if (dec.kind == DecompCase::trivial_root_of_unity)
        throw DomainError("series evaluation needs a non-root-of-unity element");
    const Context ctx = context_for(dec);
    const unsigned long ell = dec.ell;

    KummerQuery q;
    q.decomp = DecompParams::of(dec);
    q.profile = ctx.profile;
    q.special = ctx.special;

    auto inv_total = [&](unsigned long m, unsigned long n) {
        q.m = m;
        q.n = n;
        return Rational(Integer(1), total_degree(q));
    };

    const unsigned long M = dec.d + dec.r + ctx.profile.t + ctx.profile.s + 4;
    std::vector<Rational> terms;
    terms.reserve(M + 1);
    // i = 0: K(zeta_1, a) = K
    terms.push_back(Rational(1) - inv_total(1, 0));
    for (unsigned long i = 1; i <= M; ++i) terms.push_back(inv_total(i, i) - inv_total(i + 1, i));

    const Rational ell2(static_cast<long>(ell * ell));
    if (terms[M] * ell2 != terms[M - 1] || terms[M - 1] * ell2 != terms[M - 2])
        throw std::logic_error("series terms did not stabilize by i = " + std::to_string(M));

    Rational sum;
    for (const Rational& t : terms) sum += t;
    sum += terms[M] / (ell2 - Rational(1));

    DensityValue out;
    out.value = sum;
    Derivation& dv = out.derivation;
    dv.method = DensityMethod::series;
    dv.family = "series";
    dv.branch = "terms 0.." + std::to_string(M) + " + geometric tail";
    dv.kind = dec.kind;
    dv.d = dec.d;
    dv.r = dec.r;
    dv.t = ctx.profile.t;
    dv.s = ctx.profile.s;
    if (ctx.profile.noncyclic_two())
        dv.epsilon = ctx.special ? Rational(Integer(1), Integer(2)) : Rational(1);
    require_range(out.value, "density_series");
    return out;
}

ShapeReport shape_check(const Element& a, unsigned long ell) {
    const Decomposition dec = decompose(a, ell);
    if (dec.kind == DecompCase::trivial_root_of_unity)
        throw DomainError("shape_check needs a non-root-of-unity element");
    const CycloProfile pr = cyclo_profile(a.field(), ell);
    ShapeReport rep;
    rep.value = density_closed(dec).value;

    if (!pr.contains_zeta_ell && pr.t == 1) {
        rep.shape = Shape::degree_formula;
        const Rational expected =
            Rational(1) - Rational(Integer(1), Integer(pr.deg_K_ell)) * pw(ell, 1 - sl(dec.d)) /
                              Rational(static_cast<long>(ell + 1));
        rep.expected = expected;
        rep.holds = expected == rep.value;
        return rep;
    }
    if ((ell != 2 && pr.contains_zeta_ell) || (ell == 2 && pr.contains_zeta4)) {
        rep.shape = Shape::reciprocal_family;
        rep.holds = false;
        // w = 1 / (ell^k (ell + 1)) for w = D or w = 1 - D
        for (bool complement : {false, true}) {
            const Rational w = complement ? Rational(1) - rep.value : rep.value;
            if (w.sign() <= 0 || w.num() != 1) continue;
            Integer den = w.den();
            if (!mpz_divisible_ui_p(den.get_mpz_t(), ell + 1)) continue;
            mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), ell + 1);
            unsigned long k = 0;
            while (den > 1 && mpz_divisible_ui_p(den.get_mpz_t(), ell)) {
                mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), ell);
                ++k;
            }
            if (den != 1) continue;
            rep.holds = true;
            rep.exponent = k;
            rep.complement = complement;
            break;
        }
    }
    return rep;
}

}  // namespace ordens
