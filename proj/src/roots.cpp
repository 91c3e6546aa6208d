#include "ordens/roots.hpp"

#include "ordens/poly.hpp"

#include <algorithm>

namespace ordens {

namespace {

constexpr unsigned long kMaxDepth = 64;

Element zeta3(const FieldSpec& f) {
    return Element(f, Rational(Integer(-1), Integer(2)), Rational(Integer(1), Integer(2)));
}

void sort_unique(std::vector<Element>& v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_ell_power_order(unsigned long order, unsigned long ell) {
    while (order % ell == 0) order /= ell;
    return order == 1;
}

// Power sums s_k = b^k + b'^k of a conjugate pair with b + b' = tau and
// b b' = eta satisfy s_k = tau s_{k-1} - eta s_{k-2}. Returns the
// coefficients of s_ell(tau) as a polynomial in tau.
poly::RatPoly power_sum_poly(unsigned long ell, const Rational& eta) {
    poly::RatPoly prev{Rational(2)};
    poly::RatPoly cur{Rational(0), Rational(1)};
    for (unsigned long k = 2; k <= ell; ++k) {
        poly::RatPoly next(cur.size() + 1);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= eta * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Element> quadratic_lth_roots(const Element& c, unsigned long ell) {
    const FieldSpec& f = c.field();
    const Rational norm = c.norm();
    const Rational trace = c.trace();
    const Rational four_d = Rational(4 * f.d());
    std::vector<Element> out;
    for (const Rational& eta : rational_nth_root(norm, ell)) {
        poly::RatPoly p = power_sum_poly(ell, eta);
        p[0] -= trace;
        for (const Rational& tau : poly::rational_roots_monic(p)) {
            // (b - b')^2 = tau^2 - 4 eta = 4 D v^2
            const Rational v2 = (tau * tau - Rational(4) * eta) / four_d;
            if (v2.sign() < 0) continue;
            const Rational half_tau = tau / Rational(2);
            std::vector<Rational> vs = v2.is_zero() ? std::vector<Rational>{Rational(0)}
                                                    : rational_nth_root(v2, 2);
            for (const Rational& v : vs) {
                Element b(f, half_tau, v);
                if (b.pow(ell) == c) out.push_back(std::move(b));
            }
        }
    }
    sort_unique(out);
    return out;
}

// One level of ell-th roots over a set. All ell^d-th roots of a fixed
// element form one coset of the ell^d-torsion, so a level holds at most
// |mu(K)| elements.
std::vector<Element> iterated_roots_step(const std::vector<Element>& level, unsigned long ell) {
    std::vector<Element> next;
    for (const Element& e : level) {
        auto roots = lth_roots(e, ell);
        next.insert(next.end(), roots.begin(), roots.end());
    }
    sort_unique(next);
    return next;
}

// Raise a root of unity to ell^k without overflowing the exponent.
Element raise_unit(Element u, unsigned long ell, unsigned long k) {
    for (unsigned long j = 0; j < k && !(u == Element::one(u.field())); ++j) u = u.pow(ell);
    return u;
}

// Given a = b^(ell^d) * xi, replace (b, xi) by the canonical choice: xi of
// minimal order in its class modulo ell^d-th powers of roots of unity
// (ties broken by canonical order), b lex-greatest among the matching
// ell^d-th roots.
void canonicalize(Decomposition& dec, const RootsOfUnity& mu) {
    const unsigned long ell = dec.ell;
    unsigned long best_order = 0;
    Element best_xi = dec.xi;
    for (const Element& eta : mu.elements) {
        Element cand = dec.xi * raise_unit(eta, ell, dec.d).inverse();
        const unsigned long order = *root_of_unity_order(cand);
        if (best_order == 0 || order < best_order) {
            best_order = order;
            best_xi = cand;
        }
    }
    // best_xi is the first minimal-order candidate in a scan over mu; map
    // it to the first of that order in canonical order among the class.
    for (const Element& cand : mu.elements) {
        if (*root_of_unity_order(cand) != best_order) continue;
        const Element ratio = dec.xi * cand.inverse();
        bool in_class = false;
        for (const Element& eta : mu.elements) {
            if (raise_unit(eta, ell, dec.d) == ratio) {
                in_class = true;
                break;
            }
        }
        if (in_class) {
            best_xi = cand;
            break;
        }
    }

    // b' = b * eta with eta^(ell^d) = xi / best_xi
    const Element ratio = dec.xi * best_xi.inverse();
    std::vector<Element> bs;
    for (const Element& eta : mu.elements) {
        if (raise_unit(eta, ell, dec.d) == ratio) bs.push_back(dec.b * eta);
    }
    sort_unique(bs);
    dec.b = bs.back();
    dec.xi = best_xi;
    dec.r = best_order == 1 ? 0 : valuation(static_cast<std::uint64_t>(best_order), ell);
    dec.kind = best_order == 1 ? DecompCase::power : DecompCase::power_times_unit;
}

}  // namespace

std::vector<Element> all_roots_of_unity(const FieldSpec& field) {
    const Element one = Element::one(field);
    if (!field.is_rationals() && field.d() == -1) {
        const Element i = Element::sqrt_d(field);
        return {one, -one, i, -i};
    }
    if (!field.is_rationals() && field.d() == -3) {
        const Element z = zeta3(field);
        const Element z2 = z * z;
        return {one, z, z2, -one, -z, -z2};
    }
    return {one, -one};
}

RootsOfUnity roots_of_unity(const FieldSpec& field, unsigned long ell) {
    RootsOfUnity out;
    unsigned long largest = 1;
    for (const Element& u : all_roots_of_unity(field)) {
        const unsigned long order = *root_of_unity_order(u);
        if (!is_ell_power_order(order, ell)) continue;
        out.elements.push_back(u);
        largest = std::max(largest, order);
    }
    out.t = largest == 1 ? 0 : static_cast<unsigned>(valuation(static_cast<std::uint64_t>(largest), ell));
    return out;
}

std::optional<unsigned long> root_of_unity_order(const Element& e) {
    // Roots of unity in Q or a quadratic field have order dividing 4 or 6.
    if (e.is_zero()) return std::nullopt;
    const Rational n = e.norm();
    if (e.field().is_rationals()) {
        if (n == Rational(1)) return 1;
        if (n == Rational(-1)) return 2;
        return std::nullopt;
    }
    if (n != Rational(1)) return std::nullopt;
    Element p = e;
    const Element one = Element::one(e.field());
    for (unsigned long k = 1; k <= 6; ++k) {
        if (p == one) return k;
        p *= e;
    }
    return std::nullopt;
}

std::vector<Element> lth_roots(const Element& c, unsigned long ell) {
    if (c.is_zero()) throw DomainError("lth_roots of zero");
    if (c.field().is_rationals()) {
        std::vector<Element> out;
        for (const Rational& r : rational_nth_root(c.x(), ell)) out.emplace_back(c.field(), r);
        sort_unique(out);
        return out;
    }
    return quadratic_lth_roots(c, ell);
}

Indivisibility indivisibility(const Element& a, unsigned long ell) {
    if (a.is_zero()) throw DomainError("indivisibility of zero");
    if (root_of_unity_order(a)) return Indivisibility::root_of_unity;
    for (const Element& xi : roots_of_unity(a.field(), ell).elements) {
        if (!lth_roots(a * xi, ell).empty()) return Indivisibility::has_twisted_root;
    }
    return Indivisibility::strongly_indivisible;
}

std::string to_string(DecompCase c) {
    switch (c) {
        case DecompCase::power: return "power";
        case DecompCase::power_times_unit: return "power_times_unit";
        case DecompCase::trivial_root_of_unity: return "trivial_root_of_unity";
    }
    return "?";
}

Decomposition decompose(const Element& a, unsigned long ell) {
    if (a.is_zero()) throw DomainError("cannot decompose 0");
    const FieldSpec& f = a.field();
    const RootsOfUnity mu = roots_of_unity(f, ell);
    const Element one = Element::one(f);
    Decomposition dec{ell, a, 0, DecompCase::trivial_root_of_unity, 0, one, one, 0, mu.t};
    if (root_of_unity_order(a)) {
        dec.xi = a;
        return dec;
    }

    // Depth of ell-power roots of a / xi for every xi; feasibility is
    // downward closed in d, so each search stops at its first failure.
    bool found = false;
    for (const Element& xi : mu.elements) {
        const Element target = a * xi.inverse();
        std::vector<Element> level{target};
        unsigned long depth = 0;
        for (;;) {
            std::vector<Element> next = iterated_roots_step(level, ell);
            if (next.empty()) break;
            level = std::move(next);
            if (++depth > kMaxDepth)
                throw DomainError("decomposition depth exceeded " + std::to_string(kMaxDepth) +
                                  " for " + a.str());
        }
        if (!found || depth > dec.d) {
            dec.d = depth;
            dec.xi = xi;
            dec.b = level.back();
            found = true;
        }
    }
    canonicalize(dec, mu);
    return dec;
}

Decomposition Decomposition::raised(unsigned long k) const {
    Decomposition out = *this;
    if (k == 0) return out;
    out.a_power = a_power + k;
    if (kind == DecompCase::trivial_root_of_unity) {
        out.xi = raise_unit(xi, ell, k);
        return out;
    }
    out.d = d + k;
    out.xi = raise_unit(xi, ell, k);
    canonicalize(out, roots_of_unity(a.field(), ell));
    return out;
}

}  // namespace ordens
