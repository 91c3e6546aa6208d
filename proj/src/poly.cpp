#include "ordens/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordens::poly {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Integer eval(const IntPoly& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<unsigned long>(k));
    trim(out);
    return out;
}

Integer cauchy_bound(const IntPoly& p) {
    if (p.size() < 2) throw std::invalid_argument("cauchy_bound of a constant");
    const Integer lead = ::abs(p.back());
    Integer m = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, Integer(::abs(p[k])));
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
    return q + 2;
}

std::set<Integer> root_brackets(const IntPoly& p) {
    if (p.size() < 2) return {};
    if (p.size() == 2) return {floor_div(-p[0], p[1])};

    const Integer bound = cauchy_bound(p);
    // Between consecutive cut points p' has no root in the open interval
    // unless the interval is one of p''s own unit brackets.
    const std::set<Integer> critical = root_brackets(derivative(p));
    std::set<Integer> cuts{-bound, bound};
    std::set<Integer> out;
    for (const Integer& k : critical) {
        if (k + 1 < -bound || k > bound) continue;
        out.insert(k);
        if (k > -bound) cuts.insert(k);
        if (k + 1 < bound) cuts.insert(k + 1);
    }

    auto sgn_at = [&](const Integer& x) { return sgn(eval(p, x)); };
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
        Integer lo = *it;
        Integer hi = *std::next(it);
        const int slo = sgn_at(lo);
        const int shi = sgn_at(hi);
        if (slo == 0) out.insert(lo);
        if (shi == 0) out.insert(hi);
        if (slo == 0 || shi == 0 || slo == shi) continue;
        // strictly monotone with a sign change: exactly one root inside
        while (hi - lo > 1) {
            Integer mid = floor_div(lo + hi, Integer(2));
            if (sgn_at(mid) == slo)
                lo = mid;
            else
                hi = mid;
        }
        out.insert(lo);
    }
    return out;
}

std::vector<Integer> integer_roots(const IntPoly& p) {
    if (p.size() < 2) throw std::invalid_argument("integer_roots of a constant");
    std::set<Integer> roots;
    for (const Integer& k : root_brackets(p)) {
        if (eval(p, k) == 0) roots.insert(k);
        if (eval(p, k + 1) == 0) roots.insert(k + 1);
    }
    return {roots.begin(), roots.end()};
}

std::vector<Rational> rational_roots_monic(const RatPoly& p) {
    if (p.size() < 2 || p.back() != Rational(1))
        throw std::invalid_argument("rational_roots_monic expects a monic nonconstant polynomial");
    const std::size_t deg = p.size() - 1;
    Integer lcm = 1;
    for (const Rational& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());

    // L^deg * p(z / L) = sum c_k L^(deg - k) z^k
    IntPoly scaled(deg + 1);
    Integer lpow = 1;
    for (std::size_t k = deg + 1; k-- > 0;) {
        const Rational c = p[k] * Rational(lpow);
        if (!c.is_integer()) throw std::logic_error("denominator clearing failed");
        scaled[k] = c.num();
        lpow *= lcm;
    }
    std::vector<Rational> out;
    for (const Integer& z : integer_roots(scaled)) out.emplace_back(z, lcm);
    return out;
}

}  // namespace ordens::poly
