#include "ordens/cyclo.hpp"

#include "ordens/roots.hpp"

namespace ordens {

std::string to_string(TowerType t) {
    switch (t) {
        case TowerType::trivial: return "trivial";
        case TowerType::plus: return "plus";
        case TowerType::minus: return "minus";
        case TowerType::i_adjoined: return "i_adjoined";
    }
    return "?";
}

CycloProfile cyclo_profile(const FieldSpec& field, unsigned long ell) {
    if (!is_prime(ell)) throw DomainError("ell = " + std::to_string(ell) + " is not prime");
    CycloProfile p;
    p.ell = ell;
    const std::int64_t d = field.is_rationals() ? 0 : field.d();
    p.contains_zeta4 = d == -1;

    if (ell != 2) {
        const auto l = static_cast<std::int64_t>(ell);
        const std::int64_t ell_star = (ell % 4 == 1) ? l : -l;
        p.t = 1;
        if (d == ell_star) {
            p.deg_K_ell = (ell - 1) / 2;
        } else {
            p.deg_K_ell = ell - 1;
        }
        p.contains_zeta_ell = p.deg_K_ell == 1;
        return p;
    }

    p.contains_zeta_ell = true;
    p.deg_K_ell = 1;
    if (p.contains_zeta4) {
        p.t = 2;
        p.tower_type = TowerType::i_adjoined;
        return p;
    }
    p.t = 1;
    p.s = (d == 2 || d == -2) ? 3 : 2;
    p.tower_type = d == 2 ? TowerType::plus : (d == -2 ? TowerType::minus : TowerType::trivial);
    return p;
}

Integer cyclotomic_degree(const CycloProfile& profile, unsigned long m) {
    if (m == 0) throw DomainError("cyclotomic level must be positive");
    auto ell_pow = [&](unsigned long e) {
        Integer v;
        mpz_ui_pow_ui(v.get_mpz_t(), profile.ell, e);
        return v;
    };
    if (profile.ell != 2) {
        const unsigned long excess = m > profile.t ? m - profile.t : 0;
        return Integer(profile.deg_K_ell) * ell_pow(excess);
    }
    if (profile.contains_zeta4) return ell_pow(m > profile.t ? m - profile.t : 0);
    if (m == 1) return 1;
    return 2 * ell_pow(m > profile.s ? m - profile.s : 0);
}

bool special_case_flag(const FieldSpec& field, const CycloProfile& profile, const Element& b) {
    if (!profile.noncyclic_two())
        throw DomainError("special_case_flag applies to ell = 2 without zeta4 only");
    if (!(b.field() == field)) throw DomainError("special_case_flag: field mismatch");

    Element g = Element(field, Rational(2));
    switch (profile.tower_type) {
        case TowerType::trivial:
            break;
        case TowerType::plus:
            // zeta8 + zeta8^-1 = sqrt 2
            g = Element(field, Rational(2), Rational(1));
            break;
        case TowerType::minus:
        case TowerType::i_adjoined:
            return false;
    }
    // The K ∩ Q(zeta_{2^inf}) = Q(zeta_{2^inf})^+ branch needs an infinite
    // extension of Q inside K; it cannot occur for degree <= 2.
    const Element q = b / g;
    return !lth_roots(q, 2).empty() || !lth_roots(-q, 2).empty();
}

}  // namespace ordens
