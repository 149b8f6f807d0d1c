#pragma once

// Compact open subgroups attached to a point of the standard apartment, their
// two-step quotients, and the characters living on them.
//
// A group here is cut out by a "valuation pattern": for each root direction a
// minimal level for the corresponding matrix entries, plus a congruence
// condition on the diagonal.  For a base point z and depth r the entry bound
// in direction g is the least integer l with g(z) + l >= r (strictly > r for
// the ++ variant), which is the Moy-Prasad recipe; the pattern set is closed
// under products because position functionals add under matrix
// multiplication.  The headline instances:
//
//   K+  = pattern at (1/4,1/4), depth 1/2   (six depth-exact factors)
//   K++ = same point, depth 1/2+            (kernel of the six coordinates)
//   I+  = pattern at (3/8,1/8), depth 1/4   (three factors a, b, 1-d)
//   I++ = same point, depth 1/4+
//
// On top of K+ sit the two strong groups K = T_psi K+ (case SL2xGL1, torus
// t2 = +-1 mod p) and K = T_alpha K+ (case GL2, torus t2 = 1/t1 mod p), and
// the characters chi = mu (x) psi used by the Hecke computation.

#include <array>
#include <complex>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sp4hecke/affine.hpp"
#include "sp4hecke/matrix.hpp"
#include "sp4hecke/pinning.hpp"
#include "sp4hecke/scalars.hpp"

namespace sp4hecke {

using Cx = std::complex<double>;

enum class TorusPart {
    TRPlus,  // pro-p torus: every diagonal entry = 1 mod p
    TPsi,    // t1 arbitrary unit, t2 = +-1 mod p      (strong K, case SL2xGL1)
    TAlpha,  // t1 arbitrary unit, t2 = 1/t1 mod p     (strong K, case GL2)
};

struct FiltrationGroup {
    Pt base_point;
    Rat depth;
    bool strict = false;  // depth r+ instead of r
    TorusPart torus_part = TorusPart::TRPlus;
    long p = 0;

    std::array<long, 8> min_level{};        // aligned with all_roots()
    std::vector<AffineRoot> simple_factors; // directions with value == depth
};

inline int root_index(const Root& r) {
    const auto& roots = all_roots();
    for (int i = 0; i < 8; ++i)
        if (roots[static_cast<std::size_t>(i)] == r) return i;
    throw std::domain_error("root_index: not a root");
}

inline long rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);  // den > 0 in boost normal form
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return static_cast<long>(q);
}

inline long rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline FiltrationGroup build_filtration(const Pt& point, const Rat& depth,
                                        bool strict, TorusPart torus_part, long p) {
    if (depth <= 0 || depth > 1)
        throw std::domain_error("build_filtration: depth outside (0, 1]");
    FiltrationGroup k;
    k.base_point = point;
    k.depth = depth;
    k.strict = strict;
    k.torus_part = torus_part;
    k.p = p;
    const auto& roots = all_roots();
    for (int i = 0; i < 8; ++i) {
        Rat value = eval_affine_root({roots[static_cast<std::size_t>(i)], 0}, point);
        // least integer level l with value + l >= depth (> for strict)
        long l = strict ? rat_floor(depth - value) + 1 : rat_ceil(depth - value);
        k.min_level[static_cast<std::size_t>(i)] = l;
        if (!strict && value + l == depth)
            k.simple_factors.push_back({roots[static_cast<std::size_t>(i)], static_cast<int>(l)});
    }
    return k;
}

inline FiltrationGroup k_plus(long p) {
    return build_filtration({Rat(1, 4), Rat(1, 4)}, Rat(1, 2), false, TorusPart::TRPlus, p);
}
inline FiltrationGroup k_plus_plus(long p) {
    return build_filtration({Rat(1, 4), Rat(1, 4)}, Rat(1, 2), true, TorusPart::TRPlus, p);
}
inline FiltrationGroup i_plus(long p) {
    return build_filtration({Rat(3, 8), Rat(1, 8)}, Rat(1, 4), false, TorusPart::TRPlus, p);
}
inline FiltrationGroup i_plus_plus(long p) {
    return build_filtration({Rat(3, 8), Rat(1, 8)}, Rat(1, 4), true, TorusPart::TRPlus, p);
}

namespace detail {
// Diagonal congruence level: the torus filtration jumps at integers, so a
// depth in (0,1] pins the diagonal mod p^1.
inline long diag_level(const FiltrationGroup& k) {
    long l = k.strict ? rat_floor(k.depth) + 1 : rat_ceil(k.depth);
    return l < 1 ? 1 : l;
}

// The diagonal condition of the pattern, on the 4-tuple d = (g_11, .., g_44).
// Split out of contains() so that lazy membership tests (which compute product
// entries on demand) can share it.
inline bool diagonal_ok(const FiltrationGroup& k, const std::array<Rat, 4>& d) {
    switch (k.torus_part) {
        case TorusPart::TRPlus: {
            long lvl = diag_level(k);
            for (int i = 0; i < 4; ++i) {
                Rat e = d[static_cast<std::size_t>(i)] - 1;
                if (e != 0 && valuation(e, k.p) < lvl) return false;
            }
            return true;
        }
        case TorusPart::TPsi:
        case TorusPart::TAlpha: {
            for (int i = 0; i < 4; ++i)
                if (!is_unit(d[static_cast<std::size_t>(i)], k.p)) return false;
            if (residue(d[0] * d[3], k.p) != 1 || residue(d[1] * d[2], k.p) != 1)
                return false;
            if (k.torus_part == TorusPart::TAlpha)
                return residue(d[0] * d[1], k.p) == 1;
            long r2 = residue(d[1], k.p);
            return r2 == 1 || r2 == k.p - 1;
        }
    }
    return false;
}
}  // namespace detail

inline bool contains(const FiltrationGroup& k, const Mat4& g) {
    for (const Root& dir : all_roots()) {
        long bound = k.min_level[static_cast<std::size_t>(root_index(dir))];
        for (const EntryPosition& e : root_entry_positions(dir)) {
            const Rat& entry = g.at(e.row, e.col);
            if (entry != 0 && valuation(entry, k.p) < bound) return false;
        }
    }
    return detail::diagonal_ok(k, {g.at(1, 1), g.at(2, 2), g.at(3, 3), g.at(4, 4)});
}

// ---------------------------------------------------------------------------
// The abelian quotient K+/K++ through its simple-factor coordinates.  Each
// factor psi = dir + l is read from the first matrix position of dir: the
// entry there, divided by p^l, reduced mod p.  (The second position of a
// two-position direction carries the same residue for pattern elements; the
// cross terms that could tell them apart live one level deeper.)

struct QuotientCoordinates {
    std::vector<AffineRoot> factors;
    std::vector<long> values;  // residues mod p, aligned with factors

    long at(const AffineRoot& psi) const {
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i] == psi) return values[i];
        throw std::domain_error("QuotientCoordinates::at: not a simple factor");
    }
};

inline QuotientCoordinates coordinates(const FiltrationGroup& k, const Mat4& g) {
    if (!contains(k, g))
        throw std::domain_error("coordinates: element outside the group");
    QuotientCoordinates c;
    c.factors = k.simple_factors;
    for (const AffineRoot& psi : k.simple_factors) {
        EntryPosition e = root_entry_positions(psi.grad)[0];
        Rat lead = g.at(e.row, e.col) * e.sign * rat_p_pow(k.p, -psi.level);
        c.values.push_back(residue(lead, k.p));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Characters.
//
// psi is the additive part: a choice of nonzero multiplier mod p on each
// "active" simple factor, evaluated through a primitive p-th root of unity.
// mu is the quadratic part on the extended torus: on the copy of F_p^x
// (reached by h_delta in case SL2xGL1 and by h_alpha in case GL2) it is
// trivial or the Legendre symbol; case SL2xGL1 additionally carries a sign on
// the order-2 group generated by h_beta(-1).  Every representable mu is
// quadratic, matching the invariance constraint on the torus character.

struct MuCharacter {
    bool legendre = false;
    int beta_sign = 1;  // value at h_beta(-1); used in case SL2xGL1 only
};

struct Character {
    LeviCase levi_case = LeviCase::SL2xGL1;
    long p = 0;
    std::vector<std::pair<AffineRoot, long>> active;  // factor -> multiplier mod p
    MuCharacter mu;
};

inline Character make_affine_character(LeviCase c, long p, long mult_low = 1,
                                       long mult_high = 1) {
    if (mult_low % p == 0 || mult_high % p == 0)
        throw std::domain_error("make_affine_character: multiplier not a unit");
    Character chi;
    chi.levi_case = c;
    chi.p = p;
    Root dir = (c == LeviCase::SL2xGL1) ? kBeta : kGamma;
    chi.active = {{{dir, 0}, ((mult_low % p) + p) % p},
                  {{-dir, 1}, ((mult_high % p) + p) % p}};
    return chi;
}

inline std::pair<FiltrationGroup, Character> build_strong_K(LeviCase c, long p,
                                                            const MuCharacter& mu,
                                                            long mult_low = 1,
                                                            long mult_high = 1) {
    FiltrationGroup k = k_plus(p);
    k.torus_part = (c == LeviCase::SL2xGL1) ? TorusPart::TPsi : TorusPart::TAlpha;
    Character chi = make_affine_character(c, p, mult_low, mult_high);
    chi.mu = mu;
    return {k, chi};
}

namespace detail {
inline int mu_on_torus(const Character& chi, const Rat& t1, const Rat& t2, long p) {
    int value = 1;
    if (chi.levi_case == LeviCase::SL2xGL1) {
        // t = h_delta(t1) h_beta(t2); mu = mu_delta (x) sign on <h_beta(-1)>.
        if (chi.mu.legendre) value *= legendre_symbol(residue(t1, p), p);
        if (chi.mu.beta_sign == -1 && residue(t2, p) == p - 1) value = -value;
    } else {
        // t = h_alpha(t1) modulo the pro-p torus; mu = mu_alpha.
        if (chi.mu.legendre) value *= legendre_symbol(residue(t1, p), p);
    }
    return value;
}
}  // namespace detail

// chi(g) for g in the strong group K (or in K+ when K has the pro-p torus
// tag): split g = t k with t = diag-part and k in K+, then
// chi(g) = mu(t) * zeta_p^(sum of active multipliers times coordinates of k).
inline Cx eval_character(const Character& chi, const FiltrationGroup& k_group,
                         const Mat4& g) {
    if (chi.p != k_group.p)
        throw std::domain_error("eval_character: prime mismatch");
    if (!contains(k_group, g))
        throw std::domain_error("eval_character: element outside the group");
    const long p = chi.p;

    Mat4 t_inv = torus(1 / g.at(1, 1), 1 / g.at(2, 2));
    Mat4 k = t_inv * g;
    FiltrationGroup plain = k_group;
    plain.torus_part = TorusPart::TRPlus;
    if (!contains(plain, k))
        throw std::domain_error("eval_character: torus/unipotent split failed");

    long exponent = 0;
    QuotientCoordinates coord = coordinates(plain, k);
    for (const auto& [factor, mult] : chi.active)
        exponent = (exponent + mult * coord.at(factor)) % p;

    int mu_val = detail::mu_on_torus(chi, g.at(1, 1), g.at(2, 2), p);
    double angle = 2.0 * M_PI * static_cast<double>(exponent) / static_cast<double>(p);
    return static_cast<double>(mu_val) * Cx(std::cos(angle), std::sin(angle));
}

}  // namespace sp4hecke
