#pragma once

// Affine root geometry for type C2 on the plane E = Q^2.
//
// Conventions used throughout: the simple roots are a = e1 - e2 and b = 2e2,
// the highest root is d = 2e1, and g = e1 + e2 = a + b is the remaining
// positive root.  Affine roots are functionals grad + level; the simple
// affine roots are {a, b, 1-d} and the fundamental alcove is
// 1/2 > x1 > x2 > 0.  The two Levi cases studied by the engine come with a
// strip each: 0 < b < 1 (case SL2xGL1, a horizontal strip) and 0 < g < 1
// (case GL2, a diagonal strip).  Both strips are tiled by 1/2 x 1/2 squares
// indexed by integers, with the base square rho = (0,1/2)^2 at index 0.

#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sp4hecke/scalars.hpp"

namespace sp4hecke {

using Pt = std::array<Rat, 2>;

enum class LeviCase { SL2xGL1, GL2 };

// ---------------------------------------------------------------------------
// Roots and affine roots

struct Root {
    int c1 = 0, c2 = 0;  // gradient c1*e1 + c2*e2

    friend bool operator==(const Root&, const Root&) = default;
    Root operator-() const { return {-c1, -c2}; }
};

inline constexpr Root kAlpha{1, -1};
inline constexpr Root kBeta{0, 2};
inline constexpr Root kGamma{1, 1};  // = alpha + beta, the root eta
inline constexpr Root kDelta{2, 0};  // highest root

inline const std::array<Root, 8>& all_roots() {
    static const std::array<Root, 8> roots = {
        kAlpha, -kAlpha, kBeta, -kBeta, kGamma, -kGamma, kDelta, -kDelta};
    return roots;
}

inline bool is_root(const Root& r) {
    for (const Root& s : all_roots())
        if (s == r) return true;
    return false;
}

// Coroot in the e-basis: grad for short roots (length^2 = 2), grad/2 for long
// roots (length^2 = 4); integral in both cases.
inline std::array<int, 2> coroot(const Root& r) {
    int len2 = r.c1 * r.c1 + r.c2 * r.c2;
    if (len2 == 2) return {r.c1, r.c2};
    if (len2 == 4) return {r.c1 / 2, r.c2 / 2};
    throw std::domain_error("coroot: not a C2 root");
}

struct AffineRoot {
    Root grad;
    int level = 0;

    friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
    AffineRoot operator-() const { return {-grad, -level}; }
};

inline Rat eval_affine_root(const AffineRoot& psi, const Pt& x) {
    return Rat(psi.grad.c1) * x[0] + Rat(psi.grad.c2) * x[1] + psi.level;
}

// The three simple affine roots of C2.
inline const std::array<AffineRoot, 3>& simple_affine_roots() {
    static const std::array<AffineRoot, 3> simple = {
        AffineRoot{kAlpha, 0}, AffineRoot{kBeta, 0}, AffineRoot{-kDelta, 1}};
    return simple;
}

inline constexpr int kCoxeterNumber = 4;  // h for C2

// ---------------------------------------------------------------------------
// Affine Weyl elements: x |-> L x + t with L a signed permutation preserving
// the root set and t in the coroot lattice Z^2.

struct AffineWeyl {
    std::array<std::array<int, 2>, 2> lin{{{1, 0}, {0, 1}}};
    std::array<Rat, 2> tr{Rat(0), Rat(0)};

    friend bool operator==(const AffineWeyl&, const AffineWeyl&) = default;

    Pt apply(const Pt& x) const {
        return {Rat(lin[0][0]) * x[0] + Rat(lin[0][1]) * x[1] + tr[0],
                Rat(lin[1][0]) * x[0] + Rat(lin[1][1]) * x[1] + tr[1]};
    }

    // (w1 * w2)(x) = w1(w2(x)).
    AffineWeyl compose(const AffineWeyl& o) const {
        AffineWeyl r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.lin[i][j] = lin[i][0] * o.lin[0][j] + lin[i][1] * o.lin[1][j];
        for (int i = 0; i < 2; ++i)
            r.tr[i] = Rat(lin[i][0]) * o.tr[0] + Rat(lin[i][1]) * o.tr[1] + tr[i];
        return r;
    }

    AffineWeyl inverse() const {
        // The linear part is orthogonal (signed permutation), so L^{-1} = L^T.
        AffineWeyl r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.lin[i][j] = lin[j][i];
        for (int i = 0; i < 2; ++i)
            r.tr[i] = -(Rat(r.lin[i][0]) * tr[0] + Rat(r.lin[i][1]) * tr[1]);
        return r;
    }

    bool preserves_root_set() const {
        for (const Root& s : all_roots()) {
            // The gradient transforms by (s o w^{-1}): grad' = L^{-T} grad =
            // L grad for orthogonal L.
            Root im{lin[0][0] * s.c1 + lin[0][1] * s.c2,
                    lin[1][0] * s.c1 + lin[1][1] * s.c2};
            if (!is_root(im)) return false;
        }
        return true;
    }
};

inline AffineWeyl reflection(const AffineRoot& psi) {
    if (!is_root(psi.grad)) throw std::domain_error("reflection: not a root");
    auto cov = coroot(psi.grad);
    AffineWeyl w;
    // x |-> x - psi(x) * coroot = (I - cov * grad^T) x - level * cov.
    w.lin[0][0] = 1 - cov[0] * psi.grad.c1;
    w.lin[0][1] = -cov[0] * psi.grad.c2;
    w.lin[1][0] = -cov[1] * psi.grad.c1;
    w.lin[1][1] = 1 - cov[1] * psi.grad.c2;
    w.tr[0] = Rat(-psi.level * cov[0]);
    w.tr[1] = Rat(-psi.level * cov[1]);
    return w;
}

// Pullback action on affine roots: (w . psi)(x) = psi(w^{-1} x).
inline AffineRoot act_on_root(const AffineWeyl& w, const AffineRoot& psi) {
    AffineWeyl inv = w.inverse();
    // psi(L' x + t') has gradient grad^T L' and level grad . t' + level.
    Root grad{psi.grad.c1 * inv.lin[0][0] + psi.grad.c2 * inv.lin[1][0],
              psi.grad.c1 * inv.lin[0][1] + psi.grad.c2 * inv.lin[1][1]};
    Rat lvl = Rat(psi.grad.c1) * inv.tr[0] + Rat(psi.grad.c2) * inv.tr[1]
              + psi.level;
    if (denominator(lvl) != 1)
        throw std::domain_error("act_on_root: non-integral level (translation "
                                "outside the coroot lattice)");
    return {grad, static_cast<int>(numerator(lvl))};
}

// ---------------------------------------------------------------------------
// Regions: alcoves, the square rho, and the two strips, all presented as
// conjunctions of strict inequalities psi > 0.

struct Region {
    enum class Kind { AlcoveSigma, AlcoveSigmaPrime, SquareRho, StripBeta, StripEta };

    Kind kind;
    std::vector<AffineRoot> positive_on;  // region = { x : psi(x) > 0 for all }

    bool contains(const Pt& x) const {
        for (const AffineRoot& psi : positive_on)
            if (eval_affine_root(psi, x) <= 0) return false;
        return true;
    }

    static Region alcove_sigma() {
        // 1/2 > x1 > x2 > 0.
        return {Kind::AlcoveSigma,
                {{kAlpha, 0}, {kBeta, 0}, {-kDelta, 1}}};
    }
    static Region alcove_sigma_prime() {
        // 1/2 > x2 > x1 > 0.
        return {Kind::AlcoveSigmaPrime,
                {{-kAlpha, 0}, {kDelta, 0}, {-kBeta, 1}}};
    }
    static Region square_rho() {
        // 1/2 > x1 > 0 and 1/2 > x2 > 0.
        return {Kind::SquareRho,
                {{kDelta, 0}, {-kDelta, 1}, {kBeta, 0}, {-kBeta, 1}}};
    }
    static Region strip(LeviCase c) {
        if (c == LeviCase::SL2xGL1)
            return {Kind::StripBeta, {{kBeta, 0}, {-kBeta, 1}}};   // 0 < b < 1
        return {Kind::StripEta, {{kGamma, 0}, {-kGamma, 1}}};      // 0 < g < 1
    }
};

// A Weyl element preserves a strip iff it permutes the strip's two defining
// affine roots (walls map to walls, and positivity on the strip is kept).
inline bool preserves_strip(const AffineWeyl& w, LeviCase c) {
    Region s = Region::strip(c);
    AffineRoot p0 = act_on_root(w, s.positive_on[0]);
    AffineRoot p1 = act_on_root(w, s.positive_on[1]);
    return (p0 == s.positive_on[0] && p1 == s.positive_on[1]) ||
           (p0 == s.positive_on[1] && p1 == s.positive_on[0]);
}

// ---------------------------------------------------------------------------
// Galleries of 1/2 x 1/2 squares inside a strip.
//
// Case SL2xGL1: squares [k/2,(k+1)/2] x [0,1/2], index k.
// Case GL2:     squares [k/2,(k+1)/2] x [-k/2,(1-k)/2], index k (these are
//               exactly the grid squares inside the diagonal strip).
// rho is index 0 in both cases.

inline std::array<Pt, 4> square_corners(LeviCase c, long k) {
    Rat x0 = Rat(k, 2), x1 = Rat(k + 1, 2);
    Rat y0 = (c == LeviCase::SL2xGL1) ? Rat(0) : Rat(-k, 2);
    Rat y1 = (c == LeviCase::SL2xGL1) ? Rat(1, 2) : Rat(1 - k, 2);
    return {Pt{x0, y0}, Pt{x1, y0}, Pt{x0, y1}, Pt{x1, y1}};
}

// Index of the square w(rho); throws if w does not preserve the strip.
inline long square_index(const AffineWeyl& w, LeviCase c) {
    if (!preserves_strip(w, c))
        throw std::domain_error("square_index: element does not preserve the strip");
    Pt center = w.apply(Pt{Rat(1, 4), Rat(1, 4)});
    Rat idx = 2 * center[0] - Rat(1, 2);
    if (denominator(idx) != 1)
        throw std::domain_error("square_index: image center is not a square center");
    return static_cast<long>(numerator(idx));
}

// Number of squares crossed from rho to w(rho); equals the reduced-word
// length of w in the strip-stabilizer generators.
inline long gallery_length(const AffineWeyl& w, LeviCase c) {
    return std::labs(square_index(w, c));
}

// psi is positive on an (open) grid square iff min over the corners is >= 0;
// the strict-failure criterion below detects walls genuinely crossed by the
// gallery.
namespace detail {
inline Rat min_over_square(const AffineRoot& psi, LeviCase c, long k) {
    auto corners = square_corners(c, k);
    Rat m = eval_affine_root(psi, corners[0]);
    for (int i = 1; i < 4; ++i) {
        Rat v = eval_affine_root(psi, corners[i]);
        if (v < m) m = v;
    }
    return m;
}
}  // namespace detail

// All affine roots positive on rho but strictly negative somewhere on the
// gallery from rho to w(rho).
inline std::vector<AffineRoot> wall_crossing_roots(const AffineWeyl& w, LeviCase c) {
    long target = square_index(w, c);
    std::vector<long> gallery;
    long step = target >= 0 ? 1 : -1;
    for (long k = 0; k != target + step; k += step) gallery.push_back(k);

    std::vector<AffineRoot> crossed;
    long level_bound = std::labs(target) + 2;
    for (const Root& grad : all_roots()) {
        for (long lvl = -level_bound; lvl <= level_bound; ++lvl) {
            AffineRoot psi{grad, static_cast<int>(lvl)};
            if (detail::min_over_square(psi, c, 0) < 0) continue;  // not positive on rho
            for (long k : gallery) {
                if (detail::min_over_square(psi, c, k) < 0) {
                    crossed.push_back(psi);
                    break;
                }
            }
        }
    }
    return crossed;
}

// ---------------------------------------------------------------------------
// Strip stabilizers W_psi.
//
// Case SL2xGL1: generated by the reflections w_d (about x1 = 0) and w_{1-d}
// (about x1 = 1/2).  Case GL2: generated by t_n = w_d w_{1-b} and the
// reflection w_a; both groups are infinite dihedral (w_a is a second
// involution, not a central one).

struct StabilizerElement {
    AffineWeyl w;
    std::vector<int> word;  // indices into strip_generators(c), shortest form
};

inline std::array<AffineWeyl, 2> strip_generators(LeviCase c) {
    if (c == LeviCase::SL2xGL1)
        return {reflection({kDelta, 0}), reflection({-kDelta, 1})};
    AffineWeyl t_n = reflection({kDelta, 0}).compose(reflection({-kBeta, 1}));
    return {t_n, reflection({kAlpha, 0})};
}

// All w in W preserving the case's strip with gallery length <= bound,
// found by breadth-first search over the two generators (shortest words are
// recorded as a byproduct).
inline std::vector<StabilizerElement> strip_stabilizer_elements(LeviCase c,
                                                                long bound) {
    if (bound < 0) throw std::domain_error("strip_stabilizer_elements: bound < 0");
    auto gens = strip_generators(c);
    std::vector<StabilizerElement> found = {{AffineWeyl{}, {}}};
    std::size_t frontier_begin = 0;
    // Word length per gallery step: 1 for case SL2xGL1, up to 2k+1 for GL2
    // (alternating words a t a t ... a); +2 slack costs nothing.
    long depth_cap = (c == LeviCase::SL2xGL1) ? bound + 1 : 2 * bound + 2;
    for (long depth = 0; depth < depth_cap; ++depth) {
        std::size_t frontier_end = found.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (int gi = 0; gi < 2; ++gi) {
                AffineWeyl next = found[i].w.compose(gens[gi]);
                bool seen = false;
                for (const auto& e : found)
                    if (e.w == next) { seen = true; break; }
                if (seen) continue;
                std::vector<int> word = found[i].word;
                word.push_back(gi);
                found.push_back({next, std::move(word)});
            }
        }
        frontier_begin = frontier_end;
        if (frontier_begin == found.size()) break;
    }
    std::vector<StabilizerElement> result;
    for (auto& e : found)
        if (gallery_length(e.w, c) <= bound) result.push_back(std::move(e));
    return result;
}

}  // namespace sp4hecke
