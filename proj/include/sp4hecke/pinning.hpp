#pragma once

// The Chevalley pinning of Sp(4) in the matrix realization of matrix.hpp.
//
// Each of the eight roots acts through one or two fixed matrix positions:
//
//      alpha = e1-e2 : (1,2)+, (3,4)-        -alpha : (2,1)+, (4,3)-
//      beta  = 2e2   : (2,3)+                -beta  : (3,2)+
//      gamma = e1+e2 : (1,3)+, (2,4)+        -gamma : (3,1)+, (4,2)+
//      delta = 2e1   : (1,4)+                -delta : (4,1)+
//
// so x_r(u) = 1 + u * (signed sum of those elementary matrices).  Affine root
// subgroups are U_{r+l} = x_r(p^l R), and the standard Weyl representatives
// are n_psi(u) = x_{-psi}(-1/u) x_psi(u) x_{-psi}(-1/u).  The two commutator
// structure constants that the Hecke computation relies on are extracted from
// an actual matrix product in commutator_constants(), never assumed.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sp4hecke/affine.hpp"
#include "sp4hecke/matrix.hpp"
#include "sp4hecke/scalars.hpp"

namespace sp4hecke {

struct EntryPosition {
    int row, col, sign;  // sign in {+1, -1}
};

// The matrix positions carrying the root r, with signs.
inline std::vector<EntryPosition> root_entry_positions(const Root& r) {
    if (r == kAlpha) return {{1, 2, 1}, {3, 4, -1}};
    if (r == -kAlpha) return {{2, 1, 1}, {4, 3, -1}};
    if (r == kBeta) return {{2, 3, 1}};
    if (r == -kBeta) return {{3, 2, 1}};
    if (r == kGamma) return {{1, 3, 1}, {2, 4, 1}};
    if (r == -kGamma) return {{3, 1, 1}, {4, 2, 1}};
    if (r == kDelta) return {{1, 4, 1}};
    if (r == -kDelta) return {{4, 1, 1}};
    throw std::domain_error("root_entry_positions: not a root");
}

inline Mat4 x_of(const Root& r, const Rat& u) {
    Mat4 m = Mat4::identity();
    for (const EntryPosition& e : root_entry_positions(r))
        m.at(e.row, e.col) = e.sign > 0 ? u : -u;
    return m;
}

// x_{grad}(p^level * u); defined for integral u only, so that the result lies
// in U_psi.
inline Mat4 x_affine(const AffineRoot& psi, const Rat& u, long p) {
    if (!is_integral(u, p))
        throw std::domain_error("x_affine: argument has negative valuation");
    return x_of(psi.grad, rat_p_pow(p, psi.level) * u);
}

// h_r(u) = (coroot of r)(u), a diagonal torus element.
inline Mat4 h_of(const Root& r, const Rat& u, long p) {
    if (!is_unit(u, p)) throw std::domain_error("h_of: argument is not a unit");
    auto cov = coroot(r);
    return torus(rat_pow(u, cov[0]), rat_pow(u, cov[1]));
}

// n_psi(u) = x_{-psi}(-1/u) x_psi(u) x_{-psi}(-1/u), a representative of
// reflection(psi) in the normalizer of the torus.
inline Mat4 n_of(const AffineRoot& psi, const Rat& u, long p) {
    if (!is_unit(u, p)) throw std::domain_error("n_of: argument is not a unit");
    Rat arg = rat_p_pow(p, psi.level) * u;
    Mat4 wing = x_of(-psi.grad, -1 / arg);
    return wing * x_of(psi.grad, arg) * wing;
}

inline Mat4 commutator(const Mat4& g, const Mat4& h) {
    return g * h * symplectic_inverse(g) * symplectic_inverse(h);
}

// If m = x_r(u) for a (unique) root r and u != 0, return (r, u).  Returns
// nullopt for the identity and for anything not of that shape.
inline std::optional<std::pair<Root, Rat>> as_root_element(const Mat4& m) {
    for (const Root& r : all_roots()) {
        auto pos = root_entry_positions(r);
        Rat u = pos[0].sign > 0 ? m.at(pos[0].row, pos[0].col)
                                : -m.at(pos[0].row, pos[0].col);
        if (u == 0) continue;
        if (x_of(r, u) == m) return std::make_pair(r, u);
    }
    return std::nullopt;
}

// The affine Weyl action induced by a monomial matrix n: conjugation by n
// maps U_psi onto U_{w.psi} where w = weyl_image(n, p).  The linear part is
// read off from the permutation of the diagonal, the translation part from
// the valuations of the first two rows (the torus cocharacter lambda embeds
// as diag(p^l1, p^l2, p^-l2, p^-l1) and acts by translation by -lambda).
inline AffineWeyl weyl_image(const Mat4& n, long p) {
    int col_of[4];
    for (int i = 0; i < 4; ++i) {
        int found = -1;
        for (int j = 0; j < 4; ++j)
            if (n.a[4 * i + j] != 0) {
                if (found >= 0)
                    throw std::domain_error("weyl_image: matrix is not monomial");
                found = j;
            }
        if (found < 0) throw std::domain_error("weyl_image: singular matrix");
        col_of[i] = found;
    }
    // Exponent functional of diagonal position k on (x1, x2).
    static const int functional[4][2] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
    AffineWeyl w;
    for (int i = 0; i < 2; ++i) {
        w.lin[i][0] = functional[col_of[i]][0];
        w.lin[i][1] = functional[col_of[i]][1];
        w.tr[i] = Rat(-valuation(n.a[4 * i + col_of[i]], p));
    }
    if (!w.preserves_root_set())
        throw std::domain_error("weyl_image: matrix does not normalize the torus pattern");
    return w;
}

// The three commutation regimes for a pair of affine root subgroups.
struct CommutatorRule {
    enum class Tag { Parallel, Opposite, Generic };
    Tag tag;
    // When bounded, [U_psi, U_phi] is contained in the product of the U over
    // `factors`, times T(R)^+ if torus_plus is set.  (Opposite pairs whose
    // levels sum to <= 0 generate a non-compact group; nothing is claimed.)
    bool bounded = false;
    std::vector<AffineRoot> factors;
    bool torus_plus = false;
};

inline CommutatorRule classify_commutator(const AffineRoot& psi, const AffineRoot& phi) {
    CommutatorRule rule;
    if (phi.grad == psi.grad) {
        rule.tag = CommutatorRule::Tag::Parallel;
        rule.bounded = true;  // the subgroups commute
        return rule;
    }
    if (phi.grad == -psi.grad) {
        rule.tag = CommutatorRule::Tag::Opposite;
        if (psi.level + phi.level > 0) {
            rule.bounded = true;
            rule.factors = {{psi.grad, psi.level + 1}, {phi.grad, phi.level + 1}};
            rule.torus_plus = true;
        }
        return rule;
    }
    rule.tag = CommutatorRule::Tag::Generic;
    rule.bounded = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Root g{i * psi.grad.c1 + j * phi.grad.c1, i * psi.grad.c2 + j * phi.grad.c2};
            if (is_root(g)) rule.factors.push_back({g, i * psi.level + j * phi.level});
        }
    return rule;
}

// Structure constants of the two commutators driving the Hecke relations:
//   [x_{-alpha}(v), x_delta(u)]       = x_beta(a v^2 u)   x_gamma(b v u)
//   [x_alpha(v),    x_{1-delta}(u)]   = x_{1-beta}(a' v^2 u) x_{1-gamma}(b' v u)
// computed from matrices at a fixed prime (the constants are p-independent).
struct StructureConstants {
    Rat a, b, a_prime, b_prime;
};

inline StructureConstants commutator_constants() {
    const long p = 3;
    StructureConstants c;

    Mat4 c1 = commutator(x_of(-kAlpha, 1), x_of(kDelta, 1));
    c.a = c1.at(2, 3);
    c.b = c1.at(1, 3);
    if (c1 != x_of(kBeta, c.a) * x_of(kGamma, c.b) || !is_unit(c.a, p) || !is_unit(c.b, p))
        throw std::domain_error("commutator_constants: unexpected [x_{-a}, x_d] shape");

    Mat4 c2 = commutator(x_of(kAlpha, 1), x_affine({-kDelta, 1}, 1, p));
    c.a_prime = c2.at(3, 2) / p;
    c.b_prime = c2.at(3, 1) / p;
    if (c2 != x_affine({-kBeta, 1}, c.a_prime, p) * x_affine({-kGamma, 1}, c.b_prime, p) ||
        !is_unit(c.a_prime, p) || !is_unit(c.b_prime, p))
        throw std::domain_error("commutator_constants: unexpected [x_a, x_{1-d}] shape");
    return c;
}

}  // namespace sp4hecke
