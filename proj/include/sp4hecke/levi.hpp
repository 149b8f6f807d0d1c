#pragma once

// Levi common-value analysis for Sp(2n).
//
// A Levi of Sp(2n) has the shape GL(n_1) x ... x GL(n_r) x Sp(2m) with
// m + sum n_i = n.  Arranged along the diagonal, the GL blocks occupy the
// first coordinates of E = Q^n and the Sp factor the last m.  The solver
// builds the exact linear system "all affine simple roots of L take a common
// value v" and eliminates it over Q.  Outcome per factor:
//   GL(k), k >= 2: k rows, forcing v = 1/k on an arithmetic progression;
//   Sp(2m), m >= 1: m+1 rows, forcing v = 1/(2m) at a pinned point;
//   GL(1): no affine simple roots, hence no constraint (a free coordinate).
// The system is consistent iff all the forced values agree, which is the
// whole classification; a Levi with no affine simple roots at all (the pure
// torus) admits no affine generic character and is reported as absent.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sp4hecke/scalars.hpp"

namespace sp4hecke {

// Root data of type C_n used to spell out the ambient conventions (simple
// roots e_i - e_{i+1} and 2e_n, highest root 2e_1, Coxeter number 2n).
struct RootSystemC {
    int rank = 0;
    std::vector<std::vector<int>> simple_roots;
    std::vector<int> highest_root;
    int coxeter_number = 0;

    static RootSystemC make(int n) {
        if (n < 1) throw std::domain_error("RootSystemC::make: rank < 1");
        RootSystemC rs;
        rs.rank = n;
        for (int i = 0; i < n - 1; ++i) {
            std::vector<int> r(n, 0);
            r[i] = 1;
            r[i + 1] = -1;
            rs.simple_roots.push_back(std::move(r));
        }
        std::vector<int> last(n, 0);
        last[n - 1] = 2;
        rs.simple_roots.push_back(std::move(last));
        rs.highest_root.assign(n, 0);
        rs.highest_root[0] = 2;
        rs.coxeter_number = 2 * n;
        return rs;
    }

    // Full root set: +-e_i +- e_j (i < j) and +-2e_i.
    std::vector<std::vector<int>> all_roots() const {
        std::vector<std::vector<int>> roots;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        std::vector<int> r(rank, 0);
                        r[i] = si;
                        r[j] = sj;
                        roots.push_back(std::move(r));
                    }
        for (int i = 0; i < rank; ++i)
            for (int s : {2, -2}) {
                std::vector<int> r(rank, 0);
                r[i] = s;
                roots.push_back(std::move(r));
            }
        return roots;
    }
};

struct LeviShape {
    std::vector<int> gl_blocks;  // sizes n_1, ..., n_r (each >= 1)
    int sp_half_rank = 0;        // m (0 = no symplectic factor)

    int ambient_rank() const {
        return sp_half_rank +
               std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0);
    }
};

struct LeviSolution {
    Rat common_value;             // the value all affine simple roots take
    int dimension = 0;            // dimension of the solution subspace of E
    std::vector<Rat> example_point;
};

namespace detail {

// One affine functional row: coeffs . x + constant.
struct AffineRow {
    std::vector<Rat> coeffs;
    Rat constant;
};

// The affine simple roots of the Levi, in ambient coordinates.
inline std::vector<AffineRow> levi_simple_affine_roots(const LeviShape& shape) {
    const int n = shape.ambient_rank();
    std::vector<AffineRow> rows;
    auto zero = [n] { return std::vector<Rat>(n, Rat(0)); };
    int offset = 0;
    for (int k : shape.gl_blocks) {
        if (k < 1) throw std::domain_error("levi shape: nonpositive GL block");
        if (k >= 2) {
            for (int j = 0; j < k - 1; ++j) {  // e_{o+j} - e_{o+j+1}
                AffineRow row{zero(), Rat(0)};
                row.coeffs[offset + j] = 1;
                row.coeffs[offset + j + 1] = -1;
                rows.push_back(std::move(row));
            }
            // 1 - (highest root of the block) = 1 - (e_o - e_{o+k-1}).
            AffineRow row{zero(), Rat(1)};
            row.coeffs[offset] = -1;
            row.coeffs[offset + k - 1] = 1;
            rows.push_back(std::move(row));
        }
        offset += k;
    }
    const int m = shape.sp_half_rank;
    if (m >= 1) {
        for (int j = 0; j < m - 1; ++j) {  // e_{o+j} - e_{o+j+1}
            AffineRow row{zero(), Rat(0)};
            row.coeffs[offset + j] = 1;
            row.coeffs[offset + j + 1] = -1;
            rows.push_back(std::move(row));
        }
        AffineRow last{zero(), Rat(0)};  // 2 e_n
        last.coeffs[n - 1] = 2;
        rows.push_back(std::move(last));
        AffineRow aff{zero(), Rat(1)};   // 1 - 2 e_o (highest root of the factor)
        aff.coeffs[offset] = -2;
        rows.push_back(std::move(aff));
    }
    return rows;
}

}  // namespace detail

// Solves "psi(x) = v for every affine simple root psi of L" exactly.  Returns
// the common value, the dimension of the solution subspace and one point on
// it, or absent when the system is inconsistent or L has no affine simple
// roots.
inline std::optional<LeviSolution> levi_common_point(const LeviShape& shape) {
    auto rows = detail::levi_simple_affine_roots(shape);
    if (rows.empty()) return std::nullopt;

    // Unknowns x_1..x_n, v; row psi: coeffs . x - v = -constant.
    const int n = shape.ambient_rank();
    const int cols = n + 1;
    std::vector<std::vector<Rat>> mat;
    for (const auto& row : rows) {
        std::vector<Rat> r = row.coeffs;
        r.push_back(Rat(-1));
        r.push_back(-row.constant);  // augmented column
        mat.push_back(std::move(r));
    }

    // Gauss-Jordan over Q.
    std::vector<int> pivot_col_of_row;
    int row_i = 0;
    for (int col = 0; col < cols && row_i < static_cast<int>(mat.size()); ++col) {
        int pivot = -1;
        for (int r = row_i; r < static_cast<int>(mat.size()); ++r)
            if (mat[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(mat[row_i], mat[pivot]);
        Rat inv = Rat(1) / mat[row_i][col];
        for (int c = col; c <= cols; ++c) mat[row_i][c] *= inv;
        for (int r = 0; r < static_cast<int>(mat.size()); ++r) {
            if (r == row_i || mat[r][col] == 0) continue;
            Rat f = mat[r][col];
            for (int c = col; c <= cols; ++c) mat[r][c] -= f * mat[row_i][c];
        }
        pivot_col_of_row.push_back(col);
        ++row_i;
    }
    // Inconsistency: a zero row with nonzero augmented entry.
    for (int r = row_i; r < static_cast<int>(mat.size()); ++r)
        if (mat[r][cols] != 0) return std::nullopt;

    // v must be pinned (with at least one contributing factor it always is;
    // a free v would mean the system said nothing).
    bool v_pinned = false;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        if (pivot_col_of_row[r] == n) v_pinned = true;
    if (!v_pinned) return std::nullopt;

    // Particular solution: free variables set to 0.
    std::vector<Rat> sol(cols, Rat(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        int pc = pivot_col_of_row[r];
        Rat val = mat[r][cols];
        for (int c = pc + 1; c < cols; ++c) val -= mat[r][c] * sol[c];
        sol[pc] = val;
    }

    LeviSolution out;
    out.common_value = sol[n];
    out.dimension = cols - static_cast<int>(pivot_col_of_row.size());
    out.example_point.assign(sol.begin(), sol.begin() + n);
    return out;
}

// The closed-form side of the classification: the system above is solvable
// iff the Levi has at least one affine simple root and the forced scales
// ({block size k for GL(k>=2)} and {2m for the Sp factor}) all agree.
inline bool levi_admissible_by_rule(const LeviShape& shape) {
    std::vector<int> scales;
    for (int k : shape.gl_blocks)
        if (k >= 2) scales.push_back(k);
    if (shape.sp_half_rank >= 1) scales.push_back(2 * shape.sp_half_rank);
    if (scales.empty()) return false;
    for (int s : scales)
        if (s != scales.front()) return false;
    return true;
}

// All Levi shapes of Sp(2n) up to conjugacy: a half-rank m plus a partition
// of n - m into GL block sizes (listed descending).
inline std::vector<LeviShape> enumerate_levi_shapes(int n) {
    std::vector<LeviShape> shapes;
    for (int m = 0; m <= n; ++m) {
        int rest = n - m;
        // Partitions of `rest` in descending order.
        std::vector<int> part;
        auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                shapes.push_back({part, m});
                return;
            }
            for (int next = std::min(remaining, max_part); next >= 1; --next) {
                part.push_back(next);
                self(self, remaining - next, next);
                part.pop_back();
            }
        };
        recurse(recurse, rest, rest == 0 ? 1 : rest);
    }
    return shapes;
}

}  // namespace sp4hecke
