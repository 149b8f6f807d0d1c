#pragma once

// Ground-truth oracle for the pattern groups: breadth-first closure of a
// generating set inside Sp(4, Z/p^2).  Valuation bounds up to 2 and the
// diagonal congruence are decidable mod p^2, so the closure can be compared
// element-by-element with the closed-form membership test.  Restricted to
// p = 3, where a matrix mod 9 packs into one 64-bit word (16 entries of 4
// bits) and the biggest closure, K+ mod 9, has 3^13 ~ 1.6M elements.

#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sp4hecke/filtration.hpp"
#include "sp4hecke/matrix.hpp"

namespace sp4hecke {

using ModMatrix = std::array<std::uint8_t, 16>;  // entries in 0..8, mod 9

inline std::uint64_t encode_mod9(const ModMatrix& m) {
    std::uint64_t key = 0;
    for (int i = 15; i >= 0; --i) key = (key << 4) | m[static_cast<std::size_t>(i)];
    return key;
}

inline ModMatrix decode_mod9(std::uint64_t key) {
    ModMatrix m;
    for (int i = 0; i < 16; ++i) {
        m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(key & 0xF);
        key >>= 4;
    }
    return m;
}

inline ModMatrix reduce_mod9(const Mat4& g) {
    ModMatrix m;
    for (int i = 0; i < 16; ++i)
        m[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(residue(g.a[static_cast<std::size_t>(i)], 3, 2));
    return m;
}

inline ModMatrix mul_mod9(const ModMatrix& x, const ModMatrix& y) {
    ModMatrix z{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int acc = 0;
            for (int k = 0; k < 4; ++k)
                acc += static_cast<int>(x[static_cast<std::size_t>(4 * i + k)]) *
                       static_cast<int>(y[static_cast<std::size_t>(4 * k + j)]);
            z[static_cast<std::size_t>(4 * i + j)] = static_cast<std::uint8_t>(acc % 9);
        }
    return z;
}

// Subgroup of Sp(4, Z/9) generated by the reductions of `gens`.
inline std::unordered_set<std::uint64_t> closure_mod9(const std::vector<Mat4>& gens) {
    std::vector<ModMatrix> reduced;
    reduced.reserve(gens.size());
    for (const Mat4& g : gens) reduced.push_back(reduce_mod9(g));

    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> frontier;
    ModMatrix id{};
    for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(5 * i)] = 1;
    seen.insert(encode_mod9(id));
    frontier.push_back(encode_mod9(id));
    while (!frontier.empty()) {
        ModMatrix cur = decode_mod9(frontier.front());
        frontier.pop_front();
        for (const ModMatrix& g : reduced) {
            std::uint64_t key = encode_mod9(mul_mod9(cur, g));
            if (seen.insert(key).second) frontier.push_back(key);
        }
    }
    return seen;
}

// The closed-form membership test, evaluated on a mod-9 matrix.  Usable only
// when every entry bound is <= 2 (valuations 0, 1, >=2 are visible mod 9).
inline bool pattern_accepts_mod9(const FiltrationGroup& k, const ModMatrix& m) {
    if (k.p != 3 || k.torus_part != TorusPart::TRPlus)
        throw std::domain_error("pattern_accepts_mod9: oracle needs p=3, plain torus");
    auto entry_val_at_least = [&m](int i, int j, long bound) {
        if (bound <= 0) return true;
        int e = m[static_cast<std::size_t>(4 * (i - 1) + (j - 1))];
        if (bound == 1) return e % 3 == 0;
        if (bound == 2) return e == 0;
        throw std::domain_error("pattern_accepts_mod9: bound exceeds oracle precision");
    };
    for (const Root& dir : all_roots()) {
        long bound = k.min_level[static_cast<std::size_t>(root_index(dir))];
        for (const EntryPosition& e : root_entry_positions(dir))
            if (!entry_val_at_least(e.row, e.col, bound)) return false;
    }
    for (int i = 1; i <= 4; ++i) {
        int d = m[static_cast<std::size_t>(4 * (i - 1) + (i - 1))];
        if (d % 3 != 1) return false;
    }
    return true;
}

// Topological generators of a pattern group mod p^2: one root element per
// direction at its minimal level, plus the two torus directions 1 + p.
inline std::vector<Mat4> pattern_generators(const FiltrationGroup& k) {
    std::vector<Mat4> gens;
    for (const Root& dir : all_roots()) {
        int lvl = static_cast<int>(k.min_level[static_cast<std::size_t>(root_index(dir))]);
        gens.push_back(x_affine({dir, lvl}, 1, k.p));
    }
    gens.push_back(torus(1 + Rat(k.p), 1));
    gens.push_back(torus(1, 1 + Rat(k.p)));
    return gens;
}

}  // namespace sp4hecke
