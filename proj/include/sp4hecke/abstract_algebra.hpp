#pragma once

// The presented algebra attached to a strip stabilizer.  The stabilizer is
// infinite dihedral, generated by two involutions, so the algebra has two
// generators t_0, t_1 subject only to one quadratic relation each,
//
//     t_i^2 = a_i + b_i t_i,
//
// and a linear basis t_w indexed by the reduced (= alternating) words w.
// Multiplication rewrites a concatenation to the basis by applying the
// quadratic relations at adjacent equal letters; every application shortens
// the word, so the rewriting terminates.  No braid relation exists in an
// infinite dihedral group, so the reduced form is unique and the product is
// well defined.
//
// For the strip cases treated here the parameters are
//   case SL2xGL1:  t_0^2 = q + (q-1) t_0,   t_1^2 = q + (q-1) t_1,
//   case GL2:      t_0^2 = q + (q-1) t_0,   t_1^2 = 1,
// matching the relations satisfied by the normalized Hecke generators.

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "sp4hecke/affine.hpp"

namespace sp4hecke {

using Cx = std::complex<double>;
using Word = std::vector<int>;  // letters 0/1, reduced means alternating

struct QuadraticRelation {
    Cx constant;  // a in t^2 = a + b t
    Cx linear;    // b
};

struct AbstractAlgebra {
    std::array<QuadraticRelation, 2> relation;

    static AbstractAlgebra strip_case(LeviCase c, long q) {
        AbstractAlgebra alg;
        alg.relation[0] = {Cx(static_cast<double>(q)), Cx(static_cast<double>(q - 1))};
        alg.relation[1] = (c == LeviCase::SL2xGL1)
                              ? alg.relation[0]
                              : QuadraticRelation{Cx(1), Cx(0)};
        return alg;
    }
};

// A finite linear combination of basis words.
struct AbstractElement {
    std::map<Word, Cx> coeff;
};

inline bool is_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

inline AbstractElement abstract_unit() { return {{{Word{}, Cx(1)}}}; }

inline AbstractElement abstract_generator(int i) {
    if (i != 0 && i != 1) throw std::domain_error("abstract_generator: letter out of range");
    return {{{Word{i}, Cx(1)}}};
}

namespace detail {
inline void accumulate_reduced(const AbstractAlgebra& alg, const Word& w, Cx scale,
                               std::map<Word, Cx>& out) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != w[i + 1]) continue;
        int letter = w[i];
        // w = u (letter letter) v  ->  a * (u v) + b * (u letter v).
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        Word middle(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        middle.insert(middle.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        const auto& rel = alg.relation[static_cast<std::size_t>(letter)];
        accumulate_reduced(alg, shorter, scale * rel.constant, out);
        if (rel.linear != Cx(0)) accumulate_reduced(alg, middle, scale * rel.linear, out);
        return;
    }
    out[w] += scale;
}
}  // namespace detail

// Rewrite an arbitrary word to the reduced-word basis.
inline AbstractElement reduce_word(const AbstractAlgebra& alg, const Word& w) {
    AbstractElement r;
    detail::accumulate_reduced(alg, w, Cx(1), r.coeff);
    return r;
}

inline AbstractElement abstract_multiply(const AbstractAlgebra& alg,
                                         const AbstractElement& x,
                                         const AbstractElement& y) {
    AbstractElement r;
    for (const auto& [wx, cx] : x.coeff) {
        if (cx == Cx(0)) continue;
        for (const auto& [wy, cy] : y.coeff) {
            if (cy == Cx(0)) continue;
            Word cat = wx;
            cat.insert(cat.end(), wy.begin(), wy.end());
            detail::accumulate_reduced(alg, cat, cx * cy, r.coeff);
        }
    }
    return r;
}

// All reduced words of length <= bound, in a fixed deterministic order:
// by length, then by first letter.
inline std::vector<Word> reduced_words(long bound) {
    if (bound < 0) throw std::domain_error("reduced_words: negative bound");
    std::vector<Word> out = {Word{}};
    for (long len = 1; len <= bound; ++len)
        for (int first : {0, 1}) {
            Word w;
            for (long i = 0; i < len; ++i) w.push_back((i % 2 == 0) ? first : 1 - first);
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace sp4hecke
