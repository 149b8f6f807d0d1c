#pragma once

// Exact 4x4 matrices over Q and the symplectic form they preserve.
//
// The form is <x,y> = x1 y4 + x2 y3 - x3 y2 - x4 y1, i.e. the Gram matrix J
// below.  With this choice the diagonal torus is diag(t1, t2, 1/t2, 1/t1) and
// every root subgroup occupies one or two fixed matrix positions.  J^2 = -1,
// so the inverse of a symplectic matrix is -J M^T J, which keeps inversion
// exact and cheap.

#include <array>
#include <stdexcept>

#include "sp4hecke/scalars.hpp"

namespace sp4hecke {

struct Mat4 {
    std::array<Rat, 16> a{};  // row-major

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m.a[5 * i] = 1;
        return m;
    }

    // 1-based accessors, matching the usual matrix index notation.
    Rat& at(int i, int j) { return a[4 * (i - 1) + (j - 1)]; }
    const Rat& at(int i, int j) const { return a[4 * (i - 1) + (j - 1)]; }

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

inline Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 z;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Rat& c = x.a[4 * i + k];
            if (c == 0) continue;
            for (int j = 0; j < 4; ++j) z.a[4 * i + j] += c * y.a[4 * k + j];
        }
    return z;
}

inline Mat4 operator*(const Rat& c, const Mat4& m) {
    Mat4 z = m;
    for (Rat& e : z.a) e *= c;
    return z;
}

inline Mat4 transpose(const Mat4& m) {
    Mat4 z;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z.a[4 * i + j] = m.a[4 * j + i];
    return z;
}

inline Mat4 diagonal(const Rat& d1, const Rat& d2, const Rat& d3, const Rat& d4) {
    Mat4 m;
    m.at(1, 1) = d1;
    m.at(2, 2) = d2;
    m.at(3, 3) = d3;
    m.at(4, 4) = d4;
    return m;
}

// diag(t1, t2, 1/t2, 1/t1), the maximal torus in this realization.
inline Mat4 torus(const Rat& t1, const Rat& t2) {
    if (t1 == 0 || t2 == 0) throw std::domain_error("torus: singular parameter");
    return diagonal(t1, t2, 1 / t2, 1 / t1);
}

inline const Mat4& gram_matrix() {
    static const Mat4 j = [] {
        Mat4 m;
        m.at(1, 4) = 1;
        m.at(2, 3) = 1;
        m.at(3, 2) = -1;
        m.at(4, 1) = -1;
        return m;
    }();
    return j;
}

inline bool is_symplectic(const Mat4& m) {
    return transpose(m) * gram_matrix() * m == gram_matrix();
}

// Inverse of a symplectic matrix: -J M^T J.  The caller must ensure that the
// argument really is symplectic; no check is done here because this runs in
// the inner loops of coset enumeration.
inline Mat4 symplectic_inverse(const Mat4& m) {
    Rat minus_one(-1);
    return minus_one * (gram_matrix() * transpose(m) * gram_matrix());
}

inline Rat det(const Mat4& m) {
    // Laplace expansion along the first row with explicit 3x3 minors.
    auto minor3 = [&m](int r1, int r2, int r3, int c1, int c2, int c3) {
        return m.at(r1, c1) * (m.at(r2, c2) * m.at(r3, c3) - m.at(r2, c3) * m.at(r3, c2)) -
               m.at(r1, c2) * (m.at(r2, c1) * m.at(r3, c3) - m.at(r2, c3) * m.at(r3, c1)) +
               m.at(r1, c3) * (m.at(r2, c1) * m.at(r3, c2) - m.at(r2, c2) * m.at(r3, c1));
    };
    return m.at(1, 1) * minor3(2, 3, 4, 2, 3, 4) - m.at(1, 2) * minor3(2, 3, 4, 1, 3, 4) +
           m.at(1, 3) * minor3(2, 3, 4, 1, 2, 4) - m.at(1, 4) * minor3(2, 3, 4, 1, 2, 3);
}

}  // namespace sp4hecke
