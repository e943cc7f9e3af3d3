// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace docanno::pdf {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Affine transform [a b c d e f] using the row-vector convention: p' = p * M.
struct Matrix {
    double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

    static constexpr Matrix translation(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }

    /// `*this` applied first, then `m`.
    constexpr Matrix then(const Matrix& m) const {
        return {a * m.a + b * m.c,       a * m.b + b * m.d,       c * m.a + d * m.c,
                c * m.b + d * m.d,       e * m.a + f * m.c + m.e, e * m.b + f * m.d + m.f};
    }

    constexpr Point apply(Point p) const { return {p.x * a + p.y * c + e, p.x * b + p.y * d + f}; }
    constexpr Point apply_vector(Point v) const { return {v.x * a + v.y * c, v.x * b + v.y * d}; }
};

inline double length(Point v) { return std::hypot(v.x, v.y); }

}  // namespace docanno::pdf
