#pragma once

// Test-only reference implementations, kept independent of the library paths
// they check.

#include "leibhom/sparse.hpp"
#include "leibhom/vf.hpp"

#include <vector>

namespace oracle {

using leibhom::Index;
using leibhom::Rat;

// Dense fraction-free (Bareiss) rank over Q.
inline Index dense_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    Index rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && leibhom::is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (leibhom::is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Affine vector field as a dense table: coef[i][0] is the d/dx_i constant,
// coef[i][j] the x_j coefficient of the d/dx_i component (1-based axes).
struct DenseField {
    int n;
    std::vector<std::vector<Rat>> coef;
    explicit DenseField(int n_) : n(n_), coef(n_ + 1, std::vector<Rat>(n_ + 1, 0)) {}
};

inline DenseField to_dense(const leibhom::LinearVectorField& f) {
    DenseField d(f.n);
    for (auto& [k, v] : f.linear) d.coef[k.first][k.second] = v;
    for (auto& [i, v] : f.constant) d.coef[i][0] = v;
    return d;
}

// Bracket by direct differentiation: [X,Y]^k = X(Y^k) - Y(X^k), where for an
// affine component f(x) = c + sum a_j x_j one has X(f) = sum_l X^l a_l.
inline DenseField dense_bracket(const DenseField& a, const DenseField& b) {
    DenseField out(a.n);
    for (int k = 1; k <= a.n; ++k) {
        // X(Y^k): apply each component of X to the coefficient-linear form of Y^k
        for (int l = 1; l <= a.n; ++l) {
            const Rat& dYk_dxl = b.coef[k][l];
            if (leibhom::is_zero(dYk_dxl)) continue;
            for (int j = 0; j <= a.n; ++j) out.coef[k][j] += a.coef[l][j] * dYk_dxl;
        }
        for (int l = 1; l <= a.n; ++l) {
            const Rat& dXk_dxl = a.coef[k][l];
            if (leibhom::is_zero(dXk_dxl)) continue;
            for (int j = 0; j <= a.n; ++j) out.coef[k][j] -= b.coef[l][j] * dXk_dxl;
        }
    }
    return out;
}

inline bool dense_equal(const DenseField& a, const leibhom::LinearVectorField& f) {
    DenseField b = to_dense(f);
    return a.coef == b.coef;
}

} // namespace oracle
