#pragma once

#include "leibhom/rational.hpp"

#include <map>
#include <utility>

namespace leibhom {

// Affine vector field on R^n: sum of coefficients x_j d/dx_i (linear part,
// keyed by (target axis i, source axis j)) and d/dx_i (constant part).
// Axis indices are 1-based; the stored maps are canonical (no zeros).
struct LinearVectorField {
    int n = 0;
    std::map<std::pair<int, int>, Rat> linear;
    std::map<int, Rat> constant;

    bool operator==(const LinearVectorField&) const = default;
    bool is_zero_field() const { return linear.empty() && constant.empty(); }

    void add_linear(int i, int j, const Rat& c);
    void add_constant(int i, const Rat& c);
};

// alpha_ij = x_i d_j - x_j d_i with i < j inside one of the two index blocks.
LinearVectorField make_alpha(int p, int q, int i, int j);

// beta_ij = x_i d_j + x_j d_i with i in the first block, j in the second.
LinearVectorField make_beta(int p, int q, int i, int j);

LinearVectorField make_partial(int n, int i);

LinearVectorField add(const LinearVectorField& a, const LinearVectorField& b);
LinearVectorField scale(const LinearVectorField& a, const Rat& c);

// [a,b] = a b - b a as operators on functions; affine fields are closed.
LinearVectorField commutator(const LinearVectorField& a, const LinearVectorField& b);

} // namespace leibhom
