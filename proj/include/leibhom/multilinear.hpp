#pragma once

#include "leibhom/algebra.hpp"

#include <vector>

namespace leibhom {

// Deterministic enumeration of wedge / tensor / mixed bases over a base space
// of dimension base_dim. Wedges are strictly increasing tuples in lex order,
// tensors all tuples in lex order, mixed = one distinguished tensor factor in
// front of a wedge (product order).
struct MultiBasis {
    enum Shape { Wedge, Tensor, MixedTensorWedge } shape = Wedge;
    int base_dim = 0;
    int k = 0; // wedge/tensor arity; for mixed, the wedge arity (total factors k+1)

    Index size() const;
    std::vector<int> unrank(Index r) const;
    Index rank(const std::vector<int>& tuple) const; // tuple must be canonical

    // Rank of an arbitrary index tuple after wedge sorting; returns false for a
    // repeated index, otherwise sets the permutation sign. Tensor shapes always
    // rank directly with sign +1.
    bool rank_with_sign(std::vector<int> tuple, Index& r, int& sign) const;

    bool operator==(const MultiBasis&) const = default;
};

Index binomial(int n, int k);

// Sparse element of Hom(domain, module) (cochain) or domain ⊗ module (chain);
// both live on flat indices domain_index * module_dim + value_index.
// Scalar values use module_dim = 1.
struct Cochain {
    MultiBasis dom;
    int module_dim = 1;
    SparseVec coeffs;

    Index flat(Index dom_idx, int v) const { return dom_idx * module_dim + v; }
    void set(Index dom_idx, int v, const Rat& c);
    Rat at(Index dom_idx, int v) const;
    bool is_zero_cochain() const { return coeffs.empty(); }

    bool operator==(const Cochain&) const = default;
};

Cochain scale(const Cochain& f, const Rat& c);
Cochain add(const Cochain& a, const Cochain& b);

// Action of g on a wedge over the module of `rep` (derivation extension):
// g.(x_1 ^ ... ^ x_k) = sum_i x_1 ^ ... ^ [g, x_i] ^ ... ^ x_k.
SparseVec action_on_wedge(const Representation& rep, int g, const MultiBasis& wb,
                          Index wedge_idx);

// Action on Hom(wedge over sub-basis of h, module):
// (g.f)(x_1^...^x_k) = g.f(x) + sum_i f(x_1^...^[x_i,g]^...^x_k),
// where the insertion bracket is taken in `host` and must stay in the sub-basis
// spanned by host indices [sub_offset, sub_offset + dom.base_dim).
Cochain induced_action_on_hom(const Representation& codomain_rep, const LieAlgebra& host,
                              int host_g, int sub_offset, const Cochain& f);

// Action on wedge ⊗ module chains: g.(z ⊗ m) = (g.z) ⊗ m + z ⊗ g.m.
Cochain action_on_wedge_tensor(const Representation& module_rep, const LieAlgebra& host,
                               int host_g, int sub_offset, const Cochain& chain);

// Action on tensor cochains over the full algebra:
// (g.f)(x_1⊗...⊗x_k) = g.f(x) + sum_i f(x_1⊗...⊗[x_i,g]⊗...⊗x_k).
// Pass codomain == nullptr for scalar-valued f.
Cochain action_on_tensor_cochain(const LieAlgebra& host, int host_g, const Cochain& f,
                                 const Representation* codomain);

// The comparison map Hom(Λ^k I_n, h) → Λ^k I_n ⊗ h: each wedge basis element z
// with s of its indices in the second block contributes (-1)^s z ⊗ f(z).
// In coordinates this is a diagonal sign flip, hence trivially invertible.
Cochain psi(const LieAlgebra& h, const Cochain& f);
Cochain psi_inverse(const LieAlgebra& h, const Cochain& t);

} // namespace leibhom
