#pragma once

#include "leibhom/invariants.hpp"

#include <functional>

namespace leibhom {

// Chevalley-Eilenberg cochain complex Hom(Λ^* D, V) where D is spanned by a
// contiguous index range of a host algebra and V carries an action of D:
//   δf(g_1 ^ ... ^ g_{k+1}) = Σ_i (-1)^i g_i . f(... ĝ_i ...)
//                           + Σ_{i<j} (-1)^j f(g_1 ^ ... ^ [g_i,g_j]_{@i} ... ĝ_j ...).
struct CESpec {
    const LieAlgebra* host = nullptr;
    int offset = 0;     // first host index of the domain span
    int domain_dim = 0; // D = host indices [offset, offset + domain_dim)
    Representation rep; // act[x] for x in 0..domain_dim-1
};

CESpec ce_trivial(const LieAlgebra& alg);
CESpec ce_adjoint(const LieAlgebra& alg);
CESpec ce_coadjoint(const LieAlgebra& alg);
// Translations acting on all of h: the ambient complex of the invariant
// Hom(Λ^* I_n, h) computation.
CESpec ce_translations_on_h(const LieAlgebra& h);

Index ce_space_dim(const CESpec& s, int k);
// Matrix of δ: degree k -> k+1 (rows = degree k+1 basis).
SparseMatrix ce_matrix(const CESpec& s, int k);
Cochain ce_delta(const CESpec& s, const Cochain& f);

// Leibniz cochain complex Hom(h^{⊗*}, V), V = h (adjoint) or R (trivial):
//   δf(g_1 ⊗ ... ⊗ g_{k+1}) = [g_1, f(g_2 ⊗ ...)]
//                           + Σ_{i=2}^{k+1} (-1)^i [f(... ĝ_i ...), g_i]
//                           + Σ_{i<j} (-1)^{j+1} f(g_1 ⊗ ... ⊗ [g_i,g_j]_{@i} ... ĝ_j ...).
struct LeibnizSpec {
    const LieAlgebra* h = nullptr;
    bool adjoint = true;
    int module_dim() const { return adjoint ? h->dim : 1; }
};

Index leibniz_space_dim(const LeibnizSpec& s, int k);
MultiBasis leibniz_domain(const LeibnizSpec& s, int k);

// Row of the degree-k differential matrix at a degree-(k+1) basis element.
SparseVec leibniz_row(const LeibnizSpec& s, int k, Index row_flat);
SparseMatrix leibniz_matrix(const LeibnizSpec& s, int k);
// δf computed directly from the sparse support of f; exact and complete.
Cochain leibniz_delta(const LeibnizSpec& s, const Cochain& f);

// Grading block of a basis element: the bracket preserves both the translation
// weight and the block parity, so differentials split into (ω, parity) blocks.
// Encoded as 2*(ω + k) + parity, which is nonnegative for degree-k elements.
int leibniz_block_key(const LeibnizSpec& s, int k, Index flat);

// Lie homology boundary on Λ^k I_n ⊗ h (the translation algebra is abelian):
//   d(x_1 ^ ... ^ x_k ⊗ m) = Σ_t (-1)^{t+1} x_1 ^ ... x̂_t ... ^ x_k ⊗ [x_t, m].
SparseMatrix homology_boundary_matrix(const LieAlgebra& h, int k);
Cochain homology_delta(const LieAlgebra& h, const Cochain& chain);

// A complex materialized on explicit small bases (the so-invariant
// subcomplexes): bases[k] spans degree k inside the ambient space, diffs[k]
// is the restricted differential into the degree k±1 basis.
struct SmallComplex {
    bool cochain = true; // false: chain direction (diff lowers the degree)
    std::vector<std::vector<SparseVec>> bases;
    std::vector<SparseMatrix> diffs;
};

SmallComplex invariant_hom_complex(const LieAlgebra& h, const LieAlgebra& so);
SmallComplex invariant_homology_complex(const LieAlgebra& h, const LieAlgebra& so);

// Coordinates of v in the span of basis (throws NotInSpan if outside).
SparseVec express_in_basis(const std::vector<SparseVec>& basis, const SparseVec& v,
                           Index ambient_dim);

} // namespace leibhom
