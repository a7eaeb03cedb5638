#pragma once

#include "leibhom/elim.hpp"
#include "leibhom/multilinear.hpp"

#include <string>
#include <vector>

namespace leibhom {

// The three module families whose so(p,q)-invariants carry the named classes.
enum class InvariantSpace { WedgeI, WedgeITensorH, HomWedgeIToH };

Index invariant_space_dim(const LieAlgebra& h, InvariantSpace sp, int k);

// Exact kernel of the vertically stacked so(p,q)-action operators, in
// deterministic reduced echelon form.
std::vector<SparseVec> invariant_subspace(const LieAlgebra& h, const LieAlgebra& so,
                                          InvariantSpace sp, int k);

// Named classes of the invariant calculus. Chains and Hom-cochains live over
// wedges of the translation basis with values in h; the dual classes
// (gamma_star_pq, beta_star_pq, v_star) are scalar tensor cochains on h whose
// distinguished first slot pairs with the dual value.
struct NamedClass {
    std::string name;
    int p = 0, q = 0;
    Cochain realization;
};

NamedClass make_named(const std::string& name, const LieAlgebra& h);

struct InvarianceReport {
    bool pass = true;
    std::string violating_generator; // first violator when pass == false
};

// Applies every generator of `under` (so(p,q) or h(p,q) basis elements,
// expressed inside h) through the induced action and asserts zero.
InvarianceReport verify_invariance(const NamedClass& cls, const LieAlgebra& h,
                                   bool under_full_h);

// First nonzero coordinate scaled to +1 (deterministic basis order).
SparseVec normalize_leading(const SparseVec& v);

bool in_span(const std::vector<SparseVec>& basis, const SparseVec& v);

struct InvariantRow {
    int k = 0;
    Index dim = 0;
    std::vector<std::string> matched; // named classes found in the kernel
    bool match_ok = true;             // dim == matched count and all members
};

// Dimension table with named-class matching for k = 0..n.
std::vector<InvariantRow> invariant_table(const LieAlgebra& h, const LieAlgebra& so,
                                          InvariantSpace sp);

} // namespace leibhom
