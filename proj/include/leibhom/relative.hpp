#pragma once

#include "leibhom/complexes.hpp"

namespace leibhom {

// Quotient complexes measuring the gap between alternating and full tensor
// functionals. Degree m of CR is Hom(g ⊗ Λ^{m+1} g, R) modulo the pullback of
// Hom(Λ^{m+2} g, R); degree m of C_rel is Hom(g^{⊗(m+2)}, h) modulo the
// pullback of Hom(Λ^{m+2} g, h). Quotients are realized on explicit
// complement bases: every ambient coordinate family supported on one index
// set S carries exactly one alternating relation, and the coordinate whose
// distinguished factor is min(S) is rewritten through it.
enum class RelKind { CR, Crel };

struct RelativeComplex {
    RelKind kind;
    const LieAlgebra* h = nullptr;
    int degree = 0;        // quotient degree m
    Index ambient_dim = 0; // mixed/tensor cochains at tensor degree m+2
    std::vector<Index> quotient_basis; // ambient flat indices kept in the quotient
    std::vector<Index> quotient_index_of; // ambient flat -> quotient index or -1

    Index quotient_dim() const { return (Index)quotient_basis.size(); }
};

RelativeComplex build_relative_degree(RelKind kind, const LieAlgebra& h, int m);

// Ambient differential (degree m -> m+1) of the tower the quotient lives in.
SparseMatrix relative_ambient_matrix(RelKind kind, const LieAlgebra& h, int m);

// Reduce an ambient vector to quotient coordinates.
SparseVec quotient_reduce(const RelativeComplex& rc, const SparseVec& ambient);

// Induced differential in quotient coordinates: CR^m -> CR^{m+1}.
SparseMatrix quotient_matrix(const RelativeComplex& from, const RelativeComplex& to);

// Pullback π*: Hom(Λ^{m+2} g, V) -> ambient degree m (alternation embedding).
SparseMatrix pullback_matrix(RelKind kind, const LieAlgebra& h, int m);

// Snake-lemma connecting map: lift a quotient cocycle, apply the ambient
// differential, verify the result is alternating, and pull it back to a wedge
// cochain of degree m+3 (valued in R for CR, in h for C_rel). The output is
// well defined up to a Lie coboundary (it depends on the chosen lift).
Cochain connecting_map(const RelativeComplex& rc, const SparseVec& quotient_class);

// Same construction with a caller-supplied ambient representative.
Cochain connecting_map_ambient(const RelativeComplex& rc, const SparseVec& ambient_lift);

} // namespace leibhom
