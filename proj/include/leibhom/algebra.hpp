#pragma once

#include "leibhom/sparse.hpp"
#include "leibhom/vf.hpp"

#include <map>
#include <string>
#include <vector>

namespace leibhom {

struct Label {
    enum Kind { Alpha, Beta, Partial } kind;
    int i = 0, j = 0; // Partial uses i only

    auto operator<=>(const Label&) const = default;
    std::string str() const;
};

// Basis-labeled Lie algebra with sparse structure constants. The basis order
// is normative: block-one alphas (lex), block-two alphas (lex), betas (lex),
// then partials 1..n; every downstream matrix depends on it.
struct LieAlgebra {
    int p = 0, q = 0;
    int dim = 0;
    bool affine = false; // true for h(p,q), false for so(p,q)
    std::vector<Label> labels;
    std::map<Label, int> index_of;
    std::vector<LinearVectorField> fields;
    std::vector<std::vector<SparseVec>> sc; // sc[a][b] = [e_a, e_b] in basis coords

    int n() const { return p + q; }
    int so_dim() const { return n() * (n() - 1) / 2; }

    // Z-grading weight (0 on the rotation part, 1 on translations) and the
    // block parity; both are additive under the bracket.
    int weight(int idx) const { return labels[idx].kind == Label::Partial ? 1 : 0; }
    int parity(int idx) const {
        const Label& l = labels[idx];
        if (l.kind == Label::Beta) return 1;
        if (l.kind == Label::Partial) return l.i > p ? 1 : 0;
        return 0;
    }

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    // For each basis index u, the list of (a, b, coeff) with [e_a,e_b] ∋ coeff*e_u.
    const std::vector<std::vector<std::tuple<int, int, Rat>>>& bracket_preimages() const;

private:
    mutable std::vector<std::vector<std::tuple<int, int, Rat>>> preimages_;
};

LieAlgebra build_so(int p, int q);
LieAlgebra build_h(int p, int q);

// Expresses an affine field in the h(p,q) basis; throws NotInSpan if it
// does not lie there.
SparseVec to_basis_coords(const LieAlgebra& h, const LinearVectorField& f);

struct IdealQuotientReport {
    bool pass = true;
    enum Failure { None, NotAnIdealFailure, QuotientMismatchFailure } failure = None;
    std::string detail; // first counterexample
};

// Verifies that the translations form an abelian ideal and that the quotient
// bracket reproduces build_so(p,q) entry for entry.
IdealQuotientReport check_ideal_and_quotient(const LieAlgebra& h);

enum class RepKind { Adjoint, Coadjoint, Trivial, RestrictedFull, RestrictedTranslations };

// Action matrices of an acting algebra on a module, one sparse column-major
// matrix per acting basis element: act[g][x] = coordinates of g . e_x.
struct Representation {
    const LieAlgebra* acting = nullptr; // algebra whose sc defines [g,g']
    RepKind kind = RepKind::Adjoint;
    int module_dim = 0;
    std::vector<std::vector<SparseVec>> act;

    SparseVec apply(int g, const SparseVec& v) const;
};

Representation adjoint_rep(const LieAlgebra& alg);
Representation coadjoint_rep(const LieAlgebra& alg);
Representation trivial_rep(const LieAlgebra& alg, int module_dim = 1);
// so(p,q) acting on all of h(p,q), or on the translation ideal only.
// `so` must be build_so(p,q) for the same (p,q) as `h`.
Representation restricted_rep(const LieAlgebra& h, const LieAlgebra& so, bool translations_only);

std::string algebra_dump_json(const LieAlgebra& alg);

} // namespace leibhom
