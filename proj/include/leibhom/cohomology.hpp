#pragma once

#include "leibhom/relative.hpp"

#include <map>
#include <optional>
#include <string>

namespace leibhom {

constexpr uint64_t kDefaultSeed = 0x1eb401u; // published default CLI seed

struct DegreeRecord {
    int k = 0;
    Index dim = 0;
    Index kernel = 0;
    Index image_in = 0;   // rank of the differential arriving at degree k
    Index cohomology = 0;
    RankMode mode = RankMode::Exact;
    std::vector<uint32_t> primes;
};

struct TheoremCheck {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct CohomologyReport {
    std::string complex_id;
    std::string field = "Q";
    std::vector<DegreeRecord> degrees;
    std::vector<TheoremCheck> checks;
};

// Betti numbers of the Chevalley-Eilenberg complex with trivial coefficients,
// degrees 0..max_degree, exact.
std::vector<Index> lie_betti(const LieAlgebra& alg, int max_degree);

// Cohomology (or homology) dimensions of a materialized small complex.
std::vector<Index> small_complex_dims(const SmallComplex& sc);

// Per-block rank of the Leibniz differential CL^k -> CL^{k+1}. When
// prev_block_ranks is given (ranks of CL^{k-1} -> CL^k per block), elimination
// stops as soon as the rank certified by δ∘δ = 0 is reached.
struct BlockedRank {
    Index total = 0;
    std::map<int, Index> by_block;
    RankMode mode = RankMode::Exact;
    std::vector<uint32_t> primes;
};

BlockedRank leibniz_diff_rank(const LeibnizSpec& s, int k, RankMode mode, uint64_t seed,
                              const std::map<int, Index>* prev_block_ranks = nullptr);

// Dimensions of HL^k(h; h) (or trivial coefficients) for k = 0..max_degree.
CohomologyReport leibniz_report(const LieAlgebra& h, bool adjoint, int max_degree,
                                RankMode mode, uint64_t seed);

bool is_cocycle(const LeibnizSpec& s, const Cochain& f);

struct CoboundaryVerdict {
    bool yes = false;
    std::optional<Cochain> witness;
    RankMode mode = RankMode::Exact;
};

// Solves δ x = f inside the grading blocks that carry f.
CoboundaryVerdict is_coboundary(const LeibnizSpec& s, const Cochain& f, uint64_t seed);

// (u ⊗ φ)(g_1 ⊗ ... ⊗ g_{a+b}) = φ(g_{a+1} ⊗ ...) * u(g_1 ⊗ ... ⊗ g_a);
// u is module-valued, φ scalar.
Cochain product_cochain(const Cochain& u, const Cochain& phi);

// Shuffle product: sum over order-preserving interleavings of u's and φ's
// arguments with the inversion sign. Full uses all interleavings; LeftHalf
// pins the first argument to u (the Zinbiel half-shuffle). product_cochain is
// the single leading interleaving of Full.
enum class Shuffle { Full, LeftHalf };
Cochain shuffle_product(const Cochain& u, const Cochain& phi, Shuffle kind);

// Cocycle representative of the class built from I (base = 1) or rho
// (base = 2) against the j-th half-shuffle power of gamma_star_pq; its
// leading interleaving is the plain product, and its Leibniz degree is
// base + j(n-1).
Cochain hl_class_rep(const LieAlgebra& h, int base, int power);

// Moving a scalar cochain by each translation generator lands in the image of
// the trivial-coefficient differential (invariance at the class level).
bool translation_moves_are_coboundaries(const LieAlgebra& h, const Cochain& f,
                                        uint64_t seed);

// Graded dimension of <I, rho> ⊗ T(gamma_star): #{(c,j) : c in {1,2}, j >= 0,
// k = c + j(n-1)}.
Index predicted_hl_dimension(int p, int q, int k);

struct HrResult {
    Index dim = 0;          // direct computation from the quotient complex
    Index rhs = 0;          // dim H^{m+3}(so) + dim H^{m+3-n}(so)
    bool pass = false;
    std::vector<SparseVec> representatives; // quotient kernel basis mod image
};

HrResult hr_dims(const LieAlgebra& h, const LieAlgebra& so, int m,
                 const std::vector<Index>& so_betti);

// Leibniz-side named cochains on h: I and rho as tensor cochains
// ("wedge replaced by tensor"), values in the adjoint module.
Cochain leibniz_I(const LieAlgebra& h);
Cochain leibniz_rho(const LieAlgebra& h);

} // namespace leibhom
