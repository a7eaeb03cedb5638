#pragma once

#include "leibhom/primes.hpp"
#include "leibhom/sparse.hpp"

#include <functional>
#include <optional>

namespace leibhom {

enum class RankMode { Exact, Probabilistic };

// Matrices at or above this many rows default to prime-field rank certificates.
constexpr Index kProbabilisticRowThreshold = 200000;

struct RankResult {
    Index rank = 0;
    Index nullity = 0;
    std::optional<std::vector<SparseVec>> kernel; // reduced echelon form, exact mode
    RankMode mode = RankMode::Exact;
    std::vector<uint32_t> primes; // used in probabilistic mode
};

// Exact fraction-free-style elimination over Q with deterministic pivoting:
// minimal-fill column first (lowest column index on ties), then lowest row.
// Probabilistic mode runs the elimination over >= 2 random prime fields and
// requires the ranks to agree; disagreement escalates to exact when the size
// permits, otherwise raises ProbabilisticDisagreement.
RankResult rank_kernel(const SparseMatrix& a, bool want_kernel,
                       RankMode mode = RankMode::Exact, uint64_t seed = 0);

// One solution of A*x = b, or nullopt when the system is inconsistent.
// Probabilistic mode reports inconsistency only when >= 2 primes agree.
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b,
                               RankMode mode = RankMode::Exact, uint64_t seed = 0);

// Streaming rank over a prime field. Rows arrive one at a time (entries sorted
// by column, values already reduced mod p); pivot rows are kept normalized with
// leading coefficient 1, so reduction scans columns in ascending order only.
class FpStream {
public:
    FpStream(Index cols, uint32_t prime);
    // Returns true when the row was independent of the pivots seen so far.
    bool add_row(const std::vector<std::pair<uint32_t, uint32_t>>& row);
    Index rank() const { return rank_; }
    uint32_t prime() const { return field_.p; }

private:
    Fp field_;
    Index cols_;
    Index rank_ = 0;
    std::vector<int32_t> pivot_of_col_;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pivot_rows_;
    std::vector<uint64_t> acc_;
    std::vector<uint32_t> touched_;
};

// Streaming exact rank over Q, same reduction scheme with rational arithmetic.
class ExactStream {
public:
    explicit ExactStream(Index cols);
    bool add_row(const SparseVec& row);
    Index rank() const { return rank_; }

private:
    Index cols_;
    Index rank_ = 0;
    std::vector<int32_t> pivot_of_col_;
    std::vector<SparseVec> pivot_rows_;
};

uint32_t rat_mod_p(const Rat& x, const Fp& f);

std::vector<std::pair<uint32_t, uint32_t>> reduce_row_mod_p(const SparseVec& row,
                                                            const Fp& f);

} // namespace leibhom
