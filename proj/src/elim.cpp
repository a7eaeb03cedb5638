#include "leibhom/elim.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace leibhom {

namespace {

// Materialized exact elimination. Keeps the active rows sorted by column and
// maintains per-column nonzero counts so the minimal-fill pivot rule is cheap.
class ExactElim {
public:
    ExactElim(Index rows, Index cols, std::vector<SparseVec> row_list)
        : cols_(cols), rows_(std::move(row_list)), active_(rows, true),
          col_count_(cols, 0), col_rows_(cols) {
        for (Index r = 0; r < rows; ++r)
            for (auto& [c, v] : rows_[r]) {
                ++col_count_[c];
                col_rows_[c].push_back(r);
            }
    }

    // Columns in forbid (sorted) are never chosen as pivots (used by solve).
    void run(const std::vector<Index>& forbid = {}) {
        for (;;) {
            Index best = -1;
            for (Index c = 0; c < cols_; ++c) {
                if (col_count_[c] == 0) continue;
                if (std::binary_search(forbid.begin(), forbid.end(), c)) continue;
                if (best < 0 || col_count_[c] < col_count_[best]) best = c;
            }
            if (best < 0) break;
            Index pr = -1;
            for (Index r : col_rows_[best]) {
                if (!active_[r] || !has_col(rows_[r], best)) continue;
                if (pr < 0 || r < pr) pr = r;
            }
            assert(pr >= 0);
            eliminate(best, pr);
            pivots_.emplace_back(best, pr);
        }
    }

    Index rank() const { return (Index)pivots_.size(); }

    // Back-substitution into reduced echelon form over the pivot rows;
    // pivot coefficients are normalized to 1.
    void to_rref() {
        std::sort(pivots_.begin(), pivots_.end());
        std::vector<Index> pivot_row_of_col(cols_, -1);
        for (auto& [c, r] : pivots_) pivot_row_of_col[c] = r;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            auto [c, r] = *it;
            Rat lead = coeff(rows_[r], c);
            if (lead != 1) scale(rows_[r], Rat(1) / lead);
            for (auto& [c2, r2] : pivots_) {
                if (r2 == r) continue;
                Rat f = coeff(rows_[r2], c);
                if (is_zero(f)) continue;
                add_multiple(rows_[r2], -f, rows_[r]);
            }
        }
    }

    std::vector<SparseVec> kernel_basis() {
        to_rref();
        std::vector<Index> pivot_cols;
        for (auto& [c, r] : pivots_) pivot_cols.push_back(c);
        std::vector<SparseVec> basis;
        for (Index f = 0; f < cols_; ++f) {
            if (std::binary_search(pivot_cols.begin(), pivot_cols.end(), f)) continue;
            SparseVec v;
            for (auto& [c, r] : pivots_) {
                Rat x = coeff(rows_[r], f);
                if (!is_zero(x)) v.emplace_back(c, -x);
            }
            v.emplace_back(f, 1);
            canonicalize(v);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // After run() with the augmented column forbidden: case analysis for solve.
    std::optional<SparseVec> extract_solution(Index bcol) {
        for (Index r = 0; r < (Index)rows_.size(); ++r) {
            if (!active_[r]) continue;
            if (!rows_[r].empty()) return std::nullopt; // leftover row hits only bcol
        }
        to_rref();
        // pivot row after RREF: x_c + (free terms) = v at the augmented column
        SparseVec x;
        for (auto& [c, r] : pivots_) {
            Rat v = coeff(rows_[r], bcol);
            if (!is_zero(v)) x.emplace_back(c, v);
        }
        canonicalize(x);
        return x;
    }

private:
    static bool has_col(const SparseVec& row, Index c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](auto& e, Index k) { return e.first < k; });
        return it != row.end() && it->first == c;
    }
    static Rat coeff(const SparseVec& row, Index c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](auto& e, Index k) { return e.first < k; });
        return (it != row.end() && it->first == c) ? it->second : Rat(0);
    }
    static void scale(SparseVec& row, const Rat& s) {
        for (auto& [c, v] : row) v *= s;
    }
    void register_row(Index r, const SparseVec& before, const SparseVec& after) {
        size_t i = 0, j = 0;
        while (i < before.size() || j < after.size()) {
            Index cb = i < before.size() ? before[i].first : cols_;
            Index ca = j < after.size() ? after[j].first : cols_;
            if (cb < ca) {
                --col_count_[cb];
                ++i;
            } else if (ca < cb) {
                ++col_count_[ca];
                col_rows_[ca].push_back(r);
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }
    static void add_multiple(SparseVec& row, const Rat& f, const SparseVec& src) {
        SparseVec out;
        out.reserve(row.size() + src.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < src.size()) {
            Index ci = i < row.size() ? row[i].first : -1;
            Index cj = j < src.size() ? src[j].first : -1;
            if (j >= src.size() || (i < row.size() && ci < cj)) {
                out.push_back(row[i++]);
            } else if (i >= row.size() || cj < ci) {
                out.emplace_back(cj, f * src[j].second);
                ++j;
            } else {
                Rat v = row[i].second + f * src[j].second;
                if (!is_zero(v)) out.emplace_back(ci, v);
                ++i;
                ++j;
            }
        }
        row = std::move(out);
    }
    void eliminate(Index c, Index pr) {
        Rat pv = coeff(rows_[pr], c);
        auto targets = col_rows_[c];
        for (Index r : targets) {
            if (r == pr || !active_[r]) continue;
            Rat v = coeff(rows_[r], c);
            if (is_zero(v)) continue;
            SparseVec before = rows_[r];
            add_multiple(rows_[r], -v / pv, rows_[pr]);
            register_row(r, before, rows_[r]);
        }
        active_[pr] = false;
        for (auto& [cc, vv] : rows_[pr]) --col_count_[cc];
        col_rows_[c].clear();
    }

    Index cols_;
    std::vector<SparseVec> rows_;
    std::vector<bool> active_;
    std::vector<Index> col_count_;
    std::vector<std::vector<Index>> col_rows_;
    std::vector<std::pair<Index, Index>> pivots_; // (col, row)
};

Index fp_rank_of(const SparseMatrix& a, uint32_t prime) {
    Fp f{prime};
    FpStream st(a.cols, prime);
    auto rl = a.row_list();
    for (auto& row : rl) st.add_row(reduce_row_mod_p(row, f));
    return st.rank();
}

} // namespace

uint32_t rat_mod_p(const Rat& x, const Fp& f) {
    mpz_class num = x.get_num() % (long)f.p;
    mpz_class den = x.get_den() % (long)f.p;
    long n = num.get_si();
    long d = den.get_si();
    if (n < 0) n += f.p;
    if (d == 0) throw FieldMismatch("denominator divisible by prime");
    return f.mul((uint32_t)n, f.inv((uint32_t)d));
}

std::vector<std::pair<uint32_t, uint32_t>> reduce_row_mod_p(const SparseVec& row,
                                                            const Fp& f) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(row.size());
    for (auto& [c, v] : row) {
        uint32_t r = rat_mod_p(v, f);
        if (r) out.emplace_back((uint32_t)c, r);
    }
    return out;
}

FpStream::FpStream(Index cols, uint32_t prime)
    : field_{prime}, cols_(cols), pivot_of_col_(cols, -1), acc_(cols, 0) {}

bool FpStream::add_row(const std::vector<std::pair<uint32_t, uint32_t>>& row) {
    if (row.empty()) return false;
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> heap;
    for (auto& [c, v] : row) {
        acc_[c] = field_.add((uint32_t)acc_[c], v);
        heap.push(c);
        touched_.push_back(c);
    }
    int32_t new_pivot = -1;
    uint32_t lead_val = 0;
    while (!heap.empty()) {
        uint32_t c = heap.top();
        heap.pop();
        while (!heap.empty() && heap.top() == c) heap.pop();
        uint32_t v = (uint32_t)acc_[c];
        if (v == 0) continue;
        int32_t pr = pivot_of_col_[c];
        if (pr < 0) {
            new_pivot = (int32_t)c;
            lead_val = v;
            break;
        }
        for (auto& [cc, vv] : pivot_rows_[pr]) {
            uint32_t before = (uint32_t)acc_[cc];
            uint32_t after = field_.sub(before, field_.mul(v, vv));
            if (before == 0 && after != 0) {
                heap.push(cc);
                touched_.push_back(cc);
            }
            acc_[cc] = after;
        }
    }
    bool independent = false;
    if (new_pivot >= 0) {
        uint32_t inv = field_.inv(lead_val);
        std::vector<std::pair<uint32_t, uint32_t>> prow;
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        for (uint32_t c : touched_) {
            uint32_t v = (uint32_t)acc_[c];
            if (v && (int32_t)c >= new_pivot) prow.emplace_back(c, field_.mul(v, inv));
        }
        pivot_of_col_[new_pivot] = (int32_t)pivot_rows_.size();
        pivot_rows_.push_back(std::move(prow));
        ++rank_;
        independent = true;
    }
    for (uint32_t c : touched_) acc_[c] = 0;
    touched_.clear();
    return independent;
}

ExactStream::ExactStream(Index cols) : cols_(cols), pivot_of_col_(cols, -1) {}

bool ExactStream::add_row(const SparseVec& row_in) {
    std::map<Index, Rat> acc;
    for (auto& [c, v] : row_in) acc[c] = v;
    while (!acc.empty()) {
        auto it = acc.begin();
        Index c = it->first;
        Rat v = it->second;
        if (is_zero(v)) {
            acc.erase(it);
            continue;
        }
        int32_t pr = pivot_of_col_[c];
        if (pr < 0) {
            SparseVec prow;
            Rat inv = Rat(1) / v;
            for (auto& [cc, vv] : acc) {
                if (!is_zero(vv)) prow.emplace_back(cc, vv * inv);
            }
            pivot_of_col_[c] = (int32_t)pivot_rows_.size();
            pivot_rows_.push_back(std::move(prow));
            ++rank_;
            return true;
        }
        axpy(acc, -v, pivot_rows_[pr]);
    }
    return false;
}

RankResult rank_kernel(const SparseMatrix& a, bool want_kernel, RankMode mode,
                       uint64_t seed) {
    if (a.field == FieldTag::PrimeField)
        mode = RankMode::Probabilistic;
    RankResult res;
    if (mode == RankMode::Exact) {
        ExactElim e(a.rows, a.cols, a.row_list());
        e.run();
        res.rank = e.rank();
        res.nullity = a.cols - res.rank;
        res.mode = RankMode::Exact;
        if (want_kernel) res.kernel = e.kernel_basis();
        return res;
    }
    if (a.field == FieldTag::PrimeField) {
        res.rank = fp_rank_of(a, a.prime);
        res.nullity = a.cols - res.rank;
        res.mode = RankMode::Probabilistic;
        res.primes = {a.prime};
        return res;
    }
    auto primes = random_primes(4, seed ^ 0x9e3779b97f4a7c15ULL);
    Index r0 = fp_rank_of(a, primes[0]);
    Index r1 = fp_rank_of(a, primes[1]);
    if (r0 == r1) {
        res.rank = r0;
        res.nullity = a.cols - r0;
        res.mode = RankMode::Probabilistic;
        res.primes = {primes[0], primes[1]};
        return res;
    }
    Index r2 = fp_rank_of(a, primes[2]);
    if (r2 == r0 || r2 == r1) {
        Index r = std::max({r0, r1, r2}); // mod-p rank only ever drops
        res.rank = r;
        res.nullity = a.cols - r;
        res.mode = RankMode::Probabilistic;
        res.primes = primes;
        return res;
    }
    if (a.rows < kProbabilisticRowThreshold)
        return rank_kernel(a, want_kernel, RankMode::Exact, seed);
    throw ProbabilisticDisagreement();
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b,
                               RankMode mode, uint64_t seed) {
    for (auto& [i, v] : b)
        if (i < 0 || i >= a.rows) throw DimensionMismatch("solve: b index out of range");
    auto run_exact = [&]() -> std::optional<SparseVec> {
        auto rl = a.row_list();
        for (auto& [i, v] : b) {
            rl[i].emplace_back(a.cols, v);
        }
        ExactElim e(a.rows, a.cols + 1, std::move(rl));
        e.run({a.cols});
        return e.extract_solution(a.cols);
    };
    if (mode == RankMode::Exact) return run_exact();

    // Consistency mod p: rank([A|b]) == rank(A) for >= 2 agreeing primes.
    auto primes = random_primes(2, seed ^ 0x2545f4914f6cdd1dULL);
    int consistent = 0, inconsistent = 0;
    for (uint32_t p : primes) {
        SparseMatrix aug = a;
        aug.cols = a.cols + 1;
        for (auto& [i, v] : b) aug.add(i, a.cols, v);
        aug.finalize();
        Index ra = fp_rank_of(a, p);
        Index raug = fp_rank_of(aug, p);
        (raug == ra ? consistent : inconsistent)++;
    }
    if (inconsistent == 2) return std::nullopt;
    return run_exact(); // likely consistent: produce an exact witness
}

void write_matrix_market(const SparseMatrix& m, std::ostream& os) {
    const char* field = m.field == FieldTag::Rationals ? "rational" : "integer";
    os << "%%MatrixMarket matrix coordinate " << field << " general\n";
    if (m.field == FieldTag::PrimeField) os << "% prime " << m.prime << "\n";
    os << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (auto& t : m.entries) {
        os << (t.r + 1) << " " << (t.c + 1) << " ";
        if (m.field == FieldTag::Rationals)
            os << rat_repr(t.v);
        else
            os << t.v.get_num().get_str();
        os << "\n";
    }
}

SparseMatrix read_matrix_market(std::istream& is) {
    std::string line;
    SparseMatrix m;
    bool header = false, sizes = false;
    bool rational = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '%') {
            if (!header && line.rfind("%%MatrixMarket", 0) == 0) {
                header = true;
                rational = line.find("rational") != std::string::npos;
                m.field = rational ? FieldTag::Rationals : FieldTag::PrimeField;
            } else if (line.rfind("% prime ", 0) == 0) {
                m.prime = (uint32_t)std::stoul(line.substr(8));
            }
            continue;
        }
        std::istringstream ss(line);
        if (!sizes) {
            size_t nnz;
            ss >> m.rows >> m.cols >> nnz;
            sizes = true;
            continue;
        }
        Index r, c;
        std::string v;
        ss >> r >> c >> v;
        m.add(r - 1, c - 1, rat_parse(v));
    }
    m.finalize();
    return m;
}

} // namespace leibhom
