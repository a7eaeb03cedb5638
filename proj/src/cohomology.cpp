#include "leibhom/cohomology.hpp"

#include <algorithm>
#include <random>

namespace leibhom {

std::vector<Index> lie_betti(const LieAlgebra& alg, int max_degree) {
    CESpec s = ce_trivial(alg);
    int top = std::min(max_degree, alg.dim);
    std::vector<Index> rank_k(top + 1, 0); // rank of δ: k -> k+1
    for (int k = 0; k <= top; ++k) {
        if (k >= alg.dim) break;
        SparseMatrix m = ce_matrix(s, k);
        rank_k[k] = rank_kernel(m, false, RankMode::Exact).rank;
    }
    std::vector<Index> betti(max_degree + 1, 0);
    for (int k = 0; k <= max_degree; ++k) {
        if (k > alg.dim) continue;
        Index dim = binomial(alg.dim, k);
        Index rk = k <= top && k < alg.dim ? rank_k[k] : 0;
        Index prev = (k - 1 >= 0 && k - 1 <= top) ? rank_k[k - 1] : 0;
        betti[k] = dim - rk - prev;
    }
    return betti;
}

std::vector<Index> small_complex_dims(const SmallComplex& sc) {
    int top = (int)sc.bases.size() - 1;
    std::vector<Index> out(top + 1, 0);
    auto rank_of = [&](const SparseMatrix& m) {
        return rank_kernel(m, false, RankMode::Exact).rank;
    };
    for (int k = 0; k <= top; ++k) {
        Index dim = (Index)sc.bases[k].size();
        Index rank_out, rank_in;
        if (sc.cochain) {
            rank_out = k < top ? rank_of(sc.diffs[k]) : 0;
            rank_in = k > 0 ? rank_of(sc.diffs[k - 1]) : 0;
        } else {
            rank_out = k > 0 ? rank_of(sc.diffs[k]) : 0;           // d: k -> k-1
            rank_in = k < top ? rank_of(sc.diffs[k + 1]) : 0;      // d: k+1 -> k
        }
        out[k] = dim - rank_out - rank_in;
    }
    return out;
}

namespace {

// flat indices of degree-k basis elements per grading block
std::map<int, std::vector<Index>> blocks_of_degree(const LeibnizSpec& s, int k) {
    std::map<int, std::vector<Index>> blocks;
    Index dim = leibniz_space_dim(s, k);
    for (Index f = 0; f < dim; ++f) blocks[leibniz_block_key(s, k, f)].push_back(f);
    return blocks;
}

Index local_col(const std::vector<Index>& sorted_cols, Index global) {
    auto it = std::lower_bound(sorted_cols.begin(), sorted_cols.end(), global);
    if (it == sorted_cols.end() || *it != global)
        throw DomainMismatch("differential entry escaped its grading block");
    return it - sorted_cols.begin();
}

} // namespace

BlockedRank leibniz_diff_rank(const LeibnizSpec& s, int k, RankMode mode, uint64_t seed,
                              const std::map<int, Index>* prev_block_ranks) {
    auto col_blocks = blocks_of_degree(s, k);
    auto row_blocks = blocks_of_degree(s, k + 1);
    BlockedRank out;
    out.mode = mode;
    std::vector<Fp> fields;
    if (mode == RankMode::Probabilistic) {
        for (uint32_t p : random_primes(2, seed ^ 0x6a09e667f3bcc908ULL))
            fields.push_back(Fp{p});
        for (auto& f : fields) out.primes.push_back(f.p);
    }
    for (auto& [key, cols] : col_blocks) {
        auto rit = row_blocks.find(key);
        if (rit == row_blocks.end() || cols.empty()) {
            out.by_block[key] = 0;
            continue;
        }
        std::vector<Index> rows = rit->second;
        std::mt19937_64 rng(seed ^ (uint64_t)key * 0x9e3779b97f4a7c15ULL ^ (uint64_t)k);
        std::shuffle(rows.begin(), rows.end(), rng);
        Index target = (Index)cols.size();
        if (prev_block_ranks) {
            auto pit = prev_block_ranks->find(key);
            target -= (pit == prev_block_ranks->end()) ? 0 : pit->second;
        }
        Index rank = 0;
        if (mode == RankMode::Exact) {
            ExactStream st((Index)cols.size());
            for (Index r : rows) {
                SparseVec row = leibniz_row(s, k, r);
                if (row.empty()) continue;
                SparseVec local;
                local.reserve(row.size());
                for (auto& [c, v] : row) local.emplace_back(local_col(cols, c), v);
                st.add_row(local);
                if (prev_block_ranks && st.rank() >= target) break;
            }
            rank = st.rank();
        } else {
            FpStream st0((Index)cols.size(), fields[0].p);
            FpStream st1((Index)cols.size(), fields[1].p);
            for (Index r : rows) {
                SparseVec row = leibniz_row(s, k, r);
                if (row.empty()) continue;
                SparseVec local;
                local.reserve(row.size());
                for (auto& [c, v] : row) local.emplace_back(local_col(cols, c), v);
                st0.add_row(reduce_row_mod_p(local, fields[0]));
                st1.add_row(reduce_row_mod_p(local, fields[1]));
                if (prev_block_ranks && st0.rank() >= target && st1.rank() >= target)
                    break;
            }
            if (st0.rank() != st1.rank()) throw ProbabilisticDisagreement();
            rank = st0.rank();
        }
        out.by_block[key] = rank;
        out.total += rank;
    }
    return out;
}

CohomologyReport leibniz_report(const LieAlgebra& h, bool adjoint, int max_degree,
                                RankMode mode, uint64_t seed) {
    LeibnizSpec s{&h, adjoint};
    CohomologyReport rep;
    rep.complex_id = adjoint ? "leibniz-adjoint" : "leibniz-trivial";
    std::vector<BlockedRank> ranks(max_degree + 1);
    const std::map<int, Index>* prev = nullptr;
    for (int k = 0; k <= max_degree; ++k) {
        Index rows = leibniz_space_dim(s, k + 1);
        RankMode degree_mode = mode;
        if (mode == RankMode::Exact && rows >= kProbabilisticRowThreshold)
            degree_mode = RankMode::Probabilistic;
        ranks[k] = leibniz_diff_rank(s, k, degree_mode, seed, prev);
        prev = &ranks[k].by_block;
    }
    for (int k = 0; k <= max_degree; ++k) {
        DegreeRecord d;
        d.k = k;
        d.dim = leibniz_space_dim(s, k);
        d.kernel = d.dim - ranks[k].total;
        d.image_in = k > 0 ? ranks[k - 1].total : 0;
        d.cohomology = d.kernel - d.image_in;
        d.mode = ranks[k].mode;
        d.primes = ranks[k].primes;
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

bool is_cocycle(const LeibnizSpec& s, const Cochain& f) {
    return leibniz_delta(s, f).coeffs.empty();
}

CoboundaryVerdict is_coboundary(const LeibnizSpec& s, const Cochain& f, uint64_t seed) {
    CoboundaryVerdict v;
    if (f.coeffs.empty()) {
        v.yes = true;
        v.witness = Cochain{leibniz_domain(s, f.dom.k - 1), s.module_dim(), {}};
        return v;
    }
    int k = f.dom.k;
    if (k == 0) {
        v.yes = false;
        return v;
    }
    // grading blocks carrying f
    std::vector<int> keys;
    for (auto& [flat, c] : f.coeffs) {
        int key = leibniz_block_key(s, k, flat);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    auto col_blocks = blocks_of_degree(s, k - 1);
    auto row_blocks = blocks_of_degree(s, k);
    std::vector<Index> cols, rows;
    for (int key : keys) {
        auto ci = col_blocks.find(key);
        if (ci != col_blocks.end())
            cols.insert(cols.end(), ci->second.begin(), ci->second.end());
        auto ri = row_blocks.find(key);
        if (ri != row_blocks.end())
            rows.insert(rows.end(), ri->second.begin(), ri->second.end());
    }
    std::sort(cols.begin(), cols.end());
    std::sort(rows.begin(), rows.end());
    SparseMatrix m;
    m.rows = (Index)rows.size();
    m.cols = (Index)cols.size();
    for (Index r = 0; r < (Index)rows.size(); ++r)
        for (auto& [c, val] : leibniz_row(s, k - 1, rows[r]))
            m.add(r, local_col(cols, c), val);
    m.finalize();
    SparseVec b;
    for (auto& [flat, c] : f.coeffs) {
        auto it = std::lower_bound(rows.begin(), rows.end(), flat);
        if (it == rows.end() || *it != flat)
            throw DomainMismatch("cochain support outside its blocks");
        b.emplace_back(it - rows.begin(), c);
    }
    canonicalize(b);
    auto x = solve(m, b, RankMode::Exact, seed);
    v.mode = RankMode::Exact;
    if (!x) {
        v.yes = false;
        return v;
    }
    v.yes = true;
    Cochain w;
    w.dom = leibniz_domain(s, k - 1);
    w.module_dim = s.module_dim();
    for (auto& [lc, c] : *x) w.coeffs.emplace_back(cols[lc], c);
    canonicalize(w.coeffs);
    v.witness = std::move(w);
    return v;
}

Cochain product_cochain(const Cochain& u, const Cochain& phi) {
    if (phi.module_dim != 1) throw CoefficientMismatch("second factor must be scalar");
    if (u.dom.shape != MultiBasis::Tensor || phi.dom.shape != MultiBasis::Tensor ||
        u.dom.base_dim != phi.dom.base_dim)
        throw DomainMismatch();
    int a = u.dom.k, b = phi.dom.k;
    Cochain out;
    out.dom = MultiBasis{MultiBasis::Tensor, u.dom.base_dim, a + b};
    out.module_dim = u.module_dim;
    std::map<Index, Rat> acc;
    Index shift = 1;
    for (int t = 0; t < b; ++t) shift *= u.dom.base_dim;
    for (auto& [ku, cu] : u.coeffs) {
        Index zu = ku / u.module_dim;
        int v = (int)(ku % u.module_dim);
        for (auto& [kp, cp] : phi.coeffs) {
            Index z = (zu * shift + kp) * u.module_dim + v;
            acc[z] += cu * cp;
        }
    }
    out.coeffs = from_map(acc);
    return out;
}

Cochain shuffle_product(const Cochain& u, const Cochain& phi, Shuffle kind) {
    if (phi.module_dim != 1) throw CoefficientMismatch("second factor must be scalar");
    if (u.dom.shape != MultiBasis::Tensor || phi.dom.shape != MultiBasis::Tensor ||
        u.dom.base_dim != phi.dom.base_dim)
        throw DomainMismatch();
    int a = u.dom.k, b = phi.dom.k;
    Cochain out{MultiBasis{MultiBasis::Tensor, u.dom.base_dim, a + b}, u.module_dim, {}};
    std::map<Index, Rat> acc;
    std::vector<int> S(a);
    for (int t = 0; t < a; ++t) S[t] = t;
    for (;;) {
        if (!(kind == Shuffle::LeftHalf && S[0] != 0)) {
            int inv = 0;
            for (int t = 0; t < a; ++t) inv += S[t] - t;
            int sign = (inv % 2) ? -1 : 1;
            std::vector<bool> in_s(a + b, false);
            for (int s : S) in_s[s] = true;
            for (auto& [ku, cu] : u.coeffs) {
                Index zu = ku / u.module_dim;
                int v = (int)(ku % u.module_dim);
                auto tu = u.dom.unrank(zu);
                for (auto& [kp, cp] : phi.coeffs) {
                    auto tp = phi.dom.unrank(kp);
                    std::vector<int> tuple(a + b);
                    int iu = 0, ip = 0;
                    for (int t = 0; t < a + b; ++t)
                        tuple[t] = in_s[t] ? tu[iu++] : tp[ip++];
                    acc[out.dom.rank(tuple) * u.module_dim + v] += cu * cp * sign;
                }
            }
        }
        int t = a - 1;
        while (t >= 0 && S[t] == b + t) --t;
        if (t < 0) break;
        ++S[t];
        for (int s = t + 1; s < a; ++s) S[s] = S[s - 1] + 1;
    }
    out.coeffs = from_map(acc);
    return out;
}

Cochain hl_class_rep(const LieAlgebra& h, int base, int power) {
    if (base != 1 && base != 2) throw ParameterOutOfRange("base must be 1 (I) or 2 (rho)");
    Cochain u = base == 1 ? leibniz_I(h) : leibniz_rho(h);
    if (power == 0) return u;
    Cochain gs = make_named("gamma_star_pq", h).realization;
    Cochain gpow = gs;
    for (int j = 1; j < power; ++j) gpow = shuffle_product(gpow, gs, Shuffle::LeftHalf);
    return shuffle_product(u, gpow, Shuffle::Full);
}

bool translation_moves_are_coboundaries(const LieAlgebra& h, const Cochain& f,
                                        uint64_t seed) {
    LeibnizSpec triv{&h, false};
    for (int g = h.so_dim(); g < h.dim; ++g) {
        Cochain moved = action_on_tensor_cochain(h, g, f, nullptr);
        if (moved.coeffs.empty()) continue;
        if (!is_coboundary(triv, moved, seed).yes) return false;
    }
    return true;
}

Index predicted_hl_dimension(int p, int q, int k) {
    if (p + q < 4) throw ParameterOutOfRange("needs p+q >= 4");
    int n = p + q;
    Index count = 0;
    for (int c = 1; c <= 2; ++c) {
        if (k - c < 0) continue;
        if ((k - c) % (n - 1) == 0) ++count;
    }
    return count;
}

HrResult hr_dims(const LieAlgebra& h, const LieAlgebra& so, int m,
                 const std::vector<Index>& so_betti) {
    HrResult res;
    RelativeComplex cur = build_relative_degree(RelKind::CR, h, m);
    RelativeComplex next = build_relative_degree(RelKind::CR, h, m + 1);
    SparseMatrix d_out = quotient_matrix(cur, next);
    auto out_rank = rank_kernel(d_out, true, RankMode::Exact);
    Index image_in = 0;
    std::vector<SparseVec> image_basis;
    if (m > 0) {
        RelativeComplex prevc = build_relative_degree(RelKind::CR, h, m - 1);
        SparseMatrix d_in = quotient_matrix(prevc, cur);
        image_in = rank_kernel(d_in, false, RankMode::Exact).rank;
        std::vector<SparseVec> cols(d_in.cols);
        for (auto& t : d_in.entries) cols[t.c].emplace_back(t.r, t.v);
        ExactStream st(d_in.rows);
        for (auto& cvec : cols)
            if (st.add_row(cvec)) image_basis.push_back(cvec);
    }
    res.dim = (Index)out_rank.kernel->size() - image_in;
    // representatives: kernel vectors independent of the image
    ExactStream st(cur.quotient_dim());
    for (auto& b : image_basis) st.add_row(b);
    for (auto& kv : *out_rank.kernel)
        if (st.add_row(kv)) res.representatives.push_back(kv);
    auto betti_at = [&](int d) -> Index {
        if (d < 0 || d >= (int)so_betti.size()) return 0;
        return so_betti[d];
    };
    res.rhs = betti_at(m + 3) + betti_at(m + 3 - h.n());
    res.pass = res.dim == res.rhs;
    return res;
}

Cochain leibniz_I(const LieAlgebra& h) {
    Cochain f;
    f.dom = MultiBasis{MultiBasis::Tensor, h.dim, 1};
    f.module_dim = h.dim;
    int sod = h.so_dim();
    for (int i = 0; i < h.n(); ++i) f.set(sod + i, sod + i, 1);
    return f;
}

Cochain leibniz_rho(const LieAlgebra& h) {
    Cochain f;
    f.dom = MultiBasis{MultiBasis::Tensor, h.dim, 2};
    f.module_dim = h.dim;
    int p = h.p, n = h.n(), sod = h.so_dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool same_block = (j <= p) || (i > p);
            Label l{same_block ? Label::Alpha : Label::Beta, i, j};
            int v = h.index_of.at(l);
            Rat c = (i > p) ? Rat(-1) : Rat(1);
            Index fwd = (Index)(sod + i - 1) * h.dim + (sod + j - 1);
            Index bwd = (Index)(sod + j - 1) * h.dim + (sod + i - 1);
            f.set(fwd, v, c);
            f.set(bwd, v, -c);
        }
    return f;
}

} // namespace leibhom
