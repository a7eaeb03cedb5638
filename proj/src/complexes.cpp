#include "leibhom/complexes.hpp"

namespace leibhom {

namespace {

Representation translations_on_h_rep(const LieAlgebra& h) {
    Representation r;
    r.acting = &h;
    r.kind = RepKind::Adjoint;
    r.module_dim = h.dim;
    int sod = h.so_dim();
    r.act.assign(h.n(), std::vector<SparseVec>(h.dim));
    for (int x = 0; x < h.n(); ++x)
        for (int m = 0; m < h.dim; ++m) r.act[x][m] = h.sc[sod + x][m];
    return r;
}

// Transposed action lists: for each generator g and target v', the (w, c) with
// act[g][w] carrying coefficient c on v'.
std::vector<std::vector<std::vector<std::pair<int, Rat>>>>
transpose_action(const Representation& rep, int gens) {
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> t(
        gens, std::vector<std::vector<std::pair<int, Rat>>>(rep.module_dim));
    for (int g = 0; g < gens; ++g)
        for (int w = 0; w < rep.module_dim; ++w)
            for (auto& [v, c] : rep.act[g][w]) t[g][v].emplace_back(w, c);
    return t;
}

} // namespace

CESpec ce_trivial(const LieAlgebra& alg) {
    return {&alg, 0, alg.dim, trivial_rep(alg, 1)};
}
CESpec ce_adjoint(const LieAlgebra& alg) { return {&alg, 0, alg.dim, adjoint_rep(alg)}; }
CESpec ce_coadjoint(const LieAlgebra& alg) {
    return {&alg, 0, alg.dim, coadjoint_rep(alg)};
}
CESpec ce_translations_on_h(const LieAlgebra& h) {
    return {&h, h.so_dim(), h.n(), translations_on_h_rep(h)};
}

Index ce_space_dim(const CESpec& s, int k) {
    return binomial(s.domain_dim, k) * s.rep.module_dim;
}

SparseMatrix ce_matrix(const CESpec& s, int k) {
    int md = s.rep.module_dim;
    MultiBasis wk{MultiBasis::Wedge, s.domain_dim, k};
    MultiBasis wk1{MultiBasis::Wedge, s.domain_dim, k + 1};
    SparseMatrix m;
    m.rows = wk1.size() * md;
    m.cols = wk.size() * md;
    auto actT = transpose_action(s.rep, s.domain_dim);
    for (Index wr = 0; wr < wk1.size(); ++wr) {
        auto tuple = wk1.unrank(wr);
        for (int i = 0; i <= k; ++i) {
            int sign_i = (i % 2 == 0) ? -1 : 1; // (-1)^{i+1} with 1-based i
            std::vector<int> rest;
            for (int t = 0; t <= k; ++t)
                if (t != i) rest.push_back(tuple[t]);
            Index wcol = wk.rank(rest);
            for (int vp = 0; vp < md; ++vp)
                for (auto& [w, c] : actT[tuple[i]][vp])
                    m.add(wr * md + vp, wcol * md + w, sign_i * c);
        }
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                int sign_j = (j % 2 == 0) ? -1 : 1; // (-1)^{j+1} with 1-based j
                const SparseVec& br =
                    s.host->sc[s.offset + tuple[i]][s.offset + tuple[j]];
                for (auto& [u, cu] : br) {
                    int local = (int)u - s.offset;
                    if (local < 0 || local >= s.domain_dim)
                        throw DomainMismatch("bracket leaves the CE domain span");
                    std::vector<int> sub;
                    for (int t = 0; t <= k; ++t) {
                        if (t == j) continue;
                        sub.push_back(t == i ? local : tuple[t]);
                    }
                    Index r;
                    int sg;
                    if (!wk.rank_with_sign(std::move(sub), r, sg)) continue;
                    for (int vp = 0; vp < md; ++vp)
                        m.add(wr * md + vp, r * md + vp, Rat(sign_j * sg) * cu);
                }
            }
    }
    m.finalize();
    return m;
}

Cochain ce_delta(const CESpec& s, const Cochain& f) {
    int k = f.dom.k;
    SparseMatrix m = ce_matrix(s, k);
    Cochain out;
    out.dom = MultiBasis{MultiBasis::Wedge, s.domain_dim, k + 1};
    out.module_dim = f.module_dim;
    out.coeffs = m.apply(f.coeffs);
    return out;
}

Index leibniz_space_dim(const LeibnizSpec& s, int k) {
    return leibniz_domain(s, k).size() * s.module_dim();
}

MultiBasis leibniz_domain(const LeibnizSpec& s, int k) {
    return MultiBasis{MultiBasis::Tensor, s.h->dim, k};
}

SparseVec leibniz_row(const LeibnizSpec& s, int k, Index row_flat) {
    const LieAlgebra& h = *s.h;
    int md = s.module_dim();
    MultiBasis dk = leibniz_domain(s, k);
    MultiBasis dk1 = leibniz_domain(s, k + 1);
    int vp = (int)(row_flat % md);
    auto tuple = dk1.unrank(row_flat / md);
    std::map<Index, Rat> acc;
    if (s.adjoint) {
        // [g_1, f(g_2 ⊗ ...)]
        std::vector<int> rest(tuple.begin() + 1, tuple.end());
        Index col = dk.rank(rest);
        for (int w = 0; w < md; ++w)
            for (auto& [u, c] : h.sc[tuple[0]][w])
                if ((int)u == vp) acc[col * md + w] += c;
        // (-1)^i [f(... ĝ_i ...), g_i]
        for (int i = 1; i <= k; ++i) {
            int sign = (i + 1) % 2 ? -1 : 1; // (-1)^{i+1} (1-based position i+1)
            std::vector<int> sub;
            for (int t = 0; t <= k; ++t)
                if (t != i) sub.push_back(tuple[t]);
            Index col2 = dk.rank(sub);
            for (int w = 0; w < md; ++w)
                for (auto& [u, c] : h.sc[w][tuple[i]])
                    if ((int)u == vp) acc[col2 * md + w] += sign * c;
        }
    }
    // (-1)^{j+1} f(... [g_i, g_j]_{@i} ... ĝ_j ...)
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            int sign = (j % 2) ? -1 : 1; // (-1)^{j} with 0-based j
            for (auto& [u, c] : h.sc[tuple[i]][tuple[j]]) {
                std::vector<int> sub;
                for (int t = 0; t <= k; ++t) {
                    if (t == j) continue;
                    sub.push_back(t == i ? (int)u : tuple[t]);
                }
                acc[dk.rank(sub) * md + vp] += sign * c;
            }
        }
    SparseVec row = from_map(acc);
    return row;
}

SparseMatrix leibniz_matrix(const LeibnizSpec& s, int k) {
    SparseMatrix m;
    m.rows = leibniz_space_dim(s, k + 1);
    m.cols = leibniz_space_dim(s, k);
    for (Index r = 0; r < m.rows; ++r)
        for (auto& [c, v] : leibniz_row(s, k, r)) m.add(r, c, v);
    m.finalize();
    return m;
}

Cochain leibniz_delta(const LeibnizSpec& s, const Cochain& f) {
    const LieAlgebra& h = *s.h;
    int md = s.module_dim();
    if (f.dom.shape != MultiBasis::Tensor || f.dom.base_dim != h.dim ||
        f.module_dim != md)
        throw DomainMismatch();
    int k = f.dom.k;
    MultiBasis dk1 = leibniz_domain(s, k + 1);
    Cochain out;
    out.dom = dk1;
    out.module_dim = md;
    std::map<Index, Rat> acc;
    auto& pre = h.bracket_preimages();
    for (auto& [key, c] : f.coeffs) {
        auto sigma = f.dom.unrank(key / md);
        int v = (int)(key % md);
        if (s.adjoint) {
            // term [g_1, f(...)]: rows a ⊗ sigma for every a
            for (int a = 0; a < h.dim; ++a) {
                for (auto& [u, cu] : h.sc[a][v]) {
                    std::vector<int> t;
                    t.push_back(a);
                    t.insert(t.end(), sigma.begin(), sigma.end());
                    acc[dk1.rank(t) * md + u] += c * cu;
                }
            }
            // terms (-1)^i [f(...), g_i]: insert a at 0-based position 1..k
            for (int pos = 1; pos <= k; ++pos) {
                int sign = ((pos + 1) % 2) ? -1 : 1; // (-1)^{pos+1} (1-based pos+1)
                for (int a = 0; a < h.dim; ++a) {
                    for (auto& [u, cu] : h.sc[v][a]) {
                        std::vector<int> t = sigma;
                        t.insert(t.begin() + pos, a);
                        acc[dk1.rank(t) * md + u] += c * cu * sign;
                    }
                }
            }
        }
        // bracket terms: slot i of sigma expands as [x,y], y inserted at j
        for (int i = 0; i < k; ++i) {
            for (auto& [x, y, cu] : pre[sigma[i]]) {
                for (int j = i + 1; j <= k; ++j) {
                    int sign = (j % 2) ? -1 : 1; // (-1)^j, j 0-based in the k+1 tuple
                    std::vector<int> t = sigma;
                    t[i] = x;
                    t.insert(t.begin() + j, y);
                    acc[dk1.rank(t) * md + v] += c * cu * sign;
                }
            }
        }
    }
    out.coeffs = from_map(acc);
    return out;
}

int leibniz_block_key(const LeibnizSpec& s, int k, Index flat) {
    const LieAlgebra& h = *s.h;
    int md = s.module_dim();
    int v = (int)(flat % md);
    auto tuple = leibniz_domain(s, k).unrank(flat / md);
    int w = 0, par = 0;
    for (int t : tuple) {
        w += h.weight(t);
        par ^= h.parity(t);
    }
    if (s.adjoint) {
        w -= h.weight(v);
        par ^= h.parity(v);
    }
    return 2 * (w + 1) + par; // ω >= -1, so the key is nonnegative
}

SparseMatrix homology_boundary_matrix(const LieAlgebra& h, int k) {
    int n = h.n(), sod = h.so_dim(), md = h.dim;
    MultiBasis wk{MultiBasis::Wedge, n, k};
    MultiBasis wk1{MultiBasis::Wedge, n, k - 1};
    SparseMatrix m;
    m.rows = wk1.size() * md;
    m.cols = wk.size() * md;
    for (Index wz = 0; wz < wk.size(); ++wz) {
        auto tuple = wk.unrank(wz);
        for (int t = 0; t < k; ++t) {
            int sign = (t % 2) ? -1 : 1; // (-1)^{t+1} with 1-based t
            std::vector<int> rest;
            for (int s2 = 0; s2 < k; ++s2)
                if (s2 != t) rest.push_back(tuple[s2]);
            Index wrow = wk1.rank(rest);
            for (int v = 0; v < md; ++v)
                for (auto& [u, c] : h.sc[sod + tuple[t]][v])
                    m.add(wrow * md + u, wz * md + v, sign * c);
        }
    }
    m.finalize();
    return m;
}

Cochain homology_delta(const LieAlgebra& h, const Cochain& chain) {
    int k = chain.dom.k;
    if (k == 0) return Cochain{MultiBasis{MultiBasis::Wedge, h.n(), 0}, h.dim, {}};
    SparseMatrix m = homology_boundary_matrix(h, k);
    Cochain out;
    out.dom = MultiBasis{MultiBasis::Wedge, h.n(), k - 1};
    out.module_dim = h.dim;
    out.coeffs = m.apply(chain.coeffs);
    return out;
}

SparseVec express_in_basis(const std::vector<SparseVec>& basis, const SparseVec& v,
                           Index ambient_dim) {
    SparseMatrix m;
    m.rows = ambient_dim;
    m.cols = (Index)basis.size();
    for (Index col = 0; col < (Index)basis.size(); ++col)
        for (auto& [r, c] : basis[col]) m.add(r, col, c);
    m.finalize();
    auto x = solve(m, v, RankMode::Exact);
    if (!x) throw NotInSpan("vector not in the invariant basis span");
    return *x;
}

SmallComplex invariant_hom_complex(const LieAlgebra& h, const LieAlgebra& so) {
    int n = h.n();
    SmallComplex sc;
    sc.cochain = true;
    CESpec amb = ce_translations_on_h(h);
    for (int k = 0; k <= n; ++k)
        sc.bases.push_back(invariant_subspace(h, so, InvariantSpace::HomWedgeIToH, k));
    for (int k = 0; k < n; ++k) {
        SparseMatrix mk = ce_matrix(amb, k);
        SparseMatrix d;
        d.rows = (Index)sc.bases[k + 1].size();
        d.cols = (Index)sc.bases[k].size();
        for (Index col = 0; col < d.cols; ++col) {
            SparseVec img = mk.apply(sc.bases[k][col]);
            SparseVec x = express_in_basis(sc.bases[k + 1], img, mk.rows);
            for (auto& [r, c] : x) d.add(r, col, c);
        }
        d.finalize();
        sc.diffs.push_back(std::move(d));
    }
    return sc;
}

SmallComplex invariant_homology_complex(const LieAlgebra& h, const LieAlgebra& so) {
    int n = h.n();
    SmallComplex sc;
    sc.cochain = false;
    for (int k = 0; k <= n; ++k)
        sc.bases.push_back(invariant_subspace(h, so, InvariantSpace::WedgeITensorH, k));
    sc.diffs.resize(n + 1); // diffs[k]: degree k -> k-1, diffs[0] empty
    for (int k = 1; k <= n; ++k) {
        SparseMatrix mk = homology_boundary_matrix(h, k);
        SparseMatrix d;
        d.rows = (Index)sc.bases[k - 1].size();
        d.cols = (Index)sc.bases[k].size();
        for (Index col = 0; col < d.cols; ++col) {
            SparseVec img = mk.apply(sc.bases[k][col]);
            SparseVec x = express_in_basis(sc.bases[k - 1], img, mk.rows);
            for (auto& [r, c] : x) d.add(r, col, c);
        }
        d.finalize();
        sc.diffs[k] = std::move(d);
    }
    return sc;
}

} // namespace leibhom
