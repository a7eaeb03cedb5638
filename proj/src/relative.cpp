#include "leibhom/relative.hpp"

#include <algorithm>

namespace leibhom {

namespace {

MultiBasis cr_basis(const LieAlgebra& h, int m) {
    return MultiBasis{MultiBasis::MixedTensorWedge, h.dim, m + 1};
}

int perm_sign(const std::vector<int>& t) {
    int sign = 1;
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = a + 1; b < t.size(); ++b)
            if (t[a] > t[b]) sign = -sign;
    return sign;
}

} // namespace

RelativeComplex build_relative_degree(RelKind kind, const LieAlgebra& h, int m) {
    RelativeComplex rc;
    rc.kind = kind;
    rc.h = &h;
    rc.degree = m;
    if (kind == RelKind::CR) {
        MultiBasis mb = cr_basis(h, m);
        rc.ambient_dim = mb.size();
        rc.quotient_index_of.assign(rc.ambient_dim, -1);
        for (Index a = 0; a < rc.ambient_dim; ++a) {
            auto t = mb.unrank(a);
            bool leader = t.size() > 1 && t[0] < t[1] &&
                          std::find(t.begin() + 1, t.end(), t[0]) == t.end();
            if (!leader) {
                rc.quotient_index_of[a] = (Index)rc.quotient_basis.size();
                rc.quotient_basis.push_back(a);
            }
        }
    } else {
        MultiBasis tb{MultiBasis::Tensor, h.dim, m + 2};
        Index tuples = tb.size();
        rc.ambient_dim = tuples * h.dim;
        rc.quotient_index_of.assign(rc.ambient_dim, -1);
        for (Index z = 0; z < tuples; ++z) {
            auto t = tb.unrank(z);
            bool sorted_distinct = true;
            for (size_t i = 0; i + 1 < t.size(); ++i)
                if (t[i] >= t[i + 1]) { sorted_distinct = false; break; }
            if (sorted_distinct) continue; // leader coordinates get rewritten
            for (int v = 0; v < h.dim; ++v) {
                Index a = z * h.dim + v;
                rc.quotient_index_of[a] = (Index)rc.quotient_basis.size();
                rc.quotient_basis.push_back(a);
            }
        }
    }
    return rc;
}

SparseMatrix relative_ambient_matrix(RelKind kind, const LieAlgebra& h, int m) {
    if (kind == RelKind::Crel) {
        LeibnizSpec ls{&h, true};
        return leibniz_matrix(ls, m + 2);
    }
    // CR: δF(y ⊗ g_1 ^ ... ^ g_{m+2}) =
    //   Σ_i (-1)^{i+1} F([g_i, y] ⊗ ... ĝ_i ...) + Σ_{i<j} (-1)^j F(y ⊗ merged)
    MultiBasis from = cr_basis(h, m);
    MultiBasis to = cr_basis(h, m + 1);
    MultiBasis from_wedge{MultiBasis::Wedge, h.dim, m + 1};
    SparseMatrix mat;
    mat.rows = to.size();
    mat.cols = from.size();
    for (Index r = 0; r < mat.rows; ++r) {
        auto t = to.unrank(r);
        int y = t[0];
        std::vector<int> wedge(t.begin() + 1, t.end());
        int k1 = (int)wedge.size(); // m + 2
        for (int i = 0; i < k1; ++i) {
            int sign = (i % 2) ? -1 : 1; // (-1)^{i+1}, 1-based i
            std::vector<int> rest;
            for (int s = 0; s < k1; ++s)
                if (s != i) rest.push_back(wedge[s]);
            for (auto& [u, c] : h.sc[wedge[i]][y]) {
                std::vector<int> col;
                col.push_back((int)u);
                col.insert(col.end(), rest.begin(), rest.end());
                mat.add(r, from.rank(col), sign * c);
            }
        }
        for (int i = 0; i < k1; ++i)
            for (int j = i + 1; j < k1; ++j) {
                int sign = (j % 2) ? 1 : -1; // (-1)^j, 1-based j = j0+1
                for (auto& [u, c] : h.sc[wedge[i]][wedge[j]]) {
                    std::vector<int> sub;
                    for (int s = 0; s < k1; ++s) {
                        if (s == j) continue;
                        sub.push_back(s == i ? (int)u : wedge[s]);
                    }
                    Index wr;
                    int sg;
                    if (!from_wedge.rank_with_sign(std::move(sub), wr, sg)) continue;
                    std::vector<int> col;
                    col.push_back(y);
                    auto wt = from_wedge.unrank(wr);
                    col.insert(col.end(), wt.begin(), wt.end());
                    mat.add(r, from.rank(col), Rat(sign * sg) * c);
                }
            }
    }
    mat.finalize();
    return mat;
}

SparseVec quotient_reduce(const RelativeComplex& rc, const SparseVec& ambient) {
    const LieAlgebra& h = *rc.h;
    std::map<Index, Rat> acc;
    auto push = [&](Index a, const Rat& c) {
        Index qi = rc.quotient_index_of[a];
        if (qi < 0) throw LiftFailure("leader coordinate survived reduction");
        Rat& slot = acc[qi];
        slot += c;
        if (is_zero(slot)) acc.erase(qi);
    };
    if (rc.kind == RelKind::CR) {
        MultiBasis mb = cr_basis(h, rc.degree);
        for (auto& [a, c] : ambient) {
            auto t = mb.unrank(a);
            bool leader = t.size() > 1 && t[0] < t[1] &&
                          std::find(t.begin() + 1, t.end(), t[0]) == t.end();
            if (!leader) {
                push(a, c);
                continue;
            }
            // (minS, S \ minS) = -Σ_{u in z} (-1)^{idx_S(u)} (u, S \ u)
            std::vector<int> S = t; // already sorted: t[0] < wedge
            for (size_t pos = 1; pos < S.size(); ++pos) {
                int u = S[pos];
                std::vector<int> rest;
                for (size_t s = 0; s < S.size(); ++s)
                    if (s != pos) rest.push_back(S[s]);
                std::vector<int> col;
                col.push_back(u);
                col.insert(col.end(), rest.begin(), rest.end());
                int sign = (pos % 2) ? -1 : 1; // (-1)^{idx_S(u)}
                push(mb.rank(col), -Rat(sign) * c);
            }
        }
    } else {
        MultiBasis tb{MultiBasis::Tensor, h.dim, rc.degree + 2};
        for (auto& [a, c] : ambient) {
            Index z = a / h.dim;
            int v = (int)(a % h.dim);
            auto t = tb.unrank(z);
            bool sorted_distinct = true;
            for (size_t i = 0; i + 1 < t.size(); ++i)
                if (t[i] >= t[i + 1]) { sorted_distinct = false; break; }
            if (!sorted_distinct) {
                push(a, c);
                continue;
            }
            // (sorted S, v) = -Σ_{σ != id} sgn(σ) (σS, v)
            std::vector<int> perm = t;
            while (std::next_permutation(perm.begin(), perm.end())) {
                push(tb.rank(perm) * h.dim + v, -Rat(perm_sign(perm)) * c);
            }
        }
    }
    return from_map(acc);
}

SparseMatrix quotient_matrix(const RelativeComplex& from, const RelativeComplex& to) {
    if (from.kind != to.kind || to.degree != from.degree + 1) throw DegreeMismatch();
    SparseMatrix amb = relative_ambient_matrix(from.kind, *from.h, from.degree);
    // columns of the ambient matrix, indexed by ambient degree-m coordinates
    std::vector<SparseVec> cols(amb.cols);
    for (auto& t : amb.entries) cols[t.c].emplace_back(t.r, t.v);
    SparseMatrix q;
    q.rows = to.quotient_dim();
    q.cols = from.quotient_dim();
    for (Index c = 0; c < q.cols; ++c) {
        SparseVec img = cols[from.quotient_basis[c]];
        for (auto& [r, v] : quotient_reduce(to, img)) q.add(r, c, v);
    }
    q.finalize();
    return q;
}

SparseMatrix pullback_matrix(RelKind kind, const LieAlgebra& h, int m) {
    MultiBasis wedge{MultiBasis::Wedge, h.dim, m + 2};
    SparseMatrix mat;
    if (kind == RelKind::CR) {
        MultiBasis mb = cr_basis(h, m);
        mat.rows = mb.size();
        mat.cols = wedge.size();
        for (Index r = 0; r < mat.rows; ++r) {
            auto t = mb.unrank(r);
            Index wr;
            int sg;
            if (!wedge.rank_with_sign(t, wr, sg)) continue;
            mat.add(r, wr, sg);
        }
    } else {
        MultiBasis tb{MultiBasis::Tensor, h.dim, m + 2};
        mat.rows = tb.size() * h.dim;
        mat.cols = wedge.size() * h.dim;
        for (Index z = 0; z < tb.size(); ++z) {
            auto t = tb.unrank(z);
            Index wr;
            int sg;
            if (!wedge.rank_with_sign(t, wr, sg)) continue;
            for (int v = 0; v < h.dim; ++v)
                mat.add(z * h.dim + v, wr * h.dim + v, sg);
        }
    }
    mat.finalize();
    return mat;
}

Cochain connecting_map(const RelativeComplex& rc, const SparseVec& quotient_class) {
    // quotient basis elements are ambient basis elements
    SparseVec lift;
    for (auto& [qi, c] : quotient_class) lift.emplace_back(rc.quotient_basis[qi], c);
    canonicalize(lift);
    return connecting_map_ambient(rc, lift);
}

Cochain connecting_map_ambient(const RelativeComplex& rc, const SparseVec& lift) {
    const LieAlgebra& h = *rc.h;
    SparseVec dlift;
    int to_tensor_deg = rc.degree + 3;
    if (rc.kind == RelKind::CR) {
        SparseMatrix amb = relative_ambient_matrix(rc.kind, h, rc.degree);
        dlift = amb.apply(lift);
    } else {
        LeibnizSpec ls{&h, true};
        Cochain f;
        f.dom = leibniz_domain(ls, rc.degree + 2);
        f.module_dim = h.dim;
        f.coeffs = lift;
        dlift = leibniz_delta(ls, f).coeffs;
    }
    // quotient cocycle check
    RelativeComplex next = build_relative_degree(rc.kind, h, rc.degree + 1);
    if (!quotient_reduce(next, dlift).empty())
        throw NotACocycle("class is not a cocycle in the quotient complex");

    // pull back along the alternation embedding
    MultiBasis wedge{MultiBasis::Wedge, h.dim, to_tensor_deg};
    Cochain out;
    out.dom = wedge;
    out.module_dim = rc.kind == RelKind::CR ? 1 : h.dim;
    if (rc.kind == RelKind::CR) {
        MultiBasis mb = cr_basis(h, rc.degree + 1);
        for (auto& [a, c] : dlift) {
            auto t = mb.unrank(a);
            if (t.size() > 1 && t[0] < t[1] &&
                std::find(t.begin() + 1, t.end(), t[0]) == t.end())
                out.set(wedge.rank(t), 0, c); // idx_S(min) = 0, sign +1
        }
    } else {
        MultiBasis tb{MultiBasis::Tensor, h.dim, to_tensor_deg};
        for (auto& [a, c] : dlift) {
            auto t = tb.unrank(a / h.dim);
            bool sorted_distinct = true;
            for (size_t i = 0; i + 1 < t.size(); ++i)
                if (t[i] >= t[i + 1]) { sorted_distinct = false; break; }
            if (sorted_distinct) out.set(wedge.rank(t), (int)(a % h.dim), c);
        }
    }
    // confirm δ(lift) really is the alternation image of the pulled-back cochain
    SparseMatrix pb = pullback_matrix(rc.kind, h, rc.degree + 1);
    if (pb.apply(out.coeffs) != dlift)
        throw LiftFailure("ambient differential is not alternating");
    return out;
}

} // namespace leibhom
