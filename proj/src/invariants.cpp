#include "leibhom/invariants.hpp"

#include <algorithm>

namespace leibhom {

namespace {

MultiBasis wedge_over_translations(const LieAlgebra& h, int k) {
    return MultiBasis{MultiBasis::Wedge, h.n(), k};
}

int module_dim_of(const LieAlgebra& h, InvariantSpace sp) {
    return sp == InvariantSpace::WedgeI ? 1 : h.dim;
}

} // namespace

Index invariant_space_dim(const LieAlgebra& h, InvariantSpace sp, int k) {
    return binomial(h.n(), k) * module_dim_of(h, sp);
}

std::vector<SparseVec> invariant_subspace(const LieAlgebra& h, const LieAlgebra& so,
                                          InvariantSpace sp, int k) {
    Index sd = invariant_space_dim(h, sp, k);
    SparseMatrix stacked;
    stacked.rows = (Index)so.dim * sd;
    stacked.cols = sd;
    // Representations are rebuilt per column inside action_column; build once here.
    Representation tr = restricted_rep(h, so, true);
    Representation full = restricted_rep(h, so, false);
    MultiBasis wb = wedge_over_translations(h, k);
    int md = module_dim_of(h, sp);
    int sod = h.so_dim();
    for (int g = 0; g < so.dim; ++g) {
        for (Index col = 0; col < sd; ++col) {
            SparseVec v;
            if (sp == InvariantSpace::WedgeI) {
                v = action_on_wedge(tr, g, wb, col);
            } else {
                Cochain e;
                e.dom = wb;
                e.module_dim = md;
                e.coeffs = {{col, Rat(1)}};
                v = sp == InvariantSpace::WedgeITensorH
                        ? action_on_wedge_tensor(full, h, g, sod, e).coeffs
                        : induced_action_on_hom(full, h, g, sod, e).coeffs;
            }
            for (auto& [r, c] : v) stacked.add((Index)g * sd + r, col, c);
        }
    }
    stacked.finalize();
    auto res = rank_kernel(stacked, true, RankMode::Exact);
    return *res.kernel;
}

namespace {

// 1-based translation index -> flat h basis index of the partial label
int partial_idx(const LieAlgebra& h, int i) {
    return h.index_of.at({Label::Partial, i, 0});
}

int so_label_idx(const LieAlgebra& h, int i, int j) {
    bool same_block = (j <= h.p) || (i > h.p);
    return h.index_of.at({same_block ? Label::Alpha : Label::Beta, i, j});
}

// wedge index of the complement of `omit` (1-based translation indices)
Index complement_wedge(const MultiBasis& wb, int n, const std::vector<int>& omit) {
    std::vector<int> t;
    for (int i = 1; i <= n; ++i)
        if (std::find(omit.begin(), omit.end(), i) == omit.end()) t.push_back(i - 1);
    return wb.rank(t);
}

void permanent_expand(const std::vector<int>& factors, int lead,
                      const MultiBasis& dom, int md, int value, const Rat& coeff,
                      Cochain& out) {
    // all permutations of the wedge factors with their signs, prefixed by lead
    std::vector<int> perm = factors;
    std::sort(perm.begin(), perm.end());
    std::vector<int> base = perm;
    do {
        int sign = 1;
        // permutation sign relative to the sorted order
        std::vector<int> seen;
        for (int x : perm) {
            int inversions = 0;
            for (int y : seen)
                if (y > x) ++inversions;
            if (inversions % 2) sign = -sign;
            seen.push_back(x);
        }
        std::vector<int> tuple;
        tuple.push_back(lead);
        tuple.insert(tuple.end(), perm.begin(), perm.end());
        Index r = dom.rank(tuple);
        out.set(r, value, out.at(r, value) + coeff * sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

NamedClass make_named(const std::string& name, const LieAlgebra& h) {
    int p = h.p, q = h.q, n = h.n();
    int sod = h.so_dim();
    NamedClass cls;
    cls.name = name;
    cls.p = p;
    cls.q = q;
    Cochain& f = cls.realization;

    auto wedge_dom = [&](int k) { return MultiBasis{MultiBasis::Wedge, n, k}; };

    if (name == "v") {
        f.dom = wedge_dom(n);
        f.module_dim = 1;
        f.set(0, 0, 1);
        return cls;
    }
    if (name == "v_star") {
        // dx^1 ^ ... ^ dx^n as a scalar tensor cochain on h, first slot included
        f.dom = MultiBasis{MultiBasis::Tensor, h.dim, n};
        f.module_dim = 1;
        std::vector<int> parts;
        for (int i = 1; i <= n; ++i) parts.push_back(partial_idx(h, i));
        std::vector<int> rest(parts.begin() + 1, parts.end());
        permanent_expand(rest, parts[0], f.dom, 1, 0, 1, f);
        // antisymmetrize over the first slot as well
        Cochain full;
        full.dom = f.dom;
        full.module_dim = 1;
        std::vector<int> perm = parts;
        do {
            int sign = 1;
            std::vector<int> seen;
            for (int x : perm) {
                int inv = 0;
                for (int y : seen)
                    if (y > x) ++inv;
                if (inv % 2) sign = -sign;
                seen.push_back(x);
            }
            full.set(f.dom.rank(perm), 0, sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        f = full;
        return cls;
    }
    if (name == "I" || name == "I_pq") {
        f.dom = wedge_dom(1);
        f.module_dim = h.dim;
        for (int i = 1; i <= n; ++i) {
            Rat c = (name == "I_pq" && i > p) ? Rat(-1) : Rat(1);
            f.set(i - 1, sod + i - 1, c);
        }
        return cls;
    }
    if (name == "rho" || name == "rho_pq") {
        f.dom = wedge_dom(2);
        f.module_dim = h.dim;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Index w = f.dom.rank({i - 1, j - 1});
                if (j <= p) {
                    f.set(w, so_label_idx(h, i, j), 1);
                } else if (i > p) {
                    f.set(w, so_label_idx(h, i, j), -1);
                } else {
                    f.set(w, so_label_idx(h, i, j), name == "rho" ? Rat(1) : Rat(-1));
                }
            }
        return cls;
    }
    if (name == "beta" || name == "beta_pq") {
        if (n < 2) throw ParameterOutOfRange("beta needs n >= 2");
        f.dom = wedge_dom(n - 1);
        f.module_dim = h.dim;
        for (int i = 1; i <= n; ++i) {
            Index w = complement_wedge(f.dom, n, {i});
            int s;
            if (name == "beta")
                s = (i <= p) ? ((i % 2) ? 1 : -1) : ((i % 2) ? -1 : 1); // (-1)^{i+1} / (-1)^i
            else
                s = (i % 2) ? 1 : -1; // (-1)^{i+1} throughout
            f.set(w, sod + i - 1, s);
        }
        return cls;
    }
    if (name == "gamma" || name == "gamma_pq") {
        if (n < 4) throw ParameterOutOfRange("gamma needs n >= 4");
        f.dom = wedge_dom(n - 2);
        f.module_dim = h.dim;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Index w = complement_wedge(f.dom, n, {i, j});
                int base = ((i + j) % 2) ? -1 : 1; // (-1)^{i+j}
                int s;
                if (j <= p) {
                    s = base;
                } else if (i > p) {
                    s = -base; // (-1)^{i+j+1}
                } else {
                    s = (name == "gamma") ? -base : base;
                }
                f.set(w, so_label_idx(h, i, j), s);
            }
        return cls;
    }
    if (name == "gamma_star_pq") {
        if (n < 4) throw ParameterOutOfRange("gamma_star needs n >= 4");
        f.dom = MultiBasis{MultiBasis::Tensor, h.dim, n - 1};
        f.module_dim = 1;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                // same sign families as gamma_pq: the second-block alpha family
                // carries (-1)^{i+j+1}, the others (-1)^{i+j}
                int c = ((i + j) % 2) ? -1 : 1;
                if (i > p) c = -c;
                std::vector<int> rest;
                for (int t = 1; t <= n; ++t)
                    if (t != i && t != j) rest.push_back(partial_idx(h, t));
                permanent_expand(rest, so_label_idx(h, i, j), f.dom, 1, 0, c, f);
            }
        return cls;
    }
    if (name == "beta_star_pq") {
        if (n < 2) throw ParameterOutOfRange("beta_star needs n >= 2");
        f.dom = MultiBasis{MultiBasis::Tensor, h.dim, n};
        f.module_dim = 1;
        for (int i = 1; i <= n; ++i) {
            int c = (i % 2) ? 1 : -1;
            std::vector<int> rest;
            for (int t = 1; t <= n; ++t)
                if (t != i) rest.push_back(partial_idx(h, t));
            permanent_expand(rest, partial_idx(h, i), f.dom, 1, 0, c, f);
        }
        return cls;
    }
    throw ParameterOutOfRange("unknown named class: " + name);
}

InvarianceReport verify_invariance(const NamedClass& cls, const LieAlgebra& h,
                                   bool under_full_h) {
    InvarianceReport rep;
    const Cochain& f = cls.realization;
    bool chain_type = cls.name == "v" || cls.name.ends_with("_pq");
    Representation adj = adjoint_rep(h);
    int sod = h.so_dim();
    int gen_count = under_full_h ? h.dim : sod;
    for (int g = 0; g < gen_count; ++g) {
        Cochain moved;
        if (f.dom.shape == MultiBasis::Tensor)
            moved = action_on_tensor_cochain(h, g, f, nullptr);
        else if (chain_type)
            moved = action_on_wedge_tensor(f.module_dim == 1 ? trivial_rep(h, 1) : adj,
                                           h, g, sod, f);
        else
            moved = induced_action_on_hom(adj, h, g, sod, f);
        if (!moved.coeffs.empty()) {
            rep.pass = false;
            rep.violating_generator = h.labels[g].str();
            return rep;
        }
    }
    return rep;
}

SparseVec normalize_leading(const SparseVec& v) {
    if (v.empty()) return v;
    SparseVec out = v;
    Rat inv = Rat(1) / v.front().second;
    for (auto& [i, c] : out) c *= inv;
    return out;
}

bool in_span(const std::vector<SparseVec>& basis, const SparseVec& v) {
    ExactStream st(1 + [&] {
        Index m = 0;
        for (auto& b : basis)
            for (auto& [i, c] : b) m = std::max(m, i);
        for (auto& [i, c] : v) m = std::max(m, i);
        return m;
    }());
    for (auto& b : basis) st.add_row(b);
    return !st.add_row(v);
}

std::vector<InvariantRow> invariant_table(const LieAlgebra& h, const LieAlgebra& so,
                                          InvariantSpace sp) {
    int n = h.n();
    std::vector<InvariantRow> rows;
    for (int k = 0; k <= n; ++k) {
        InvariantRow row;
        row.k = k;
        auto kernel = invariant_subspace(h, so, sp, k);
        row.dim = (Index)kernel.size();
        std::vector<std::pair<std::string, int>> candidates;
        if (sp == InvariantSpace::WedgeI) {
            if (k == 0) candidates = {}; // scalars, dim 1 by convention below
            if (k == n) candidates = {{"v", n}};
        } else {
            bool dual = sp == InvariantSpace::HomWedgeIToH;
            auto nm = [&](const char* base) {
                return dual ? std::string(base) : std::string(base) + "_pq";
            };
            if (k == 1) candidates.push_back({nm("I"), 1});
            if (k == 2) candidates.push_back({nm("rho"), 2});
            if (n >= 4 && k == n - 2) candidates.push_back({nm("gamma"), n - 2});
            if (n >= 2 && k == n - 1) candidates.push_back({nm("beta"), n - 1});
        }
        for (auto& [name, deg] : candidates) {
            NamedClass cls = make_named(name, h);
            if (in_span(kernel, cls.realization.coeffs))
                row.matched.push_back(name);
            else
                row.match_ok = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace leibhom
