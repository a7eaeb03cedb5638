#include "leibhom/algebra.hpp"

#include <json.hpp>

#include <sstream>

namespace leibhom {

std::string Label::str() const {
    std::ostringstream os;
    switch (kind) {
        case Alpha: os << "a_" << i << "_" << j; break;
        case Beta: os << "b_" << i << "_" << j; break;
        case Partial: os << "d_" << i; break;
    }
    return os.str();
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<Index, Rat> acc;
    for (auto& [a, ca] : x)
        for (auto& [b, cb] : y) axpy(acc, ca * cb, sc[a][b]);
    return from_map(acc);
}

const std::vector<std::vector<std::tuple<int, int, Rat>>>&
LieAlgebra::bracket_preimages() const {
    if (preimages_.empty()) {
        preimages_.resize(dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (auto& [u, c] : sc[a][b]) preimages_[u].emplace_back(a, b, c);
    }
    return preimages_;
}

namespace {

std::vector<Label> so_labels(int p, int q) {
    std::vector<Label> ls;
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) ls.push_back({Label::Alpha, i, j});
    for (int i = p + 1; i <= p + q; ++i)
        for (int j = i + 1; j <= p + q; ++j) ls.push_back({Label::Alpha, i, j});
    for (int i = 1; i <= p; ++i)
        for (int j = p + 1; j <= p + q; ++j) ls.push_back({Label::Beta, i, j});
    return ls;
}

LinearVectorField realize(int p, int q, const Label& l) {
    switch (l.kind) {
        case Label::Alpha: return make_alpha(p, q, l.i, l.j);
        case Label::Beta: return make_beta(p, q, l.i, l.j);
        default: return make_partial(p + q, l.i);
    }
}

LieAlgebra build(int p, int q, bool affine) {
    if (p < 0 || q < 0 || p + q < 1) throw ParameterOutOfRange("need p,q >= 0 and p+q >= 1");
    LieAlgebra alg;
    alg.p = p;
    alg.q = q;
    alg.affine = affine;
    alg.labels = so_labels(p, q);
    if (affine)
        for (int i = 1; i <= p + q; ++i) alg.labels.push_back({Label::Partial, i});
    alg.dim = (int)alg.labels.size();
    for (int k = 0; k < alg.dim; ++k) alg.index_of[alg.labels[k]] = k;
    for (auto& l : alg.labels) alg.fields.push_back(realize(p, q, l));

    alg.sc.assign(alg.dim, std::vector<SparseVec>(alg.dim));
    for (int a = 0; a < alg.dim; ++a)
        for (int b = 0; b < alg.dim; ++b) {
            if (a == b) continue;
            auto f = commutator(alg.fields[a], alg.fields[b]);
            alg.sc[a][b] = to_basis_coords(alg, f);
        }
    return alg;
}

} // namespace

LieAlgebra build_so(int p, int q) { return build(p, q, false); }
LieAlgebra build_h(int p, int q) { return build(p, q, true); }

SparseVec to_basis_coords(const LieAlgebra& alg, const LinearVectorField& f) {
    int p = alg.p, n = alg.n();
    if (f.n != n) throw DimensionMismatch();
    SparseVec out;
    // The alpha/beta index ranges are disjoint, so linear coordinates decompose
    // directly; the two coefficients of each generator must be consistent.
    std::map<std::pair<int, int>, Rat> rem = f.linear;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto lo = rem.find({j, i}); // coefficient of x_i d_j
            auto hi = rem.find({i, j}); // coefficient of x_j d_i
            Rat cji = lo == rem.end() ? Rat(0) : lo->second;
            Rat cij = hi == rem.end() ? Rat(0) : hi->second;
            if (is_zero(cji) && is_zero(cij)) continue;
            bool same_block = (j <= p) || (i > p);
            Label l{same_block ? Label::Alpha : Label::Beta, i, j};
            if (same_block && cij != -cji) throw NotInSpan("not in the alpha span");
            if (!same_block && cij != cji) throw NotInSpan("not in the beta span");
            auto it = alg.index_of.find(l);
            if (it == alg.index_of.end()) throw NotInSpan("label missing from basis");
            out.emplace_back(it->second, cji);
            rem.erase({j, i});
            rem.erase({i, j});
        }
    for (auto& [k, v] : rem)
        if (!is_zero(v)) throw NotInSpan("diagonal linear part");
    for (auto& [i, v] : f.constant) {
        auto it = alg.index_of.find({Label::Partial, i, 0});
        if (it == alg.index_of.end()) throw NotInSpan("constant part outside basis");
        out.emplace_back(it->second, v);
    }
    canonicalize(out);
    return out;
}

IdealQuotientReport check_ideal_and_quotient(const LieAlgebra& h) {
    IdealQuotientReport rep;
    if (!h.affine) throw IncompatibleModule("expected an affine algebra");
    int sod = h.so_dim();
    auto fail = [&](IdealQuotientReport::Failure f, std::string d) {
        rep.pass = false;
        rep.failure = f;
        rep.detail = std::move(d);
        return rep;
    };
    // [I_n, I_n] = 0 and [h, I_n] ⊆ I_n
    for (int a = 0; a < h.dim; ++a)
        for (int b = sod; b < h.dim; ++b) {
            for (auto& [u, c] : h.sc[a][b]) {
                if (u < sod)
                    return fail(IdealQuotientReport::NotAnIdealFailure,
                                "[" + h.labels[a].str() + "," + h.labels[b].str() +
                                    "] leaves the translation span");
                if (a >= sod)
                    return fail(IdealQuotientReport::NotAnIdealFailure,
                                "[" + h.labels[a].str() + "," + h.labels[b].str() +
                                    "] nonzero on abelian ideal");
            }
        }
    // quotient bracket == so(p,q) structure constants entry for entry
    LieAlgebra so = build_so(h.p, h.q);
    for (int a = 0; a < sod; ++a)
        for (int b = 0; b < sod; ++b) {
            SparseVec quot;
            for (auto& [u, c] : h.sc[a][b])
                if (u < sod) quot.emplace_back(u, c);
            if (quot != so.sc[a][b])
                return fail(IdealQuotientReport::QuotientMismatchFailure,
                            "quotient bracket differs at [" + h.labels[a].str() + "," +
                                h.labels[b].str() + "]");
        }
    return rep;
}

SparseVec Representation::apply(int g, const SparseVec& v) const {
    std::map<Index, Rat> acc;
    for (auto& [x, c] : v) axpy(acc, c, act[g][x]);
    return from_map(acc);
}

Representation adjoint_rep(const LieAlgebra& alg) {
    Representation r;
    r.acting = &alg;
    r.kind = RepKind::Adjoint;
    r.module_dim = alg.dim;
    r.act.assign(alg.dim, std::vector<SparseVec>(alg.dim));
    for (int g = 0; g < alg.dim; ++g)
        for (int x = 0; x < alg.dim; ++x) r.act[g][x] = alg.sc[g][x];
    return r;
}

Representation coadjoint_rep(const LieAlgebra& alg) {
    Representation r;
    r.acting = &alg;
    r.kind = RepKind::Coadjoint;
    r.module_dim = alg.dim;
    r.act.assign(alg.dim, std::vector<SparseVec>(alg.dim));
    for (int g = 0; g < alg.dim; ++g) {
        for (int x = 0; x < alg.dim; ++x)
            for (auto& [u, c] : alg.sc[g][x]) r.act[g][u].emplace_back(x, -c);
        for (auto& col : r.act[g]) canonicalize(col);
    }
    return r;
}

Representation trivial_rep(const LieAlgebra& alg, int module_dim) {
    Representation r;
    r.acting = &alg;
    r.kind = RepKind::Trivial;
    r.module_dim = module_dim;
    r.act.assign(alg.dim, std::vector<SparseVec>(module_dim));
    return r;
}

Representation restricted_rep(const LieAlgebra& h, const LieAlgebra& so,
                              bool translations_only) {
    if (!h.affine || so.affine || h.p != so.p || h.q != so.q)
        throw IncompatibleModule("restricted_rep expects h(p,q) with matching so(p,q)");
    int sod = h.so_dim();
    Representation r;
    r.acting = &so;
    r.kind = translations_only ? RepKind::RestrictedTranslations : RepKind::RestrictedFull;
    r.module_dim = translations_only ? h.n() : h.dim;
    r.act.assign(so.dim, std::vector<SparseVec>(r.module_dim));
    for (int g = 0; g < so.dim; ++g)
        for (int x = 0; x < r.module_dim; ++x) {
            const SparseVec& full = h.sc[g][translations_only ? sod + x : x];
            SparseVec v;
            for (auto& [u, c] : full) {
                if (translations_only) {
                    if (u < sod) throw IncompatibleModule("module not invariant");
                    v.emplace_back(u - sod, c);
                } else {
                    v.emplace_back(u, c);
                }
            }
            r.act[g][x] = std::move(v);
        }
    return r;
}

std::string algebra_dump_json(const LieAlgebra& alg) {
    nlohmann::ordered_json j;
    j["p"] = alg.p;
    j["q"] = alg.q;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (auto& l : alg.labels) labels.push_back(l.str());
    j["labels"] = labels;
    nlohmann::ordered_json sc = nlohmann::ordered_json::array();
    for (int a = 0; a < alg.dim; ++a)
        for (int b = a + 1; b < alg.dim; ++b) {
            if (alg.sc[a][b].empty()) continue;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (auto& [k, c] : alg.sc[a][b])
                terms.push_back({k, rat_repr(c)});
            sc.push_back({a, b, terms});
        }
    j["sc"] = sc;
    return j.dump(2) + "\n";
}

} // namespace leibhom
