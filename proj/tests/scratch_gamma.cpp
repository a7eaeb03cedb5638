// Dev scratch: probe gamma_star conventions. Not part of the build.
#include "leibhom/cohomology.hpp"

#include <cstdio>
#include <vector>

using namespace leibhom;

namespace {

// variant: so-dual slot first (true) or last (false); qq_flip: negate the
// second-block alpha family relative to the printed folding (-1)^{i+j}.
Cochain gamma_star_variant(const LieAlgebra& h, bool so_first, bool qq_flip) {
    int n = h.n(), p = h.p;
    Cochain f;
    f.dom = MultiBasis{MultiBasis::Tensor, h.dim, n - 1};
    f.module_dim = 1;
    auto partial_idx = [&](int i) { return h.index_of.at({Label::Partial, i, 0}); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool same_block = (j <= p) || (i > p);
            Label l{same_block ? Label::Alpha : Label::Beta, i, j};
            int so_idx = h.index_of.at(l);
            int c = ((i + j) % 2) ? -1 : 1;
            if (qq_flip && i > p) c = -c;
            std::vector<int> rest;
            for (int t = 1; t <= n; ++t)
                if (t != i && t != j) rest.push_back(partial_idx(t));
            std::sort(rest.begin(), rest.end());
            std::vector<int> perm = rest;
            do {
                int sign = 1;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                std::vector<int> tuple;
                if (so_first) {
                    tuple.push_back(so_idx);
                    tuple.insert(tuple.end(), perm.begin(), perm.end());
                } else {
                    tuple.insert(tuple.end(), perm.begin(), perm.end());
                    tuple.push_back(so_idx);
                }
                Index r = f.dom.rank(tuple);
                f.set(r, 0, f.at(r, 0) + Rat(c * sign));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    return f;
}

// Fully antisymmetrized variant: the term (dx-wedge) ⊗ ξ* becomes the
// alternating (n-1)-form dx ^ ... ^ dx ^ ξ* on h.
Cochain gamma_star_alt(const LieAlgebra& h, bool qq_flip) {
    int n = h.n(), p = h.p;
    Cochain f;
    f.dom = MultiBasis{MultiBasis::Tensor, h.dim, n - 1};
    f.module_dim = 1;
    auto partial_idx = [&](int i) { return h.index_of.at({Label::Partial, i, 0}); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool same_block = (j <= p) || (i > p);
            Label l{same_block ? Label::Alpha : Label::Beta, i, j};
            int so_idx = h.index_of.at(l);
            int c = ((i + j) % 2) ? -1 : 1;
            if (qq_flip && i > p) c = -c;
            std::vector<int> factors;
            for (int t = 1; t <= n; ++t)
                if (t != i && t != j) factors.push_back(partial_idx(t));
            factors.push_back(so_idx); // wedge order: dx's then xi
            std::sort(factors.begin(), factors.end());
            // base orientation: sorted(dx's) followed by xi
            std::vector<int> base;
            for (int x : factors)
                if (x < h.so_dim() || true) base.push_back(x);
            // compute sign of sorted order relative to (dx...dx, xi)
            std::vector<int> ref;
            for (int t = 1; t <= n; ++t)
                if (t != i && t != j) ref.push_back(partial_idx(t));
            ref.push_back(so_idx);
            int ref_sign = 1;
            for (size_t a = 0; a < ref.size(); ++a)
                for (size_t b = a + 1; b < ref.size(); ++b)
                    if (ref[a] > ref[b]) ref_sign = -ref_sign;
            std::vector<int> perm = factors;
            do {
                int sign = 1;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                Index r = f.dom.rank(perm);
                f.set(r, 0, f.at(r, 0) + Rat(c * ref_sign * sign));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    return f;
}

} // namespace

int main() {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}}) {
        LieAlgebra h = build_h(p, q);
        LeibnizSpec triv{&h, false};
        LeibnizSpec adj{&h, true};
        std::printf("== (%d,%d) ==\n", p, q);
        for (bool so_first : {true, false})
            for (bool qq_flip : {false, true}) {
                Cochain gs = gamma_star_variant(h, so_first, qq_flip);
                bool dgs = is_cocycle(triv, gs);
                bool hinv = true;
                for (int g = 0; g < h.dim && hinv; ++g)
                    hinv = action_on_tensor_cochain(h, g, gs, nullptr).is_zero_cochain();
                Cochain Igs = product_cochain(leibniz_I(h), gs);
                bool dIgs = is_cocycle(adj, Igs);
                std::printf("  so_first=%d qq_flip=%d : d(gs)=0? %d  h-inv? %d  d(I*gs)=0? %d\n",
                            so_first, qq_flip, dgs, hinv, dIgs);
            }
        for (bool qq_flip : {false, true}) {
            Cochain gs = gamma_star_alt(h, qq_flip);
            bool dgs = is_cocycle(triv, gs);
            bool hinv = true;
            for (int g = 0; g < h.dim && hinv; ++g)
                hinv = action_on_tensor_cochain(h, g, gs, nullptr).is_zero_cochain();
            Cochain Igs = product_cochain(leibniz_I(h), gs);
            bool dIgs = is_cocycle(adj, Igs);
            Cochain rgs = product_cochain(leibniz_rho(h), gs);
            bool drgs = is_cocycle(adj, rgs);
            std::printf("  ALT qq_flip=%d : d(gs)=0? %d  h-inv? %d  d(I*gs)=0? %d  d(rho*gs)=0? %d\n",
                        qq_flip, dgs, hinv, dIgs, drgs);
        }
        // reversed product: scalar factor's arguments first
        for (bool so_first : {true, false})
            for (bool qq_flip : {false, true}) {
                Cochain gs = gamma_star_variant(h, so_first, qq_flip);
                Cochain I = leibniz_I(h);
                Cochain rho = leibniz_rho(h);
                auto rev = [&](const Cochain& u, const Cochain& phi) {
                    Cochain out;
                    out.dom = MultiBasis{MultiBasis::Tensor, h.dim, u.dom.k + phi.dom.k};
                    out.module_dim = u.module_dim;
                    std::map<Index, Rat> acc;
                    Index shift = 1;
                    for (int t = 0; t < u.dom.k; ++t) shift *= h.dim;
                    for (auto& [kp, cp] : phi.coeffs)
                        for (auto& [ku, cu] : u.coeffs) {
                            Index zu = ku / u.module_dim;
                            int v = (int)(ku % u.module_dim);
                            acc[((kp * shift) + zu) * u.module_dim + v] += cu * cp;
                        }
                    out.coeffs = leibhom::from_map(acc);
                    return out;
                };
                bool dIgs = is_cocycle(adj, rev(I, gs));
                bool drgs = is_cocycle(adj, rev(rho, gs));
                std::printf("  REV so_first=%d qq_flip=%d : d(gs*I)=0? %d d(gs*rho)=0? %d\n",
                            so_first, qq_flip, dIgs, drgs);
            }
    }
    return 0;
}
