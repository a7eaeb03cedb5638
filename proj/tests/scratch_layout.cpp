// Dev scratch: exhaustive slot-layout and family-sign probe for I x gamma_star.
#include "leibhom/cohomology.hpp"

#include <cstdio>
#include <vector>

using namespace leibhom;

int main() {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}}) {
        LieAlgebra h = build_h(p, q);
        LeibnizSpec adj{&h, true};
        int n = h.n(), sod = h.so_dim();
        auto partial_idx = [&](int i) { return h.index_of.at({Label::Partial, i, 0}); };
        std::printf("== (%d,%d) ==\n", p, q);

        // layout: position of the I-slot (pi), position of the xi-slot (px),
        // remaining n-2 positions take the wedge in order.
        for (int pi = 0; pi < n; ++pi)
            for (int px = 0; px < n; ++px) {
                if (pi == px) continue;
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1}) {
                        Cochain F{MultiBasis{MultiBasis::Tensor, h.dim, n}, h.dim, {}};
                        for (int i = 1; i <= n; ++i)
                            for (int j = i + 1; j <= n; ++j) {
                                bool same_block = (j <= p) || (i > p);
                                Label l{same_block ? Label::Alpha : Label::Beta, i, j};
                                int so_idx = h.index_of.at(l);
                                int c = ((i + j) % 2) ? -1 : 1;
                                if (i > p) c *= s1;        // qq family
                                if (!same_block) c *= s2;  // beta family
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
                                    for (int m = 0; m < n; ++m) { // I-slot content
                                        std::vector<int> tuple(n, -1);
                                        tuple[pi] = sod + m;
                                        tuple[px] = so_idx;
                                        int w = 0;
                                        for (int t = 0; t < n; ++t)
                                            if (tuple[t] < 0) tuple[t] = perm[w++];
                                        Index r = F.dom.rank(tuple);
                                        F.set(r, sod + m, F.at(r, sod + m) + Rat(c * sign));
                                    }
                                } while (std::next_permutation(perm.begin(), perm.end()));
                            }
                        if (is_cocycle(adj, F))
                            std::printf("  COCYCLE: pi=%d px=%d s1=%d s2=%d\n", pi, px,
                                        s1, s2);
                    }
            }
    }
    std::printf("done\n");
    return 0;
}
