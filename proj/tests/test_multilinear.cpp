#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibhom/invariants.hpp"

using namespace leibhom;

TEST_CASE("basis enumeration sizes and ranks") {
    MultiBasis w{MultiBasis::Wedge, 6, 3};
    CHECK(w.size() == 20);
    for (Index r = 0; r < w.size(); ++r) {
        auto t = w.unrank(r);
        CHECK((int)t.size() == 3);
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
        CHECK(w.rank(t) == r);
    }
    // lex order spot checks
    CHECK(w.unrank(0) == std::vector<int>{0, 1, 2});
    CHECK(w.unrank(1) == std::vector<int>{0, 1, 3});
    CHECK(w.unrank(19) == std::vector<int>{3, 4, 5});

    MultiBasis t{MultiBasis::Tensor, 4, 3};
    CHECK(t.size() == 64);
    CHECK(t.rank({1, 2, 3}) == 1 * 16 + 2 * 4 + 3);
    CHECK(t.unrank(27) == std::vector<int>{1, 2, 3});

    MultiBasis m{MultiBasis::MixedTensorWedge, 5, 2};
    CHECK(m.size() == 5 * 10);
    for (Index r = 0; r < m.size(); ++r) CHECK(m.rank(m.unrank(r)) == r);
}

TEST_CASE("wedge sorting signs and repeats") {
    MultiBasis w{MultiBasis::Wedge, 5, 3};
    Index r;
    int sign;
    REQUIRE(w.rank_with_sign({2, 0, 1}, r, sign));
    CHECK(r == w.rank({0, 1, 2}));
    CHECK(sign == 1); // cyclic
    REQUIRE(w.rank_with_sign({1, 0, 2}, r, sign));
    CHECK(sign == -1);
    CHECK(!w.rank_with_sign({1, 1, 2}, r, sign));
}

TEST_CASE("action on wedges, spec values") {
    auto h = build_h(2, 2);
    auto so = build_so(2, 2);
    auto tr = restricted_rep(h, so, true);
    int a12 = so.index_of.at({Label::Alpha, 1, 2});

    MultiBasis w0{MultiBasis::Wedge, 4, 0};
    CHECK(action_on_wedge(tr, a12, w0, 0).empty());

    MultiBasis w2{MultiBasis::Wedge, 4, 2};
    // a_12 . (d_1 ^ d_2) = 0
    CHECK(action_on_wedge(tr, a12, w2, w2.rank({0, 1})).empty());
    // a_12 . (d_1 ^ d_3) = -d_2 ^ d_3
    auto v = action_on_wedge(tr, a12, w2, w2.rank({0, 2}));
    CHECK(v == SparseVec{{w2.rank({1, 2}), Rat(-1)}});
}

TEST_CASE("induced action on Hom, zero and elementary cases") {
    auto h = build_h(2, 2);
    auto so = build_so(2, 2);
    int sod = h.so_dim();
    int a12 = so.index_of.at({Label::Alpha, 1, 2});

    // trivial codomain, k = 0: always zero
    auto triv = trivial_rep(so, 1);
    Cochain f0{MultiBasis{MultiBasis::Wedge, 4, 0}, 1, {{0, Rat(1)}}};
    CHECK(induced_action_on_hom(triv, h, a12, sod, f0).is_zero_cochain());

    // I is so(2,2)-invariant under the induced action
    auto full = restricted_rep(h, so, false);
    auto I = make_named("I", h);
    for (int g = 0; g < so.dim; ++g)
        CHECK(induced_action_on_hom(full, h, g, sod, I.realization).is_zero_cochain());

    // elementary cochain f = dx^1 ⊗ d_1: (a_12 . f) is supported on the dx^2 slot
    Cochain e{MultiBasis{MultiBasis::Wedge, 4, 1}, h.dim, {}};
    e.set(0, sod + 0, 1);
    auto moved = induced_action_on_hom(full, h, a12, sod, e);
    // by hand: (g.f)(z) = [g, f(z)] + f([z,g]);
    // f([d_2,a_12]) = f(-d_1) = -d_1 at slot z=d_2, and [a_12, d_1] = -d_2 at z=d_1
    Cochain expect{e.dom, h.dim, {}};
    expect.set(1, sod + 0, -1);
    expect.set(0, sod + 1, -1);
    CHECK(moved == expect);
}

TEST_CASE("eq-7/eq-8 actions compose as a Lie action") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}}) {
        auto h = build_h(p, q);
        auto so = build_so(p, q);
        auto full = restricted_rep(h, so, false);
        int sod = h.so_dim();
        MultiBasis dom{MultiBasis::Wedge, h.n(), 2};
        // spanning set: all elementary cochains
        for (Index z = 0; z < dom.size(); ++z)
            for (int v = 0; v < h.dim; v += 3) {
                Cochain f{dom, h.dim, {}};
                f.set(z, v, 1);
                for (int g1 = 0; g1 < so.dim; ++g1)
                    for (int g2 = 0; g2 < so.dim; ++g2) {
                        auto lhs1 = induced_action_on_hom(
                            full, h, g1, sod, induced_action_on_hom(full, h, g2, sod, f));
                        auto lhs2 = induced_action_on_hom(
                            full, h, g2, sod, induced_action_on_hom(full, h, g1, sod, f));
                        std::map<Index, Rat> acc;
                        axpy(acc, 1, lhs1.coeffs);
                        axpy(acc, -1, lhs2.coeffs);
                        // [g1,g2] . f
                        std::map<Index, Rat> rhs;
                        for (auto& [u, c] : so.sc[g1][g2])
                            axpy(rhs, c,
                                 induced_action_on_hom(full, h, (int)u, sod, f).coeffs);
                        CHECK(from_map(acc) == from_map(rhs));
                    }
            }
    }
}

TEST_CASE("psi: bijective, named images, equivariance") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
        auto h = build_h(p, q);
        auto so = build_so(p, q);
        int sod = h.so_dim();
        int qsign = (q % 2) ? -1 : 1;

        // psi(zero) = 0, psi^{-1} psi = id on a spanning set
        for (int k = 0; k <= h.n(); ++k) {
            MultiBasis dom{MultiBasis::Wedge, h.n(), k};
            Cochain zero{dom, h.dim, {}};
            CHECK(psi(h, zero).is_zero_cochain());
            for (Index z = 0; z < dom.size(); ++z) {
                Cochain f{dom, h.dim, {}};
                f.set(z, (int)(z % h.dim), Rat(3, 2));
                CHECK(psi_inverse(h, psi(h, f)) == f);
            }
        }

        // named images: psi(I) = I_pq, psi(rho) = rho_pq,
        // psi(beta) = (-1)^q beta_pq, psi(gamma) = (-1)^q gamma_pq
        CHECK(psi(h, make_named("I", h).realization) ==
              make_named("I_pq", h).realization);
        CHECK(psi(h, make_named("rho", h).realization) ==
              make_named("rho_pq", h).realization);
        CHECK(psi(h, make_named("beta", h).realization) ==
              scale(make_named("beta_pq", h).realization, qsign));
        CHECK(psi(h, make_named("gamma", h).realization) ==
              scale(make_named("gamma_pq", h).realization, qsign));

        // so(p,q)-equivariance on full bases, k <= n
        auto full = restricted_rep(h, so, false);
        for (int k = 0; k <= h.n(); ++k) {
            MultiBasis dom{MultiBasis::Wedge, h.n(), k};
            for (Index z = 0; z < dom.size(); ++z)
                for (int v = 0; v < h.dim; v += 2) {
                    Cochain f{dom, h.dim, {}};
                    f.set(z, v, 1);
                    for (int g = 0; g < so.dim; ++g) {
                        auto lhs = psi(h, induced_action_on_hom(full, h, g, sod, f));
                        auto rhs = action_on_wedge_tensor(full, h, g, sod, psi(h, f));
                        CHECK(lhs == rhs);
                    }
                }
        }
    }
}
