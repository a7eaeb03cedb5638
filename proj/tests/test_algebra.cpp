#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibhom/algebra.hpp"

using namespace leibhom;

namespace {

SparseVec unit(int i) { return SparseVec{{i, Rat(1)}}; }

} // namespace

TEST_CASE("basis layout and dimensions") {
    auto so30 = build_so(3, 0);
    CHECK(so30.dim == 3);
    for (auto& l : so30.labels) CHECK(l.kind == Label::Alpha);

    auto so22 = build_so(2, 2);
    CHECK(so22.dim == 6);
    std::vector<std::string> want{"a_1_2", "a_3_4", "b_1_3", "b_1_4", "b_2_3", "b_2_4"};
    for (int i = 0; i < 6; ++i) CHECK(so22.labels[i].str() == want[i]);

    auto so31 = build_so(3, 1);
    int alphas = 0, betas = 0;
    for (auto& l : so31.labels) (l.kind == Label::Alpha ? alphas : betas)++;
    CHECK(so31.dim == 6);
    CHECK(alphas == 3);
    CHECK(betas == 3);

    CHECK(build_h(2, 2).dim == 10);
    CHECK(build_h(3, 1).dim == 10);
    auto h40 = build_h(4, 0);
    CHECK(h40.dim == 10);
    for (auto& l : h40.labels) CHECK(l.kind != Label::Beta);

    for (auto [p, q] : {std::pair{4, 1}, {2, 3}, {0, 4}}) {
        auto so = build_so(p, q);
        auto h = build_h(p, q);
        int n = p + q;
        CHECK(so.dim == n * (n - 1) / 2);
        CHECK(h.dim == n * (n - 1) / 2 + n);
    }
}

TEST_CASE("structure constants: antisymmetry and jacobi, n <= 5 exhaustive") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {4, 0}, {3, 2}, {0, 5}}) {
        auto h = build_h(p, q);
        for (int a = 0; a < h.dim; ++a)
            for (int b = 0; b < h.dim; ++b) {
                SparseVec neg;
                for (auto& [u, c] : h.sc[b][a]) neg.emplace_back(u, -c);
                CHECK(h.sc[a][b] == neg);
            }
        for (int a = 0; a < h.dim; ++a)
            for (int b = a + 1; b < h.dim; ++b)
                for (int c = b + 1; c < h.dim; ++c) {
                    std::map<Index, Rat> acc;
                    axpy(acc, 1, h.bracket(unit(a), h.bracket(unit(b), unit(c))));
                    axpy(acc, 1, h.bracket(unit(b), h.bracket(unit(c), unit(a))));
                    axpy(acc, 1, h.bracket(unit(c), h.bracket(unit(a), unit(b))));
                    CHECK(from_map(acc).empty());
                }
    }
}

TEST_CASE("gradings are additive under the bracket") {
    auto h = build_h(3, 2);
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b)
            for (auto& [u, c] : h.sc[a][b]) {
                CHECK(h.weight((int)u) == h.weight(a) + h.weight(b));
                CHECK(h.parity((int)u) == (h.parity(a) ^ h.parity(b)));
            }
}

TEST_CASE("specific bracket values") {
    auto h = build_h(3, 1);
    int d1 = h.index_of.at({Label::Partial, 1, 0});
    int a12 = h.index_of.at({Label::Alpha, 1, 2});
    int d2 = h.index_of.at({Label::Partial, 2, 0});
    CHECK(h.sc[d1][a12] == unit(d2)); // [d_1, a_12] = d_2
}

TEST_CASE("ideal and quotient checks") {
    CHECK(check_ideal_and_quotient(build_h(2, 2)).pass);
    CHECK(check_ideal_and_quotient(build_h(3, 1)).pass);

    auto bad = build_h(2, 2);
    bad.sc[0][1] = unit(2); // corrupt [a_12, a_34]
    auto rep = check_ideal_and_quotient(bad);
    CHECK(!rep.pass);
    CHECK(rep.failure == IdealQuotientReport::QuotientMismatchFailure);

    auto bad2 = build_h(2, 2);
    int d1 = bad2.index_of.at({Label::Partial, 1, 0});
    bad2.sc[d1][bad2.index_of.at({Label::Partial, 2, 0})] = unit(0); // [d,d] != 0
    auto rep2 = check_ideal_and_quotient(bad2);
    CHECK(!rep2.pass);
    CHECK(rep2.failure == IdealQuotientReport::NotAnIdealFailure);
}

TEST_CASE("representations satisfy the homomorphism identity") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}}) {
        auto h = build_h(p, q);
        auto so = build_so(p, q);
        std::vector<Representation> reps;
        reps.push_back(adjoint_rep(h));
        reps.push_back(coadjoint_rep(h));
        reps.push_back(trivial_rep(h, 1));
        reps.push_back(restricted_rep(h, so, false));
        reps.push_back(restricted_rep(h, so, true));
        for (auto& r : reps) {
            const LieAlgebra& g = *r.acting;
            for (int x = 0; x < g.dim; ++x)
                for (int y = 0; y < g.dim; ++y)
                    for (int m = 0; m < r.module_dim; ++m) {
                        SparseVec lhs;
                        {
                            std::map<Index, Rat> acc;
                            for (auto& [u, c] : g.sc[x][y])
                                axpy(acc, c, r.act[(int)u][m]);
                            lhs = from_map(acc);
                        }
                        std::map<Index, Rat> acc;
                        axpy(acc, 1, r.apply(x, r.act[y][m]));
                        axpy(acc, -1, r.apply(y, r.act[x][m]));
                        CHECK(lhs == from_map(acc));
                    }
        }
    }
}

TEST_CASE("coadjoint is minus the transpose of adjoint") {
    auto h = build_h(2, 2);
    auto ad = adjoint_rep(h);
    auto co = coadjoint_rep(h);
    for (int g = 0; g < h.dim; ++g)
        for (int x = 0; x < h.dim; ++x)
            for (auto& [u, c] : ad.act[g][x]) {
                bool found = false;
                for (auto& [w, d] : co.act[g][u])
                    if (w == x) {
                        CHECK(d == -c);
                        found = true;
                    }
                CHECK(found);
            }
}

TEST_CASE("restricted action examples and trivial representation") {
    auto so3 = build_so(3, 0);
    auto adj = adjoint_rep(so3);
    // act(a_12) a_13 = [a_12, a_13] = -a_23
    int a12 = so3.index_of.at({Label::Alpha, 1, 2});
    int a13 = so3.index_of.at({Label::Alpha, 1, 3});
    int a23 = so3.index_of.at({Label::Alpha, 2, 3});
    CHECK(adj.act[a12][a13] == SparseVec{{a23, Rat(-1)}});

    auto h = build_h(2, 2);
    auto so = build_so(2, 2);
    auto tr = restricted_rep(h, so, true);
    // act(a_12) d_1 = [a_12, d_1] = -d_2
    CHECK(tr.act[so.index_of.at({Label::Alpha, 1, 2})][0] == SparseVec{{1, Rat(-1)}});

    auto t = trivial_rep(h, 1);
    for (auto& row : t.act)
        for (auto& col : row) CHECK(col.empty());
}

TEST_CASE("algebra json dump shape") {
    auto so = build_so(1, 1);
    auto s = algebra_dump_json(so);
    CHECK(s.find("\"labels\"") != std::string::npos);
    CHECK(s.find("b_1_2") != std::string::npos);
}
