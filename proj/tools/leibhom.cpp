// Command-line surface: algebra dumps, invariant tables, cohomology runs and
// the full verification battery.

#include "leibhom/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace leibhom;

namespace {

struct CheckList {
    std::vector<TheoremCheck> checks;
    bool all_pass = true;

    void add(const std::string& name, const std::string& expected, const std::string& got) {
        TheoremCheck c;
        c.name = name;
        c.expected = expected;
        c.got = got;
        c.pass = expected == got;
        all_pass = all_pass && c.pass;
        std::printf("  [%s] %-58s expected %-14s got %s\n", c.pass ? "ok" : "FAIL",
                    name.c_str(), expected.c_str(), got.c_str());
        std::fflush(stdout);
        checks.push_back(std::move(c));
    }
    void add_bool(const std::string& name, bool pass) { add(name, "true", pass ? "true" : "false"); }
};

std::string dims_str(const std::vector<Index>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
}

// ---------------------------------------------------------------- verify-paper

void verify_structure(const LieAlgebra& h, const LieAlgebra& so, CheckList& out) {
    int n = h.n();
    out.add("dim so(p,q)", std::to_string(n * (n - 1) / 2), std::to_string(so.dim));
    out.add("dim h(p,q)", std::to_string(n * (n - 1) / 2 + n), std::to_string(h.dim));

    bool antisym = true, jacobi = true, graded = true;
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b) {
            SparseVec neg;
            for (auto& [u, c] : h.sc[b][a]) neg.emplace_back(u, -c);
            antisym = antisym && h.sc[a][b] == neg;
            for (auto& [u, c] : h.sc[a][b])
                graded = graded && h.weight((int)u) == h.weight(a) + h.weight(b) &&
                         h.parity((int)u) == (h.parity(a) ^ h.parity(b));
        }
    auto unit = [](int i) { return SparseVec{{i, Rat(1)}}; };
    for (int a = 0; a < h.dim && jacobi; ++a)
        for (int b = a + 1; b < h.dim && jacobi; ++b)
            for (int c = b + 1; c < h.dim && jacobi; ++c) {
                std::map<Index, Rat> acc;
                axpy(acc, 1, h.bracket(unit(a), h.bracket(unit(b), unit(c))));
                axpy(acc, 1, h.bracket(unit(b), h.bracket(unit(c), unit(a))));
                axpy(acc, 1, h.bracket(unit(c), h.bracket(unit(a), unit(b))));
                jacobi = from_map(acc).empty();
            }
    out.add_bool("structure constants antisymmetric", antisym);
    out.add_bool("structure constants satisfy jacobi (exhaustive)", jacobi);
    out.add_bool("bracket respects weight and parity gradings", graded);
    auto iq = check_ideal_and_quotient(h);
    out.add_bool("translations form an abelian ideal with so quotient", iq.pass);
}

void verify_invariant_tables(const LieAlgebra& h, const LieAlgebra& so, CheckList& out) {
    int n = h.n();
    // wedge powers of the translation module
    {
        std::vector<Index> dims, expect;
        for (int k = 0; k <= n; ++k) {
            dims.push_back((Index)invariant_subspace(h, so, InvariantSpace::WedgeI, k).size());
            expect.push_back(k == 0 || k == n ? 1 : 0);
        }
        out.add("invariants of wedge powers of translations", dims_str(expect),
                dims_str(dims));
    }
    auto expected_dim = [&](int k) -> Index {
        if (n == 4) return (k == 1 || k == 3) ? 1 : (k == 2 ? 2 : 0);
        return (k == 1 || k == 2 || k == n - 2 || k == n - 1) ? 1 : 0;
    };
    for (auto sp : {InvariantSpace::WedgeITensorH, InvariantSpace::HomWedgeIToH}) {
        const char* label = sp == InvariantSpace::WedgeITensorH
                                ? "invariants of wedge \xe2\x8a\x97 h"
                                : "invariants of Hom(wedge, h)";
        auto table = invariant_table(h, so, sp);
        std::vector<Index> dims, expect;
        bool matches = true;
        for (auto& row : table) {
            dims.push_back(row.dim);
            expect.push_back(expected_dim(row.k));
            matches = matches && row.match_ok;
        }
        out.add(std::string(label) + " dimensions", dims_str(expect), dims_str(dims));
        out.add_bool(std::string(label) + " named-class membership", matches);
    }
}

void verify_psi(const LieAlgebra& h, const LieAlgebra& so, CheckList& out) {
    int n = h.n(), sod = h.so_dim();
    int qsign = (h.q % 2) ? -1 : 1;
    Representation full = restricted_rep(h, so, false);
    bool inverse_ok = true, equivariant = true;
    for (int k = 0; k <= n; ++k) {
        MultiBasis dom{MultiBasis::Wedge, n, k};
        for (Index z = 0; z < dom.size(); ++z)
            for (int v = 0; v < h.dim; ++v) {
                Cochain f{dom, h.dim, {}};
                f.set(z, v, 1);
                inverse_ok = inverse_ok && psi_inverse(h, psi(h, f)) == f;
                for (int g = 0; g < so.dim && equivariant; ++g) {
                    auto lhs = psi(h, induced_action_on_hom(full, h, g, sod, f));
                    auto rhs = action_on_wedge_tensor(full, h, g, sod, psi(h, f));
                    equivariant = lhs == rhs;
                }
            }
    }
    out.add_bool("psi is invertible on full bases (k <= n)", inverse_ok);
    out.add_bool("psi is so(p,q)-equivariant on full bases", equivariant);
    out.add_bool("psi(I) = I_pq", psi(h, make_named("I", h).realization) ==
                                      make_named("I_pq", h).realization);
    out.add_bool("psi(rho) = rho_pq", psi(h, make_named("rho", h).realization) ==
                                          make_named("rho_pq", h).realization);
    out.add_bool("psi(beta) = (-1)^q beta_pq",
                 psi(h, make_named("beta", h).realization) ==
                     scale(make_named("beta_pq", h).realization, qsign));
    out.add_bool("psi(gamma) = (-1)^q gamma_pq",
                 psi(h, make_named("gamma", h).realization) ==
                     scale(make_named("gamma_pq", h).realization, qsign));
}

void verify_delta_values(const LieAlgebra& h, CheckList& out) {
    int n = h.n();
    CESpec amb = ce_translations_on_h(h);
    out.add_bool("delta I = 0", ce_delta(amb, make_named("I", h).realization).is_zero_cochain());
    out.add_bool("delta rho = 0",
                 ce_delta(amb, make_named("rho", h).realization).is_zero_cochain());
    out.add_bool("delta beta = 0",
                 ce_delta(amb, make_named("beta", h).realization).is_zero_cochain());
    out.add_bool("delta gamma = -(n-1) beta",
                 ce_delta(amb, make_named("gamma", h).realization) ==
                     scale(make_named("beta", h).realization, -(n - 1)));
    out.add_bool("boundary I_pq = 0",
                 homology_delta(h, make_named("I_pq", h).realization).is_zero_cochain());
    out.add_bool("boundary rho_pq = (n-1) I_pq",
                 homology_delta(h, make_named("rho_pq", h).realization) ==
                     scale(make_named("I_pq", h).realization, n - 1));
    out.add_bool("boundary beta_pq = 0",
                 homology_delta(h, make_named("beta_pq", h).realization).is_zero_cochain());
    out.add_bool("boundary gamma_pq = 0",
                 homology_delta(h, make_named("gamma_pq", h).realization).is_zero_cochain());
}

void verify_lie_theorems(const LieAlgebra& h, const LieAlgebra& so, CheckList& out) {
    int n = h.n();
    int top = std::min(10, h.dim);
    auto bso = lie_betti(so, top);
    auto bh = lie_betti(h, top);
    std::vector<Index> expect;
    for (int k = 0; k <= top; ++k)
        expect.push_back(bso[k] + (k >= n ? bso[k - n] : 0));
    out.add("betti(h) = betti(so) * (1 + t^n), degrees 0.." + std::to_string(top),
            dims_str(expect), dims_str(bh));

    auto cx = invariant_homology_complex(h, so);
    auto dims = small_complex_dims(cx);
    std::vector<Index> hexpect(n + 1, 0);
    hexpect[n - 2] = hexpect[n - 1] = 1;
    out.add("invariant homology dims", dims_str(hexpect), dims_str(dims));
    auto kn1 = invariant_subspace(h, so, InvariantSpace::WedgeITensorH, n - 1);
    Rat s;
    out.add_bool("degree n-1 homology class is beta_pq up to scalar",
                 kn1.size() == 1 &&
                     sv_proportional(kn1[0], make_named("beta_pq", h).realization.coeffs, s));
    bool gamma_ok = homology_delta(h, make_named("gamma_pq", h).realization)
                        .is_zero_cochain();
    out.add_bool("degree n-2 homology class is gamma_pq up to scalar", gamma_ok);

    for (int m = 0; m <= 1; ++m) {
        auto r = hr_dims(h, so, m, bso);
        out.add("HR^" + std::to_string(m) + " direct = H^{m+3}(so) + H^{m+3-n}(so)",
                std::to_string(r.rhs), std::to_string(r.dim));
        bool reps_ok = true;
        RelativeComplex cur = build_relative_degree(RelKind::CR, h, m);
        RelativeComplex nxt = build_relative_degree(RelKind::CR, h, m + 1);
        SparseMatrix d = quotient_matrix(cur, nxt);
        for (auto& repv : r.representatives) reps_ok = reps_ok && d.apply(repv).empty();
        out.add_bool("HR^" + std::to_string(m) + " representatives re-verify as cocycles",
                     reps_ok);
    }
}

void verify_leibniz(const LieAlgebra& h, uint64_t seed, CheckList& out) {
    int n = h.n();
    LeibnizSpec adj{&h, true};
    LeibnizSpec triv{&h, false};

    auto rep = leibniz_report(h, true, 3, RankMode::Exact, seed);
    std::vector<Index> dims, expect;
    for (auto& d : rep.degrees) {
        dims.push_back(d.cohomology);
        expect.push_back(predicted_hl_dimension(h.p, h.q, d.k));
    }
    out.add("HL^k(h;h) for k = 0..3", dims_str(expect), dims_str(dims));

    out.add_bool("HL^1 representative: I is a cocycle", is_cocycle(adj, leibniz_I(h)));
    out.add_bool("HL^1 representative: I is not a coboundary",
                 !is_coboundary(adj, leibniz_I(h), seed).yes);
    out.add_bool("HL^2 representative: rho is a cocycle", is_cocycle(adj, leibniz_rho(h)));
    out.add_bool("HL^2 representative: rho is not a coboundary",
                 !is_coboundary(adj, leibniz_rho(h), seed).yes);

    Cochain gs = make_named("gamma_star_pq", h).realization;
    out.add_bool("gamma_star is a cocycle (trivial coefficients)", is_cocycle(triv, gs));
    out.add_bool("gamma_star is so(p,q)-invariant",
                 verify_invariance(make_named("gamma_star_pq", h), h, false).pass);
    out.add_bool("gamma_star moved by translations is a coboundary",
                 translation_moves_are_coboundaries(h, gs, seed));

    Cochain cn = hl_class_rep(h, 1, 1);
    out.add_bool("degree-n class (I against gamma_star) is a cocycle",
                 is_cocycle(adj, cn));
    Cochain cn1 = hl_class_rep(h, 2, 1);
    out.add_bool("degree-(n+1) class (rho against gamma_star) is a cocycle",
                 is_cocycle(adj, cn1));
    if (n == 4) {
        out.add_bool("degree-n class is not a coboundary",
                     !is_coboundary(adj, cn, seed).yes);
        out.add_bool("degree-(n+1) class is not a coboundary",
                     !is_coboundary(adj, cn1, seed).yes);
    }
    Cochain c2n1 = hl_class_rep(h, 1, 2);
    out.add_bool("degree-(2n-1) class is a nonzero cocycle",
                 !c2n1.is_zero_cochain() && is_cocycle(adj, c2n1));
}

int run_verify(int p, int q, uint64_t seed, const std::string& out_path) {
    if (p + q < 4) {
        std::fprintf(stderr, "verify-paper needs p+q >= 4\n");
        return 1;
    }
    std::printf("verify-paper p=%d q=%d seed=%llu\n", p, q, (unsigned long long)seed);
    LieAlgebra h = build_h(p, q);
    LieAlgebra so = build_so(p, q);
    CheckList cl;
    verify_structure(h, so, cl);
    verify_invariant_tables(h, so, cl);
    verify_psi(h, so, cl);
    verify_delta_values(h, cl);
    verify_lie_theorems(h, so, cl);
    verify_leibniz(h, seed, cl);

    CohomologyReport rep;
    rep.complex_id = "verify-paper";
    rep.checks = cl.checks;
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["seed"] = seed;
    j["report"] = report_json(rep);
    j["pass"] = cl.all_pass;
    if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
    std::printf("verify-paper: %s\n", cl.all_pass ? "all checks passed" : "FAILURES");
    return cl.all_pass ? 0 : 2;
}

// ---------------------------------------------------------------- cohomology

int run_cohomology(int p, int q, const std::string& complex_sel, int max_degree,
                   const std::string& mode_s, uint64_t seed, const std::string& format,
                   const std::string& out_path, const std::string& dump_dir) {
    LieAlgebra h = build_h(p, q);
    LieAlgebra so = build_so(p, q);
    RankMode mode = mode_s == "probabilistic" ? RankMode::Probabilistic : RankMode::Exact;
    CohomologyReport rep;
    rep.complex_id = complex_sel;

    auto from_matrices = [&](std::function<SparseMatrix(int)> mat, std::function<Index(int)> dim,
                             int top) {
        std::vector<Index> ranks(max_degree + 1, 0);
        std::vector<SparseMatrix> mats;
        for (int k = 0; k <= max_degree; ++k) {
            if (k >= top) {
                mats.emplace_back();
                continue;
            }
            SparseMatrix m = mat(k);
            ranks[k] = rank_kernel(m, false, mode, seed).rank;
            mats.push_back(std::move(m));
        }
        for (int k = 0; k <= max_degree; ++k) {
            DegreeRecord d;
            d.k = k;
            d.dim = k <= top ? dim(k) : 0;
            d.kernel = d.dim - (k < top ? ranks[k] : 0);
            d.image_in = k > 0 && k - 1 < top ? ranks[k - 1] : 0;
            d.cohomology = d.kernel - d.image_in;
            d.mode = mode;
            rep.degrees.push_back(d);
        }
        if (!dump_dir.empty()) {
            std::filesystem::create_directories(dump_dir);
            for (int k = 0; k < (int)mats.size(); ++k) {
                if (mats[k].rows == 0) continue;
                std::ofstream os(dump_dir + "/d" + std::to_string(k) + ".mtx");
                write_matrix_market(mats[k], os);
            }
        }
    };

    if (complex_sel == "leibniz-adjoint" || complex_sel == "leibniz-trivial") {
        rep = leibniz_report(h, complex_sel == "leibniz-adjoint", max_degree, mode, seed);
        if (!dump_dir.empty()) {
            std::filesystem::create_directories(dump_dir);
            LeibnizSpec s{&h, complex_sel == "leibniz-adjoint"};
            for (int k = 0; k <= max_degree; ++k) {
                if (leibniz_space_dim(s, k + 1) >= kProbabilisticRowThreshold) break;
                SparseMatrix m = leibniz_matrix(s, k);
                std::ofstream os(dump_dir + "/d" + std::to_string(k) + ".mtx");
                write_matrix_market(m, os);
            }
        }
    } else if (complex_sel == "ce-trivial" || complex_sel == "ce-adjoint" ||
               complex_sel == "ce-coadjoint") {
        CESpec s = complex_sel == "ce-trivial"
                       ? ce_trivial(h)
                       : (complex_sel == "ce-adjoint" ? ce_adjoint(h) : ce_coadjoint(h));
        from_matrices([&](int k) { return ce_matrix(s, k); },
                      [&](int k) { return ce_space_dim(s, k); }, h.dim);
    } else if (complex_sel == "cr") {
        from_matrices(
            [&](int k) {
                auto a = build_relative_degree(RelKind::CR, h, k);
                auto b = build_relative_degree(RelKind::CR, h, k + 1);
                return quotient_matrix(a, b);
            },
            [&](int k) { return build_relative_degree(RelKind::CR, h, k).quotient_dim(); },
            max_degree + 1);
    } else if (complex_sel == "invariant-hom") {
        auto cx = invariant_hom_complex(h, so);
        auto dims = small_complex_dims(cx);
        for (int k = 0; k <= std::min<int>(max_degree, (int)dims.size() - 1); ++k) {
            DegreeRecord d;
            d.k = k;
            d.dim = (Index)cx.bases[k].size();
            d.cohomology = dims[k];
            d.kernel = 0;
            d.image_in = 0;
            rep.degrees.push_back(d);
        }
    } else if (complex_sel == "invariant-homology") {
        auto cx = invariant_homology_complex(h, so);
        auto dims = small_complex_dims(cx);
        for (int k = 0; k <= std::min<int>(max_degree, (int)dims.size() - 1); ++k) {
            DegreeRecord d;
            d.k = k;
            d.dim = (Index)cx.bases[k].size();
            d.cohomology = dims[k];
            rep.degrees.push_back(d);
        }
    } else {
        std::fprintf(stderr, "unknown complex selector: %s\n", complex_sel.c_str());
        return 1;
    }

    std::string text =
        format == "csv" ? report_csv(rep) : report_json(rep).dump(2) + "\n";
    if (out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_file(out_path, text);
    return 0;
}

int run_invariants(int p, int q, const std::string& emit) {
    LieAlgebra h = build_h(p, q);
    LieAlgebra so = build_so(p, q);
    Json j;
    j["p"] = p;
    j["q"] = q;
    const char* names[] = {"wedge", "wedge_tensor_h", "hom_wedge_h"};
    InvariantSpace spaces[] = {InvariantSpace::WedgeI, InvariantSpace::WedgeITensorH,
                               InvariantSpace::HomWedgeIToH};
    for (int s = 0; s < 3; ++s) {
        Json rows = Json::array();
        for (auto& row : invariant_table(h, so, spaces[s])) {
            Json r;
            r["k"] = row.k;
            r["dim"] = row.dim;
            r["matched"] = row.matched;
            r["match_ok"] = row.match_ok;
            rows.push_back(r);
        }
        j[names[s]] = rows;
    }
    std::string text = j.dump(2) + "\n";
    if (emit.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_file(emit, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (co)homology computations for affine indefinite orthogonal Lie algebras"};
    app.require_subcommand(1);

    int p = 2, q = 2;
    uint64_t seed = kDefaultSeed;
    std::string out_path, emit_path, dump_dir;
    std::string complex_sel = "leibniz-adjoint", mode_s = "exact", format = "json";
    std::string which = "h";
    int max_degree = 2;

    auto add_pq = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "first block size")->required();
        cmd->add_option("--q", q, "second block size")->required();
    };

    CLI::App* alg = app.add_subcommand("algebra", "construct an algebra and dump it as JSON");
    add_pq(alg);
    alg->add_option("--which", which)->check(CLI::IsMember({"so", "h"}));
    alg->add_option("--out", out_path);

    CLI::App* inv = app.add_subcommand("invariants", "invariant dimension tables");
    add_pq(inv);
    inv->add_option("--emit", emit_path);

    CLI::App* coh = app.add_subcommand("cohomology", "cohomology dimensions of a complex");
    add_pq(coh);
    coh->add_option("--complex", complex_sel)
        ->check(CLI::IsMember({"ce-trivial", "ce-adjoint", "ce-coadjoint",
                               "leibniz-adjoint", "leibniz-trivial", "cr",
                               "invariant-hom", "invariant-homology"}));
    coh->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    coh->add_option("--mode", mode_s)->check(CLI::IsMember({"exact", "probabilistic"}));
    coh->add_option("--seed", seed);
    coh->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    coh->add_option("--out", out_path);
    coh->add_option("--dump-matrices", dump_dir);

    CLI::App* ver = app.add_subcommand("verify-paper", "run the full verification battery");
    add_pq(ver);
    ver->add_option("--seed", seed);
    ver->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (p < 0 || q < 0 || p + q < 1) {
        std::fprintf(stderr, "config error: need p, q >= 0 and p + q >= 1\n");
        return 1;
    }

    try {
        if (alg->parsed()) {
            LieAlgebra a = which == "so" ? build_so(p, q) : build_h(p, q);
            std::string text = algebra_dump_json(a);
            if (out_path.empty())
                std::fputs(text.c_str(), stdout);
            else
                write_file(out_path, text);
            return 0;
        }
        if (inv->parsed()) return run_invariants(p, q, emit_path);
        if (coh->parsed())
            return run_cohomology(p, q, complex_sel, max_degree, mode_s, seed, format,
                                  out_path, dump_dir);
        if (ver->parsed()) return run_verify(p, q, seed, out_path);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
