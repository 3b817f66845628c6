#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctw/catalog.hpp"
#include "ctw/characters.hpp"
#include "ctw/curvature.hpp"
#include "ctw/graphs.hpp"
#include "ctw/group_ring.hpp"
#include "ctw/io.hpp"
#include "ctw/log.hpp"
#include "ctw/search.hpp"

namespace {

using ctw::DiagCurvature;
using ctw::Graph;
using ctw::Rational;
using ctw::SymMatrix;
using ctw::io::json;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;  // well-formed input failing the mathematics
constexpr int kExitInput = 2;     // malformed input / bad arguments

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        ctw::io::save_file(out_path, j);
}

json phi_doc(const ctw::PhiFunction& phi, double theta) {
    const ctw::FieldTable& f = *phi.field;
    ctw::GroupFunction<double> gf(ctw::FinAbelianGroup::additive_of_field(f), phi.values);
    auto rep = ctw::hopf_verify(gf, 1e-9);
    if (!rep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
    auto s = ctw::phi_to_matrix(gf);
    auto mrep = ctw::verify_basic(s, 1e-9);
    if (!mrep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
    json meta{{"construction", phi.construction},
              {"q", f.q()},
              {"field", f.description()},
              {"char_order", phi.char_order},
              {"c", json::array({phi.c.real(), phi.c.imag()})},
              {"jprime", {{"conductor", phi.jprime.conductor()},
                          {"coords", phi.jprime.coords()}}},
              {"hat_theta", rep.hat_theta}};
    return ctw::io::solution_to_json(s, theta, std::move(meta));
}

json srg_doc(const Graph& g, const std::string& family, json params) {
    auto sol = ctw::srg_to_solution(g);
    auto rep = ctw::verify_basic(sol.S, 0.0);
    if (!rep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
    json meta{{"construction", family},
              {"params", std::move(params)},
              {"srg", json::array({sol.params.n, sol.params.r, sol.params.lambda, sol.params.mu})},
              {"hat_theta", rep.hat_theta}};
    return ctw::io::solution_to_json(sol.S, sol.theta, std::move(meta));
}

int cmd_construct(const std::string& family, int m, int l, int q, int variant, int k,
                  const std::string& rho_sq, const std::string& out_path) {
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) throw InputError("construct --family " + family + ": " + what);
    };
    json doc;
    if (family == "disjoint-complete") {
        need(m >= 1 && l >= 2, "requires --m >= 1 and --l >= 2");
        doc = srg_doc(ctw::disjoint_complete(m, l), family, json::array({m, l}));
    } else if (family == "kneser2") {
        need(m >= 4, "requires --m >= 4");
        doc = srg_doc(ctw::kneser2(m), family, json::array({m}));
    } else if (family == "rook") {
        need(m >= 2, "requires --m >= 2");
        doc = srg_doc(ctw::rook(m), family, json::array({m}));
    } else if (family == "paley") {
        need(q >= 5, "requires --q >= 5 with q = 1 mod 4");
        doc = srg_doc(ctw::paley_graph(q), family, json::array({q}));
    } else if (family == "gq-symplectic") {
        need(q >= 2, "requires --q >= 2");
        doc = srg_doc(ctw::gq_symplectic(q), family, json::array({q}));
    } else if (family == "pds") {
        need(q >= 2 && l >= 1, "requires --q >= 2 and --l >= 1");
        doc = srg_doc(ctw::pds_subgroups(q, l), family, json::array({q, l}));
    } else if (family == "composite") {
        need(l >= 2 && m >= 2, "requires --l >= 2 and --m >= 2");
        need(variant >= 1 && variant <= 3, "requires --variant 1|2|3");
        auto cs = ctw::composite_solution(l, m, variant);
        auto rep = ctw::hopf_verify(cs.phi, 0.0);
        if (!rep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
        auto s = ctw::phi_to_matrix(cs.phi);
        auto mrep = ctw::verify_basic(s, 0.0);
        if (!mrep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
        json meta{{"construction", "composite"},
                  {"params", json::array({l, m, variant})},
                  {"s", cs.s.str()},
                  {"t", cs.t.str()},
                  {"hat_theta", mrep.hat_theta}};
        doc = ctw::io::solution_to_json(s, cs.theta, std::move(meta));
    } else if (family == "cubic" || family == "quartic" || family == "octic") {
        need(q >= 4, "requires --q (prime power)");
        ctw::FieldTable f = ctw::FieldTable::make(q);
        if (family == "cubic") {
            auto [phi, theta] = ctw::cubic_solution(f);
            doc = phi_doc(phi, theta);
        } else if (family == "quartic") {
            doc = phi_doc(ctw::quartic_solution(f), 0.0);
        } else {
            doc = phi_doc(ctw::octic_solution(f), 0.0);
        }
    } else if (family == "sphere-product") {
        need(k >= 2 && l >= 2, "requires --k >= 2 and --l >= 2");
        Rational rs = rho_sq.empty() ? Rational(1) : Rational::parse(rho_sq);
        need(rs > Rational(0), "requires --rho-sq > 0");
        auto r = ctw::sphere_product_tensor<Rational>(k, l, rs);
        int n = k + l;
        Rational theta = ctw::scalar_curvature(r) / Rational(n);
        Rational r0 = theta / Rational(n - 1);
        SymMatrix<Rational> s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.set(i, j, r.at(i, j) - r0);
        auto rep = ctw::verify_basic(s, 0.0);
        if (!rep.is_solution) throw std::runtime_error("construct: verification failed (internal)");
        json meta{{"construction", "sphere-product"},
                  {"params", json::array({k, l})},
                  {"rho_sq", rs.str()},
                  {"hat_theta", rep.hat_theta}};
        doc = ctw::io::solution_to_json(s, theta, std::move(meta));
    } else {
        throw InputError("construct: unknown family '" + family + "'");
    }
    emit(doc, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& path, double tol) {
    auto doc = ctw::io::solution_from_json(ctw::io::load_file(path));
    json rep_json;
    bool ok;
    if (doc.rational) {
        auto rep = ctw::verify_basic(doc.rs, 0.0);
        ok = rep.is_solution && (doc.rs.is_zero() || rep.theta == doc.rtheta);
        rep_json = {{"n", doc.rs.n()},
                    {"arithmetic", "rational"},
                    {"is_solution", rep.is_solution},
                    {"theta", rep.theta.str()},
                    {"theta_matches_file", rep.theta == doc.rtheta || doc.rs.is_zero()},
                    {"trace_d", rep.trace_d.str()},
                    {"hat_theta", rep.hat_theta},
                    {"max_residual", rep.max_residual}};
    } else {
        auto rep = ctw::verify_basic(doc.fs, tol);
        bool theta_match =
            std::abs(rep.theta - doc.ftheta) <= tol * (1.0 + std::abs(doc.ftheta));
        ok = rep.is_solution && (theta_match || doc.fs.is_zero());
        rep_json = {{"n", doc.fs.n()},
                    {"arithmetic", "float"},
                    {"is_solution", rep.is_solution},
                    {"theta", rep.theta},
                    {"theta_matches_file", theta_match || doc.fs.is_zero()},
                    {"trace_d", ctw::detail::as_double(rep.trace_d)},
                    {"hat_theta", rep.hat_theta},
                    {"max_residual", rep.max_residual}};
    }
    std::cout << rep_json.dump(2) << "\n";
    return ok ? kExitOk : kExitSemantic;
}

int cmd_catalog(int max_n, const std::string& json_path) {
    auto rows = ctw::build_catalog(max_n);
    std::ostringstream txt;
    txt << std::left << std::setw(6) << "n" << std::setw(28) << "family" << std::setw(14)
        << "params" << std::setw(26) << "srg(n,r,lambda,mu)" << std::setw(10) << "theta"
        << std::setw(16) << "hat_theta" << "verified\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        std::ostringstream ps;
        for (std::size_t i = 0; i < r.params.size(); ++i)
            ps << (i ? "," : "") << r.params[i];
        std::ostringstream srg;
        if (r.srg)
            srg << "(" << r.srg->n << "," << r.srg->r << "," << r.srg->lambda << ","
                << r.srg->mu << ")";
        else
            srg << "-";
        std::ostringstream ht;
        ht << std::setprecision(8) << r.hat_theta;
        txt << std::left << std::setw(6) << (r.n ? std::to_string(r.n) : "-") << std::setw(28)
            << r.family << std::setw(14) << ps.str() << std::setw(26) << srg.str()
            << std::setw(10) << r.theta << std::setw(16) << ht.str()
            << (r.verified ? "yes" : "no") << "\n";
        json jr{{"family", r.family}, {"params", r.params},
                {"theta", r.theta},   {"hat_theta", r.hat_theta},
                {"verified", r.verified}};
        if (r.n) jr["n"] = r.n;
        if (r.srg)
            jr["srg"] = json::array({r.srg->n, r.srg->r, r.srg->lambda, r.srg->mu});
        jrows.push_back(std::move(jr));
    }
    std::cout << txt.str();
    if (!json_path.empty()) ctw::io::save_file(json_path, jrows);
    return kExitOk;
}

int cmd_search(const ctw::SearchConfig& cfg, const std::string& out_path) {
    auto res = ctw::run_search(cfg);
    json hist = json::array();
    for (auto [v, c] : res.distinct_value_histogram) hist.push_back(json::array({v, c}));
    json rep{{"q", cfg.q},
             {"mode", ctw::mode_name(cfg.mode)},
             {"starts", cfg.starts},
             {"seed", cfg.seed},
             {"succeeded", res.succeeded},
             {"residual", res.residual},
             {"theta", res.best_theta},
             {"starts_used", res.starts_used},
             {"distinct_value_histogram", std::move(hist)}};
    std::cout << rep.dump(2) << "\n";
    if (res.succeeded && !out_path.empty()) {
        auto s = ctw::phi_to_matrix(res.best_phi);
        json meta{{"construction", "search"},
                  {"q", cfg.q},
                  {"mode", ctw::mode_name(cfg.mode)},
                  {"seed", cfg.seed}};
        ctw::io::save_file(out_path, ctw::io::solution_to_json(s, res.best_theta, std::move(meta)));
    }
    return res.succeeded ? kExitOk : kExitSemantic;
}

int cmd_sharp_check(int n, int trials, unsigned long long seed) {
    if (n < 2 || n > 8) throw InputError("sharp-check: --n must be in [2, 8]");
    if (trials < 1) throw InputError("sharp-check: --trials must be >= 1");
    std::mt19937_64 rng(seed);
    auto rnd = [&] { return 2.0 * ((double)(rng() >> 11) * 0x1.0p-53) - 1.0; };
    double worst = 0.0, worst_cross = 0.0;
    for (int t = 0; t < trials; ++t) {
        DiagCurvature<double> r(n), s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                r.set(i, j, rnd());
                s.set(i, j, rnd());
            }
        auto fast = ctw::jordan_sharp(r, s);
        double cross = 0.0;
        auto slow = ctw::sharp_bruteforce(r, s, &cross);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                worst = std::max(worst, std::abs(fast.at(i, j) - slow.at(i, j)));
        worst_cross = std::max(worst_cross, cross);
    }
    json rep{{"n", n},
             {"trials", trials},
             {"seed", seed},
             {"max_deviation", worst},
             {"max_cross_term", worst_cross},
             {"agree", worst < 1e-10 && worst_cross < 1e-10}};
    std::cout << rep.dump(2) << "\n";
    return (worst < 1e-10 && worst_cross < 1e-10) ? kExitOk : kExitSemantic;
}

int cmd_tensor(const std::string& from, bool zero_r, double tol, const std::string& out_path) {
    auto doc = ctw::io::solution_from_json(ctw::io::load_file(from));
    DiagCurvature<double> r(1);
    if (doc.rational) {
        auto rt = ctw::solution_to_tensor(doc.rs, doc.rtheta, zero_r, 0.0);
        DiagCurvature<double> rd(rt.n());
        for (int i = 0; i < rt.n(); ++i)
            for (int j = i + 1; j < rt.n(); ++j) rd.set(i, j, rt.at(i, j).to_double());
        r = std::move(rd);
    } else {
        r = ctw::solution_to_tensor(doc.fs, doc.ftheta, zero_r, tol);
    }
    emit(ctw::io::tensor_to_json(r), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solutions of S.S + S^2 = theta S + D: construction, verification, search"};
    app.require_subcommand(1);

    // construct
    auto* c = app.add_subcommand("construct", "build a solution and emit solution JSON");
    std::string family, out_path, rho_sq;
    int m = 0, l = 0, q = 0, variant = 1, k = 0;
    c->add_option("--family", family, "family name")->required();
    c->add_option("--m", m, "family size parameter");
    c->add_option("--l", l, "family size parameter");
    c->add_option("--q", q, "prime power");
    c->add_option("--variant", variant, "composite table row (1|2|3)");
    c->add_option("--k", k, "sphere-product first factor dimension");
    c->add_option("--rho-sq", rho_sq, "sphere-product rho^2 as a rational (default 1)");
    c->add_option("--out", out_path, "output path (stdout when omitted)");

    // verify
    auto* v = app.add_subcommand("verify", "verify a solution JSON file");
    std::string in_path;
    double tol = 1e-9;
    v->add_option("--in", in_path, "solution JSON path")->required();
    v->add_option("--tol", tol, "float-mode tolerance (ignored for rational files)");

    // catalog
    auto* cat = app.add_subcommand("catalog", "verified solutions for every n in [4, max-n]");
    int max_n = 30;
    std::string cat_json;
    cat->add_option("--max-n", max_n, "largest dimension");
    cat->add_option("--json", cat_json, "also write rows as JSON to this path");

    // search
    auto* se = app.add_subcommand("search", "numerical search for Hopf solutions on F_q");
    ctw::SearchConfig cfg;
    std::string mode = "direct", search_out;
    se->add_option("--q", cfg.q, "prime power >= 4")->required();
    se->add_option("--starts", cfg.starts, "multi-start count");
    se->add_option("--seed", cfg.seed, "RNG seed");
    se->add_option("--max-iters", cfg.max_iters, "iteration cap per start");
    se->add_option("--target", cfg.residual_target, "residual target");
    se->add_option("--mode", mode, "direct | chars");
    se->add_option("--char-order", cfg.restrict_char_order,
                   "chars mode: restrict to characters of this exact order");
    se->add_option("--out", search_out, "write the found solution JSON here");

    // sharp-check
    auto* sh = app.add_subcommand("sharp-check", "compare jordan_sharp with the so(n) oracle");
    int sh_n = 4, sh_trials = 100;
    unsigned long long sh_seed = 0;
    sh->add_option("--n", sh_n, "dimension (2..8)");
    sh->add_option("--trials", sh_trials, "random pairs");
    sh->add_option("--seed", sh_seed, "RNG seed");

    // tensor
    auto* te = app.add_subcommand("tensor", "curvature tensor of a verified solution");
    std::string te_from, te_out;
    bool te_zero_r = false;
    double te_tol = 1e-9;
    te->add_option("--from", te_from, "solution JSON path")->required();
    te->add_flag("--zero-r", te_zero_r, "use the r = 0 branch");
    te->add_option("--tol", te_tol, "float-mode tolerance");
    te->add_option("--out", te_out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c) return cmd_construct(family, m, l, q, variant, k, rho_sq, out_path);
        if (*v) return cmd_verify(in_path, tol);
        if (*cat) return cmd_catalog(max_n, cat_json);
        if (*se) {
            if (mode == "direct")
                cfg.mode = ctw::SearchMode::Direct;
            else if (mode == "chars" || mode == "character-basis")
                cfg.mode = ctw::SearchMode::CharacterBasis;
            else
                throw InputError("search: --mode must be direct or chars");
            return cmd_search(cfg, search_out);
        }
        if (*sh) return cmd_sharp_check(sh_n, sh_trials, sh_seed);
        if (*te) return cmd_tensor(te_from, te_zero_r, te_tol, te_out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ctw::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ctw::io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitInput;
}
