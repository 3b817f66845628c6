#include <doctest.h>

#include "ctw/graphs.hpp"

using ctw::Graph;
using ctw::Rational;
using ctw::SrgParams;

namespace {

SrgParams require_params(const Graph& g) {
    auto p = ctw::srg_params_of(g);
    REQUIRE(p.has_value());
    CHECK(p->relation_holds());
    return *p;
}

}  // namespace

TEST_CASE("graph structural validation") {
    std::vector<std::uint8_t> bad = {0, 1, 0, 0};  // asymmetric
    CHECK_THROWS_AS(Graph::from_adjacency(2, bad), ctw::StructuralError);
    std::vector<std::uint8_t> diag = {1, 0, 0, 0};
    CHECK_THROWS_AS(Graph::from_adjacency(2, diag), ctw::StructuralError);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.is_empty());
    CHECK_FALSE(g.is_complete());
}

TEST_CASE("disjoint_complete: srg(ml, l-1, l-2, 0)") {
    for (int m = 1; m <= 5; ++m)
        for (int l = 2; l <= 5; ++l) {
            if (m == 1) continue;  // complete graph handled below
            auto p = require_params(ctw::disjoint_complete(m, l));
            CHECK(p == SrgParams{(long long)m * l, l - 1, l > 1 ? l - 2 : 0, 0});
            CHECK(p.theta() == l - 1);
        }
}

TEST_CASE("kneser2: srg(C(m,2), C(m-2,2), C(m-4,2), C(m-3,2))") {
    auto c2 = [](long long x) { return x < 2 ? 0 : x * (x - 1) / 2; };
    for (int m = 5; m <= 9; ++m) {
        auto p = require_params(ctw::kneser2(m));
        CHECK(p == SrgParams{c2(m), c2(m - 2), c2(m - 4), c2(m - 3)});
        CHECK(p.theta() == 5 - m);
    }
    // Petersen
    auto pet = require_params(ctw::kneser2(5));
    CHECK(pet == SrgParams{10, 3, 0, 1});
}

TEST_CASE("rook: srg(m^2, 2(m-1), m-2, 2)") {
    for (int m = 2; m <= 7; ++m) {
        auto p = require_params(ctw::rook(m));
        CHECK(p == SrgParams{(long long)m * m, 2 * (m - 1), m - 2, 2});
        CHECK(p.theta() == m - 3);
    }
}

TEST_CASE("paley: conference parameters for prime powers q = 1 mod 4") {
    for (int q = 5; q <= 200; ++q) {
        if (q % 4 != 1 || !ctw::is_prime_power(q)) continue;
        CAPTURE(q);
        auto p = require_params(ctw::paley_graph(q));
        CHECK(p == SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
        CHECK(p.theta() == 0);
    }
    CHECK_THROWS_AS(ctw::paley_graph(7), std::invalid_argument);   // 7 = 3 mod 4
    CHECK_THROWS_AS(ctw::paley_graph(12), std::invalid_argument);  // not a prime power
}

TEST_CASE("gq_symplectic: srg((q+1)(q^2+1), q(q+1), q-1, q+1)") {
    for (int q : {2, 3}) {
        auto p = require_params(ctw::gq_symplectic(q));
        CHECK(p == SrgParams{(long long)(q + 1) * (q * q + 1), (long long)q * (q + 1), q - 1, q + 1});
        CHECK(p.theta() == -1);  // s - t - 1 with s = t = q
    }
}

TEST_CASE("pds_subgroups: srg(q^2, l(q-1), l^2-3l+q, l^2-l)") {
    for (int q : {2, 3, 4, 5}) {
        for (int l = 1; l <= q + 1; ++l) {
            CAPTURE(q);
            CAPTURE(l);
            auto p = require_params(ctw::pds_subgroups(q, l));
            long long lam = l == 1 ? q - 2 : (long long)l * l - 3 * l + q;  // l=1: one clique
            long long mu = l == 1 ? 0 : (long long)l * l - l;
            if (l == q + 1) {  // complete graph: lambda = n-2, mu degenerate 0
                CHECK(p == SrgParams{(long long)q * q, (long long)q * q - 1,
                                     (long long)q * q - 2, 0});
            } else {
                CHECK(p == SrgParams{(long long)q * q, (long long)l * (q - 1), lam, mu});
            }
        }
    }
}

TEST_CASE("complement negates theta") {
    for (auto g : {ctw::rook(4), ctw::kneser2(5), ctw::disjoint_complete(2, 3)}) {
        auto p = require_params(g);
        auto pc = require_params(ctw::complement(g));
        CHECK(pc.n == p.n);
        CHECK(pc.r == p.n - p.r - 1);
        CHECK(pc.theta() == -p.theta());
        auto sol = ctw::srg_to_solution(g);
        auto solc = ctw::srg_to_solution(ctw::complement(g));
        CHECK(solc.theta == -sol.theta);
        // complements have the same hat_theta^2
        CHECK(ctw::hat_theta_sq(solc.theta, solc.S) == ctw::hat_theta_sq(sol.theta, sol.S));
    }
}

TEST_CASE("srg_params_of rejects non-srg graphs with a witness") {
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    std::pair<int, int> w{-1, -1};
    CHECK_FALSE(ctw::srg_params_of(path, &w).has_value());
    CHECK(w.first >= 0);
    // 5-cycle is strongly regular, 6-cycle is not
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK_FALSE(ctw::srg_params_of(c6).has_value());
}

TEST_CASE("srg_to_solution: exact solution with theta = lambda - mu + 1") {
    for (auto g : {ctw::disjoint_complete(3, 4), ctw::kneser2(6), ctw::rook(5),
                   ctw::paley_graph(13), ctw::gq_symplectic(2), ctw::pds_subgroups(3, 2)}) {
        auto sol = ctw::srg_to_solution(g);
        auto rep = ctw::verify_basic(sol.S, 0.0);
        CHECK(rep.is_solution);
        CHECK(rep.max_residual == 0.0);
        CHECK(rep.theta == sol.theta);
        CHECK(sol.theta == Rational(sol.params.theta()));
        // adjacency entries 1 + y, others y, y = r/(1-n)
        Rational y(sol.params.r, 1 - sol.params.n);
        CHECK(sol.S.at(0, 1) == (g.has_edge(0, 1) ? Rational(1) + y : y));
        // both hat_theta routes agree exactly
        CHECK(ctw::hat_theta_sq(sol.theta, sol.S) == ctw::srg_hat_theta_sq(sol.params));
    }
}

TEST_CASE("srg_to_solution with trusted parameters matches detection") {
    Graph g = ctw::rook(4);
    auto detected = ctw::srg_to_solution(g);
    auto trusted = ctw::srg_to_solution(g, detected.params);
    CHECK(trusted.S == detected.S);
    CHECK(trusted.theta == detected.theta);
    // degree mismatch is still caught
    SrgParams wrong = detected.params;
    wrong.r += 1;
    CHECK_THROWS(ctw::srg_to_solution(g, wrong));
}

TEST_CASE("degenerate graphs are rejected") {
    CHECK_THROWS_AS(ctw::srg_to_solution(ctw::disjoint_complete(1, 4)), std::domain_error);
    Graph empty(5);
    CHECK_THROWS_AS(ctw::srg_to_solution(empty), std::domain_error);
}

TEST_CASE("srg_hat_theta_sq closed forms") {
    // disjoint-complete: theta = l-1, formula (l-1)^2 (n-1) / (n r r^c)
    SrgParams dc{12, 3, 2, 0};  // m=3, l=4
    CHECK(ctw::srg_hat_theta_sq(dc) == Rational(9 * 11, 12 * 3 * 8));
    // Fi24 parameters
    SrgParams fi{306936, 31671, 3510, 3240};
    CHECK(fi.relation_holds());
    CHECK(fi.theta() == 271);
    Rational ht2 = ctw::srg_hat_theta_sq(fi);
    double expect = 271.0 / 3024.0 * std::sqrt(785.0 / 748374.0);
    CHECK(std::sqrt(ht2.to_double()) == doctest::Approx(expect).epsilon(1e-9));
}
