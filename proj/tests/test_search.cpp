#include <doctest.h>

#include <cmath>

#include "ctw/characters.hpp"
#include "ctw/group_ring.hpp"
#include "ctw/search.hpp"

using ctw::SearchConfig;
using ctw::SearchMode;

TEST_CASE("invalid q is rejected") {
    for (int q : {0, 3, 6, 12}) {
        SearchConfig cfg;
        cfg.q = q;
        CHECK_THROWS_AS(ctw::search_hopf(cfg), std::invalid_argument);
        cfg.mode = SearchMode::CharacterBasis;
        CHECK_THROWS_AS(ctw::search_character_basis(cfg), std::invalid_argument);
    }
}

TEST_CASE("search is deterministic for a fixed seed") {
    SearchConfig cfg;
    cfg.q = 7;
    cfg.starts = 10;
    cfg.seed = 99;
    auto a = ctw::search_hopf(cfg);
    auto b = ctw::search_hopf(cfg);
    CHECK(a.succeeded == b.succeeded);
    CHECK(a.best_theta == b.best_theta);  // bitwise
    CHECK(a.residual == b.residual);
    CHECK(a.starts_used == b.starts_used);
    CHECK(a.best_phi.values == b.best_phi.values);

    SearchConfig other = cfg;
    other.seed = 100;
    auto c = ctw::search_hopf(other);
    CHECK(c.succeeded);  // different seed still converges somewhere
}

TEST_CASE("direct search succeeds on q = 5 with theta = 0 and the unit gauge") {
    SearchConfig cfg;
    cfg.q = 5;
    cfg.starts = 50;
    cfg.seed = 1;
    auto res = ctw::search_hopf(cfg);
    REQUIRE(res.succeeded);
    CHECK(res.residual < 1e-8);
    CHECK(std::abs(res.best_theta) < 1e-8);  // Paley dimension: theta = 0
    CHECK(std::abs(std::sqrt(res.best_phi.norm_sq()) - 1.0) < 1e-12);
    // the normalized Paley solution takes values +-1/2
    CHECK(res.distinct_value_histogram.size() == 3);
    auto rep = ctw::hopf_verify(res.best_phi, 1e-8);
    CHECK(rep.is_solution);
}

TEST_CASE("direct search succeeds on q = 4 and q = 7") {
    for (int q : {4, 7}) {
        CAPTURE(q);
        SearchConfig cfg;
        cfg.q = q;
        cfg.starts = 100;
        cfg.seed = 5;
        auto res = ctw::search_hopf(cfg);
        REQUIRE(res.succeeded);
        auto rep = ctw::hopf_verify(res.best_phi, 1e-8);
        CHECK(rep.is_solution);
        CHECK(res.starts_used <= 100);
    }
}

TEST_CASE("character basis, q = 5 restricted to the order-2 character") {
    SearchConfig cfg;
    cfg.q = 5;
    cfg.starts = 10;
    cfg.seed = 3;
    cfg.mode = SearchMode::CharacterBasis;
    cfg.restrict_char_order = 2;
    auto res = ctw::search_character_basis(cfg);
    REQUIRE(res.succeeded);
    CHECK(std::abs(res.best_theta) < 1e-8);
    // 1-dimensional search recovers the quadratic character up to sign/scale:
    // values +-1/2 after normalization
    ctw::FieldTable f = ctw::FieldTable::make(5);
    auto quartic = ctw::quartic_solution(f);
    double scale = res.best_phi.values[1] / quartic.values[1];
    for (int a = 1; a < 5; ++a)
        CHECK(res.best_phi.values[(std::size_t)a] ==
              doctest::Approx(scale * quartic.values[(std::size_t)a]).epsilon(1e-8));
}

TEST_CASE("character basis, q = 13 restricted to the order-3 pair matches cubic") {
    SearchConfig cfg;
    cfg.q = 13;
    cfg.starts = 30;
    cfg.seed = 3;
    cfg.mode = SearchMode::CharacterBasis;
    cfg.restrict_char_order = 3;
    auto res = ctw::search_character_basis(cfg);
    REQUIRE(res.succeeded);
    ctw::FieldTable f = ctw::FieldTable::make(13);
    auto [phi, theta] = ctw::cubic_solution(f);
    ctw::GroupFunction<double> gf(ctw::FinAbelianGroup::additive_of_field(f), phi.values);
    double norm = std::sqrt(gf.norm_sq());
    CHECK(std::abs(res.best_theta) == doctest::Approx(std::abs(theta) / norm).epsilon(1e-7));
}

TEST_CASE("q = 8: the conjecture case has an empirical solution") {
    SearchConfig cfg;
    cfg.q = 8;
    cfg.starts = 200;
    cfg.seed = 1;
    auto res = ctw::search_hopf(cfg);
    // recorded outcome, re-verified when successful; not asserted as theory
    if (res.succeeded) {
        auto rep = ctw::hopf_verify(res.best_phi, 1e-8);
        CHECK(rep.is_solution);
    }
    CHECK(res.starts_used >= 1);
}
