#include <doctest.h>

#include <random>

#include "ctw/matrix_core.hpp"

using ctw::Rational;
using ctw::SymMatrix;

namespace {

// S for the disjoint union of two edges (K2 + K2): partners get 1 + y,
// strangers y, with y = r/(1-n) = -1/3. Solves with theta = 1.
SymMatrix<Rational> two_edges_solution() {
    SymMatrix<Rational> s(4);
    Rational in(2, 3), out(-1, 3);
    s.set(0, 1, in);
    s.set(2, 3, in);
    s.set(0, 2, out);
    s.set(0, 3, out);
    s.set(1, 2, out);
    s.set(1, 3, out);
    return s;
}

}  // namespace

TEST_CASE("structural validation") {
    using ctw::StructuralError;
    CHECK_THROWS_AS(SymMatrix<Rational>::from_entries(2, {Rational(0), Rational(1), Rational(2), Rational(0)}),
                    StructuralError);
    CHECK_THROWS_AS(SymMatrix<Rational>::from_entries(2, {Rational(1), Rational(2), Rational(2), Rational(0)}),
                    StructuralError);
    CHECK_THROWS_AS(SymMatrix<Rational>::from_entries(2, {Rational(0), Rational(1)}), StructuralError);
    SymMatrix<Rational> ok = SymMatrix<Rational>::from_entries(
        2, {Rational(0), Rational(5), Rational(5), Rational(0)});
    CHECK(ok.at(0, 1) == Rational(5));
    SymMatrix<Rational> d(3);
    CHECK_THROWS_AS(d.set(1, 1, Rational(2)), StructuralError);
}

TEST_CASE("verify_basic accepts a known exact solution") {
    auto s = two_edges_solution();
    auto rep = ctw::verify_basic(s, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == Rational(1));
    CHECK(rep.max_residual == 0.0);
    CHECK(rep.trace_d == s.norm_sq());
    // D_i = (S^2)_ii = sum_j S_ij^2 = (2/3)^2 + 2*(1/3)^2 = 2/3
    for (const auto& di : rep.D) CHECK(di == Rational(2, 3));
    CHECK(rep.hat_theta == doctest::Approx(1.0 / std::sqrt(8.0 / 3.0)));
}

TEST_CASE("exact mode demands tol = 0; float mode mirrors the exact result") {
    auto s = two_edges_solution();
    CHECK_THROWS_AS(ctw::verify_basic(s, 1e-9), std::invalid_argument);

    SymMatrix<double> f(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) f.set(i, j, s.at(i, j).to_double());
    auto rep = ctw::verify_basic(f, 1e-12);
    CHECK(rep.is_solution);
    CHECK(rep.theta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("S = 0 verifies with canonical theta = 0") {
    SymMatrix<Rational> z(5);
    auto rep = ctw::verify_basic(z, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == Rational(0));
    CHECK(rep.hat_theta == 0.0);
    CHECK_THROWS_AS(ctw::hat_theta(Rational(1), z), std::domain_error);
    CHECK_THROWS_AS(ctw::hat_theta_sq(Rational(1), z), std::domain_error);
}

TEST_CASE("dimensions 2 and 3 admit only S = 0") {
    // row sums force every off-diagonal entry to vanish; any nonzero attempt fails
    SymMatrix<Rational> s2(2);
    s2.set(0, 1, Rational(1));
    CHECK_FALSE(ctw::verify_basic(s2, 0.0).is_solution);

    SymMatrix<Rational> s3(3);
    s3.set(0, 1, Rational(1));
    s3.set(0, 2, Rational(-1));
    s3.set(1, 2, Rational(0));
    CHECK_FALSE(ctw::verify_basic(s3, 0.0).is_solution);
}

TEST_CASE("failure reports a witness") {
    auto s = two_edges_solution();
    s.set(0, 1, Rational(1, 2));  // breaks the row sums
    auto rep = ctw::verify_basic(s, 0.0);
    CHECK_FALSE(rep.is_solution);
    CHECK(rep.theta == Rational(0));
    REQUIRE(rep.witness.has_value());
}

TEST_CASE("hat_theta is scale invariant; theta scales linearly") {
    std::mt19937_64 rng(11);
    auto s = two_edges_solution();
    Rational theta(1);
    for (int trial = 0; trial < 100; ++trial) {
        long long num = (long long)(rng() % 400) - 200;
        long long den = (long long)(rng() % 50) + 1;
        if (num == 0) num = 7;
        Rational t(num, den);
        auto [st, tt] = ctw::scale(s, theta, t);
        CHECK(tt == t * theta);
        CHECK(ctw::verify_basic(st, 0.0).is_solution);
        CHECK(ctw::hat_theta_sq(tt, st) == ctw::hat_theta_sq(theta, s));
    }
}

TEST_CASE("inflate embeds a solution with the same theta and hat_theta") {
    auto s = two_edges_solution();
    auto big = ctw::inflate(s, 7);
    auto rep = ctw::verify_basic(big, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == Rational(1));
    CHECK(ctw::hat_theta_sq(Rational(1), big) == ctw::hat_theta_sq(Rational(1), s));
    CHECK_THROWS_AS(ctw::inflate(s, 4), std::invalid_argument);
    CHECK_THROWS_AS(ctw::inflate(s, 3), std::invalid_argument);
}

TEST_CASE("block_combine: both nonzero thetas normalize to theta = 1") {
    auto s1 = two_edges_solution();
    auto [s2, t2] = ctw::scale(s1, Rational(1), Rational(3, 2));
    auto [b, tb] = ctw::block_combine(s1, Rational(1), s2, t2);
    CHECK(tb == Rational(1));
    auto rep = ctw::verify_basic(b, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == Rational(1));
    // hat over the block: 1/hat^2 = 1/hat1^2 + 1/hat2^2
    Rational h1 = ctw::hat_theta_sq(Rational(1), s1);
    Rational h2 = ctw::hat_theta_sq(t2, s2);
    Rational hb = ctw::hat_theta_sq(tb, b);
    CHECK(Rational(1) / hb == Rational(1) / h1 + Rational(1) / h2);
}

TEST_CASE("block_combine: both thetas zero stack directly") {
    // theta = 0 pentagon solution: Paley-like values +-1/2 on C5
    SymMatrix<Rational> p(5);
    Rational a(1, 2), b(-1, 2);
    for (int i = 0; i < 5; ++i)
        for (int d : {1, 4}) {
            int j = (i + d) % 5;
            if (i < j) p.set(i, j, a);
        }
    for (int i = 0; i < 5; ++i)
        for (int d : {2, 3}) {
            int j = (i + d) % 5;
            if (i < j) p.set(i, j, b);
        }
    REQUIRE(ctw::verify_basic(p, 0.0).is_solution);
    REQUIRE(ctw::verify_basic(p, 0.0).theta == Rational(0));

    auto [blk, tb] = ctw::block_combine(p, Rational(0), p, Rational(0));
    CHECK(tb == Rational(0));
    auto rep = ctw::verify_basic(blk, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == Rational(0));
}

TEST_CASE("block_combine rejects mixed zero/nonzero theta") {
    auto s1 = two_edges_solution();
    SymMatrix<Rational> z(4);
    CHECK_THROWS_AS(ctw::block_combine(s1, Rational(1), z, Rational(0)), std::invalid_argument);
}

TEST_CASE("rational squaring: scaled-integer fast path agrees with plain arithmetic") {
    // huge denominators force the fallback; the same matrix scaled to small
    // denominators takes the int64 fast path. hat_theta_sq ties them together.
    auto s = two_edges_solution();
    // 3 * 715827883 = 2^31 + 1 exceeds the lcm cap, yet 9p^2 still fits in int64
    Rational t(1, 715827883);
    auto [slow, ts] = ctw::scale(s, Rational(1), t);
    auto rep_fast = ctw::verify_basic(s, 0.0);
    auto rep_slow = ctw::verify_basic(slow, 0.0);
    CHECK(rep_fast.is_solution);
    CHECK(rep_slow.is_solution);
    CHECK(rep_slow.theta == ts);
    CHECK(ctw::hat_theta_sq(rep_slow.theta, slow) == ctw::hat_theta_sq(rep_fast.theta, s));
}
