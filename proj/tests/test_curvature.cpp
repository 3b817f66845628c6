#include <doctest.h>

#include <random>
#include <set>

#include "ctw/curvature.hpp"
#include "ctw/graphs.hpp"

using ctw::DiagCurvature;
using ctw::Rational;

namespace {

DiagCurvature<double> random_tensor(int n, std::mt19937_64& rng) {
    auto rnd = [&] { return ((double)(rng() >> 11) * 0x1.0p-53) * 2.0 - 1.0; };
    DiagCurvature<double> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.set(i, j, rnd());
    return r;
}

DiagCurvature<double> id_tensor(int n) {
    DiagCurvature<double> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.set(i, j, 1.0);
    return r;
}

}  // namespace

TEST_CASE("id # id = (n-2) id, exactly") {
    for (int n : {3, 4, 5, 6, 7}) {
        auto sharp = ctw::jordan_sharp(id_tensor(n), id_tensor(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) CHECK(sharp.at(i, j) == (double)(n - 2));
        if (n <= 8) {
            auto oracle = ctw::sharp_bruteforce(id_tensor(n), id_tensor(n));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    CHECK(oracle.at(i, j) == doctest::Approx((double)(n - 2)).epsilon(1e-12));
        }
    }
    // rational version
    DiagCurvature<Rational> rid(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) rid.set(i, j, Rational(1));
    auto rs = ctw::jordan_sharp(rid, rid);
    CHECK(rs.at(0, 3) == Rational(2));
}

TEST_CASE("# is symmetric and bilinear; R # 0 = 0") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        int n = 4 + (int)(rng() % 3);
        auto r = random_tensor(n, rng), s = random_tensor(n, rng), u = random_tensor(n, rng);
        auto rs = ctw::jordan_sharp(r, s);
        auto sr = ctw::jordan_sharp(s, r);
        DiagCurvature<double> zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                CHECK(rs.at(i, j) == doctest::Approx(sr.at(i, j)).epsilon(1e-14));
                // bilinearity: R#(S+U) = R#S + R#U
            }
        DiagCurvature<double> su(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) su.set(i, j, s.at(i, j) + u.at(i, j));
        auto lhs = ctw::jordan_sharp(r, su);
        auto r_s = ctw::jordan_sharp(r, s);
        auto r_u = ctw::jordan_sharp(r, u);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(lhs.at(i, j) == doctest::Approx(r_s.at(i, j) + r_u.at(i, j)).epsilon(1e-12));
        CHECK(ctw::jordan_sharp(r, zero).norm_sq() == 0.0);
    }
    DiagCurvature<double> a(4), b(5);
    CHECK_THROWS_AS(ctw::jordan_sharp(a, b), std::invalid_argument);
}

TEST_CASE("oracle equivalence: jordan_sharp matches the so(n) trace formula") {
    std::mt19937_64 rng(31);
    for (int n : {4, 5, 6}) {
        CAPTURE(n);
        double worst = 0.0, worst_cross = 0.0;
        for (int t = 0; t < 100; ++t) {
            auto r = random_tensor(n, rng), s = random_tensor(n, rng);
            auto fast = ctw::jordan_sharp(r, s);
            double cross = 0.0;
            auto slow = ctw::sharp_bruteforce(r, s, &cross);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    worst = std::max(worst, std::abs(fast.at(i, j) - slow.at(i, j)));
            worst_cross = std::max(worst_cross, cross);
        }
        CHECK(worst < 1e-10);
        CHECK(worst_cross < 1e-10);  // diagonal in, diagonal out
    }
    DiagCurvature<double> big(9);
    CHECK_THROWS_AS(ctw::sharp_bruteforce(big, big), std::invalid_argument);
}

TEST_CASE("ricci and scalar curvature") {
    auto id4 = id_tensor(4);
    auto ric = ctw::ricci_diag(id4);
    for (double v : ric) CHECK(v == 3.0);
    CHECK(ctw::scalar_curvature(id4) == 12.0);

    DiagCurvature<double> zero(5);
    for (double v : ctw::ricci_diag(zero)) CHECK(v == 0.0);

    // R from S + r*1 with row sums of S zero: constant Ricci (n-1)r
    auto sol = ctw::srg_to_solution(ctw::rook(3));
    auto r = ctw::solution_to_tensor(sol.S, sol.theta, false, 0.0);
    // theta = 0 here, so r0 = 0 and Ricci = row sums of S = 0
    for (const Rational& v : ctw::ricci_diag(r)) CHECK(v == Rational(0));
}

TEST_CASE("einstein decomposition") {
    auto id5 = id_tensor(5);
    auto ed = ctw::einstein_decompose(id5);
    CHECK(ed.is_einstein);
    CHECK(ed.r0 == doctest::Approx(1.0));
    CHECK(ed.w.norm_sq() == doctest::Approx(0.0));

    auto sp = ctw::sphere_product_tensor<Rational>(2, 3, Rational(1));
    auto eds = ctw::einstein_decompose(sp, 0.0);
    CHECK(eds.is_einstein);
    CHECK_FALSE(eds.w.is_zero());  // nontrivial W

    std::mt19937_64 rng(41);
    auto noise = random_tensor(6, rng);
    CHECK_FALSE(ctw::einstein_decompose(noise).is_einstein);

    DiagCurvature<Rational> rq(4);
    rq.set(0, 1, Rational(1));
    CHECK_THROWS_AS(ctw::einstein_decompose(rq), std::invalid_argument);  // exact needs tol 0
}

TEST_CASE("solution_to_tensor satisfies the pointwise fixed-point identity") {
    // disjoint union of two edges: theta = 1, r = 1/3
    auto sol = ctw::srg_to_solution(ctw::disjoint_complete(2, 2));
    REQUIRE(sol.theta == Rational(1));
    auto r = ctw::solution_to_tensor(sol.S, sol.theta, false, 0.0);
    CHECK(r.at(0, 1) == Rational(1, 3) + sol.S.at(0, 1));
    CHECK(ctw::tensor_fixed_point_residual(r, sol.theta) == 0.0);
    CHECK(ctw::einstein_decompose(r, 0.0).is_einstein);

    // Petersen: theta = 0, both branches coincide and R^2 + R# = 0
    auto pet = ctw::srg_to_solution(ctw::kneser2(5));
    REQUIRE(pet.theta == Rational(0));
    auto r0 = ctw::solution_to_tensor(pet.S, pet.theta, true, 0.0);
    auto r1 = ctw::solution_to_tensor(pet.S, pet.theta, false, 0.0);
    CHECK(r0 == r1);
    CHECK(ctw::tensor_fixed_point_residual(r0, Rational(0)) == 0.0);
    CHECK(ctw::einstein_decompose(r0, 0.0).is_einstein);

    // a non-solution is rejected
    ctw::SymMatrix<Rational> bad(4);
    bad.set(0, 1, Rational(1));
    CHECK_THROWS_AS(ctw::solution_to_tensor(bad, Rational(1), false, 0.0), std::invalid_argument);
}

TEST_CASE("round sphere: S = 0 gives R^2 + R# = theta R with theta = (n-1) r") {
    int n = 6;
    ctw::SymMatrix<Rational> zero(n);
    Rational theta(n - 1);  // r = 1: unit sphere
    auto r = ctw::solution_to_tensor(zero, theta, false, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) CHECK(r.at(i, j) == Rational(1));
    CHECK(ctw::tensor_fixed_point_residual(r, theta) == 0.0);
}

TEST_CASE("sphere products") {
    // equal spheres: sigma = rho, S degenerates to two values
    auto sp22 = ctw::sphere_product_tensor<Rational>(2, 2, Rational(1));
    CHECK(sp22.at(0, 1) == Rational(1));
    CHECK(sp22.at(2, 3) == Rational(1));
    CHECK(sp22.at(0, 2) == Rational(0));

    // S^2 x S^3: three distinct S values, exact solution of the basic equations
    auto sp = ctw::sphere_product_tensor<Rational>(2, 3, Rational(1));
    int n = 5;
    Rational theta = ctw::scalar_curvature(sp) / Rational(n);
    CHECK(ctw::tensor_fixed_point_residual(sp, theta) == 0.0);
    Rational r0 = theta / Rational(n - 1);
    ctw::SymMatrix<Rational> s(n);
    std::set<std::pair<long long, long long>> values;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = sp.at(i, j) - r0;
            s.set(i, j, v);
            values.insert({v.num(), v.den()});
        }
    CHECK(values.size() == 3);
    auto rep = ctw::verify_basic(s, 0.0);
    CHECK(rep.is_solution);
    CHECK(rep.theta == theta);

    for (int k = 2; k <= 6; ++k)
        for (int l = 2; l <= 6; ++l) {
            CAPTURE(k);
            CAPTURE(l);
            auto t = ctw::sphere_product_tensor<Rational>(k, l, Rational(3, 2));
            CHECK(ctw::einstein_decompose(t, 0.0).is_einstein);
            Rational th = ctw::scalar_curvature(t) / Rational(k + l);
            CHECK(ctw::tensor_fixed_point_residual(t, th) == 0.0);
        }
    CHECK_THROWS_AS(ctw::sphere_product_tensor<Rational>(1, 3, Rational(1)), std::invalid_argument);
}
