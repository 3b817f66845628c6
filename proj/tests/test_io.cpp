#include <doctest.h>

#include "ctw/graphs.hpp"
#include "ctw/io.hpp"

using ctw::Rational;
using ctw::io::json;

TEST_CASE("rational solution round trip") {
    auto sol = ctw::srg_to_solution(ctw::rook(3));
    json j = ctw::io::solution_to_json(sol.S, sol.theta, json{{"note", 1}});
    CHECK(j["arithmetic"] == "rational");
    CHECK(j["theta"] == sol.theta.str());
    auto doc = ctw::io::solution_from_json(j);
    REQUIRE(doc.rational);
    CHECK(doc.rs == sol.S);
    CHECK(doc.rtheta == sol.theta);
    CHECK(doc.metadata["note"] == 1);
    CHECK(ctw::verify_basic(doc.rs, 0.0).is_solution);
}

TEST_CASE("float solution round trip") {
    ctw::SymMatrix<double> s(3);
    s.set(0, 1, 0.25);
    s.set(0, 2, -0.25);
    s.set(1, 2, 0.5);
    json j = ctw::io::solution_to_json(s, 1.5);
    CHECK(j["arithmetic"] == "float");
    auto doc = ctw::io::solution_from_json(j);
    REQUIRE_FALSE(doc.rational);
    CHECK(doc.fs == s);
    CHECK(doc.ftheta == 1.5);
}

TEST_CASE("malformed solutions are structural errors") {
    auto sol = ctw::srg_to_solution(ctw::rook(3));
    json good = ctw::io::solution_to_json(sol.S, sol.theta);

    json asym = good;
    asym["entries"][0][1] = "9/7";  // mirror not updated
    CHECK_THROWS_AS(ctw::io::solution_from_json(asym), ctw::StructuralError);

    json diag = good;
    diag["entries"][0][0] = "1";
    CHECK_THROWS_AS(ctw::io::solution_from_json(diag), ctw::StructuralError);

    json shape = good;
    shape["entries"][0].erase(8);
    CHECK_THROWS_AS(ctw::io::solution_from_json(shape), ctw::StructuralError);

    json mode = good;
    mode["arithmetic"] = "decimal";
    CHECK_THROWS_AS(ctw::io::solution_from_json(mode), ctw::StructuralError);

    json badnum = good;
    badnum["entries"][0][1] = "x/y";
    badnum["entries"][1][0] = "x/y";
    CHECK_THROWS_AS(ctw::io::solution_from_json(badnum), std::invalid_argument);

    CHECK_THROWS(ctw::io::solution_from_json(json::parse("{\"n\": 2}")));
}

TEST_CASE("graph round trip with sorted 0-based edges") {
    ctw::Graph g = ctw::kneser2(5);
    json j = ctw::io::graph_to_json(g);
    CHECK(j["n"] == 10);
    CHECK((int)j["edges"].size() == g.edge_count());
    // edges sorted lexicographically with i < j
    std::pair<int, int> prev{-1, -1};
    for (const auto& e : j["edges"]) {
        std::pair<int, int> cur{e[0].get<int>(), e[1].get<int>()};
        CHECK(cur.first < cur.second);
        CHECK(prev < cur);
        prev = cur;
    }
    ctw::Graph back = ctw::io::graph_from_json(j);
    CHECK(back.adj == g.adj);

    CHECK_THROWS_AS(ctw::io::graph_from_json(json::parse("{\"n\":3,\"edges\":[[0,3]]}")),
                    ctw::StructuralError);
    CHECK_THROWS_AS(ctw::io::graph_from_json(json::parse("{\"n\":3,\"edges\":[[1,1]]}")),
                    ctw::StructuralError);
}

TEST_CASE("tensor round trip") {
    ctw::DiagCurvature<double> r(4);
    r.set(0, 1, 1.0);
    r.set(2, 3, 0.5);
    json j = ctw::io::tensor_to_json(r);
    CHECK(j["n"] == 4);
    auto back = ctw::io::tensor_from_json(j);
    CHECK(back == r);
    CHECK_THROWS_AS(ctw::io::tensor_from_json(json::parse("{\"n\":2,\"r\":[[0,1],[2,0]]}")),
                    ctw::StructuralError);
}

TEST_CASE("file save and load") {
    json j{{"k", 42}};
    ctw::io::save_file("io_test_tmp.json", j);
    CHECK(ctw::io::load_file("io_test_tmp.json") == j);
    CHECK_THROWS_AS(ctw::io::load_file("does_not_exist.json"), std::runtime_error);
}
