#include "ctw/io.hpp"

#include <fstream>

namespace ctw::io {

json solution_to_json(const SymMatrix<Rational>& s, const Rational& theta, json metadata) {
    json rows = json::array();
    for (int i = 0; i < s.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.n(); ++j) row.push_back(s.at(i, j).str());
        rows.push_back(std::move(row));
    }
    json out{{"n", s.n()}, {"arithmetic", "rational"}, {"entries", std::move(rows)},
             {"theta", theta.str()}};
    if (!metadata.is_null()) out["metadata"] = std::move(metadata);
    return out;
}

json solution_to_json(const SymMatrix<double>& s, double theta, json metadata) {
    json rows = json::array();
    for (int i = 0; i < s.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.n(); ++j) row.push_back(s.at(i, j));
        rows.push_back(std::move(row));
    }
    json out{{"n", s.n()}, {"arithmetic", "float"}, {"entries", std::move(rows)},
             {"theta", theta}};
    if (!metadata.is_null()) out["metadata"] = std::move(metadata);
    return out;
}

SolutionDoc solution_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 1) throw StructuralError("solution: n must be >= 1");
    std::string mode = j.at("arithmetic").get<std::string>();
    const json& rows = j.at("entries");
    if ((int)rows.size() != n) throw StructuralError("solution: row count != n");

    SolutionDoc doc;
    doc.metadata = j.value("metadata", json());
    if (mode == "rational") {
        std::vector<Rational> e;
        e.reserve((std::size_t)n * n);
        for (const json& row : rows) {
            if ((int)row.size() != n) throw StructuralError("solution: column count != n");
            for (const json& v : row) e.push_back(Rational::parse(v.get<std::string>()));
        }
        doc.rational = true;
        doc.rs = SymMatrix<Rational>::from_entries(n, std::move(e));
        doc.rtheta = Rational::parse(j.at("theta").get<std::string>());
    } else if (mode == "float") {
        std::vector<double> e;
        e.reserve((std::size_t)n * n);
        for (const json& row : rows) {
            if ((int)row.size() != n) throw StructuralError("solution: column count != n");
            for (const json& v : row) e.push_back(v.get<double>());
        }
        doc.rational = false;
        doc.fs = SymMatrix<double>::from_entries(n, std::move(e));
        doc.ftheta = j.at("theta").get<double>();
    } else {
        throw StructuralError("solution: arithmetic must be \"rational\" or \"float\"");
    }
    return doc;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) edges.push_back(json::array({i, j}));
    return {{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 1) throw StructuralError("graph: n must be >= 1");
    Graph g(n);
    for (const json& e : j.at("edges")) {
        if (e.size() != 2) throw StructuralError("graph: edge must be a pair");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw StructuralError("graph: edge endpoints out of range");
        g.add_edge(a, b);
    }
    return g;
}

json tensor_to_json(const DiagCurvature<double>& r) {
    json rows = json::array();
    for (int i = 0; i < r.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < r.n(); ++j) row.push_back(r.at(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", r.n()}, {"r", std::move(rows)}};
}

DiagCurvature<double> tensor_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 1) throw StructuralError("tensor: n must be >= 1");
    const json& rows = j.at("r");
    if ((int)rows.size() != n) throw StructuralError("tensor: row count != n");
    std::vector<double> e;
    e.reserve((std::size_t)n * n);
    for (const json& row : rows) {
        if ((int)row.size() != n) throw StructuralError("tensor: column count != n");
        for (const json& v : row) e.push_back(v.get<double>());
    }
    return DiagCurvature<double>::from_entries(n, std::move(e));
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    return json::parse(in);
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace ctw::io
