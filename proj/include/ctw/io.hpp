#pragma once

#include <string>

#include <json.hpp>

#include "ctw/curvature.hpp"
#include "ctw/graphs.hpp"
#include "ctw/matrix_core.hpp"

namespace ctw::io {

using nlohmann::json;

/// Solution file contents in either arithmetic mode. Rational scalars are
/// serialized as "p/q" strings, float scalars as JSON numbers; entries are
/// the full row-major square (symmetry re-validated on load).
struct SolutionDoc {
    bool rational = true;
    SymMatrix<Rational> rs{1};
    Rational rtheta;
    SymMatrix<double> fs{1};
    double ftheta = 0.0;
    json metadata;  // optional construction metadata, passed through verbatim

    int n() const { return rational ? rs.n() : fs.n(); }
};

json solution_to_json(const SymMatrix<Rational>& s, const Rational& theta,
                      json metadata = json());
json solution_to_json(const SymMatrix<double>& s, double theta, json metadata = json());
SolutionDoc solution_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json tensor_to_json(const DiagCurvature<double>& r);
DiagCurvature<double> tensor_from_json(const json& j);

json load_file(const std::string& path);           // throws std::runtime_error on I/O,
void save_file(const std::string& path, const json& j);  // json exceptions on parse

}  // namespace ctw::io
