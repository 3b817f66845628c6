#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctw/graphs.hpp"

namespace ctw {

/// One catalog entry: a solution (or parameter set) with its invariants.
/// `verified` is true exactly when the matrix was built and re-checked here.
struct CatalogRow {
    std::string family;
    std::vector<long long> params;
    int n = 0;
    std::optional<SrgParams> srg;
    std::string theta;
    double hat_theta = 0.0;
    bool verified = false;
};

/// Verified solutions covering every dimension n in [4, max_n], plus any
/// graph families landing in that range and one parameter-only row whose
/// matrix is too large to build. Throws std::invalid_argument if max_n < 4.
std::vector<CatalogRow> build_catalog(int max_n);

}  // namespace ctw
