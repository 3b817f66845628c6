#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctw/group_ring.hpp"

namespace ctw {

enum class SearchMode { Direct, CharacterBasis };

struct SearchConfig {
    int q = 0;                       // prime power >= 4
    int starts = 200;
    unsigned long long seed = 0;
    int max_iters = 500;
    double residual_target = 1e-10;
    SearchMode mode = SearchMode::Direct;
    int restrict_char_order = 0;     // character-basis mode: keep only characters
                                     // of exactly this order (0 = all)
};

struct SearchResult {
    GroupFunction<double> best_phi;
    double best_theta = 0.0;
    double residual = 0.0;           // independent hopf_verify max residual
    bool succeeded = false;
    std::map<double, int> distinct_value_histogram;  // phi values binned at 1e-6
    int starts_used = 0;
};

/// Multi-start damped least squares over the feasible subspace
/// (phi(0) = 0, phi(g) = phi(-g), sum phi = 0 enforced by the basis), gauge
/// ||phi||_2 = 1, theta free. Deterministic for fixed (q, seed, starts).
SearchResult search_hopf(const SearchConfig& cfg);

/// Same optimizer over phi = sum_{alpha != eps} c_alpha alpha with
/// c_conj(alpha) = conj(c_alpha); phi(0) = 0 and sum phi = 0 hold by
/// construction, symmetry enters the residual.
SearchResult search_character_basis(const SearchConfig& cfg);

/// Dispatch on cfg.mode.
SearchResult run_search(const SearchConfig& cfg);

std::string mode_name(SearchMode m);

}  // namespace ctw
