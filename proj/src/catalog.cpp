#include "ctw/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "ctw/finite_field.hpp"

namespace ctw {

namespace {

void push_srg_row(std::vector<CatalogRow>& rows, const Graph& g, const std::string& family,
                  std::vector<long long> params) {
    auto sol = srg_to_solution(g);
    auto rep = verify_basic(sol.S, 0.0);
    rows.push_back({family, std::move(params), g.n, sol.params, sol.theta.str(), rep.hat_theta,
                    rep.is_solution});
}

}  // namespace

std::vector<CatalogRow> build_catalog(int max_n) {
    if (max_n < 4) throw std::invalid_argument("build_catalog: max_n must be >= 4");
    std::vector<CatalogRow> rows;
    for (int n = 4; n <= max_n; ++n) {
        bool prime = true;
        for (int l = 2; l * l <= n; ++l)
            if (n % l == 0) {
                prime = false;
                break;
            }
        if (!prime) {
            for (int l = 2; l <= n / 2; ++l)
                if (n % l == 0)
                    push_srg_row(rows, disjoint_complete(n / l, l), "disjoint-complete",
                                 {(long long)(n / l), l});
        } else {
            // prime dimension: inflate the (n-1)-dimensional solution, which
            // keeps theta and the norm, hence hat_theta != 0
            int m = (n - 1) / 2, l = 2;
            auto sol = srg_to_solution(disjoint_complete(m, l));
            auto big = inflate(sol.S, n);
            auto rep = verify_basic(big, 0.0);
            rows.push_back({"inflate(disjoint-complete)", {(long long)m, l, (long long)n}, n,
                            std::nullopt, sol.theta.str(), rep.hat_theta, rep.is_solution});
        }
        for (int m = 4; m * (m - 1) / 2 <= n; ++m)
            if (m * (m - 1) / 2 == n) push_srg_row(rows, kneser2(m), "kneser2", {m});
        for (int m = 2; m * m <= n; ++m)
            if (m * m == n) push_srg_row(rows, rook(m), "rook", {m});
        if (n % 4 == 1 && is_prime_power(n)) push_srg_row(rows, paley_graph(n), "paley", {n});
        for (int q = 2; (q + 1) * (q * q + 1) <= n; ++q)
            if (is_prime_power(q) && (q + 1) * (q * q + 1) == n)
                push_srg_row(rows, gq_symplectic(q), "gq-symplectic", {q});
        // l = q+1 takes every line and degenerates to the complete graph (S = 0)
        for (int q = 2; q * q <= n; ++q)
            if (q * q == n && is_prime_power(q))
                for (int l = 2; l <= q; ++l) push_srg_row(rows, pds_subgroups(q, l), "pds", {q, l});
    }
    // parameter-only row: the matrix is out of reach, the arithmetic is not
    {
        SrgParams fi{306936, 31671, 3510, 3240};
        Rational ht2 = srg_hat_theta_sq(fi);
        rows.push_back({"fischer-fi24 (parameters only)", {}, 0, fi, std::to_string(fi.theta()),
                        std::sqrt(ht2.to_double()), false});
    }
    return rows;
}

}  // namespace ctw
