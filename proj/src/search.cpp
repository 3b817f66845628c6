#include "ctw/search.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ctw/characters.hpp"
#include "ctw/finite_field.hpp"
#include "ctw/log.hpp"
#include "ctw/matrix_core.hpp"

namespace ctw {

namespace {

double unit_double(std::mt19937_64& rng) {
    // uniform in [0,1) built from raw bits; avoids implementation-defined
    // distribution behavior so runs are reproducible across platforms
    return (double)(rng() >> 11) * 0x1.0p-53;
}

double sym_double(std::mt19937_64& rng) { return 2.0 * unit_double(rng) - 1.0; }

struct Problem {
    FinAbelianGroup group;
    std::vector<std::vector<double>> basis;     // columns, each length n
    std::vector<std::pair<int, int>> sym_pairs; // residual rows phi(g)-phi(-g); empty
                                                // when the basis enforces symmetry
};

Problem direct_problem(const FieldTable& f) {
    FinAbelianGroup G = FinAbelianGroup::additive_of_field(f);
    int n = G.n;
    // one coordinate per orbit {g, -g}, g != 0
    std::vector<std::vector<double>> orbit;
    std::vector<double> weight;
    for (int g = 1; g < n; ++g) {
        int h = G.neg(g);
        if (g > h) continue;
        std::vector<double> u((std::size_t)n, 0.0);
        u[(std::size_t)g] = 1.0;
        u[(std::size_t)h] = 1.0;  // same slot when g = -g
        orbit.push_back(std::move(u));
        weight.push_back(g == h ? 1.0 : 2.0);
    }
    // zero-sum combinations: w_0 u_j - w_j u_0
    Problem pr{std::move(G), {}, {}};
    for (std::size_t j = 1; j < orbit.size(); ++j) {
        std::vector<double> b((std::size_t)n, 0.0);
        for (int g = 0; g < n; ++g)
            b[(std::size_t)g] = weight[0] * orbit[j][(std::size_t)g] -
                                weight[j] * orbit[0][(std::size_t)g];
        pr.basis.push_back(std::move(b));
    }
    if (pr.basis.empty()) throw std::invalid_argument("search: feasible subspace is trivial");
    return pr;
}

Problem character_problem(const FieldTable& f, int restrict_order) {
    FinAbelianGroup G = FinAbelianGroup::additive_of_field(f);
    int n = G.n, qm1 = n - 1;
    Problem pr{std::move(G), {}, {}};
    for (int s = 1; s < qm1; ++s) {
        int cs = qm1 - s;
        if (s > cs) continue;  // conjugate orbit already emitted
        MultChar alpha(f, s);
        if (restrict_order != 0 && alpha.order() != restrict_order) continue;
        if (s == cs) {
            // self-conjugate: one real coefficient, phi += x * alpha
            std::vector<double> v((std::size_t)n, 0.0);
            for (int a = 1; a < n; ++a) v[(std::size_t)a] = alpha.value_c(a).real();
            pr.basis.push_back(std::move(v));
        } else {
            // conjugate pair with c = x1 + i x2:
            // phi += c alpha + conj(c) conj(alpha) = 2 x1 Re(alpha) - 2 x2 Im(alpha)
            std::vector<double> v1((std::size_t)n, 0.0), v2((std::size_t)n, 0.0);
            for (int a = 1; a < n; ++a) {
                auto z = alpha.value_c(a);
                v1[(std::size_t)a] = 2.0 * z.real();
                v2[(std::size_t)a] = -2.0 * z.imag();
            }
            pr.basis.push_back(std::move(v1));
            pr.basis.push_back(std::move(v2));
        }
    }
    if (pr.basis.empty())
        throw std::invalid_argument("search: no characters match the requested order");
    // phi(0) = 0 and sum phi = 0 hold per basis vector; symmetry does not
    for (int g = 1; g < n; ++g) {
        int h = pr.group.neg(g);
        if (g < h) pr.sym_pairs.emplace_back(g, h);
    }
    return pr;
}

// Gaussian elimination with partial pivoting; a is p x p row-major, b length p.
bool solve_linear(std::vector<double> a, std::vector<double> b, int p,
                  std::vector<double>& out) {
    for (int c = 0; c < p; ++c) {
        int piv = c;
        for (int r = c + 1; r < p; ++r)
            if (std::abs(a[(std::size_t)r * p + c]) > std::abs(a[(std::size_t)piv * p + c]))
                piv = r;
        if (std::abs(a[(std::size_t)piv * p + c]) < 1e-300) return false;
        if (piv != c) {
            for (int k = 0; k < p; ++k)
                std::swap(a[(std::size_t)c * p + k], a[(std::size_t)piv * p + k]);
            std::swap(b[(std::size_t)c], b[(std::size_t)piv]);
        }
        for (int r = c + 1; r < p; ++r) {
            double m = a[(std::size_t)r * p + c] / a[(std::size_t)c * p + c];
            if (m == 0.0) continue;
            for (int k = c; k < p; ++k) a[(std::size_t)r * p + k] -= m * a[(std::size_t)c * p + k];
            b[(std::size_t)r] -= m * b[(std::size_t)c];
        }
    }
    out.assign((std::size_t)p, 0.0);
    for (int r = p - 1; r >= 0; --r) {
        double s = b[(std::size_t)r];
        for (int k = r + 1; k < p; ++k) s -= a[(std::size_t)r * p + k] * out[(std::size_t)k];
        out[(std::size_t)r] = s / a[(std::size_t)r * p + r];
    }
    return true;
}

struct Evaluation {
    std::vector<double> f;  // residual vector
    std::vector<std::vector<double>> jac;  // rows matching f, length p+1 (y..., theta)
    double cost = 0.0;
};

// Residual rows: symmetry pairs, then the quadratic map at every g != 0,
// then the gauge ||phi||^2 - 1.
Evaluation evaluate(const Problem& pr, const std::vector<double>& y, double theta,
                    bool with_jacobian) {
    const auto& G = pr.group;
    int n = G.n;
    int p = (int)pr.basis.size();

    std::vector<double> phi((std::size_t)n, 0.0);
    for (int j = 0; j < p; ++j)
        for (int g = 0; g < n; ++g) phi[(std::size_t)g] += y[(std::size_t)j] * pr.basis[(std::size_t)j][(std::size_t)g];

    std::vector<double> conv((std::size_t)n, 0.0);
    for (int h = 0; h < n; ++h) {
        double ph = phi[(std::size_t)h];
        if (ph == 0.0) continue;
        for (int g2 = 0; g2 < n; ++g2) conv[(std::size_t)G.add(h, g2)] += ph * phi[(std::size_t)g2];
    }
    // d(phi*phi)/dy_j = 2 (B_j * phi)
    std::vector<std::vector<double>> bconv;
    if (with_jacobian) {
        bconv.assign((std::size_t)p, std::vector<double>((std::size_t)n, 0.0));
        for (int j = 0; j < p; ++j) {
            const auto& bj = pr.basis[(std::size_t)j];
            auto& out = bconv[(std::size_t)j];
            for (int h = 0; h < n; ++h) {
                double bh = bj[(std::size_t)h];
                if (bh == 0.0) continue;
                for (int g2 = 0; g2 < n; ++g2) out[(std::size_t)G.add(h, g2)] += bh * phi[(std::size_t)g2];
            }
        }
    }

    Evaluation ev;
    auto push = [&](double val, std::vector<double> row) {
        ev.f.push_back(val);
        if (with_jacobian) ev.jac.push_back(std::move(row));
    };

    for (auto [g, h] : pr.sym_pairs) {
        std::vector<double> row;
        if (with_jacobian) {
            row.assign((std::size_t)p + 1, 0.0);
            for (int j = 0; j < p; ++j)
                row[(std::size_t)j] = pr.basis[(std::size_t)j][(std::size_t)g] - pr.basis[(std::size_t)j][(std::size_t)h];
        }
        push(phi[(std::size_t)g] - phi[(std::size_t)h], std::move(row));
    }

    for (int g = 1; g < n; ++g) {
        double pg = phi[(std::size_t)g];
        std::vector<double> row;
        if (with_jacobian) {
            row.assign((std::size_t)p + 1, 0.0);
            for (int j = 0; j < p; ++j)
                row[(std::size_t)j] = 2.0 * pg * pr.basis[(std::size_t)j][(std::size_t)g] +
                                      2.0 * bconv[(std::size_t)j][(std::size_t)g] -
                                      theta * pr.basis[(std::size_t)j][(std::size_t)g];
            row[(std::size_t)p] = -pg;
        }
        push(pg * pg + conv[(std::size_t)g] - theta * pg, std::move(row));
    }

    {
        double ns = 0.0;
        for (double v : phi) ns += v * v;
        std::vector<double> row;
        if (with_jacobian) {
            row.assign((std::size_t)p + 1, 0.0);
            for (int j = 0; j < p; ++j) {
                double s = 0.0;
                for (int g = 0; g < n; ++g) s += phi[(std::size_t)g] * pr.basis[(std::size_t)j][(std::size_t)g];
                row[(std::size_t)j] = 2.0 * s;
            }
        }
        push(ns - 1.0, std::move(row));
    }

    for (double v : ev.f) ev.cost += v * v;
    ev.cost *= 0.5;
    return ev;
}

SearchResult run(const SearchConfig& cfg, const Problem& pr) {
    if (cfg.starts < 1) throw std::invalid_argument("search: starts must be >= 1");
    if (cfg.residual_target <= 0)
        throw std::invalid_argument("search: residual_target must be > 0");
    const auto& G = pr.group;
    int n = G.n;
    int p = (int)pr.basis.size();
    int nv = p + 1;

    SearchResult best{GroupFunction<double>(G), 0.0, 0.0, false, {}, 0};
    double best_key = std::numeric_limits<double>::infinity();

    for (int start = 0; start < cfg.starts; ++start) {
        std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (unsigned long long)(start + 1)));
        std::vector<double> y((std::size_t)p);
        for (double& v : y) v = sym_double(rng);
        double theta = 2.0 * sym_double(rng);
        // rough gauge at the start so the first iterates are well scaled
        {
            double ns = 0.0;
            for (int g = 0; g < n; ++g) {
                double s = 0.0;
                for (int j = 0; j < p; ++j) s += y[(std::size_t)j] * pr.basis[(std::size_t)j][(std::size_t)g];
                ns += s * s;
            }
            double nrm = std::sqrt(ns);
            if (nrm > 1e-12)
                for (double& v : y) v /= nrm;
        }

        double lambda = 1e-3;
        Evaluation ev = evaluate(pr, y, theta, true);
        for (int iter = 0; iter < cfg.max_iters; ++iter) {
            int m = (int)ev.f.size();
            // normal equations with Marquardt scaling
            std::vector<double> jtj((std::size_t)nv * nv, 0.0), jtf((std::size_t)nv, 0.0);
            for (int r = 0; r < m; ++r) {
                const auto& row = ev.jac[(std::size_t)r];
                for (int a = 0; a < nv; ++a) {
                    jtf[(std::size_t)a] += row[(std::size_t)a] * ev.f[(std::size_t)r];
                    for (int b = a; b < nv; ++b)
                        jtj[(std::size_t)a * nv + b] += row[(std::size_t)a] * row[(std::size_t)b];
                }
            }
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < a; ++b) jtj[(std::size_t)a * nv + b] = jtj[(std::size_t)b * nv + a];

            bool stepped = false;
            for (int tries = 0; tries < 25 && !stepped; ++tries) {
                std::vector<double> a = jtj;
                for (int d = 0; d < nv; ++d)
                    a[(std::size_t)d * nv + d] += lambda * (jtj[(std::size_t)d * nv + d] + 1e-12);
                std::vector<double> rhs((std::size_t)nv);
                for (int d = 0; d < nv; ++d) rhs[(std::size_t)d] = -jtf[(std::size_t)d];
                std::vector<double> delta;
                if (solve_linear(std::move(a), std::move(rhs), nv, delta)) {
                    std::vector<double> y2 = y;
                    for (int j = 0; j < p; ++j) y2[(std::size_t)j] += delta[(std::size_t)j];
                    double theta2 = theta + delta[(std::size_t)p];
                    Evaluation ev2 = evaluate(pr, y2, theta2, true);
                    if (ev2.cost < ev.cost) {
                        y = std::move(y2);
                        theta = theta2;
                        ev = std::move(ev2);
                        lambda = std::max(lambda * 0.5, 1e-14);
                        stepped = true;
                    }
                }
                if (!stepped) lambda *= 4.0;
            }
            if (!stepped) break;
            if (ev.cost < 0.5 * cfg.residual_target * cfg.residual_target) break;
        }

        // assemble, enforce exact symmetry and the unit gauge, re-verify
        GroupFunction<double> phi(G);
        for (int j = 0; j < p; ++j)
            for (int g = 0; g < n; ++g)
                phi.values[(std::size_t)g] += y[(std::size_t)j] * pr.basis[(std::size_t)j][(std::size_t)g];
        for (int g = 1; g < n; ++g) {
            int h = G.neg(g);
            if (g < h) {
                double avg = 0.5 * (phi.values[(std::size_t)g] + phi.values[(std::size_t)h]);
                phi.values[(std::size_t)g] = phi.values[(std::size_t)h] = avg;
            }
        }
        phi.values[0] = 0.0;
        double nrm = std::sqrt(phi.norm_sq());
        if (nrm < 1e-12) continue;  // collapsed start
        for (double& v : phi.values) v /= nrm;
        theta /= nrm;

        auto rep = hopf_verify(phi, cfg.residual_target);
        bool ok = rep.is_solution;
        if (ok) {
            auto s = phi_to_matrix(phi);
            auto mrep = verify_basic(s, cfg.residual_target);
            ok = mrep.is_solution;
        }
        double key = rep.max_residual;
        if (key < best_key) {
            best_key = key;
            best.best_phi = phi;
            best.best_theta = ok ? rep.theta : theta;
            best.residual = rep.max_residual;
            best.succeeded = ok;
        }
        best.starts_used = start + 1;
        if (ok) {
            log::info("search q=" + std::to_string(cfg.q) + ": converged at start " +
                      std::to_string(start) + ", residual " + std::to_string(rep.max_residual));
            break;
        }
    }

    for (double v : best.best_phi.values) {
        double binned = std::round(v * 1e6) / 1e6;
        if (binned == 0.0) binned = 0.0;  // collapse -0
        best.distinct_value_histogram[binned]++;
    }
    return best;
}

}  // namespace

SearchResult search_hopf(const SearchConfig& cfg) {
    if (cfg.q < 4 || !is_prime_power(cfg.q))
        throw std::invalid_argument("search_hopf: q must be a prime power >= 4");
    FieldTable f = FieldTable::make(cfg.q);
    return run(cfg, direct_problem(f));
}

SearchResult search_character_basis(const SearchConfig& cfg) {
    if (cfg.q < 4 || !is_prime_power(cfg.q))
        throw std::invalid_argument("search_character_basis: q must be a prime power >= 4");
    FieldTable f = FieldTable::make(cfg.q);
    return run(cfg, character_problem(f, cfg.restrict_char_order));
}

SearchResult run_search(const SearchConfig& cfg) {
    return cfg.mode == SearchMode::Direct ? search_hopf(cfg) : search_character_basis(cfg);
}

std::string mode_name(SearchMode m) {
    return m == SearchMode::Direct ? "direct" : "character-basis";
}

}  // namespace ctw
