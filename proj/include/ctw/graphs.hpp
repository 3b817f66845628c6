#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ctw/finite_field.hpp"
#include "ctw/matrix_core.hpp"
#include "ctw/rational.hpp"

namespace ctw {

/// Simple graph as a dense 0/1 adjacency matrix.
struct Graph {
    int n = 0;
    std::vector<std::uint8_t> adj;  // n*n, symmetric, zero diagonal

    explicit Graph(int n_) : n(n_), adj((std::size_t)n_ * n_, 0) {}

    static Graph from_adjacency(int n, std::vector<std::uint8_t> a);

    bool has_edge(int i, int j) const { return adj[(std::size_t)i * n + j] != 0; }
    void add_edge(int i, int j) {
        adj[(std::size_t)i * n + j] = 1;
        adj[(std::size_t)j * n + i] = 1;
    }
    long long edge_count() const;
    bool is_empty() const;
    bool is_complete() const;
};

struct SrgParams {
    long long n = 0, r = 0, lambda = 0, mu = 0;

    long long rc() const { return n - r - 1; }
    /// mu (n-r-1) = r (r-lambda-1)
    bool relation_holds() const { return mu * (n - r - 1) == r * (r - lambda - 1); }
    long long theta() const { return lambda - mu + 1; }

    friend bool operator==(const SrgParams& a, const SrgParams& b) {
        return a.n == b.n && a.r == b.r && a.lambda == b.lambda && a.mu == b.mu;
    }
};

/// Brute-force strong-regularity test: constant degree and constant common
/// neighbor counts over all pairs. Degenerate graphs (r = 0, complete)
/// report lambda resp. mu as 0. On failure returns nullopt and, if given,
/// records a witnessing pair.
std::optional<SrgParams> srg_params_of(const Graph& g, std::pair<int, int>* witness = nullptr);

/// Disjoint union of m complete graphs on l vertices: srg(ml, l-1, l-2, 0).
Graph disjoint_complete(int m, int l);

/// Kneser graph K(m,2): 2-subsets of {1..m} in lexicographic order,
/// adjacent iff disjoint. m >= 4.
Graph kneser2(int m);

/// Rook's graph on an m x m board, vertex (i,j) -> index i*m + j.
Graph rook(int m);

/// Paley graph on F_q, q = 1 mod 4. Vertices in field element-index order;
/// a ~ b iff b - a is a nonzero square.
Graph paley_graph(const FieldTable& f);
Graph paley_graph(int q);

/// Collinearity graph of the symplectic generalized quadrangle W(q):
/// projective points of F_q^4, adjacency = orthogonality under the standard
/// symplectic form. srg((q+1)(q^2+1), q(q+1), q-1, q+1).
Graph gq_symplectic(int q);

/// Cayley graph of F_q + F_q over the union of l lines through the origin
/// (slopes taken in element-index order; l = q+1 adds the vertical line).
/// srg(q^2, l(q-1), l^2-3l+q, l^2-l).
Graph pds_subgroups(int q, int l);

Graph complement(const Graph& g);

struct SrgSolution {
    SymMatrix<Rational> S;
    Rational theta;
    SrgParams params;
};

/// S = A + y K with y = r/(1-n); theta = lambda - mu + 1. The overload with
/// known parameters skips the O(n^3) parameter detection (degrees are still
/// checked).
SrgSolution srg_to_solution(const Graph& g);
SrgSolution srg_to_solution(const Graph& g, const SrgParams& params);

/// hat_theta^2 = (lambda-mu+1)^2 (n-1) / (n r r^c), exact.
Rational srg_hat_theta_sq(const SrgParams& p);

}  // namespace ctw
