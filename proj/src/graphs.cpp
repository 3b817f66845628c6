#include "ctw/graphs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ctw/kernels.hpp"

namespace ctw {

Graph Graph::from_adjacency(int n, std::vector<std::uint8_t> a) {
    if (n < 1 || (int)a.size() != n * n) throw StructuralError("Graph: wrong adjacency size");
    for (int i = 0; i < n; ++i) {
        if (a[(std::size_t)i * n + i]) throw StructuralError("Graph: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            std::uint8_t v = a[(std::size_t)i * n + j];
            if (v > 1) throw StructuralError("Graph: entries must be 0/1");
            if (v != a[(std::size_t)j * n + i]) throw StructuralError("Graph: not symmetric");
        }
    }
    Graph g(n);
    g.adj = std::move(a);
    return g;
}

long long Graph::edge_count() const {
    long long c = 0;
    for (auto v : adj) c += v;
    return c / 2;
}

bool Graph::is_empty() const { return edge_count() == 0; }

bool Graph::is_complete() const { return edge_count() == (long long)n * (n - 1) / 2; }

std::optional<SrgParams> srg_params_of(const Graph& g, std::pair<int, int>* witness) {
    int n = g.n;
    long long r = -1;
    for (int i = 0; i < n; ++i) {
        long long deg = 0;
        for (int j = 0; j < n; ++j) deg += g.has_edge(i, j);
        if (r < 0) r = deg;
        if (deg != r) {
            if (witness) *witness = {0, i};
            return std::nullopt;
        }
    }
    // common neighbor counts from A^2
    std::vector<std::int64_t> a(g.adj.begin(), g.adj.end());
    std::vector<std::int64_t> c((std::size_t)n * n);
    kernels::matmul_i64(a.data(), a.data(), c.data(), n);

    long long lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long common = c[(std::size_t)i * n + j];
            if (g.has_edge(i, j)) {
                if (lambda < 0) lambda = common;
                if (common != lambda) {
                    if (witness) *witness = {i, j};
                    return std::nullopt;
                }
            } else {
                if (mu < 0) mu = common;
                if (common != mu) {
                    if (witness) *witness = {i, j};
                    return std::nullopt;
                }
            }
        }
    // permissive degenerate conventions
    if (lambda < 0) lambda = 0;
    if (mu < 0) mu = 0;
    return SrgParams{n, r, lambda, mu};
}

Graph disjoint_complete(int m, int l) {
    if (m < 1 || l < 2) throw std::invalid_argument("disjoint_complete: need m >= 1, l >= 2");
    Graph g(m * l);
    for (int b = 0; b < m; ++b)
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) g.add_edge(b * l + i, b * l + j);
    return g;
}

Graph kneser2(int m) {
    if (m < 4) throw std::invalid_argument("kneser2: need m >= 4");
    std::vector<std::pair<int, int>> verts;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) verts.push_back({i, j});
    Graph g((int)verts.size());
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            auto [a, b] = verts[u];
            auto [c, d] = verts[v];
            if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
    return g;
}

Graph rook(int m) {
    if (m < 2) throw std::invalid_argument("rook: need m >= 2");
    Graph g(m * m);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int i = u / m, j = u % m, i2 = v / m, j2 = v % m;
            if (i == i2 || j == j2) g.add_edge(u, v);
        }
    return g;
}

Graph paley_graph(const FieldTable& f) {
    int q = f.q();
    if (q % 4 != 1) throw std::invalid_argument("paley_graph: need q = 1 mod 4");
    Graph g(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (f.is_square(f.sub(b, a))) g.add_edge(a, b);
    return g;
}

Graph paley_graph(int q) { return paley_graph(FieldTable::make(q)); }

Graph gq_symplectic(int q) {
    FieldTable f = FieldTable::make(q);
    // projective points of F_q^4, representative has first nonzero coord 1,
    // enumerated lexicographically
    std::vector<std::array<int, 4>> pts;
    auto emit = [&](std::array<int, 4> v) { pts.push_back(v); };
    for (int c1 = 0; c1 < q; ++c1)
        for (int c2 = 0; c2 < q; ++c2)
            for (int c3 = 0; c3 < q; ++c3) emit({1, c1, c2, c3});
    for (int c2 = 0; c2 < q; ++c2)
        for (int c3 = 0; c3 < q; ++c3) emit({0, 1, c2, c3});
    for (int c3 = 0; c3 < q; ++c3) emit({0, 0, 1, c3});
    emit({0, 0, 0, 1});

    auto form = [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        // omega(x,y) = x0 y1 - x1 y0 + x2 y3 - x3 y2
        int s = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        s = f.add(s, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
        return s;
    };

    Graph g((int)pts.size());
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (form(pts[u], pts[v]) == 0) g.add_edge(u, v);
    return g;
}

Graph pds_subgroups(int q, int l) {
    FieldTable f = FieldTable::make(q);
    if (l < 1 || l > q + 1) throw std::invalid_argument("pds_subgroups: need 1 <= l <= q+1");
    // connection set: union of lines y = m_i x (slopes = first l field
    // elements in index order), vertical line when l = q+1
    std::vector<std::uint8_t> conn((std::size_t)q * q, 0);
    int nslopes = std::min(l, q);
    for (int s = 0; s < nslopes; ++s)
        for (int x = 1; x < q; ++x) conn[(std::size_t)x * q + f.mul(s, x)] = 1;
    if (l == q + 1)
        for (int y = 1; y < q; ++y) conn[y] = 1;  // {(0, y)}

    Graph g(q * q);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int da = f.sub(v / q, u / q), db = f.sub(v % q, u % q);
            if (conn[(std::size_t)da * q + db]) g.add_edge(u, v);
        }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

SrgSolution srg_to_solution(const Graph& g, const SrgParams& p) {
    if (g.is_empty() || g.is_complete())
        throw std::domain_error("srg_to_solution: degenerate graph (A = 0 or A = K)");
    int n = g.n;
    for (int i = 0; i < n; ++i) {
        long long deg = 0;
        for (int j = 0; j < n; ++j) deg += g.has_edge(i, j);
        if (deg != p.r) throw std::invalid_argument("srg_to_solution: degree mismatch with params");
    }
    Rational y(p.r, 1 - (long long)n);
    SymMatrix<Rational> s(n);
    Rational adj = Rational(1) + y;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.set(i, j, g.has_edge(i, j) ? adj : y);
    return {std::move(s), Rational(p.theta()), p};
}

SrgSolution srg_to_solution(const Graph& g) {
    auto p = srg_params_of(g);
    if (!p) throw std::domain_error("srg_to_solution: graph is not strongly regular");
    return srg_to_solution(g, *p);
}

Rational srg_hat_theta_sq(const SrgParams& p) {
    Rational t(p.theta());
    return t * t * Rational(p.n - 1) / (Rational(p.n) * Rational(p.r) * Rational(p.rc()));
}

}  // namespace ctw
