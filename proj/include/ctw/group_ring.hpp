#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ctw/finite_field.hpp"
#include "ctw/graphs.hpp"
#include "ctw/matrix_core.hpp"
#include "ctw/rational.hpp"

namespace ctw {

/// Finite abelian group as a direct product of cyclic groups, additive
/// notation. Elements are mixed-radix indices with the first cyclic factor
/// least significant: (d0, d1, ...) -> d0 + o0*(d1 + o1*(...)).
struct FinAbelianGroup {
    std::vector<int> orders;
    int n = 1;

    explicit FinAbelianGroup(std::vector<int> ord) : orders(std::move(ord)) {
        for (int o : orders) {
            if (o < 2) throw std::invalid_argument("FinAbelianGroup: cyclic orders must be >= 2");
            n *= o;
        }
        if (orders.empty()) throw std::invalid_argument("FinAbelianGroup: empty factor list");
    }

    /// Additive group of F_q: (Z/p)^k with the field's element indexing.
    static FinAbelianGroup additive_of_field(const FieldTable& f) {
        return FinAbelianGroup(std::vector<int>((std::size_t)f.k(), f.p()));
    }

    int zero() const { return 0; }

    int add(int a, int b) const {
        int out = 0, mult = 1;
        for (int o : orders) {
            out += ((a + b) % o) * mult;
            a /= o;
            b /= o;
            mult *= o;
        }
        return out;
    }

    int neg(int a) const {
        int out = 0, mult = 1;
        for (int o : orders) {
            int d = a % o;
            a /= o;
            out += (d == 0 ? 0 : o - d) * mult;
            mult *= o;
        }
        return out;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    friend bool operator==(const FinAbelianGroup& a, const FinAbelianGroup& b) {
        return a.orders == b.orders;
    }
    friend bool operator!=(const FinAbelianGroup& a, const FinAbelianGroup& b) {
        return !(a == b);
    }
};

template <class T>
struct GroupFunction {
    FinAbelianGroup group;
    std::vector<T> values;  // indexed by element

    explicit GroupFunction(FinAbelianGroup g)
        : group(std::move(g)), values((std::size_t)group.n, T(0)) {}

    GroupFunction(FinAbelianGroup g, std::vector<T> v) : group(std::move(g)), values(std::move(v)) {
        if ((int)values.size() != group.n)
            throw std::invalid_argument("GroupFunction: value count mismatch");
    }

    T norm_sq() const {
        T s(0);
        for (const T& v : values) s += v * v;
        return s;
    }
    T sum() const {
        T s(0);
        for (const T& v : values) s += v;
        return s;
    }
    bool is_symmetric() const {
        for (int g = 0; g < group.n; ++g)
            if (values[g] != values[group.neg(g)]) return false;
        return true;
    }
};

/// (phi * psi)(g) = sum_h phi(h) psi(g - h), exact double loop.
template <class T>
GroupFunction<T> convolve(const GroupFunction<T>& a, const GroupFunction<T>& b) {
    if (a.group != b.group) throw std::invalid_argument("convolve: group mismatch");
    const auto& G = a.group;
    GroupFunction<T> out(G);
    for (int h = 0; h < G.n; ++h) {
        const T& ah = a.values[h];
        if (ah == T(0)) continue;
        for (int g2 = 0; g2 < G.n; ++g2)
            out.values[G.add(h, g2)] += ah * b.values[g2];
    }
    return out;
}

template <class T>
struct HopfReport {
    bool is_solution = false;
    bool symmetric = false;   // phi = phi^sigma
    bool eps_zero = false;    // phi(e) = 0
    bool sum_zero = false;    // <phi, 1> = 0
    T theta = T(0);
    T norm_sq = T(0);
    double hat_theta = 0.0;  // |theta| / (sqrt(n) ||phi||_2)
    double max_residual = 0.0;
};

/// Checks the four Hopf equations: symmetry, vanishing at e, zero sum, and
/// phi^2 + phi*phi = theta phi + ||phi||^2 delta_e for a single theta.
/// Failures are reported, never thrown. Exact mode requires tol = 0.
template <class T>
HopfReport<T> hopf_verify(const GroupFunction<T>& phi, double tol = 1e-9) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (tol != 0.0) throw std::invalid_argument("hopf_verify: exact mode requires tol = 0");
    }
    const auto& G = phi.group;
    HopfReport<T> rep;
    rep.norm_sq = phi.norm_sq();
    double maxres = 0.0;
    auto track = [&](const T& v) {
        double r = std::abs(detail::as_double(v));
        if (r > maxres) maxres = r;
        return r <= tol;
    };

    rep.symmetric = true;
    for (int g = 0; g < G.n; ++g) {
        if (!track(phi.values[g] - phi.values[G.neg(g)])) rep.symmetric = false;
    }
    rep.eps_zero = track(phi.values[G.zero()]);
    rep.sum_zero = track(phi.sum());

    bool quad_ok = false;
    if (rep.symmetric && rep.eps_zero && rep.sum_zero) {
        GroupFunction<T> conv = convolve(phi, phi);
        // theta from the largest |phi(g)|, g != e
        int pivot = -1;
        T best(0);
        for (int g = 1; g < G.n; ++g) {
            T v = phi.values[g] < T(0) ? -phi.values[g] : phi.values[g];
            if (v > best) {
                best = v;
                pivot = g;
            }
        }
        if (pivot >= 0) {
            const T& p = phi.values[pivot];
            rep.theta = (p * p + conv.values[pivot]) / p;
        }
        quad_ok = true;
        for (int g = 0; g < G.n; ++g) {
            T res = phi.values[g] * phi.values[g] + conv.values[g] - rep.theta * phi.values[g];
            if (g == G.zero()) res -= rep.norm_sq;
            if (!track(res)) quad_ok = false;
        }
    }

    rep.is_solution = rep.symmetric && rep.eps_zero && rep.sum_zero && quad_ok;
    if (!rep.is_solution) rep.theta = T(0);
    rep.max_residual = maxres;
    double ns = detail::as_double(rep.norm_sq);
    if (ns > 0)
        rep.hat_theta =
            std::abs(detail::as_double(rep.theta)) / (std::sqrt((double)G.n) * std::sqrt(ns));
    return rep;
}

/// S_{a,b} = phi(b - a). Requires phi symmetric with phi(e) = 0.
template <class T>
SymMatrix<T> phi_to_matrix(const GroupFunction<T>& phi) {
    const auto& G = phi.group;
    if (phi.values[G.zero()] != T(0))
        throw std::invalid_argument("phi_to_matrix: phi(e) != 0");
    if (!phi.is_symmetric())
        throw std::invalid_argument("phi_to_matrix: phi is not symmetric");
    SymMatrix<T> s(G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = a + 1; b < G.n; ++b) s.set(a, b, phi.values[G.sub(b, a)]);
    return s;
}

/// Strong-regularity check for a 0/1 indicator alpha via
/// alpha*alpha = (lambda-mu) alpha + mu + (r-mu) delta_e.
/// Throws on non-0/1 values; other failures return nullopt.
template <class T>
std::optional<SrgParams> srg_cayley_check(const GroupFunction<T>& alpha) {
    const auto& G = alpha.group;
    long long r = 0;
    for (const T& v : alpha.values) {
        if (v != T(0) && v != T(1))
            throw std::invalid_argument("srg_cayley_check: values must be 0/1");
        if (v == T(1)) ++r;
    }
    if (alpha.values[G.zero()] != T(0)) return std::nullopt;
    if (!alpha.is_symmetric()) return std::nullopt;

    GroupFunction<T> conv = convolve(alpha, alpha);
    long long lambda = -1, mu = -1;
    for (int g = 1; g < G.n; ++g) {
        // conv values are nonnegative integer counts
        long long c = (long long)detail::as_double(conv.values[g]);
        if (conv.values[g] != T(c)) return std::nullopt;
        if (alpha.values[g] == T(1)) {
            if (lambda < 0) lambda = c;
            if (c != lambda) return std::nullopt;
        } else {
            if (mu < 0) mu = c;
            if (c != mu) return std::nullopt;
        }
    }
    if (lambda < 0) lambda = 0;
    if (mu < 0) mu = 0;
    return SrgParams{G.n, r, lambda, mu};
}

struct CompositeSolution {
    GroupFunction<Rational> phi;
    Rational theta;
    Rational s, t;
};

/// phi = s chi_A + t chi_B + chi_C on Z/l x Z/m with the three closed-form
/// parameter rows; variant selects the row.
CompositeSolution composite_solution(int l, int m, int variant);

}  // namespace ctw
