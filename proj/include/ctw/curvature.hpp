#pragma once

#include <vector>

#include "ctw/matrix_core.hpp"

namespace ctw {

/// Diagonal algebraic curvature tensor: r_{i,j} is the eigenvalue of R on
/// e_i ^ e_j. Same storage invariants as a solution matrix (symmetric,
/// diagonal unused and kept 0).
template <class T>
using DiagCurvature = SymMatrix<T>;

/// (R#T)_{i,j} = 1/2 sum_k (r_{i,k} t_{j,k} + t_{i,k} r_{j,k}).
template <class T>
DiagCurvature<T> jordan_sharp(const DiagCurvature<T>& r, const DiagCurvature<T>& t) {
    if (r.n() != t.n()) throw std::invalid_argument("jordan_sharp: size mismatch");
    int n = r.n();
    DiagCurvature<T> out(n);
    T half = T(1) / T(2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            T s(0);
            for (int k = 0; k < n; ++k)
                s += r.at(i, k) * t.at(j, k) + t.at(i, k) * r.at(j, k);
            out.set(i, j, half * s);
        }
    return out;
}

/// First-principles # via the trace formula over so(n): structure constants
/// come from explicit skew matrices, no hand-derived sign table. Serves as
/// the independent oracle for jordan_sharp. n <= 8. If max_cross is given it
/// receives the largest |<(R#T)X_a, X_b>| over distinct basis planes a != b
/// (zero for diagonal inputs).
DiagCurvature<double> sharp_bruteforce(const DiagCurvature<double>& r,
                                       const DiagCurvature<double>& t,
                                       double* max_cross = nullptr);

/// Ric(R)_i = sum_k r_{i,k}.
template <class T>
std::vector<T> ricci_diag(const DiagCurvature<T>& r) {
    int n = r.n();
    std::vector<T> out(n, T(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) out[i] += r.at(i, k);
    return out;
}

/// s(R) = sum_{i != j} r_{i,j} = 2 tr(R).
template <class T>
T scalar_curvature(const DiagCurvature<T>& r) {
    T s(0);
    for (const T& v : ricci_diag(r)) s += v;
    return s;
}

template <class T>
struct EinsteinDecomposition {
    T r0;                 // s(R) / (n(n-1))
    DiagCurvature<T> w;   // traceless part, W_{i,j} = r_{i,j} - r0
    bool is_einstein;     // all row sums of W vanish
};

template <class T>
EinsteinDecomposition<T> einstein_decompose(const DiagCurvature<T>& r, double tol = 1e-9) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (tol != 0.0) throw std::invalid_argument("einstein_decompose: exact mode requires tol = 0");
    }
    int n = r.n();
    T r0 = scalar_curvature(r) / (T(n) * T(n - 1));
    DiagCurvature<T> w(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) w.set(i, j, r.at(i, j) - r0);
    bool einstein = true;
    for (const T& rowsum : ricci_diag(w))
        if (std::abs(detail::as_double(rowsum)) > tol) einstein = false;
    return {r0, std::move(w), einstein};
}

/// Max residual of r_{i,j}^2 + sum_k r_{i,k} r_{k,j} - theta r_{i,j} over
/// i < j; zero exactly when R^2 + R# = theta R.
template <class T>
double tensor_fixed_point_residual(const DiagCurvature<T>& r, const T& theta) {
    int n = r.n();
    double maxres = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            T s(0);
            for (int k = 0; k < n; ++k) s += r.at(i, k) * r.at(k, j);
            T res = r.at(i, j) * r.at(i, j) + s - theta * r.at(i, j);
            double d = std::abs(detail::as_double(res));
            if (d > maxres) maxres = d;
        }
    return maxres;
}

/// Tensor with r_{i,j} = r + S_{i,j} for a verified solution (S, theta);
/// r = theta/(n-1) by default, r = 0 on request (both roots of
/// (n-1) r^2 = theta r when theta = 0).
template <class T>
DiagCurvature<T> solution_to_tensor(const SymMatrix<T>& s, const T& theta,
                                    bool zero_r_branch = false, double tol = 1e-9) {
    double vtol = std::is_same_v<T, Rational> ? 0.0 : tol;
    auto rep = verify_basic(s, vtol);
    if (!rep.is_solution)
        throw std::invalid_argument("solution_to_tensor: S does not solve the basic equations");
    int n = s.n();
    T r = zero_r_branch ? T(0) : theta / T(n - 1);
    DiagCurvature<T> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.set(i, j, r + s.at(i, j));
    return out;
}

/// Curvature tensor of S^k(rho) x S^l(sigma) with sigma fixed by the
/// Einstein condition (k-1)/rho^2 = (l-1)/sigma^2. Plane eigenvalues:
/// 1/rho^2 inside the first factor, 1/sigma^2 inside the second, 0 mixed.
template <class T>
DiagCurvature<T> sphere_product_tensor(int k, int l, const T& rho_sq) {
    if (k < 2 || l < 2) throw std::invalid_argument("sphere_product_tensor: need k, l >= 2");
    T inv_rho_sq = T(1) / rho_sq;
    T inv_sigma_sq = T(k - 1) / (rho_sq * T(l - 1));
    DiagCurvature<T> out(k + l);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) out.set(i, j, inv_rho_sq);
    for (int i = k; i < k + l; ++i)
        for (int j = i + 1; j < k + l; ++j) out.set(i, j, inv_sigma_sq);
    return out;
}

}  // namespace ctw
