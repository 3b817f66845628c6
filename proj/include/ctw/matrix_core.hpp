#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctw/kernels.hpp"
#include "ctw/rational.hpp"

namespace ctw {

/// Malformed matrix data (asymmetry, nonzero diagonal). Distinct from a
/// well-formed matrix that simply fails the equations.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVerifyDim = 20000;

/// Symmetric n*n matrix with zero diagonal, the carrier for solutions S.
template <class T>
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_((std::size_t)n * n, T(0)) {
        if (n < 1) throw std::invalid_argument("SymMatrix: n must be >= 1");
    }

    static SymMatrix from_entries(int n, std::vector<T> entries) {
        if ((int)entries.size() != n * n)
            throw StructuralError("SymMatrix: wrong entry count");
        SymMatrix m(n);
        m.a_ = std::move(entries);
        for (int i = 0; i < n; ++i) {
            if (m.a_[(std::size_t)i * n + i] != T(0))
                throw StructuralError("SymMatrix: nonzero diagonal");
            for (int j = i + 1; j < n; ++j)
                if (m.a_[(std::size_t)i * n + j] != m.a_[(std::size_t)j * n + i])
                    throw StructuralError("SymMatrix: not symmetric");
        }
        return m;
    }

    int n() const { return n_; }
    const T& at(int i, int j) const { return a_[(std::size_t)i * n_ + j]; }
    void set(int i, int j, const T& v) {
        if (i == j) {
            if (v != T(0)) throw StructuralError("SymMatrix: diagonal must stay zero");
            return;
        }
        a_[(std::size_t)i * n_ + j] = v;
        a_[(std::size_t)j * n_ + i] = v;
    }

    const std::vector<T>& entries() const { return a_; }

    bool is_zero() const {
        for (const T& v : a_)
            if (v != T(0)) return false;
        return true;
    }

    T norm_sq() const {
        T s(0);
        for (const T& v : a_) s += v * v;
        return s;
    }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    int n_;
    std::vector<T> a_;
};

template <class T>
struct SolutionReport {
    bool is_solution = false;
    T theta = T(0);          // canonicalized to 0 for S = 0
    std::vector<T> D;        // D_i = (S^2)_{i,i}
    T trace_d = T(0);        // = ||S||_2^2
    double hat_theta = 0.0;  // |theta| / sqrt(tr D), 0 for S = 0
    double max_residual = 0.0;
    std::optional<std::pair<int, int>> witness;  // first failing pair
};

namespace detail {

inline double as_double(const Rational& r) { return r.to_double(); }
inline double as_double(double d) { return d; }

inline std::vector<double> square(const SymMatrix<double>& s) {
    int n = s.n();
    std::vector<double> c((std::size_t)n * n);
    kernels::matmul_f64(s.entries().data(), s.entries().data(), c.data(), n);
    return c;
}

// Exact square of a rational matrix. Scales to a common denominator and runs
// the int64 kernel when everything fits; falls back to plain rational
// arithmetic otherwise.
inline std::vector<Rational> square(const SymMatrix<Rational>& s) {
    int n = s.n();
    const auto& a = s.entries();
    bool fast = true;
    long long lcm = 1;
    for (const auto& v : a) {
        long long d = v.den();
        __int128 l = (__int128)lcm / std::gcd(lcm, d) * d;
        if (l > (1LL << 30)) {
            fast = false;
            break;
        }
        lcm = (long long)l;
    }
    if (fast) {
        std::vector<std::int64_t> m((std::size_t)n * n);
        __int128 maxabs = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            __int128 v = (__int128)a[i].num() * (lcm / a[i].den());
            if (v > INT64_MAX || v < INT64_MIN) {
                fast = false;
                break;
            }
            m[i] = (std::int64_t)v;
            __int128 av = v < 0 ? -v : v;
            if (av > maxabs) maxabs = av;
        }
        if (fast && (__int128)n * maxabs * maxabs < ((__int128)1 << 62)) {
            std::vector<std::int64_t> c((std::size_t)n * n);
            kernels::matmul_i64(m.data(), m.data(), c.data(), n);
            std::vector<Rational> out((std::size_t)n * n);
            long long l2 = lcm * lcm;  // lcm <= 2^30
            for (std::size_t i = 0; i < c.size(); ++i) out[i] = Rational(c[i], l2);
            return out;
        }
    }
    std::vector<Rational> c((std::size_t)n * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a[(std::size_t)i * n + k];
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                c[(std::size_t)i * n + j] += aik * a[(std::size_t)k * n + j];
        }
    return c;
}

}  // namespace detail

/// Checks the four basic equations on S. Row sums must vanish and a single
/// theta must make S.S + S^2 = theta*S + D hold off the diagonal. In exact
/// mode tol must be 0; in float mode the comparison tolerance is
/// tol * (1 + ||S||_2^2).
template <class T>
SolutionReport<T> verify_basic(const SymMatrix<T>& s, double tol = 1e-9) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (tol != 0.0) throw std::invalid_argument("verify_basic: exact mode requires tol = 0");
    }
    int n = s.n();
    if (n > kMaxVerifyDim) throw std::invalid_argument("verify_basic: n exceeds cap");

    SolutionReport<T> rep;
    rep.trace_d = s.norm_sq();
    double scale = tol * (1.0 + detail::as_double(rep.trace_d));
    double maxres = 0.0;
    bool ok = true;
    std::optional<std::pair<int, int>> witness;

    for (int i = 0; i < n && ok; ++i) {
        T row(0);
        for (int j = 0; j < n; ++j) row += s.at(i, j);
        double r = std::abs(detail::as_double(row));
        if (r > maxres) maxres = r;
        if (r > scale) {
            ok = false;
            witness = {i, i};
        }
    }

    std::vector<T> sq;
    if (ok) {
        sq = detail::square(s);
        rep.D.resize(n);
        for (int i = 0; i < n; ++i) rep.D[i] = sq[(std::size_t)i * n + i];

        // theta from the largest off-diagonal entry
        int pi = -1, pj = -1;
        T best(0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                T v = s.at(i, j);
                if ((v < T(0) ? -v : v) > best) {
                    best = (v < T(0) ? -v : v);
                    pi = i;
                    pj = j;
                }
            }
        if (pi >= 0) {
            const T& p = s.at(pi, pj);
            rep.theta = (p * p + sq[(std::size_t)pi * n + pj]) / p;
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n; ++j) {
                T v = s.at(i, j);
                T res = v * v + sq[(std::size_t)i * n + j] - rep.theta * v;
                double r = std::abs(detail::as_double(res));
                if (r > maxres) maxres = r;
                if (r > scale) {
                    ok = false;
                    witness = {i, j};
                    break;
                }
            }
    }

    rep.is_solution = ok;
    rep.max_residual = maxres;
    rep.witness = witness;
    if (!ok) rep.theta = T(0);
    double td = detail::as_double(rep.trace_d);
    rep.hat_theta = td > 0 ? std::abs(detail::as_double(rep.theta)) / std::sqrt(td) : 0.0;
    return rep;
}

/// |theta| / ||S||_2 for S != 0.
template <class T>
double hat_theta(const T& theta, const SymMatrix<T>& s) {
    if (s.is_zero()) throw std::domain_error("hat_theta: undefined for S = 0");
    return std::abs(detail::as_double(theta)) / std::sqrt(detail::as_double(s.norm_sq()));
}

/// Exact hat_theta^2 = theta^2 / ||S||_2^2 (rational identities compare this).
template <class T>
T hat_theta_sq(const T& theta, const SymMatrix<T>& s) {
    if (s.is_zero()) throw std::domain_error("hat_theta_sq: undefined for S = 0");
    return theta * theta / s.norm_sq();
}

template <class T>
std::pair<SymMatrix<T>, T> scale(const SymMatrix<T>& s, const T& theta, const T& t) {
    SymMatrix<T> out(s.n());
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j) out.set(i, j, t * s.at(i, j));
    return {out, t * theta};
}

/// diag(S, 0) in dimension m > n; solves with the same theta.
template <class T>
SymMatrix<T> inflate(const SymMatrix<T>& s, int m) {
    if (m <= s.n()) throw std::invalid_argument("inflate: m must exceed n");
    SymMatrix<T> out(m);
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j) out.set(i, j, s.at(i, j));
    return out;
}

/// Block combination of two solutions: diag(S1/t1, S2/t2) with theta = 1 when
/// both thetas are nonzero, diag(S1, S2) with theta = 0 when both vanish.
template <class T>
std::pair<SymMatrix<T>, T> block_combine(const SymMatrix<T>& s1, const T& t1,
                                         const SymMatrix<T>& s2, const T& t2) {
    bool z1 = (t1 == T(0)), z2 = (t2 == T(0));
    if (z1 != z2)
        throw std::invalid_argument("block_combine: exactly one theta is zero (unsupported)");
    int n1 = s1.n(), n2 = s2.n();
    SymMatrix<T> out(n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            out.set(i, j, z1 ? s1.at(i, j) : s1.at(i, j) / t1);
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j)
            out.set(n1 + i, n1 + j, z2 ? s2.at(i, j) : s2.at(i, j) / t2);
    return {out, z1 ? T(0) : T(1)};
}

}  // namespace ctw
