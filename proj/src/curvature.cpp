#include "ctw/curvature.hpp"

#include <cmath>

namespace ctw {

namespace {

// X_{ij} = e_i e_j^T - e_j e_i^T for i < j, the standard so(n) basis with
// <X, Y> = -tr(XY), so <X_{ij}, X_{ij}> = 2.
struct SoBasis {
    int n, dim;
    std::vector<std::pair<int, int>> planes;       // index -> (i, j), i < j
    std::vector<std::vector<double>> ad;           // ad[a] is dim x dim, flattened

    explicit SoBasis(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) planes.emplace_back(i, j);
        dim = (int)planes.size();

        auto skew = [&](int a) {
            std::vector<double> m((std::size_t)n * n, 0.0);
            auto [i, j] = planes[(std::size_t)a];
            m[(std::size_t)i * n + j] = 1.0;
            m[(std::size_t)j * n + i] = -1.0;
            return m;
        };

        ad.assign((std::size_t)dim, std::vector<double>((std::size_t)dim * dim, 0.0));
        for (int a = 0; a < dim; ++a) {
            std::vector<double> xa = skew(a);
            for (int b = 0; b < dim; ++b) {
                std::vector<double> xb = skew(b);
                // C = [X_a, X_b]; coefficient of X_{(i,j)} in C is C_{ij}
                std::vector<double> c((std::size_t)n * n, 0.0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double v = 0.0;
                        for (int k = 0; k < n; ++k)
                            v += xa[(std::size_t)i * n + k] * xb[(std::size_t)k * n + j] -
                                 xb[(std::size_t)i * n + k] * xa[(std::size_t)k * n + j];
                        c[(std::size_t)i * n + j] = v;
                    }
                for (int g = 0; g < dim; ++g) {
                    auto [i, j] = planes[(std::size_t)g];
                    ad[(std::size_t)a][(std::size_t)g * dim + b] = c[(std::size_t)i * n + j];
                }
            }
        }
    }
};

}  // namespace

DiagCurvature<double> sharp_bruteforce(const DiagCurvature<double>& r,
                                       const DiagCurvature<double>& t,
                                       double* max_cross) {
    if (r.n() != t.n()) throw std::invalid_argument("sharp_bruteforce: size mismatch");
    int n = r.n();
    if (n > 8) throw std::invalid_argument("sharp_bruteforce: n > 8 not supported");
    if (n < 2) throw std::invalid_argument("sharp_bruteforce: need n >= 2");

    SoBasis basis(n);
    int dim = basis.dim;
    std::vector<double> dr((std::size_t)dim), dt((std::size_t)dim);
    for (int a = 0; a < dim; ++a) {
        auto [i, j] = basis.planes[(std::size_t)a];
        dr[(std::size_t)a] = r.at(i, j);
        dt[(std::size_t)a] = t.at(i, j);
    }

    // <(R#T) X_a, X_b> / <X_a, X_a> via
    // (R#T)(X, Y) = -1/2 tr(R_tilde ad(X) T_tilde ad(Y)) with diagonal
    // R_tilde, T_tilde in the plane basis.
    auto pairing = [&](int a, int b) {
        const auto& ada = basis.ad[(std::size_t)a];
        const auto& adb = basis.ad[(std::size_t)b];
        double tr = 0.0;
        for (int x = 0; x < dim; ++x)
            for (int y = 0; y < dim; ++y)
                tr += dr[(std::size_t)x] * ada[(std::size_t)x * dim + y] * dt[(std::size_t)y] *
                      adb[(std::size_t)y * dim + x];
        return -0.5 * tr;
    };

    // pairing(a, a) is the plane eigenvalue: the factor <X_a, X_a> = 2 cancels
    // against the bilinear-form normalization (checked against id#id = (n-2)id).
    DiagCurvature<double> out(n);
    for (int a = 0; a < dim; ++a) {
        auto [i, j] = basis.planes[(std::size_t)a];
        out.set(i, j, pairing(a, a));
    }
    if (max_cross) {
        double mc = 0.0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                if (a != b) mc = std::max(mc, std::abs(pairing(a, b)));
        *max_cross = mc;
    }
    return out;
}

}  // namespace ctw
