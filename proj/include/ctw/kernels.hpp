#pragma once

#include <cstdint>

namespace ctw::kernels {

enum class Backend { Scalar, AVX2, NEON };

/// Backend picked at startup from CPU capabilities.
Backend active_backend();
const char* backend_name(Backend b);

/// Override the dispatch (used by the equivalence tests). Throws
/// std::invalid_argument if the requested backend is unavailable on this CPU.
void set_backend(Backend b);

/// Dense row-major n*n matrix product C = A*B in 64-bit integers.
/// The vectorized paths require all inputs to fit in int32; the dispatcher
/// checks this and falls back to the scalar kernel otherwise. The caller is
/// responsible for accumulator headroom (n * max|A| * max|B| must fit int64).
void matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n);

/// Dense row-major n*n matrix product C = A*B in doubles. All backends
/// accumulate in the same k-order, so results are bit-identical.
void matmul_f64(const double* a, const double* b, double* c, int n);

}  // namespace ctw::kernels
