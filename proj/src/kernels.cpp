#include "ctw/kernels.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define CTW_X86 1
#elif defined(__ARM_NEON)
#include <arm_neon.h>
#define CTW_NEON 1
#endif

namespace ctw::kernels {

namespace {

void matmul_i64_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n) {
    for (int i = 0; i < n; ++i) {
        std::int64_t* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(std::int64_t) * n);
        for (int k = 0; k < n; ++k) {
            std::int64_t aik = a[(std::size_t)i * n + k];
            if (aik == 0) continue;
            const std::int64_t* brow = b + (std::size_t)k * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void matmul_f64_scalar(const double* a, const double* b, double* c, int n) {
    for (int i = 0; i < n; ++i) {
        double* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(double) * n);
        for (int k = 0; k < n; ++k) {
            double aik = a[(std::size_t)i * n + k];
            const double* brow = b + (std::size_t)k * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

bool fits_i32(const std::int64_t* v, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (v[i] > INT32_MAX || v[i] < INT32_MIN) return false;
    return true;
}

#if defined(CTW_X86)

__attribute__((target("avx2")))
void matmul_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n) {
    // Vector path needs int32-range inputs (mul_epi32 reads the low 32 bits).
    if (!fits_i32(a, (std::size_t)n * n) || !fits_i32(b, (std::size_t)n * n)) {
        matmul_i64_scalar(a, b, c, n);
        return;
    }
    for (int i = 0; i < n; ++i) {
        std::int64_t* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(std::int64_t) * n);
        for (int k = 0; k < n; ++k) {
            std::int64_t aik = a[(std::size_t)i * n + k];
            if (aik == 0) continue;
            const std::int64_t* brow = b + (std::size_t)k * n;
            __m256i av = _mm256_set1_epi64x(aik);
            int j = 0;
            for (; j + 4 <= n; j += 4) {
                __m256i bv = _mm256_loadu_si256((const __m256i*)(brow + j));
                __m256i cv = _mm256_loadu_si256((const __m256i*)(crow + j));
                cv = _mm256_add_epi64(cv, _mm256_mul_epi32(av, bv));
                _mm256_storeu_si256((__m256i*)(crow + j), cv);
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

__attribute__((target("avx2")))
void matmul_f64_avx2(const double* a, const double* b, double* c, int n) {
    for (int i = 0; i < n; ++i) {
        double* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(double) * n);
        for (int k = 0; k < n; ++k) {
            double aik = a[(std::size_t)i * n + k];
            const double* brow = b + (std::size_t)k * n;
            __m256d av = _mm256_set1_pd(aik);
            int j = 0;
            for (; j + 4 <= n; j += 4) {
                __m256d bv = _mm256_loadu_pd(brow + j);
                __m256d cv = _mm256_loadu_pd(crow + j);
                // mul+add (not fma) keeps rounding identical to the scalar kernel
                cv = _mm256_add_pd(cv, _mm256_mul_pd(av, bv));
                _mm256_storeu_pd(crow + j, cv);
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

#elif defined(CTW_NEON)

void matmul_i64_neon(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n) {
    if (!fits_i32(a, (std::size_t)n * n) || !fits_i32(b, (std::size_t)n * n)) {
        matmul_i64_scalar(a, b, c, n);
        return;
    }
    for (int i = 0; i < n; ++i) {
        std::int64_t* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(std::int64_t) * n);
        for (int k = 0; k < n; ++k) {
            std::int64_t aik = a[(std::size_t)i * n + k];
            if (aik == 0) continue;
            const std::int64_t* brow = b + (std::size_t)k * n;
            int32x2_t av = vdup_n_s32((std::int32_t)aik);
            int j = 0;
            for (; j + 2 <= n; j += 2) {
                int64x2_t bv = vld1q_s64(brow + j);
                int32x2_t bn = vmovn_s64(bv);
                int64x2_t cv = vld1q_s64(crow + j);
                cv = vmlal_s32(cv, av, bn);
                vst1q_s64(crow + j, cv);
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void matmul_f64_neon(const double* a, const double* b, double* c, int n) {
    for (int i = 0; i < n; ++i) {
        double* crow = c + (std::size_t)i * n;
        std::memset(crow, 0, sizeof(double) * n);
        for (int k = 0; k < n; ++k) {
            double aik = a[(std::size_t)i * n + k];
            const double* brow = b + (std::size_t)k * n;
            float64x2_t av = vdupq_n_f64(aik);
            int j = 0;
            for (; j + 2 <= n; j += 2) {
                float64x2_t bv = vld1q_f64(brow + j);
                float64x2_t cv = vld1q_f64(crow + j);
                cv = vaddq_f64(cv, vmulq_f64(av, bv));
                vst1q_f64(crow + j, cv);
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

#endif

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
#if defined(CTW_X86)
        case Backend::AVX2: return __builtin_cpu_supports("avx2");
        case Backend::NEON: return false;
#elif defined(CTW_NEON)
        case Backend::AVX2: return false;
        case Backend::NEON: return true;
#else
        default: return false;
#endif
    }
    return false;
}

Backend detect() {
#if defined(CTW_X86)
    if (__builtin_cpu_supports("avx2")) return Backend::AVX2;
#elif defined(CTW_NEON)
    return Backend::NEON;
#endif
    return Backend::Scalar;
}

Backend g_backend = detect();

}  // namespace

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::AVX2: return "avx2";
        case Backend::NEON: return "neon";
    }
    return "?";
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + backend_name(b));
    g_backend = b;
}

void matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n) {
    switch (g_backend) {
#if defined(CTW_X86)
        case Backend::AVX2: matmul_i64_avx2(a, b, c, n); return;
#elif defined(CTW_NEON)
        case Backend::NEON: matmul_i64_neon(a, b, c, n); return;
#endif
        default: matmul_i64_scalar(a, b, c, n); return;
    }
}

void matmul_f64(const double* a, const double* b, double* c, int n) {
    switch (g_backend) {
#if defined(CTW_X86)
        case Backend::AVX2: matmul_f64_avx2(a, b, c, n); return;
#elif defined(CTW_NEON)
        case Backend::NEON: matmul_f64_neon(a, b, c, n); return;
#endif
        default: matmul_f64_scalar(a, b, c, n); return;
    }
}

}  // namespace ctw::kernels
