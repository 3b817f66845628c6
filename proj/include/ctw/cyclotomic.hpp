#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ctw {

/// Coefficients of the m-th cyclotomic polynomial (low-degree-first, monic).
std::vector<long long> cyclotomic_poly(int m);

/// Exact element of Z[zeta_m], stored in the power basis
/// {1, zeta, ..., zeta^(phi(m)-1)} reduced by the m-th cyclotomic polynomial.
/// Supported conductors: 1 <= m <= 64.
class CycInt {
public:
    static constexpr int kMaxConductor = 64;

    explicit CycInt(int m = 1);  // zero
    static CycInt integer(int m, long long v);
    static CycInt zeta_pow(int m, long long t);  // zeta_m^t

    int conductor() const { return m_; }
    const std::vector<long long>& coords() const { return c_; }

    bool is_zero() const;
    /// True when the element is a rational integer; value returned via out.
    bool as_integer(long long* out = nullptr) const;

    CycInt conj() const;  // zeta -> zeta^-1
    std::complex<double> to_complex() const;
    /// |z|^2 = z * conj(z), exact.
    CycInt norm_abs_sq() const { return *this * conj(); }

    /// Re-express in Z[zeta_mm]; mm must be a multiple of the conductor.
    CycInt lift(int mm) const;

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    friend bool operator==(const CycInt& a, const CycInt& b);
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    std::string str() const;

private:
    int m_;
    std::vector<long long> c_;  // length phi(m)
};

}  // namespace ctw
