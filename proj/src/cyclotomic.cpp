#include "ctw/cyclotomic.hpp"

#include <map>
#include <numbers>
#include <stdexcept>

namespace ctw {

namespace {

// exact division of integer polynomials (low-degree-first), remainder must be 0
std::vector<long long> poly_divide(std::vector<long long> num, const std::vector<long long>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int d = dn; d >= dd; --d) {
        long long c = num[d];
        if (c % den[dd] != 0) throw std::logic_error("cyclotomic: non-exact division");
        long long f = c / den[dd];
        quot[d - dd] = f;
        for (int i = 0; i <= dd; ++i) num[d - dd + i] -= f * den[i];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder");
    return quot;
}

struct RingData {
    int m = 1;
    int deg = 1;
    std::vector<long long> phi_poly;
    std::vector<std::vector<long long>> zeta_pow;  // reduced coords of zeta^t, t in [0, m)
};

const RingData& ring_data(int m) {
    static std::map<int, RingData> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1 || m > CycInt::kMaxConductor)
        throw std::invalid_argument("CycInt: conductor out of range");

    RingData rd;
    rd.m = m;
    rd.phi_poly = cyclotomic_poly(m);
    rd.deg = (int)rd.phi_poly.size() - 1;
    rd.zeta_pow.resize(m);
    std::vector<long long> cur(rd.deg, 0);
    cur[0] = 1;
    for (int t = 0; t < m; ++t) {
        rd.zeta_pow[t] = cur;
        // multiply by zeta, reduce x^deg via the monic cyclotomic polynomial
        std::vector<long long> next(rd.deg, 0);
        for (int i = 0; i + 1 < rd.deg; ++i) next[i + 1] = cur[i];
        long long top = cur[rd.deg - 1];
        if (top != 0)
            for (int i = 0; i < rd.deg; ++i) next[i] -= top * rd.phi_poly[i];
        cur = next;
    }
    return cache.emplace(m, std::move(rd)).first->second;
}

}  // namespace

std::vector<long long> cyclotomic_poly(int m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide(num, cyclotomic_poly(d));
    return num;
}

CycInt::CycInt(int m) : m_(m), c_(ring_data(m).deg, 0) {}

CycInt CycInt::integer(int m, long long v) {
    CycInt z(m);
    z.c_[0] = v;
    return z;
}

CycInt CycInt::zeta_pow(int m, long long t) {
    const RingData& rd = ring_data(m);
    long long r = t % m;
    if (r < 0) r += m;
    CycInt z(m);
    z.c_ = rd.zeta_pow[(int)r];
    return z;
}

bool CycInt::is_zero() const {
    for (long long v : c_)
        if (v) return false;
    return true;
}

bool CycInt::as_integer(long long* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    if (out) *out = c_[0];
    return true;
}

CycInt CycInt::conj() const {
    const RingData& rd = ring_data(m_);
    CycInt z(m_);
    for (int j = 0; j < rd.deg; ++j) {
        if (!c_[j]) continue;
        const auto& rep = rd.zeta_pow[(m_ - j) % m_];
        for (int i = 0; i < rd.deg; ++i) z.c_[i] += c_[j] * rep[i];
    }
    return z;
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> s = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j]) continue;
        double ang = 2.0 * std::numbers::pi * (double)j / (double)m_;
        s += (double)c_[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

CycInt CycInt::lift(int mm) const {
    if (mm % m_ != 0) throw std::invalid_argument("CycInt::lift: conductor not a multiple");
    const RingData& rd = ring_data(mm);
    int f = mm / m_;
    CycInt z(mm);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j]) continue;
        const auto& rep = rd.zeta_pow[(int)(j * f) % mm];
        for (int i = 0; i < rd.deg; ++i) z.c_[i] += c_[j] * rep[i];
    }
    return z;
}

CycInt CycInt::operator-() const {
    CycInt z = *this;
    for (auto& v : z.c_) v = -v;
    return z;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CycInt: conductor mismatch");
    CycInt z = a;
    for (size_t i = 0; i < z.c_.size(); ++i) z.c_[i] += b.c_[i];
    return z;
}

CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CycInt: conductor mismatch");
    const RingData& rd = ring_data(a.m_);
    CycInt z(a.m_);
    for (int i = 0; i < rd.deg; ++i) {
        if (!a.c_[i]) continue;
        for (int j = 0; j < rd.deg; ++j) {
            if (!b.c_[j]) continue;
            long long v = a.c_[i] * b.c_[j];
            int e = i + j;
            if (e < rd.deg) {
                z.c_[e] += v;
            } else {
                const auto& rep = rd.zeta_pow[e % a.m_];
                for (int t = 0; t < rd.deg; ++t) z.c_[t] += v * rep[t];
            }
        }
    }
    return z;
}

bool operator==(const CycInt& a, const CycInt& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

std::string CycInt::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    s += "]@z" + std::to_string(m_);
    return s;
}

}  // namespace ctw
