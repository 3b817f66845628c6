#pragma once

#include <string>
#include <vector>

namespace ctw {

/// GF(p^k) with dense exp/log tables relative to a fixed generator.
///
/// Elements are encoded as integers in [0, q): the element with polynomial
/// coordinates c_0 + c_1 x + ... + c_{k-1} x^{k-1} has index
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
///
/// The model is deterministic: the modulus is the lexicographically smallest
/// monic primitive polynomial of degree k over F_p (coefficients compared
/// low-degree-first), so x itself generates the multiplicative group for
/// k > 1. For k = 1 the generator is the smallest primitive root mod p.
class FieldTable {
public:
    static constexpr int kMaxQ = 1 << 20;

    /// Builds GF(q). Throws std::invalid_argument if q is not a prime power
    /// in [2, 2^20].
    static FieldTable make(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int generator() const { return gen_; }
    const std::vector<int>& modulus() const { return mod_; }  // c_0..c_k, monic

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const;
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const;

    /// Discrete log base the generator; a must be nonzero.
    int dlog(int a) const;
    /// generator^e with e reduced mod q-1 (e may be negative).
    int exp(long long e) const;

    bool is_square(int a) const { return a != 0 && dlog(a) % 2 == 0; }

    std::string description() const;  // "GF(p^k) mod <poly>"

private:
    FieldTable() = default;

    int p_ = 0, k_ = 0, q_ = 0, gen_ = 0;
    std::vector<int> mod_;
    std::vector<int> exp_;  // size q-1
    std::vector<int> log_;  // size q, log_[0] = -1
};

/// Prime-power test; fills p and k when true.
bool is_prime_power(int q, int* p = nullptr, int* k = nullptr);

}  // namespace ctw
