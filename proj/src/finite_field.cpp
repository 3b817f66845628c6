#include "ctw/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctw {

namespace {

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// polynomial arithmetic over F_p, coefficient vectors low-degree-first
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    int k = (int)mod.size() - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (int)((prod[i + j] + (long long)a[i] * b[j]) % p);
    }
    for (int d = (int)prod.size() - 1; d >= k; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        // x^d = x^(d-k) * (-(mod minus leading))
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = (int)(((long long)prod[d - k + i] - (long long)c * mod[i]) % p + p) % p;
    }
    prod.resize(k);
    return prod;
}

Poly poly_pow_mod(Poly base, long long e, const Poly& mod, int p) {
    int k = (int)mod.size() - 1;
    Poly result(k, 0);
    result[0] = 1;
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

// Is x a generator of order q-1 in F_p[x]/(mod)?  (This also certifies that
// mod is irreducible: q-1 units force the quotient to be a field.)
bool x_is_primitive(const Poly& mod, int p, int q) {
    Poly x(mod.size() - 1, 0);
    if (x.size() < 2) return false;
    x[1] = 1;
    if (!is_one(poly_pow_mod(x, q - 1, mod, p))) return false;
    for (int r : prime_factors(q - 1))
        if (is_one(poly_pow_mod(x, (q - 1) / r, mod, p))) return false;
    return true;
}

int smallest_primitive_root(int p) {
    if (p == 2) return 1;  // the unit group of F_2 is trivial
    auto factors = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int r : factors) {
            long long v = 1, b = g, e = (p - 1) / r;
            while (e) {
                if (e & 1) v = v * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (v == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* k_out) {
    if (q < 2) return false;
    for (int d = 2; (long long)d * d <= q; ++d)
        if (q % d == 0) {
            int k = 0, m = q;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) return false;
            if (p_out) *p_out = d;
            if (k_out) *k_out = k;
            return true;
        }
    // q itself is prime
    if (p_out) *p_out = q;
    if (k_out) *k_out = 1;
    return true;
}

FieldTable FieldTable::make(int q) {
    int p, k;
    if (q > kMaxQ) throw std::invalid_argument("FieldTable: q exceeds table cap 2^20");
    if (!is_prime_power(q, &p, &k))
        throw std::invalid_argument("FieldTable: q = " + std::to_string(q) + " is not a prime power");

    FieldTable f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;

    if (k == 1) {
        f.mod_ = {0, 1};  // placeholder: prime field needs no modulus
        f.gen_ = smallest_primitive_root(p);
        f.exp_.resize(q - 1);
        f.log_.assign(q, -1);
        long long v = 1;
        for (int i = 0; i < q - 1; ++i) {
            f.exp_[i] = (int)v;
            f.log_[v] = i;
            v = v * f.gen_ % p;
        }
        return f;
    }

    // enumerate monic degree-k moduli in lex order (low-degree coefficient
    // most significant) until x is primitive
    std::vector<int> c(k, 0);
    bool found = false;
    while (true) {
        Poly mod(c.begin(), c.end());
        mod.push_back(1);
        if (x_is_primitive(mod, p, q)) {
            f.mod_ = mod;
            found = true;
            break;
        }
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    if (!found) throw std::logic_error("FieldTable: no primitive polynomial found");

    f.gen_ = p;  // the class of x has index p
    f.exp_.resize(q - 1);
    f.log_.assign(q, -1);
    Poly v(k, 0);
    v[0] = 1;
    Poly x(k, 0);
    x[1] = 1;
    for (int i = 0; i < q - 1; ++i) {
        int idx = 0;
        for (int d = k - 1; d >= 0; --d) idx = idx * p + v[d];
        f.exp_[i] = idx;
        f.log_[idx] = i;
        v = poly_mul_mod(v, x, f.mod_, p);
    }
    return f;
}

int FieldTable::add(int a, int b) const {
    if (k_ == 1) return (int)(((long long)a + b) % p_);
    int out = 0, mult = 1;
    for (int d = 0; d < k_; ++d) {
        int ca = a % p_, cb = b % p_;
        a /= p_;
        b /= p_;
        out += ((ca + cb) % p_) * mult;
        mult *= p_;
    }
    return out;
}

int FieldTable::neg(int a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    int out = 0, mult = 1;
    for (int d = 0; d < k_; ++d) {
        int ca = a % p_;
        a /= p_;
        out += (ca == 0 ? 0 : p_ - ca) * mult;
        mult *= p_;
    }
    return out;
}

int FieldTable::inv(int a) const {
    if (a == 0) throw std::domain_error("FieldTable: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FieldTable::dlog(int a) const {
    if (a == 0) throw std::domain_error("FieldTable: dlog of zero");
    return log_[a];
}

int FieldTable::exp(long long e) const {
    long long m = e % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
}

std::string FieldTable::description() const {
    std::string s = "GF(" + std::to_string(p_);
    if (k_ > 1) s += "^" + std::to_string(k_);
    s += ")";
    if (k_ > 1) {
        s += " mod ";
        bool first = true;
        for (int d = k_; d >= 0; --d) {
            int c = (d == k_) ? 1 : mod_[d];
            if (!c) continue;
            if (!first) s += "+";
            first = false;
            if (d == 0 || c != 1) s += std::to_string(c);
            if (d >= 1) s += "x";
            if (d >= 2) s += "^" + std::to_string(d);
        }
    }
    return s;
}

}  // namespace ctw
