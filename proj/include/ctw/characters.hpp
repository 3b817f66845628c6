#pragma once

#include <complex>
#include <vector>

#include "ctw/cyclotomic.hpp"
#include "ctw/finite_field.hpp"

namespace ctw {

/// Multiplicative character of F_q^x, extended by alpha(0) = 0.
/// Canonically alpha(g^j) = zeta_{q-1}^(step * j) for the field's fixed
/// generator g; char_of_order picks step = (q-1)/d so alpha(g) = zeta_d.
class MultChar {
public:
    MultChar(const FieldTable& f, long long step);

    const FieldTable& field() const { return *field_; }
    int order() const { return order_; }
    long long step() const { return step_; }
    bool is_trivial() const { return order_ == 1; }

    /// Exponent j with alpha(a) = zeta_order^j, or -1 for a = 0.
    int value_exp(int a) const;
    /// alpha(a) as an exact cyclotomic integer in Z[zeta_conductor];
    /// conductor must be a multiple of the character order.
    CycInt value(int a, int conductor) const;
    std::complex<double> value_c(int a) const;
    /// alpha(-1), always +1 or -1.
    int at_minus_one() const;

    MultChar conj() const;
    MultChar pow(long long e) const;

private:
    const FieldTable* field_;
    long long step_;  // exponent step mod q-1
    int order_;
};

/// Canonical character of exact order d; throws if d does not divide q-1.
MultChar char_of_order(const FieldTable& f, int d);

/// Modified Jacobi sum J'(alpha, beta) = sum over t != 0,1 of
/// alpha(t) beta(1-t), exact in Z[zeta_lcm(orders)].
CycInt jacobi_mod(const MultChar& alpha, const MultChar& beta);

/// Real function on F_q assembled from character data; carrier for the
/// quartic/octic/cubic constructions.
struct PhiFunction {
    const FieldTable* field;
    std::vector<double> values;  // indexed by field element, values[0] = 0
    std::string construction;    // "quartic" | "octic" | "cubic"
    int char_order = 0;
    std::complex<double> c{1.0, 0.0};  // assembly unit
    CycInt jprime{1};                  // the J' value entering the construction
};

/// phi = alpha^2 for alpha of order 4; the quadratic character. q = 1 mod 4.
PhiFunction quartic_solution(const FieldTable& f);

/// phi = c*alpha^2 + conj(c)*conj(alpha)^2 for alpha of order 8, with |c| = 1
/// chosen so that Re(c^2 (1 + J'(alpha^2, alpha^2))) = 0. q = 1 mod 8.
PhiFunction octic_solution(const FieldTable& f);

/// phi = c*alpha + conj(c)*conj(alpha) for alpha of order 3, with |c| = 1
/// making theta real. Both cube-root branches are tried; the one whose
/// residual verifies is kept. Returns phi and theta. q = 1 mod 3.
std::pair<PhiFunction, double> cubic_solution(const FieldTable& f, double tol = 1e-9);

}  // namespace ctw
