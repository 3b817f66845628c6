#include "ctw/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ctw/group_ring.hpp"
#include "ctw/log.hpp"

namespace ctw {

MultChar::MultChar(const FieldTable& f, long long step) : field_(&f) {
    long long qm1 = f.q() - 1;
    step_ = ((step % qm1) + qm1) % qm1;
    order_ = (int)(qm1 / std::gcd(step_, qm1));
    if (step_ == 0) order_ = 1;
}

int MultChar::value_exp(int a) const {
    if (a == 0) return -1;
    long long qm1 = field_->q() - 1;
    long long j = step_ * (long long)field_->dlog(a) % qm1;
    return (int)(j / (qm1 / order_));
}

CycInt MultChar::value(int a, int conductor) const {
    if (conductor % order_ != 0)
        throw std::invalid_argument("MultChar::value: conductor not divisible by order");
    if (a == 0) return CycInt(conductor);
    return CycInt::zeta_pow(conductor, (long long)value_exp(a) * (conductor / order_));
}

std::complex<double> MultChar::value_c(int a) const {
    if (a == 0) return 0.0;
    double ang = 2.0 * std::numbers::pi * value_exp(a) / order_;
    return {std::cos(ang), std::sin(ang)};
}

int MultChar::at_minus_one() const {
    int e = value_exp(field_->neg(field_->one()));
    return e == 0 ? 1 : -1;
}

MultChar MultChar::conj() const { return MultChar(*field_, -step_); }

MultChar MultChar::pow(long long e) const { return MultChar(*field_, step_ * e); }

MultChar char_of_order(const FieldTable& f, int d) {
    if (d < 1 || (f.q() - 1) % d != 0)
        throw std::invalid_argument("char_of_order: order must divide q-1");
    return MultChar(f, (f.q() - 1) / d);
}

CycInt jacobi_mod(const MultChar& alpha, const MultChar& beta) {
    const FieldTable& f = alpha.field();
    if (&f != &beta.field() && f.q() != beta.field().q())
        throw std::invalid_argument("jacobi_mod: field mismatch");
    int m = std::lcm(alpha.order(), beta.order());
    CycInt sum(m);
    int one = f.one();
    for (int t = 0; t < f.q(); ++t) {
        if (t == 0 || t == one) continue;
        int ea = alpha.value_exp(t);
        int eb = beta.value_exp(f.sub(one, t));
        sum += CycInt::zeta_pow(m, (long long)ea * (m / alpha.order()) +
                                       (long long)eb * (m / beta.order()));
    }
    return sum;
}

PhiFunction quartic_solution(const FieldTable& f) {
    if (f.q() % 4 != 1) throw std::invalid_argument("quartic_solution: need q = 1 mod 4");
    MultChar alpha = char_of_order(f, 4);
    MultChar beta = alpha.pow(2);
    PhiFunction phi;
    phi.field = &f;
    phi.construction = "quartic";
    phi.char_order = 4;
    phi.c = 1.0;
    phi.jprime = jacobi_mod(beta, beta);
    phi.values.assign(f.q(), 0.0);
    for (int a = 1; a < f.q(); ++a) phi.values[a] = f.is_square(a) ? 1.0 : -1.0;
    return phi;
}

PhiFunction octic_solution(const FieldTable& f) {
    if (f.q() % 8 != 1) throw std::invalid_argument("octic_solution: need q = 1 mod 8");
    MultChar alpha = char_of_order(f, 8);
    MultChar beta = alpha.pow(2);
    CycInt j = jacobi_mod(beta, beta);
    std::complex<double> z = CycInt::integer(4, 1).to_complex() + j.to_complex();
    // |c| = 1 with Re(c^2 z) = 0
    double ang = (std::numbers::pi / 2 - std::arg(z)) / 2;
    std::complex<double> c(std::cos(ang), std::sin(ang));

    PhiFunction phi;
    phi.field = &f;
    phi.construction = "octic";
    phi.char_order = 8;
    phi.c = c;
    phi.jprime = j;
    phi.values.assign(f.q(), 0.0);
    for (int a = 1; a < f.q(); ++a) phi.values[a] = 2.0 * std::real(c * beta.value_c(a));
    return phi;
}

std::pair<PhiFunction, double> cubic_solution(const FieldTable& f, double tol) {
    if (f.q() % 3 != 1) throw std::invalid_argument("cubic_solution: need q = 1 mod 3");
    MultChar alpha = char_of_order(f, 3);
    CycInt j = jacobi_mod(alpha, alpha);
    std::complex<double> z = CycInt::integer(3, 1).to_complex() + j.to_complex();
    double psi = std::arg(z);

    FinAbelianGroup G = FinAbelianGroup::additive_of_field(f);
    for (int branch = 0; branch < 2; ++branch) {
        double ang = (branch == 0 ? -psi : psi) / 3;
        std::complex<double> c(std::cos(ang), std::sin(ang));
        GroupFunction<double> gf(G);
        for (int a = 1; a < f.q(); ++a) gf.values[a] = 2.0 * std::real(c * alpha.value_c(a));
        auto rep = hopf_verify(gf, tol);
        if (rep.is_solution) {
            log::info("cubic_solution q=" + std::to_string(f.q()) + ": branch c=exp(" +
                      (branch == 0 ? std::string("-") : std::string("+")) + "i psi/3) verified");
            PhiFunction phi;
            phi.field = &f;
            phi.construction = "cubic";
            phi.char_order = 3;
            phi.c = c;
            phi.jprime = j;
            phi.values = std::move(gf.values);
            return {std::move(phi), rep.theta};
        }
    }
    throw std::runtime_error("cubic_solution: construction mismatch, neither unit branch verified");
}

}  // namespace ctw
