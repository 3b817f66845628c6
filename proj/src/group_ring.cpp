#include "ctw/group_ring.hpp"

namespace ctw {

CompositeSolution composite_solution(int l, int m, int variant) {
    if (l < 2 || m < 2) throw std::invalid_argument("composite_solution: need l, m >= 2");

    Rational s, t, theta;
    switch (variant) {
        case 1:
            s = Rational(1 - m, 2);
            t = Rational(1 - l, 2);
            theta = Rational(4 - (long long)(m - 1) * (l - 1), 2);
            break;
        case 2:
            s = Rational((long long)l * (1 - m), l - 1);
            t = Rational(1);
            theta = Rational(1 - (long long)m * l);
            break;
        case 3:
            s = Rational(1);
            t = Rational((long long)m * (1 - l), m - 1);
            theta = Rational(1 - (long long)m * l);
            break;
        default:
            throw std::invalid_argument("composite_solution: variant must be 1, 2 or 3");
    }

    FinAbelianGroup G({l, m});
    GroupFunction<Rational> phi(G);
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == 0 && b == 0) continue;
            Rational v = (b == 0) ? s : (a == 0) ? t : Rational(1);
            phi.values[a + l * b] = v;
        }
    return {std::move(phi), theta, s, t};
}

}  // namespace ctw
