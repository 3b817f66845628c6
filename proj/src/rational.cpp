#include "ctw/rational.hpp"

#include <limits>

namespace ctw {

namespace {
__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<long long>(v);
}
}  // namespace

void Rational::assign(long long n, long long d) {
    *this = make_reduced(n, d);
}

Rational Rational::make_reduced(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    __int128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto parse_ll = [&](const std::string& part) {
        std::size_t pos = 0;
        long long v = std::stoll(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(parse_ll(s));
        return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
    } catch (const std::overflow_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
}

}  // namespace ctw
