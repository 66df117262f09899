#include "rational.hpp"

#include <algorithm>

namespace etaid {

static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void Frac::set(__int128 n, __int128 d) {
    if (d == 0) throw Error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw Error("rational overflow");
    n_ = (int64_t)n;
    d_ = (int64_t)d;
}

Frac Frac::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Frac(std::stoll(s));
        return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error("bad rational: " + s);
    }
}

std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> lo, hi;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int mobius(int64_t n) {
    int s = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        s = -s;
    }
    if (n > 1) s = -s;
    return s;
}

int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::string big_str(const BigRat& r) { return r.get_str(); }

BigRat parse_big(const std::string& s) {
    BigRat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace etaid
