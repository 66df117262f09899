// Small exact rationals for exponents and cusp orders, plus integer helpers.
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaid {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

inline int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = (__int128)(a / gcd64(a, b)) * b;
    if (l < 0) l = -l;
    if (l > INT64_MAX) throw Error("integer overflow in lcm");
    return (int64_t)l;
}

inline int64_t mod64(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t floordiv64(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<int64_t> divisors(int64_t n);
std::vector<int64_t> prime_factors(int64_t n);
int mobius(int64_t n);
int64_t euler_phi(int64_t n);

// Fraction over int64 with checked 128-bit intermediates.
class Frac {
public:
    Frac() = default;
    Frac(int64_t n) : n_(n) {}
    Frac(int64_t n, int64_t d) { set((__int128)n, (__int128)d); }

    int64_t num() const { return n_; }
    int64_t den() const { return d_; }
    bool is_integer() const { return d_ == 1; }
    bool is_zero() const { return n_ == 0; }
    int64_t floor() const { return floordiv64(n_, d_); }
    int64_t ceil() const { return -floordiv64(-n_, d_); }
    Frac frac_part() const { return *this - Frac(floor()); }
    BigRat to_big() const { return BigRat(BigInt(std::to_string(n_)), BigInt(std::to_string(d_))); }
    std::string str() const { return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_); }

    static Frac parse(const std::string& s);

    friend Frac operator+(Frac a, Frac b) { return make((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_); }
    friend Frac operator-(Frac a, Frac b) { return make((__int128)a.n_ * b.d_ - (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_); }
    friend Frac operator*(Frac a, Frac b) { return make((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_); }
    friend Frac operator/(Frac a, Frac b) {
        if (b.n_ == 0) throw Error("division by zero");
        return make((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
    }
    Frac operator-() const { Frac r; r.n_ = -n_; r.d_ = d_; return r; }
    Frac& operator+=(Frac o) { return *this = *this + o; }
    Frac& operator-=(Frac o) { return *this = *this - o; }
    Frac& operator*=(Frac o) { return *this = *this * o; }
    friend bool operator==(Frac a, Frac b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(Frac a, Frac b) { return !(a == b); }
    friend bool operator<(Frac a, Frac b) { return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_; }
    friend bool operator>(Frac a, Frac b) { return b < a; }
    friend bool operator<=(Frac a, Frac b) { return !(b < a); }
    friend bool operator>=(Frac a, Frac b) { return !(a < b); }

private:
    static Frac make(__int128 n, __int128 d) { Frac f; f.set(n, d); return f; }
    void set(__int128 n, __int128 d);
    int64_t n_ = 0;
    int64_t d_ = 1;
};

std::string big_str(const BigRat& r);
BigRat parse_big(const std::string& s);

}  // namespace etaid
