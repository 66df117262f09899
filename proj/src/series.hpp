// Truncated q-series with exact rational coefficients and fractional exponents.
#pragma once

#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace etaid {

// Exponents are multiples of 1/D. Coefficient c[k] belongs to q^{(n0+k)/D};
// the value is known modulo O(q^{T/D}).
struct QSeries {
    int64_t D = 1;
    int64_t n0 = 0;
    int64_t T = 0;
    std::vector<BigRat> c;

    static QSeries zero(Frac order);
    static QSeries constant(const BigRat& v, Frac order);
    // coeff * q^shift * sum f[k] q^k, known to absolute order `order`.
    static QSeries from_ints(const std::vector<BigInt>& f, Frac shift, Frac order, const BigRat& coeff = 1);
    // Terms given as (exponent, coefficient) pairs.
    static QSeries from_terms(const std::vector<std::pair<Frac, BigRat>>& terms, Frac order);

    Frac lead_exp() const { return Frac(n0, D); }
    Frac order() const { return Frac(T, D); }
    bool is_zero() const { return c.empty(); }
    BigRat coeff(Frac e) const;
    BigRat lead_coeff() const { return c.empty() ? BigRat(0) : c[0]; }

    QSeries rescaled(int64_t newD) const;
    QSeries truncated(Frac order) const;
    void tighten();
    std::string str(int max_terms = 12) const;
    std::vector<std::pair<Frac, BigRat>> terms() const;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries div(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const BigRat& s);
QSeries shift(const QSeries& a, Frac e);
QSeries power(const QSeries& a, int64_t k);

enum class ArithKind { add, sub, mul, div };
QSeries series_arith(const QSeries& a, const QSeries& b, ArithKind kind);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator/(const QSeries& a, const QSeries& b) { return div(a, b); }

// Coefficients 0..len-1 of prod_{m>=1} (1-q^m)^{a[m mod L]}.
std::vector<BigInt> expand_periodic(const std::vector<int64_t>& a, int64_t len);
// Coefficients 0..len-1 of prod_{m in ms} (1-q^m)^{e} for an explicit factor list.
std::vector<BigInt> expand_factors(const std::vector<std::pair<int64_t, int64_t>>& factors, int64_t len);

// (q^a; q^step)_n, with n = nullopt meaning the infinite product.
QSeries pochhammer(Frac a, int64_t step, std::optional<int64_t> n, int64_t T);
QSeries jac_series(int64_t g, int64_t b, int64_t T);
QSeries theta_series(int which, int64_t T);
QSeries eta_series(int64_t d, int64_t T);
QSeries geta_series(int64_t delta, int64_t g, int64_t n, int64_t T);

}  // namespace etaid
