#include "series.hpp"

#include "modularity.hpp"

#include <algorithm>
#include <sstream>

namespace etaid {

namespace {

bool all_integral(const std::vector<BigRat>& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

std::vector<size_t> nonzeros(const std::vector<BigRat>& v) {
    std::vector<size_t> nz;
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) nz.push_back(i);
    return nz;
}

// Truncated product of two coefficient vectors.
std::vector<BigRat> convolve(const std::vector<BigRat>& x, const std::vector<BigRat>& y, size_t len) {
    std::vector<BigRat> out(len);
    auto nx = nonzeros(x), ny = nonzeros(y);
    if (all_integral(x) && all_integral(y)) {
        std::vector<BigInt> acc(len);
        for (size_t i : nx) {
            if (i >= len) break;
            const mpz_srcptr xi = x[i].get_num_mpz_t();
            for (size_t j : ny) {
                if (i + j >= len) break;
                mpz_addmul(acc[i + j].get_mpz_t(), xi, y[j].get_num_mpz_t());
            }
        }
        for (size_t k = 0; k < len; ++k) out[k] = BigRat(acc[k]);
        return out;
    }
    BigRat t;
    for (size_t i : nx) {
        if (i >= len) break;
        for (size_t j : ny) {
            if (i + j >= len) break;
            t = x[i] * y[j];
            out[i + j] += t;
        }
    }
    return out;
}

std::vector<BigRat> inverse(const std::vector<BigRat>& b, size_t len) {
    std::vector<BigRat> inv(len);
    if (len == 0) return inv;
    auto nb = nonzeros(b);
    BigRat b0inv = 1 / b[0];
    inv[0] = b0inv;
    bool unit = all_integral(b) && abs(b[0]) == 1;
    if (unit) {
        std::vector<BigInt> zi(len);
        int s0 = sgn(b[0]);
        zi[0] = s0;
        BigInt acc;
        for (size_t k = 1; k < len; ++k) {
            acc = 0;
            for (size_t j : nb) {
                if (j == 0) continue;
                if (j > k) break;
                mpz_addmul(acc.get_mpz_t(), b[j].get_num_mpz_t(), zi[k - j].get_mpz_t());
            }
            zi[k] = s0 > 0 ? BigInt(-acc) : acc;
        }
        for (size_t k = 0; k < len; ++k) inv[k] = BigRat(zi[k]);
        return inv;
    }
    BigRat acc;
    for (size_t k = 1; k < len; ++k) {
        acc = 0;
        for (size_t j : nb) {
            if (j == 0) continue;
            if (j > k) break;
            acc += b[j] * inv[k - j];
        }
        inv[k] = -acc * b0inv;
    }
    return inv;
}

}  // namespace

QSeries QSeries::zero(Frac order) {
    QSeries s;
    s.D = order.den();
    s.T = order.num();
    s.n0 = s.T;
    return s;
}

QSeries QSeries::constant(const BigRat& v, Frac order) {
    QSeries s = zero(order);
    if (order <= Frac(0)) return s;
    s.n0 = 0;
    s.c.assign(s.T, BigRat(0));
    s.c[0] = v;
    s.tighten();
    return s;
}

QSeries QSeries::from_ints(const std::vector<BigInt>& f, Frac shift, Frac order, const BigRat& coeff) {
    QSeries s;
    s.D = lcm64(shift.den(), order.den());
    s.n0 = shift.num() * (s.D / shift.den());
    int64_t known = s.n0 + (int64_t)f.size() * s.D;
    s.T = std::min(order.num() * (s.D / order.den()), known);
    if (s.T <= s.n0) {
        s.n0 = s.T;
        return s;
    }
    s.c.assign(s.T - s.n0, BigRat(0));
    for (size_t k = 0; k < f.size(); ++k) {
        int64_t idx = (int64_t)k * s.D;
        if (idx >= (int64_t)s.c.size()) break;
        if (sgn(f[k]) != 0) s.c[idx] = coeff * BigRat(f[k]);
    }
    s.tighten();
    return s;
}

QSeries QSeries::from_terms(const std::vector<std::pair<Frac, BigRat>>& terms, Frac order) {
    int64_t D = order.den();
    for (const auto& t : terms) D = lcm64(D, t.first.den());
    int64_t lo = order.num() * (D / order.den());
    for (const auto& t : terms) lo = std::min(lo, t.first.num() * (D / t.first.den()));
    QSeries s;
    s.D = D;
    s.T = order.num() * (D / order.den());
    s.n0 = std::min(lo, s.T);
    s.c.assign(s.T - s.n0, BigRat(0));
    for (const auto& t : terms) {
        int64_t e = t.first.num() * (D / t.first.den());
        if (e < s.T) s.c[e - s.n0] += t.second;
    }
    s.tighten();
    return s;
}

BigRat QSeries::coeff(Frac e) const {
    Frac scaled = e * Frac(D);
    if (!scaled.is_integer()) return 0;
    int64_t k = scaled.num();
    if (k >= T) throw Error("coefficient of q^" + e.str() + " is beyond the known order " + order().str());
    if (k < n0) return 0;
    return c[k - n0];
}

QSeries QSeries::rescaled(int64_t newD) const {
    if (newD % D != 0) throw Error("bad rescale");
    int64_t f = newD / D;
    QSeries s;
    s.D = newD;
    s.n0 = n0 * f;
    s.T = T * f;
    s.c.assign(s.T - s.n0, BigRat(0));
    for (size_t k = 0; k < c.size(); ++k) s.c[k * f] = c[k];
    return s;
}

QSeries QSeries::truncated(Frac order) const {
    QSeries s = *this;
    int64_t D2 = lcm64(D, order.den());
    if (D2 != D) s = s.rescaled(D2);
    int64_t t = order.num() * (D2 / order.den());
    if (t >= s.T) return s;
    s.T = t;
    if (s.n0 >= t) {
        s.c.clear();
        s.n0 = t;
    } else {
        s.c.resize(t - s.n0);
    }
    s.tighten();
    return s;
}

void QSeries::tighten() {
    size_t first = 0;
    while (first < c.size() && sgn(c[first]) == 0) ++first;
    if (first == c.size()) {
        c.clear();
        n0 = T;
    } else if (first > 0) {
        c.erase(c.begin(), c.begin() + (ptrdiff_t)first);
        n0 += (int64_t)first;
    }
    int64_t g = gcd64(D, gcd64(n0, T));
    for (size_t k = 0; k < c.size() && g > 1; ++k)
        if (sgn(c[k]) != 0) g = gcd64(g, (int64_t)k);
    if (g > 1) {
        std::vector<BigRat> nc(c.size() / g + (c.size() % g ? 1 : 0));
        for (size_t k = 0; k < nc.size(); ++k) nc[k] = c[k * g];
        nc.resize((T - n0) / g);
        c.swap(nc);
        D /= g;
        n0 /= g;
        T /= g;
    }
}

std::vector<std::pair<Frac, BigRat>> QSeries::terms() const {
    std::vector<std::pair<Frac, BigRat>> out;
    for (size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) out.emplace_back(Frac(n0 + (int64_t)k, D), c[k]);
    return out;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (const auto& [e, v] : terms()) {
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        BigRat a = abs(v);
        if (shown == 0)
            os << (sgn(v) < 0 ? "-" : "");
        else
            os << (sgn(v) < 0 ? " - " : " + ");
        bool unit = a == 1;
        if (e.is_zero()) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "q";
            if (e != Frac(1)) os << "^" << (e.is_integer() && e.num() >= 0 ? e.str() : "(" + e.str() + ")");
        }
        ++shown;
    }
    if (shown == 0) os << "0";
    Frac o = order();
    os << " + O(q^" << (o.is_integer() && o.num() >= 0 ? o.str() : "(" + o.str() + ")") << ")";
    return os.str();
}

QSeries add(const QSeries& a0, const QSeries& b0) {
    int64_t D = lcm64(a0.D, b0.D);
    QSeries a = a0.D == D ? a0 : a0.rescaled(D);
    QSeries b = b0.D == D ? b0 : b0.rescaled(D);
    QSeries s;
    s.D = D;
    s.T = std::min(a.T, b.T);
    s.n0 = std::min({a.n0, b.n0, s.T});
    s.c.assign(s.T - s.n0, BigRat(0));
    for (size_t k = 0; k < a.c.size() && a.n0 + (int64_t)k < s.T; ++k) s.c[a.n0 + k - s.n0] += a.c[k];
    for (size_t k = 0; k < b.c.size() && b.n0 + (int64_t)k < s.T; ++k) s.c[b.n0 + k - s.n0] += b.c[k];
    s.tighten();
    return s;
}

QSeries scale(const QSeries& a, const BigRat& f) {
    QSeries s = a;
    if (sgn(f) == 0) {
        s.c.clear();
        s.n0 = s.T;
        return s;
    }
    for (auto& x : s.c) x *= f;
    return s;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(b, -1)); }

QSeries shift(const QSeries& a0, Frac e) {
    int64_t D = lcm64(a0.D, e.den());
    QSeries a = a0.D == D ? a0 : a0.rescaled(D);
    int64_t k = e.num() * (D / e.den());
    a.n0 += k;
    a.T += k;
    a.tighten();
    return a;
}

QSeries mul(const QSeries& a0, const QSeries& b0) {
    int64_t D = lcm64(a0.D, b0.D);
    QSeries a = a0.D == D ? a0 : a0.rescaled(D);
    QSeries b = b0.D == D ? b0 : b0.rescaled(D);
    QSeries s;
    s.D = D;
    s.T = std::min(a.T + b.n0, b.T + a.n0);
    s.n0 = std::min(a.n0 + b.n0, s.T);
    size_t len = (size_t)(s.T - s.n0);
    if (!a.is_zero() && !b.is_zero()) s.c = convolve(a.c, b.c, len);
    else s.c.assign(len, BigRat(0));
    s.tighten();
    return s;
}

QSeries div(const QSeries& a0, const QSeries& b0) {
    if (b0.is_zero()) throw Error("division by a series that is zero to its truncation order");
    int64_t D = lcm64(a0.D, b0.D);
    QSeries a = a0.D == D ? a0 : a0.rescaled(D);
    QSeries b = b0.D == D ? b0 : b0.rescaled(D);
    int64_t la = a.T - a.n0, lb = b.T - b.n0;
    int64_t len = std::min(la, lb);
    QSeries s;
    s.D = D;
    s.n0 = a.n0 - b.n0;
    s.T = s.n0 + len;
    if (a.is_zero() || len <= 0) {
        s.n0 = s.T;
        return s;
    }
    s.c = convolve(a.c, inverse(b.c, (size_t)len), (size_t)len);
    s.tighten();
    return s;
}

QSeries power(const QSeries& a, int64_t k) {
    if (k < 0) return div(QSeries::constant(1, a.order() - a.lead_exp()), power(a, -k));
    if (k == 0) return QSeries::constant(1, a.order() - a.lead_exp());
    QSeries result, base = a;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

QSeries series_arith(const QSeries& a, const QSeries& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return add(a, b);
        case ArithKind::sub: return sub(a, b);
        case ArithKind::mul: return mul(a, b);
        case ArithKind::div: return div(a, b);
    }
    throw Error("bad arithmetic kind");
}

std::vector<BigInt> expand_factors(const std::vector<std::pair<int64_t, int64_t>>& factors, int64_t len) {
    std::vector<BigInt> f((size_t)std::max<int64_t>(len, 0));
    if (len <= 0) return f;
    f[0] = 1;
    for (auto [m, e] : factors) {
        if (m <= 0) throw Error("factor exponent must be positive");
        if (m >= len) continue;
        for (int64_t rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                for (int64_t i = len - 1; i >= m; --i) f[i] -= f[i - m];
            } else {
                for (int64_t i = m; i < len; ++i) f[i] += f[i - m];
            }
        }
    }
    return f;
}

std::vector<BigInt> expand_periodic(const std::vector<int64_t>& a, int64_t len) {
    const int64_t L = (int64_t)a.size();
    if (len <= 0) return {};
    __int128 weight = 0;
    for (int64_t m = 1; m < len; ++m) weight += std::abs(a[m % L]);
    if (weight * 4 < (__int128)len * 3) {
        std::vector<std::pair<int64_t, int64_t>> fs;
        for (int64_t m = 1; m < len; ++m)
            if (a[m % L]) fs.emplace_back(m, a[m % L]);
        return expand_factors(fs, len);
    }
    // n F_n = -sum_{k=1}^{n} c_k F_{n-k},  c_k = sum_{d | k} d a(d).
    std::vector<int64_t> ck((size_t)len, 0);
    for (int64_t d = 1; d < len; ++d) {
        int64_t ad = a[d % L];
        if (!ad) continue;
        for (int64_t k = d; k < len; k += d) ck[k] += d * ad;
    }
    std::vector<BigInt> f((size_t)len);
    f[0] = 1;
    mpz_t acc;
    mpz_init(acc);
    for (int64_t n = 1; n < len; ++n) {
        mpz_set_ui(acc, 0);
        for (int64_t k = 1; k <= n; ++k) {
            int64_t c = ck[k];
            if (c > 0) mpz_addmul_ui(acc, f[n - k].get_mpz_t(), (unsigned long)c);
            else if (c < 0) mpz_submul_ui(acc, f[n - k].get_mpz_t(), (unsigned long)(-c));
        }
        mpz_neg(acc, acc);
        mpz_divexact_ui(f[n].get_mpz_t(), acc, (unsigned long)n);
    }
    mpz_clear(acc);
    return f;
}

QSeries pochhammer(Frac a, int64_t step, std::optional<int64_t> n, int64_t T) {
    if (T < 1) throw Error("pochhammer: order must be at least 1");
    if (step < 1) throw Error("pochhammer: step must be positive");
    if (!n && a <= Frac(0)) throw Error("pochhammer: infinite product needs a positive exponent");
    const int64_t D = a.den(), st = step * D, top = T * D;
    std::vector<int64_t> exps;
    if (n) {
        for (int64_t j = 0; j < *n; ++j) exps.push_back(a.num() + j * st);
    } else {
        for (int64_t e = a.num(); e < top; e += st) exps.push_back(e);
    }
    int64_t offset = 0;
    for (int64_t e : exps) {
        if (e == 0) return QSeries::zero(Frac(T));
        if (e < 0) offset += e;
    }
    // Index i holds the coefficient of q^{(i + offset)/D}. Factors with negative
    // exponents are applied first, so truncation at `top` is safe afterwards.
    const int64_t size = top - offset;
    std::vector<BigInt> f((size_t)size);
    f[(size_t)(-offset)] = 1;
    for (int64_t e : exps) {
        if (e > 0) continue;
        for (int64_t j = 0; j + (-e) < size; ++j) f[j] -= f[j - e];
    }
    for (int64_t e : exps) {
        if (e < 0) continue;
        for (int64_t i = size - 1; i >= e; --i) f[i] -= f[i - e];
    }
    std::vector<std::pair<Frac, BigRat>> terms;
    for (int64_t i = 0; i < size; ++i)
        if (sgn(f[i]) != 0) terms.emplace_back(Frac(i + offset, D), BigRat(f[i]));
    return QSeries::from_terms(terms, Frac(T));
}

QSeries jac_series(int64_t g, int64_t b, int64_t T) {
    if (b < 1) throw Error("jac_series: base must be positive");
    if (g < 0 || g > b) throw Error("jac_series: need 0 <= g <= b");
    std::vector<BigInt> f((size_t)std::max<int64_t>(T, 0));
    if (g == 0) {
        for (int64_t k = 0;; ++k) {
            bool any = false;
            for (int64_t kk : {k, -k - 1}) {
                int64_t e = b * kk * (3 * kk + 1) / 2;
                if (e < T) {
                    f[e] += (kk % 2 == 0) ? 1 : -1;
                    any = true;
                }
            }
            if (!any) break;
        }
    } else {
        for (int64_t k = 0;; ++k) {
            bool any = false;
            for (int64_t kk : {k, -k - 1}) {
                int64_t e = kk * (b * kk - b + 2 * g) / 2;
                if (e < T) {
                    f[e] += (kk % 2 == 0) ? 1 : -1;
                    any = true;
                }
            }
            if (!any) break;
        }
    }
    return QSeries::from_ints(f, Frac(0), Frac(T));
}

QSeries theta_series(int which, int64_t T) {
    if (T < 1) throw Error("theta_series: order must be at least 1");
    std::vector<std::pair<Frac, BigRat>> terms;
    if (which == 2) {
        for (int64_t n = 0; (2 * n + 1) * (2 * n + 1) < 4 * T; ++n) terms.emplace_back(Frac((2 * n + 1) * (2 * n + 1), 4), BigRat(2));
    } else if (which == 3 || which == 4) {
        terms.emplace_back(Frac(0), BigRat(1));
        for (int64_t n = 1; n * n < T; ++n) terms.emplace_back(Frac(n * n), BigRat((which == 4 && n % 2) ? -2 : 2));
    } else {
        throw Error("theta_series: which must be 2, 3 or 4");
    }
    return QSeries::from_terms(terms, Frac(T));
}

QSeries eta_series(int64_t d, int64_t T) {
    if (d < 1) throw Error("eta_series: d must be positive");
    Frac lead(d, 24);
    int64_t len = std::max<int64_t>(0, (Frac(T) - lead).ceil());
    std::vector<BigInt> f((size_t)len);
    for (int64_t k = 0;; ++k) {
        bool any = false;
        for (int64_t kk : {k, -k - 1}) {
            int64_t e = d * kk * (3 * kk + 1) / 2;
            if (e < len) {
                f[e] += (kk % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any) break;
    }
    return QSeries::from_ints(f, lead, Frac(T));
}

QSeries geta_series(int64_t delta, int64_t g, int64_t n, int64_t T) {
    if (delta < 1 || n < 1) throw Error("geta_series: delta and n must be positive");
    if (g <= 0 || g >= delta) throw Error("geta_series: need 0 < g < delta");
    Frac lead = Frac(n * delta, 2) * p2(Frac(g, delta));
    int64_t len = std::max<int64_t>(0, (Frac(T) - lead).ceil());
    std::vector<int64_t> a((size_t)(n * delta), 0);
    a[(size_t)(n * g)] += 1;
    a[(size_t)(n * (delta - g))] += 1;
    return QSeries::from_ints(expand_periodic(a, len), lead, Frac(T));
}

}  // namespace etaid
