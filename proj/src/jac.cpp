#include "jac.hpp"

#include "modularity.hpp"

#include <algorithm>

namespace etaid {

bool ProductForm::integral() const {
    return std::all_of(a.begin(), a.end(), [](Frac x) { return x.is_integer(); });
}

std::vector<int64_t> ProductForm::int_exponents() const {
    std::vector<int64_t> v;
    v.reserve(a.size());
    for (Frac x : a) {
        if (!x.is_integer()) throw Error("product has a non-integral factor exponent");
        v.push_back(x.num());
    }
    return v;
}

ProductForm to_product_form(const JacMonomial& m, int64_t L) {
    int64_t base = m.base();
    if (L == 0) L = base;
    if (L % base) throw Error("rebase target " + std::to_string(L) + " is not a multiple of " + std::to_string(base));
    ProductForm p;
    p.coeff = m.coeff;
    p.q_exp = m.q_exp;
    p.L = L;
    p.a.assign((size_t)L, Frac(0));
    for (const auto& [f, r] : m.factors) {
        for (int64_t k = 0; k < L; ++k) {
            int64_t res = k % f.b;
            if (res == 0) p.a[k] += r;
            if (f.g != 0) {
                if (res == f.g) p.a[k] += r;
                if (res == f.b - f.g) p.a[k] += r;
            }
        }
    }
    return p;
}

JacMonomial from_product_form(const ProductForm& p) {
    JacMonomial m;
    m.coeff = p.coeff;
    m.q_exp = p.q_exp;
    const int64_t L = p.L;
    Frac zero = p.a[0];
    for (int64_t r = 1; 2 * r < L; ++r) {
        if (p.a[r] != p.a[L - r]) throw Error("product exponents are not symmetric under m -> -m");
        if (!p.a[r].is_zero()) m.factors[JacFactor(r, L)] = p.a[r];
        zero -= p.a[r];
    }
    if (L % 2 == 0 && L > 1) {
        Frac h = p.a[L / 2] / Frac(2);
        if (!h.is_zero()) m.factors[JacFactor(L / 2, L)] = h;
        zero -= h;
    }
    if (!zero.is_zero()) m.factors[JacFactor(0, L)] = zero;
    m.period = L;
    m.clean();
    return m;
}

QSeries product_series(const ProductForm& p, int64_t T) {
    Frac room = Frac(T) - p.q_exp;
    int64_t len = std::max<int64_t>(0, room.ceil());
    if (sgn(p.coeff) == 0) return QSeries::zero(Frac(T));
    return QSeries::from_ints(expand_periodic(p.int_exponents(), len), p.q_exp, Frac(T), p.coeff);
}

QSeries jac_to_series(const JacMonomial& m, int64_t T) { return product_series(to_product_form(m), T); }

QSeries jac_to_series(const JacExpr& x, int64_t T) {
    QSeries s = QSeries::zero(Frac(T));
    for (const auto& t : x.terms) s = s + jac_to_series(t, T);
    return s;
}

std::optional<std::vector<int64_t>> peel_exponents(const std::vector<BigInt>& g, int64_t acc) {
    const size_t M = g.size();
    std::vector<int64_t> a(M, 0);
    if (M == 0) return a;
    if (g[0] != 1) return std::nullopt;
    // q g'/g = sum s_k q^k, s_k = -sum_{d|k} d a_d.
    std::vector<BigInt> s(M);
    std::vector<BigInt> divsum(M);  // sum_{d|k, d<k} d a_d
    BigInt t;
    for (size_t k = 1; k < M; ++k) {
        t = g[k] * (unsigned long)k;
        for (size_t j = 1; j < k; ++j) {
            if (sgn(g[k - j]) == 0) continue;
            mpz_submul(t.get_mpz_t(), s[j].get_mpz_t(), g[k - j].get_mpz_t());
        }
        s[k] = t;
        // k a_k = -s_k - divsum[k]
        BigInt ka = -s[k] - divsum[k];
        if (!mpz_divisible_ui_p(ka.get_mpz_t(), (unsigned long)k)) return std::nullopt;
        mpz_divexact_ui(ka.get_mpz_t(), ka.get_mpz_t(), (unsigned long)k);
        if (!ka.fits_slong_p() || std::abs(ka.get_si()) > acc) return std::nullopt;
        a[k] = ka.get_si();
        if (a[k])
            for (size_t m = 2 * k; m < M; m += k) divsum[m] += BigInt((long)k) * a[k];
    }
    return a;
}

std::optional<Normalized> normalize_lead(const QSeries& f, int64_t max_terms) {
    if (f.is_zero()) return std::nullopt;
    Normalized n;
    n.lead_coeff = f.lead_coeff();
    n.lead_exp = f.lead_exp();
    int64_t known = (f.T - f.n0 + f.D - 1) / f.D;
    int64_t M = std::min(max_terms, known);
    // Only exponents lead + integer may carry coefficients.
    for (size_t k = 0; k < f.c.size(); ++k)
        if ((int64_t)k % f.D && sgn(f.c[k]) != 0) return std::nullopt;
    n.g.resize((size_t)M);
    for (int64_t j = 0; j < M; ++j) {
        BigRat q = f.c[(size_t)(j * f.D)] / n.lead_coeff;
        if (q.get_den() != 1) return std::nullopt;
        n.g[(size_t)j] = q.get_num();
    }
    return n;
}

std::optional<JacMonomial> jacprodmake(const QSeries& f, int64_t T, int64_t margin) {
    auto n = normalize_lead(f, T);
    if (!n) return std::nullopt;
    auto a = peel_exponents(n->g);
    if (!a) return std::nullopt;
    const int64_t M = (int64_t)a->size();
    int64_t bmax = std::max<int64_t>(1, (M - margin) / 2);
    for (int64_t b = 1; b <= bmax; ++b) {
        bool ok = true;
        for (int64_t k = b + 1; k < M && ok; ++k) ok = (*a)[k] == (*a)[(k - 1) % b + 1];
        if (!ok) continue;
        ProductForm p;
        p.coeff = n->lead_coeff;
        p.q_exp = n->lead_exp;
        p.L = b;
        p.a.assign((size_t)b, Frac(0));
        for (int64_t r = 1; r <= b && r < M; ++r) p.a[(size_t)(r % b)] = Frac((*a)[r]);
        bool sym = true;
        for (int64_t r = 1; r < b; ++r) sym = sym && p.a[r] == p.a[b - r];
        if (!sym) return std::nullopt;
        return from_product_form(p);
    }
    return std::nullopt;
}

std::optional<EtaQuotient> etamake(const QSeries& f, int64_t T) {
    auto n = normalize_lead(f, T);
    if (!n) return std::nullopt;
    auto a = peel_exponents(n->g);
    if (!a) return std::nullopt;
    const int64_t M = (int64_t)a->size();
    EtaQuotient q;
    q.coeff = n->lead_coeff;
    Frac pref;
    for (int64_t d = 1; d < M; ++d) {
        int64_t e = 0;
        for (int64_t k : divisors(d)) e += mobius(d / k) * (*a)[k];
        if (!e) continue;
        if (2 * d > M - 1) return std::nullopt;
        q.entries.push_back({d, e});
        pref += Frac(d * e, 24);
    }
    if (pref != n->lead_exp) return std::nullopt;
    return q;
}

Rebased mixedjac2jac(const JacExpr& x, int64_t verify_order) {
    Rebased out;
    for (const auto& t : x.terms) out.period = lcm64(out.period, t.base());
    for (const auto& t : x.terms) out.expr.terms.push_back(from_product_form(to_product_form(t, out.period)));
    if (verify_order > 0) {
        for (size_t i = 0; i < x.terms.size(); ++i) {
            if (!to_product_form(x.terms[i]).integral()) continue;
            QSeries d = jac_to_series(x.terms[i], verify_order) - jac_to_series(out.expr.terms[i], verify_order);
            if (!d.is_zero()) throw Error("internal: rebasing changed the series of " + x.terms[i].str());
        }
    }
    return out;
}

Rebased processjacid(const JacExpr& x, int64_t verify_order) {
    if (x.terms.empty()) throw Error("processjacid: expression is zero");
    Rebased r = mixedjac2jac(x, verify_order);
    size_t pick = 0;
    for (size_t i = 1; i < r.expr.terms.size(); ++i)
        if (r.expr.terms[i].q_exp < r.expr.terms[pick].q_exp) pick = i;
    JacMonomial div = r.expr.terms[pick];
    JacExpr out;
    for (const auto& t : r.expr.terms) {
        JacMonomial m = t / div;
        m.period = r.period;
        out.terms.push_back(m);
    }
    r.expr = out;
    return r;
}

GetaTerm jac_to_getaprod(const JacMonomial& m) {
    ProductForm p = to_product_form(m);
    const int64_t L = p.L;
    GetaTerm out;
    out.coeff = m.coeff;
    for (int64_t r = 1; 2 * r < L; ++r)
        if (!p.a[r].is_zero()) out.prod.geta.entries.push_back({L, r, p.a[r]});
    if (L % 2 == 0 && L > 1 && !p.a[L / 2].is_zero()) out.prod.geta.entries.push_back({L, L / 2, p.a[L / 2] / Frac(2)});
    if (!p.a[0].is_zero()) {
        if (!p.a[0].is_integer()) throw Error("JAC(0," + std::to_string(L) + ") has a non-integral exponent");
        out.prod.eta.push_back({L, p.a[0].num()});
    }
    out.prod.normalize();
    Frac want = getaprod_lead_exp(out.prod);
    if (want != m.q_exp)
        throw Error("not an eta-product: q-prefactor " + m.q_exp.str() + " but the product needs " + want.str());
    return out;
}

JacMonomial getaprod_to_jac(const GetaProduct& P, int64_t scale) {
    if (scale < 1) throw Error("scale must be positive");
    JacMonomial m;
    for (const auto& e : P.geta.entries) {
        int64_t d = e.delta * scale;
        m.factors[JacFactor(e.g * scale, d)] += e.r;
        m.factors[JacFactor(0, d)] -= e.r;
        m.q_exp += Frac(d, 2) * p2(Frac(e.g, e.delta)) * e.r;
    }
    for (const auto& f : P.eta) {
        int64_t d = f.d * scale;
        m.factors[JacFactor(0, d)] += Frac(f.e);
        m.q_exp += Frac(d * f.e, 24);
    }
    m.clean();
    return m;
}

JacMonomial getalist_to_jac(const GetaList& L, int64_t scale) {
    GetaProduct P;
    P.geta = L;
    return getaprod_to_jac(P, scale);
}

Frac getaprod_lead_exp(const GetaProduct& P) {
    Frac s;
    for (const auto& e : P.geta.entries) s += Frac(e.delta, 2) * p2(Frac(e.g, e.delta)) * e.r;
    for (const auto& f : P.eta) s += Frac(f.d * f.e, 24);
    return s;
}

std::vector<std::vector<BigRat>> findhom_linear(const std::vector<QSeries>& fs, int64_t T) {
    const size_t n = fs.size();
    if (n == 0) return {};
    int64_t D = 1;
    Frac lo(T);
    for (const auto& f : fs) {
        if (f.order() < Frac(T)) throw Error("findhom: a series is known only to order " + f.order().str());
        D = lcm64(D, f.D);
        if (!f.is_zero()) lo = std::min(lo, f.lead_exp());
    }
    int64_t r0 = (lo * Frac(D)).floor(), r1 = T * D;
    std::vector<std::vector<BigRat>> rows;
    for (int64_t k = r0; k < r1; ++k) {
        std::vector<BigRat> row(n);
        bool any = false;
        for (size_t j = 0; j < n; ++j) {
            row[j] = fs[j].coeff(Frac(k, D));
            any = any || sgn(row[j]) != 0;
        }
        if (any) rows.push_back(row);
    }
    // Reduced row echelon form.
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        BigRat inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            BigRat f = rows[i][c];
            for (size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back((int)c);
        ++r;
    }
    std::vector<std::vector<BigRat>> basis;
    for (size_t c = 0; c < n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), (int)c) != pivot_col.end()) continue;
        std::vector<BigRat> v(n);
        v[c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][c];
        BigInt den = 1, num = 0;
        for (const auto& x : v) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        for (auto& x : v) {
            x *= den;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
        }
        for (auto& x : v) x /= num;
        for (const auto& x : v)
            if (sgn(x) != 0) {
                if (sgn(x) < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        basis.push_back(v);
    }
    return basis;
}

JacExpr qs2jaccombo(const std::vector<QSeries>& summands, int64_t T) {
    JacExpr out;
    for (const auto& s : summands) {
        if (s.is_zero()) continue;
        auto m = jacprodmake(s, T);
        if (!m) throw Error("qs2jaccombo: a summand is not a theta-product to order " + std::to_string(T));
        out.terms.push_back(*m);
    }
    return out;
}

}  // namespace etaid
