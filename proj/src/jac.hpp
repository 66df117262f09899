// JAC monomials, generalized eta-products and product recognition from series.
#pragma once

#include "series.hpp"
#include "types.hpp"

#include <optional>

namespace etaid {

// coeff * q^q_exp * prod_{m>=1} (1-q^m)^{a[m mod L]}.
struct ProductForm {
    BigRat coeff = 1;
    Frac q_exp;
    int64_t L = 1;
    std::vector<Frac> a;

    bool integral() const;
    std::vector<int64_t> int_exponents() const;  // throws unless integral
};

// L must be a multiple of the monomial's base; 0 selects the base.
ProductForm to_product_form(const JacMonomial& m, int64_t L = 0);
// Canonical JAC monomial over base p.L.
JacMonomial from_product_form(const ProductForm& p);

QSeries product_series(const ProductForm& p, int64_t T);
QSeries jac_to_series(const JacMonomial& m, int64_t T);
QSeries jac_to_series(const JacExpr& x, int64_t T);

// Exponents with g = prod (1-q^n)^{a_n} mod q^M, g[0] = 1; entry n holds a_n, entry 0 is unused.
// Stops with nullopt at the first non-integral exponent or one exceeding `acc` in size.
std::optional<std::vector<int64_t>> peel_exponents(const std::vector<BigInt>& g, int64_t acc = INT64_MAX / 4);

struct Normalized {
    BigRat lead_coeff;
    Frac lead_exp;
    std::vector<BigInt> g;  // series divided by its leading term, integer steps
};
// Fails when exponents are not lead + integers or the quotient is not integral.
std::optional<Normalized> normalize_lead(const QSeries& f, int64_t max_terms);

std::optional<JacMonomial> jacprodmake(const QSeries& f, int64_t T, int64_t margin = 10);
std::optional<EtaQuotient> etamake(const QSeries& f, int64_t T);

struct Rebased {
    JacExpr expr;
    int64_t period = 1;
};
// Rewrites every term over the lcm of all bases; checked by a series round trip to `verify_order`.
Rebased mixedjac2jac(const JacExpr& x, int64_t verify_order = 30);
// Rebases, then divides by the first term of least q-exponent.
Rebased processjacid(const JacExpr& x, int64_t verify_order = 30);

struct GetaTerm {
    BigRat coeff = 1;
    GetaProduct prod;
};
// Throws when the q-prefactor is not the eta prefactor of the product.
GetaTerm jac_to_getaprod(const JacMonomial& m);
JacMonomial getalist_to_jac(const GetaList& L, int64_t scale = 1);
JacMonomial getaprod_to_jac(const GetaProduct& P, int64_t scale = 1);
// Lead exponent sum of r*(delta/2)*P2(g/delta) plus d*e/24.
Frac getaprod_lead_exp(const GetaProduct& P);

// Basis of rational linear relations among the series, primitive integer vectors.
std::vector<std::vector<BigRat>> findhom_linear(const std::vector<QSeries>& fs, int64_t T);

// Recognizes each summand as a JAC monomial. A single series that is not a product fails.
JacExpr qs2jaccombo(const std::vector<QSeries>& summands, int64_t T);

}  // namespace etaid
