// Symbolic value types shared by the symbolic, modularity and prover layers.
#pragma once

#include "rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace etaid {

// eta_{delta;g}^r. Half-integral r only when g = delta/2.
struct GetaEntry {
    int64_t delta = 1;
    int64_t g = 0;
    Frac r;
    bool operator==(const GetaEntry&) const = default;
};

struct GetaList {
    std::vector<GetaEntry> entries;

    // Canonical g, sorted by (delta, g), merged, zero exponents dropped. Throws on invalid input.
    void normalize();
    static GetaList from_triples(const std::vector<GetaEntry>& v);
    GetaList scaled(int64_t n) const;
    GetaList inverse() const;
    bool operator==(const GetaList&) const = default;
    std::string str() const;
};

GetaList concat(const GetaList& a, const GetaList& b);

// eta(d tau)^e.
struct EtaFactor {
    int64_t d = 1;
    int64_t e = 0;
    bool operator==(const EtaFactor&) const = default;
};

struct EtaQuotient {
    BigRat coeff = 1;
    std::vector<EtaFactor> entries;  // sorted by d, distinct, nonzero exponents
    void normalize();
    bool operator==(const EtaQuotient&) const = default;
    std::string str() const;
};

// A coefficient-free generalized eta-product: geta part times Dedekind eta part.
struct GetaProduct {
    GetaList geta;
    std::vector<EtaFactor> eta;
    void normalize();
    GetaProduct inverse() const;
    bool empty() const { return geta.entries.empty() && eta.empty(); }
    bool operator==(const GetaProduct&) const = default;
    std::string str() const;
};

GetaProduct multiply(const GetaProduct& a, const GetaProduct& b);

struct JacFactor {
    int64_t g = 0;
    int64_t b = 1;
    JacFactor() = default;
    JacFactor(int64_t g0, int64_t b0);
    auto operator<=>(const JacFactor&) const = default;
};

struct JacMonomial {
    BigRat coeff = 1;
    Frac q_exp;
    std::map<JacFactor, Frac> factors;
    int64_t period = 0;  // detected base when produced by recognition

    void clean();
    int64_t base() const;  // lcm of factor bases, 1 when empty
    std::string str() const;
};

JacMonomial operator*(const JacMonomial& a, const JacMonomial& b);
JacMonomial operator/(const JacMonomial& a, const JacMonomial& b);
JacMonomial jac_pow(const JacMonomial& a, int64_t k);

struct JacExpr {
    std::vector<JacMonomial> terms;
    void add(const JacMonomial& m);  // merges terms with identical (q_exp, factors)
    std::string str() const;
};

JacExpr operator+(const JacExpr& a, const JacExpr& b);
JacExpr operator*(const JacExpr& a, const JacExpr& b);
JacExpr operator*(const JacExpr& a, const JacMonomial& m);

}  // namespace etaid
