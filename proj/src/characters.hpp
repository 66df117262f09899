// Real Dirichlet characters, the G/H families built from them, and eta-quotient
// recognition of symbolic G/H combinations.
#pragma once

#include "jac.hpp"

#include <optional>
#include <string>
#include <vector>

namespace etaid {

// Kronecker symbol (a/n).
int kronecker(int64_t a, int64_t n);

struct RealCharacter {
    int64_t modulus = 1;
    std::string desc;
    std::vector<int> table;  // table[r] = chi(r), 0 <= r < modulus
    int operator()(int64_t n) const { return table[(size_t)mod64(n, modulus)]; }
};

// Descriptions: "legendre:p", "jacobi:m", "kronecker:d", "induced:<desc> mod M",
// "product:<desc>,<desc>,... mod M". A trailing " mod M" on any description induces to M.
RealCharacter parse_character(const std::string& desc);
// Empty string when chi is a non-principal even real character, else the defect.
std::string character_defect(const RealCharacter& chi);

struct GHFamily {
    RealCharacter chi;
    std::vector<int64_t> g_res;  // 0 < g < N/2 with chi(g) = 1
    std::vector<int64_t> h_res;  // 0 < g < N/2 with chi(g) = -1
    int64_t N() const { return chi.modulus; }
};

GHFamily make_family(const RealCharacter& chi);

// eta*_{delta;g}(n tau) = q^{(n delta/2) P2(g/delta)} prod_{m = +-g mod delta} (1 - (-q^n)^m), reduced to its least base.
JacMonomial geta_star_jac(int64_t delta, int64_t g, int64_t n = 1);
// Rewrites a product over the least period of its exponent sequence.
ProductForm reduce_period(const ProductForm& p);

enum class GHKind { G, H };

struct GHAtom {
    GHKind kind = GHKind::G;
    bool star = false;
    int64_t n = 1;
    int64_t power = 1;
    bool operator==(const GHAtom&) const = default;
};

struct GHTerm {
    BigRat coeff = 1;
    std::vector<GHAtom> atoms;  // empty: the constant coeff
};

struct GHExpr {
    std::vector<GHTerm> num;
    std::vector<GHTerm> den;  // empty: denominator 1
    std::string str() const;
};

JacMonomial gh_monomial(const GHFamily& fam, GHKind which, int64_t n, bool star = false);
// Lowest power of q in G(n) or H(n); the same for the starred functions.
Frac gh_lead_exp(const GHFamily& fam, GHKind which, int64_t n);
JacExpr gh_to_jac(const GHFamily& fam, const std::vector<GHTerm>& terms);

struct RamIdResult {
    std::vector<int64_t> exponents;  // a_1.. of prod (1-q^n)^{a_n} after the leading term
    EtaQuotient rid;
    int64_t ebase = 1;   // lcm of the eta arguments in rid
    Frac ldq;            // lowest power of q
    int64_t period = 1;  // common JAC base of the expression
    JacExpr num, den;
};

// Expands num/den with T-10 terms after the leading one; every peeled exponent
// must be at most acc in size and the exponents must come from an eta-quotient
// whose arguments divide the JAC base. The q-prefactor is checked when every
// divisor of the base is below T-10. Nothing when not recognized.
std::optional<RamIdResult> check_ram_idf(const JacExpr& num, const JacExpr& den, int64_t acc, int64_t T);
std::optional<RamIdResult> check_ram_idf(const GHFamily& fam, const GHExpr& e, int64_t acc, int64_t T);

// Numerator minus rid times denominator, as a JAC expression.
JacExpr identity_difference(const RamIdResult& r);
JacMonomial eta_quotient_jac(const EtaQuotient& q);

}  // namespace etaid
