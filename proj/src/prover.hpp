// Valence-formula proofs of generalized eta-product identities on Gamma1(N).
#pragma once

#include "cusps.hpp"
#include "jac.hpp"

#include <string>
#include <vector>

namespace etaid {

struct StatementTerm {
    BigRat coeff = 1;
    GetaProduct prod;
    int64_t scale = 1;
};

// sum coeff_j * f_j + constant = 0.
struct IdentityStatement {
    std::vector<StatementTerm> terms;
    BigRat constant = 0;
    int64_t level = 0;  // 0 = infer
};

struct ProveOptions {
    int64_t safety = 50;
    int64_t qthreshold = 3000;
    int64_t min_order = 0;  // verify at least this far
};

enum class Verdict { proved, failed, not_modular };

struct ProofCertificate {
    int64_t level = 0;
    CuspSystem cusps;
    std::vector<std::string> terms;  // term products, scaled into level-N form
    std::vector<BigRat> coeffs;
    BigRat constant;
    std::vector<std::vector<Frac>> ords;  // ords[j][i]: term j at cusp i
    std::vector<Frac> lower;              // per cusp: min(0, min_j ords[j][i])
    Frac B;
    int64_t required_order = 0;  // exponents < required_order must vanish
    int64_t checked_order = 0;   // exponents < checked_order were verified
    Verdict verdict = Verdict::failed;
    int64_t failed_exponent = 0;
    int not_modular_term = -1;
    std::string message;
    std::vector<std::string> log;
};

// Sum over the non-infinite cusps (index >= 1) of min({ords[j][i]} u {0}).
Frac min_tot_ords(const std::vector<std::vector<Frac>>& ords);
int64_t infer_level(const IdentityStatement& s);

ProofCertificate prove(const IdentityStatement& s, const ProveOptions& opt = {});

// Without a constant term, divides by the first term of least q-power so the
// constant becomes 1. The level is fixed from the original terms first.
IdentityStatement normalize_statement(const IdentityStatement& s);
// JAC-form identity (sum of terms = 0) to a statement; constant monomials are folded.
IdentityStatement statement_from_jac(const JacExpr& x);

const char* verdict_name(Verdict v);
std::string certificate_json(const ProofCertificate& c);
std::string ords_table(const ProofCertificate& c, bool latex);
std::string proof_summary(const ProofCertificate& c);

}  // namespace etaid
