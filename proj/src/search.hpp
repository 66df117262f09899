// Template searches for G/H eta-quotient identities, with proofs.
#pragma once

#include "characters.hpp"
#include "prover.hpp"

#include <optional>
#include <string>
#include <vector>

namespace etaid {

struct SearchOptions {
    int64_t acc = 20;             // bound on peeled exponents
    int64_t stage1_order = 110;   // first recognition pass
    int64_t qthreshold = 3000;
    int64_t safety = 50;
    bool prove = true;
    int jobs = 1;
    int64_t exclude_threshold = 0;  // type-1 threshold for the type 3/10 exclusion lists; 0 = same T
    int64_t type9_max = 20;
};

struct SearchHit {
    int type = 0;
    std::vector<int64_t> params;
    GHExpr expr;
    RamIdResult rec;
    int64_t level = 0;
    std::optional<ProofCertificate> cert;
    std::string identity() const;  // "expr = rid"
};

struct Candidate {
    std::vector<int64_t> params;
    GHExpr expr;
};

// Candidates of type k in enumeration order; type 9 is handled by find_type directly.
std::vector<Candidate> enumerate_type(int k, const GHFamily& fam, int64_t T, const std::vector<std::vector<int64_t>>& exclude = {});

// Recognition in two passes and, when requested, a proof at the JAC base of the identity.
std::optional<SearchHit> examine(int k, const GHFamily& fam, const Candidate& c, const SearchOptions& o);

std::vector<SearchHit> find_type(int k, const GHFamily& fam, int64_t T, const SearchOptions& o);

std::string hits_json(const std::vector<SearchHit>& hits, const GHFamily& fam);
std::string hits_markdown(const std::vector<SearchHit>& hits);
std::string hits_latex(const std::vector<SearchHit>& hits);
std::string gh_latex(const GHExpr& e);
std::string eta_quotient_latex(const EtaQuotient& q);

}  // namespace etaid
