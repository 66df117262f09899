// Text form of identities between generalized eta-products.
//
//   document := { "#!" key value | "#" comment } statement
//   statement := side "=" side
//   side      := term { ("+"|"-") term }
//   term      := [rational] { ["*"|"/"] factor }
//   factor    := ( "GETA(" d "," g ["," n] ")" | "EETA(" d ")"
//               | "GETAL(" d ";" g {"," g} ";" n ")" | "GSTAR(" d "," g ["," n] ")"
//               | "GSTAR(" d ";" g {"," g} ";" n ")" ) ["^" int]
#pragma once

#include "prover.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace etaid {

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& m, size_t p) : Error(m + " at offset " + std::to_string(p)), pos(p) {}
};

struct DslFactor {
    enum class Kind { geta, eeta, getal, gstar };
    Kind kind = Kind::geta;
    int64_t delta = 1;
    std::vector<int64_t> gs;
    int64_t scale = 1;
    int64_t power = 1;
    bool list_form = false;  // GSTAR written with ';'
    bool operator==(const DslFactor&) const = default;
};

struct DslTerm {
    BigRat coeff = 1;
    std::vector<DslFactor> factors;
    bool operator==(const DslTerm&) const = default;
};

struct DslDocument {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<DslTerm> lhs, rhs;
    bool operator==(const DslDocument&) const = default;
    std::string meta_value(const std::string& key) const;
};

DslDocument parse_identity(const std::string& text);
// One side only, for expansion.
std::vector<DslTerm> parse_expression(const std::string& text);
std::string print_terms(const std::vector<DslTerm>& ts);
std::string print_identity(const DslDocument& d);

GetaProduct factor_product(const DslFactor& f);
JacMonomial term_jac(const DslTerm& t);
QSeries expand_terms(const std::vector<DslTerm>& ts, int64_t order);

// lhs - rhs = 0; "#! level N" fixes the level.
IdentityStatement to_statement(const DslDocument& d);

// One factor exponent moved by +-1.
DslDocument mutate(const DslDocument& d, std::mt19937_64& rng);

}  // namespace etaid
