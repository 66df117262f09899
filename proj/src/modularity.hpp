// Robins' sufficient criterion for generalized eta-products on Gamma1(N).
#pragma once

#include "types.hpp"

#include <string>

namespace etaid {

// {t}^2 - {t} + 1/6.
Frac p2(Frac t);

// Sum of delta*P2(g/delta)*r. Dedekind factors eta(d tau)^e count as eta_{d;0}^{e/2}.
Frac vinf(const GetaList& L, int64_t N);
Frac vinf(const GetaProduct& P, int64_t N);
// Sum of (N/delta)*P2(0)*r.
Frac v0(const GetaList& L, int64_t N);
Frac v0(const GetaProduct& P, int64_t N);

// True when every delta divides N, the weight is 0, and vinf, v0 are even integers.
// On failure `why` receives a diagnostic.
bool is_gamma1_modfunc(const GetaList& L, int64_t N, std::string* why = nullptr);
bool is_gamma1_modfunc(const GetaProduct& P, int64_t N, std::string* why = nullptr);

}  // namespace etaid
