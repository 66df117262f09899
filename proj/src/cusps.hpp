// Cusps of Gamma1(N) with fan widths, and orders of generalized eta-products there.
#pragma once

#include "types.hpp"

#include <string>
#include <vector>

namespace etaid {

// a/c in lowest terms; infinity is (1,0).
struct Cusp {
    int64_t a = 1;
    int64_t c = 0;
    bool is_infinity() const { return c == 0; }
    bool operator==(const Cusp&) const = default;
    std::string str() const;  // "oo", "0", "a/c"
};

struct CuspSystem {
    int64_t level = 1;
    std::vector<Cusp> cusps;
    std::vector<int64_t> widths;
};

bool cusp_equiv(int64_t a1, int64_t c1, int64_t a2, int64_t c2, int64_t N);
// Class invariant: equal keys iff the cusps are Gamma1(N)-equivalent.
std::pair<int64_t, int64_t> cusp_key(int64_t a, int64_t c, int64_t N);
std::vector<Cusp> make_cusps(int64_t N);
int64_t cusp_width(int64_t a, int64_t c, int64_t N);
CuspSystem cusps_and_widths(int64_t N);
// (N^2/2) prod_{p|N} (1 - 1/p^2), the index of the image of Gamma1(N) in PSL2(Z) for N > 2.
int64_t projective_index(int64_t N);
// Number of cusps of Gamma1(N) for N >= 5.
int64_t expected_cusp_count(int64_t N);

// Order of theta_{delta;g} at a/c.
Frac bord(int64_t delta, int64_t g, int64_t a, int64_t c);
Frac geta_cusp_ord(int64_t delta, int64_t g, int64_t a, int64_t c);
Frac getaprod_cusp_ord(const GetaList& L, const Cusp& z);
Frac getaprod_cusp_ord(const GetaProduct& P, const Cusp& z);
// Width-scaled orders, parallel to S.cusps.
std::vector<Frac> getaprod_cusp_ORDS(const GetaList& L, const CuspSystem& S);
std::vector<Frac> getaprod_cusp_ORDS(const GetaProduct& P, const CuspSystem& S);

}  // namespace etaid
