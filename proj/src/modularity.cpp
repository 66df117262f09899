#include "modularity.hpp"

namespace etaid {

Frac p2(Frac t) {
    Frac x = t.frac_part();
    return x * x - x + Frac(1, 6);
}

namespace {

void require_divides(int64_t d, int64_t N) {
    if (N < 1 || d < 1 || N % d) throw Error(std::to_string(d) + " does not divide level " + std::to_string(N));
}

bool even_integer(Frac v) { return v.is_integer() && v.num() % 2 == 0; }

}  // namespace

Frac vinf(const GetaList& L, int64_t N) {
    Frac s;
    for (const auto& e : L.entries) {
        require_divides(e.delta, N);
        s += Frac(e.delta) * p2(Frac(e.g, e.delta)) * e.r;
    }
    return s;
}

Frac v0(const GetaList& L, int64_t N) {
    Frac s;
    for (const auto& e : L.entries) {
        require_divides(e.delta, N);
        s += Frac(N / e.delta, 6) * e.r;
    }
    return s;
}

Frac vinf(const GetaProduct& P, int64_t N) {
    Frac s = vinf(P.geta, N);
    for (const auto& f : P.eta) {
        require_divides(f.d, N);
        s += Frac(f.d * f.e, 12);
    }
    return s;
}

Frac v0(const GetaProduct& P, int64_t N) {
    Frac s = v0(P.geta, N);
    for (const auto& f : P.eta) {
        require_divides(f.d, N);
        s += Frac(N / f.d * f.e, 12);
    }
    return s;
}

bool is_gamma1_modfunc(const GetaProduct& P, int64_t N, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (N < 1) return fail("level must be positive");
    for (const auto& e : P.geta.entries)
        if (N % e.delta) return fail("delta " + std::to_string(e.delta) + " does not divide " + std::to_string(N));
    int64_t weight2 = 0;
    for (const auto& f : P.eta) {
        if (N % f.d) return fail("eta(" + std::to_string(f.d) + "tau) does not have level dividing " + std::to_string(N));
        weight2 += f.e;
    }
    if (weight2) return fail("nonzero weight " + Frac(weight2, 2).str());
    Frac vi = vinf(P, N), vz = v0(P, N);
    if (!even_integer(vi)) return fail("vinf = " + vi.str() + " is not an even integer");
    if (!even_integer(vz)) return fail("v0 = " + vz.str() + " is not an even integer");
    if (why) why->clear();
    return true;
}

bool is_gamma1_modfunc(const GetaList& L, int64_t N, std::string* why) {
    GetaProduct P;
    P.geta = L;
    return is_gamma1_modfunc(P, N, why);
}

}  // namespace etaid
