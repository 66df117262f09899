#include "cusps.hpp"

#include <algorithm>
#include <set>

namespace etaid {

std::string Cusp::str() const {
    if (c == 0) return "oo";
    if (a == 0) return "0";
    return std::to_string(a) + "/" + std::to_string(c);
}

bool cusp_equiv(int64_t a1, int64_t c1, int64_t a2, int64_t c2, int64_t N) {
    if (gcd64(a1, c1) != 1 || gcd64(a2, c2) != 1) throw Error("cusp_equiv: fractions must be reduced");
    for (int sign : {1, -1}) {
        if (mod64(c2 - sign * c1, N)) continue;
        for (int64_t n = 0; n < N; ++n)
            if (mod64(a2 - sign * (a1 + n * c1), N) == 0) return true;
    }
    return false;
}

std::pair<int64_t, int64_t> cusp_key(int64_t a, int64_t c, int64_t N) {
    int64_t g = gcd64(c, N);
    std::pair<int64_t, int64_t> p{mod64(c, N), mod64(a, g)}, m{mod64(-c, N), mod64(-a, g)};
    return std::min(p, m);
}

int64_t cusp_width(int64_t a, int64_t c, int64_t N) {
    if (gcd64(a, c) != 1) throw Error("cusp_width: fraction must be reduced");
    int64_t g = gcd64(c, N);
    if (N == 4 && gcd64(c, 4) == 2) return 1;
    return N / g;
}

namespace {

// Smallest positive residues coprime to m, one per class of the relation x ~ y (or x ~ +-y).
std::vector<int64_t> fold_reps(int64_t m, bool pm) {
    std::vector<int64_t> out;
    std::set<int64_t> seen;
    for (int64_t x = 1; x <= m; ++x) {
        if (gcd64(x, m) != 1) continue;
        int64_t r = x % m;
        if (seen.count(r)) continue;
        out.push_back(x);
        seen.insert(r);
        if (pm) seen.insert(mod64(-x, m));
    }
    return out;
}

// Coprime lift of (x, y) mod N, reduced to a/c with 0 <= a < c.
Cusp lift(int64_t x, int64_t y, int64_t N) {
    if (x == 0) {
        if (mod64(y, N) == 1 || mod64(y, N) == mod64(-1, N)) return {1, 0};
        x = N;
    }
    for (int64_t j = 0;; ++j) {
        int64_t yy = y + j * N;
        if (gcd64(x, yy) == 1) return {mod64(yy, x), x};
        if (j > 4 * N + 100) throw Error("internal: no coprime lift");
    }
}

}  // namespace

std::vector<Cusp> make_cusps(int64_t N) {
    if (N < 3) throw Error("cusps: level must be at least 3");
    std::vector<Cusp> out;
    for (int64_t c : divisors(N)) {
        auto ss = fold_reps(N / c, true);
        auto as = fold_reps(c, c == N || 2 * c == N);
        for (int64_t s : ss)
            for (int64_t a : as) {
                int64_t x = mod64(c * s, N);
                Cusp z = lift(x, a, N);
                if (z.c == N && (z.a == 1 || z.a == N - 1)) z = {1, 0};
                out.push_back(z);
            }
    }
    std::set<std::pair<int64_t, int64_t>> keys;
    for (const auto& z : out)
        if (!keys.insert(cusp_key(z.a, z.c, N)).second) throw Error("internal: cusp list has equivalent members at level " + std::to_string(N));
    if (N >= 5 && (int64_t)out.size() != expected_cusp_count(N)) throw Error("internal: wrong number of cusps");
    std::sort(out.begin(), out.end(), [](const Cusp& x, const Cusp& y) {
        if (x.is_infinity() != y.is_infinity()) return x.is_infinity();
        return std::pair(x.a, x.c) < std::pair(y.a, y.c);
    });
    return out;
}

CuspSystem cusps_and_widths(int64_t N) {
    CuspSystem S;
    S.level = N;
    S.cusps = make_cusps(N);
    for (const auto& z : S.cusps) S.widths.push_back(cusp_width(z.a, z.c, N));
    return S;
}

int64_t projective_index(int64_t N) {
    __int128 num = (__int128)N * N, den = 2;
    for (int64_t p : prime_factors(N)) {
        num *= (p * p - 1);
        den *= p * p;
    }
    return (int64_t)(num / den);
}

int64_t expected_cusp_count(int64_t N) {
    int64_t s = 0;
    for (int64_t d : divisors(N)) s += euler_phi(d) * euler_phi(N / d);
    return s / 2;
}

Frac bord(int64_t delta, int64_t g, int64_t a, int64_t c) {
    if (g % delta == 0) throw Error("bord: delta divides g");
    int64_t e = gcd64(delta, c);
    Frac x(a * g, e);
    Frac t = x.frac_part() - Frac(1, 2);
    return Frac(e * e, 2 * delta) * t * t;
}

Frac geta_cusp_ord(int64_t delta, int64_t g, int64_t a, int64_t c) {
    if (g <= 0 || g >= delta) throw Error("geta_cusp_ord: need 0 < g < delta");
    return bord(delta, g, a, c) - bord(3 * delta, delta, a, c);
}

Frac getaprod_cusp_ord(const GetaList& L, const Cusp& z) {
    Frac s;
    for (const auto& e : L.entries) s += e.r * geta_cusp_ord(e.delta, e.g, z.a, z.c);
    return s;
}

Frac getaprod_cusp_ord(const GetaProduct& P, const Cusp& z) {
    Frac s = getaprod_cusp_ord(P.geta, z);
    for (const auto& f : P.eta) s += Frac(f.e) * bord(3 * f.d, f.d, z.a, z.c);
    return s;
}

std::vector<Frac> getaprod_cusp_ORDS(const GetaProduct& P, const CuspSystem& S) {
    for (const auto& e : P.geta.entries)
        if (S.level % e.delta) throw Error("ORDS: delta " + std::to_string(e.delta) + " does not divide the level");
    std::vector<Frac> v;
    for (size_t i = 0; i < S.cusps.size(); ++i) v.push_back(Frac(S.widths[i]) * getaprod_cusp_ord(P, S.cusps[i]));
    return v;
}

std::vector<Frac> getaprod_cusp_ORDS(const GetaList& L, const CuspSystem& S) {
    GetaProduct P;
    P.geta = L;
    return getaprod_cusp_ORDS(P, S);
}

}  // namespace etaid
