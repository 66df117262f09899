#include "oracles.hpp"

#include "cusps.hpp"
#include "modularity.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace etaid;

namespace {

std::vector<Frac> at_listed(const std::vector<Frac>& ords, const CuspSystem& S, const std::vector<std::string>& names) {
    std::vector<Frac> out;
    for (const auto& n : names) {
        int64_t a = 1, c = 0;
        if (n == "0") a = 0, c = 1;
        else if (n != "oo") {
            auto sl = n.find('/');
            a = std::stoll(n.substr(0, sl)), c = std::stoll(n.substr(sl + 1));
        }
        auto key = cusp_key(a, c, S.level);
        size_t i = 0;
        while (i < S.cusps.size() && cusp_key(S.cusps[i].a, S.cusps[i].c, S.level) != key) ++i;
        REQUIRE(i < S.cusps.size());
        out.push_back(ords[i]);
    }
    return out;
}

std::vector<Frac> fr(const std::vector<int>& v) { return {v.begin(), v.end()}; }

const std::vector<std::string> kCusps25 = {"oo", "0", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7", "1/8", "1/9",
                                          "1/10", "1/11", "1/12", "2/5", "2/25", "3/5", "3/10", "3/25", "4/5", "4/25",
                                          "6/25", "7/10", "7/25", "8/25", "9/10", "9/25", "11/25", "12/25"};

int64_t brute_cusp_count(int64_t N) {
    int64_t s = 0;
    for (int64_t d : divisors(N)) s += euler_phi(d) * euler_phi(N / d);
    return s / 2;
}

}  // namespace

TEST_CASE("Gamma1(10) cusps and widths") {
    auto S = cusps_and_widths(10);
    REQUIRE(S.cusps.size() == 8);
    std::map<std::string, int64_t> want = {{"0", 10}, {"oo", 1}, {"1/2", 5}, {"1/3", 10},
                                           {"1/4", 5}, {"1/5", 2}, {"2/5", 2}, {"3/10", 1}};
    std::set<std::pair<int64_t, int64_t>> keys;
    for (size_t i = 0; i < S.cusps.size(); ++i) {
        keys.insert(cusp_key(S.cusps[i].a, S.cusps[i].c, 10));
        CHECK(want.count(S.cusps[i].str()) == 1);
        CHECK(S.widths[i] == want[S.cusps[i].str()]);
    }
    CHECK(keys.size() == 8);
}

TEST_CASE("Gamma1(4) cusps and theta-quotient orders") {
    auto S = cusps_and_widths(4);
    REQUIRE(S.cusps.size() == 3);
    CHECK(S.cusps[0].str() == "oo");
    CHECK(S.cusps[1].str() == "0");
    CHECK(S.cusps[2].str() == "1/2");
    CHECK(S.widths == std::vector<int64_t>{1, 4, 1});
    auto L = GetaList::from_triples({{4, 1, Frac(16)}, {4, 2, Frac(-4)}});
    CHECK(getaprod_cusp_ORDS(L, S) == fr({0, 1, -1}));
    CHECK(getaprod_cusp_ord(L, Cusp{1, 2}) == Frac(-1));
}

TEST_CASE("Gamma1(25) cusps, widths and orders") {
    auto S = cusps_and_widths(25);
    REQUIRE(S.cusps.size() == 28);
    std::vector<std::string> names;
    for (const auto& c : S.cusps) names.push_back(c.str());
    CHECK(names == kCusps25);
    CHECK(S.widths == std::vector<int64_t>{1, 25, 25, 25, 25, 5, 25, 25, 25, 25, 5, 25, 25, 5,
                                           1, 5, 5, 1, 5, 1, 1, 5, 1, 1, 5, 1, 1, 1});
    GetaList f1;
    for (int64_t j = 1; j <= 12; ++j) f1.entries.push_back({25, j, Frac(1)});
    f1.normalize();
    CHECK(at_listed(getaprod_cusp_ORDS(f1, S), S, kCusps25) ==
          fr({-1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1, -1, 0, -1, -1, -1}));
    auto f2 = GetaList::from_triples({{25, 10, Frac(1)}, {25, 5, Frac(-1)}});
    CHECK(at_listed(getaprod_cusp_ORDS(f2, S), S, kCusps25) ==
          fr({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 1}));
    CHECK(at_listed(getaprod_cusp_ORDS(f2.inverse(), S), S, kCusps25) ==
          fr({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, -1}));
}

TEST_CASE("single-factor cusp order") {
    CHECK(geta_cusp_ord(50, 1, 4, 29) == Frac(1, 600));
}

TEST_CASE("cusp counts and width sums") {
    CHECK_THROWS(cusps_and_widths(2));
    for (int64_t N = 3; N <= 60; ++N) {
        auto S = cusps_and_widths(N);
        std::set<std::pair<int64_t, int64_t>> keys;
        for (const auto& c : S.cusps) keys.insert(cusp_key(c.a, c.c, N));
        CHECK(keys.size() == S.cusps.size());
        if (N >= 5) {
            CHECK((int64_t)S.cusps.size() == brute_cusp_count(N));
            CHECK(expected_cusp_count(N) == brute_cusp_count(N));
        }
        if (N >= 3) {
            int64_t w = 0;
            for (int64_t x : S.widths) w += x;
            CHECK(w == projective_index(N));
        }
    }
}

TEST_CASE("cusp equivalence is symmetric and respects the key") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        int64_t N = std::uniform_int_distribution<int64_t>(5, 40)(rng);
        int64_t c1 = std::uniform_int_distribution<int64_t>(1, 3 * N)(rng), c2 = std::uniform_int_distribution<int64_t>(1, 3 * N)(rng);
        int64_t a1 = std::uniform_int_distribution<int64_t>(0, 3 * N)(rng), a2 = std::uniform_int_distribution<int64_t>(0, 3 * N)(rng);
        if (gcd64(a1, c1) != 1 || gcd64(a2, c2) != 1) continue;
        bool e = cusp_equiv(a1, c1, a2, c2, N);
        CHECK(e == cusp_equiv(a2, c2, a1, c1, N));
        CHECK(e == (cusp_key(a1, c1, N) == cusp_key(a2, c2, N)));
    }
}

TEST_CASE("orders of modular functions sum to zero") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 60) {
        int64_t N = std::uniform_int_distribution<int64_t>(5, 30)(rng);
        auto ds = divisors(N);
        GetaList L;
        for (int k = 0; k < 5; ++k) {
            int64_t d = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(rng)];
            if (d < 3) continue;
            int64_t g = std::uniform_int_distribution<int64_t>(1, (d - 1) / 2)(rng);
            L.entries.push_back({d, g, Frac(std::uniform_int_distribution<int64_t>(-4, 4)(rng))});
        }
        L.normalize();
        if (L.entries.empty() || !is_gamma1_modfunc(L, N)) continue;
        ++done;
        auto S = cusps_and_widths(N);
        Frac s(0);
        for (const Frac& x : getaprod_cusp_ORDS(L, S)) s = s + x;
        CHECK(s == Frac(0));
    }
}
