// Acceptance checks 1-7. Prints one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or the only failures are
// catalog displays marked "#! misprint" whose printed form is shown false by an
// independent expansion and whose corrected form proves.
#include "oracles.hpp"

#include "modularity.hpp"
#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace etaid;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string data_path(const std::string& rel) { return std::string(ETAID_DATA) + "/" + rel; }

DslDocument load(const std::string& path) { return parse_identity(oracle::slurp(path)); }

std::vector<std::string> dir_files(const std::string& rel) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(data_path(rel))) out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

struct Outcome {
    bool pass = true;
    bool documented = false;  // failure limited to documented misprints
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

std::string frac_list(const std::vector<Frac>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

std::vector<Frac> fr(const std::vector<int>& v) { return {v.begin(), v.end()}; }

Cusp parse_cusp(const std::string& n) {
    if (n == "oo") return {1, 0};
    if (n == "0") return {0, 1};
    auto sl = n.find('/');
    return {std::stoll(n.substr(0, sl)), std::stoll(n.substr(sl + 1))};
}

// Cusp name -> width, compared as sets of Gamma1(N) classes.
bool same_cusp_table(const CuspSystem& S, const std::map<std::string, int64_t>& want) {
    if (S.cusps.size() != want.size()) return false;
    std::map<std::pair<int64_t, int64_t>, int64_t> got;
    for (size_t i = 0; i < S.cusps.size(); ++i) got[cusp_key(S.cusps[i].a, S.cusps[i].c, S.level)] = S.widths[i];
    if (got.size() != want.size()) return false;
    for (const auto& [name, w] : want) {
        Cusp c = parse_cusp(name);
        auto it = got.find(cusp_key(c.a, c.c, S.level));
        if (it == got.end() || it->second != w) return false;
    }
    return true;
}

const std::vector<std::string> kCusps25 = {"oo", "0", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7", "1/8", "1/9",
                                          "1/10", "1/11", "1/12", "2/5", "2/25", "3/5", "3/10", "3/25", "4/5", "4/25",
                                          "6/25", "7/10", "7/25", "8/25", "9/10", "9/25", "11/25", "12/25"};
const std::vector<int64_t> kWidths25 = {1, 25, 25, 25, 25, 5, 25, 25, 25, 25, 5, 25, 25, 5,
                                        1, 5,  5,  1,  5,  1, 1,  5,  1,  1,  5, 1,  1,  1};

// ORDs listed in kCusps25 order, located by cusp class.
std::vector<Frac> listed_ords(const std::vector<Frac>& ords, const CuspSystem& S) {
    std::vector<Frac> out;
    for (const auto& n : kCusps25) {
        Cusp c = parse_cusp(n);
        auto key = cusp_key(c.a, c.c, S.level);
        for (size_t i = 0; i < S.cusps.size(); ++i)
            if (cusp_key(S.cusps[i].a, S.cusps[i].c, S.level) == key) out.push_back(ords[i]);
    }
    return out;
}

GetaList f1_25() {
    GetaList L;
    for (int64_t j = 1; j <= 12; ++j) L.entries.push_back({25, j, Frac(1)});
    L.normalize();
    return L;
}

GetaList f2_25() { return GetaList::from_triples({{25, 10, Frac(1)}, {25, 5, Frac(-1)}}); }

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    auto S10 = cusps_and_widths(10);
    o.check(since(t0) < 1, "Gamma1(10) slower than 1 s");
    o.check(same_cusp_table(S10, {{"0", 10}, {"oo", 1}, {"1/2", 5}, {"1/3", 10}, {"1/4", 5}, {"1/5", 2}, {"2/5", 2}, {"3/10", 1}}),
            "Gamma1(10) table differs");

    t0 = Clock::now();
    auto S4 = cusps_and_widths(4);
    o.check(since(t0) < 1, "Gamma1(4) slower than 1 s");
    std::vector<std::string> n4;
    for (const auto& c : S4.cusps) n4.push_back(c.str());
    o.check(n4 == std::vector<std::string>{"oo", "0", "1/2"} && S4.widths == std::vector<int64_t>{1, 4, 1},
            "Gamma1(4) output differs");

    t0 = Clock::now();
    auto S25 = cusps_and_widths(25);
    o.check(since(t0) < 1, "Gamma1(25) slower than 1 s");
    std::map<std::string, int64_t> w25;
    for (size_t i = 0; i < kCusps25.size(); ++i) w25[kCusps25[i]] = kWidths25[i];
    o.check(same_cusp_table(S25, w25), "Gamma1(25) table differs");
    o.notes.push_back("Gamma1(10): 8 cusps, Gamma1(4): 3, Gamma1(25): " + std::to_string(S25.cusps.size()));
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    Frac a = geta_cusp_ord(50, 1, 4, 29);
    o.check(a == Frac(1, 600), "getacuspord(50,1,4,29) = " + a.str());
    Frac b = getaprod_cusp_ord(GetaList::from_triples({{4, 1, Frac(16)}, {4, 2, Frac(-4)}}), Cusp{1, 2});
    o.check(b == Frac(-1), "getaprodcuspord(theta list, 1/2) = " + b.str());
    auto S = cusps_and_widths(25);
    auto v1 = listed_ords(getaprod_cusp_ORDS(f1_25(), S), S);
    auto v2 = listed_ords(getaprod_cusp_ORDS(f2_25(), S), S);
    auto v3 = listed_ords(getaprod_cusp_ORDS(f2_25().inverse(), S), S);
    o.check(v1 == fr({-1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1, -1, 0, -1, -1, -1}),
            "ORDS1 " + frac_list(v1));
    o.check(v2 == fr({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 1}),
            "ORDS2 " + frac_list(v2));
    o.check(v3 == fr({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, -1}),
            "ORDS3 " + frac_list(v3));
    o.check(since(t0) < 1, "slower than 1 s");
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto S = cusps_and_widths(25);
    std::vector<std::vector<Frac>> ords = {getaprod_cusp_ORDS(f1_25(), S), getaprod_cusp_ORDS(f2_25(), S),
                                           getaprod_cusp_ORDS(f2_25().inverse(), S)};
    Frac m = min_tot_ords(ords);
    o.check(m == Frac(-9), "mintotORDS on Gamma1(25) = " + m.str());
    auto c = prove(normalize_statement(to_statement(load(data_path("catalog/mod13_02.idt")))));
    o.check(-c.B == Frac(18), "level-26 quotient identity: -B = " + (-c.B).str());
    o.notes.push_back("mintotORDS = " + m.str() + ", level-26 -mintotord = " + (-c.B).str());
    return o;
}

// Proves a golden document; its "#! group", "#! minusB" and optional "#! checked" must match.
bool prove_golden(const std::string& path, Outcome& o, double limit, ProofCertificate* out = nullptr) {
    auto d = load(path);
    auto t0 = Clock::now();
    auto c = prove(normalize_statement(to_statement(d)));
    double dt = since(t0);
    std::string name = std::filesystem::path(path).stem().string();
    bool ok = c.verdict == Verdict::proved && std::to_string(c.level) == d.meta_value("group") &&
              (-c.B).str() == d.meta_value("minusB") &&
              (d.meta_value("checked").empty() || std::to_string(c.checked_order) == d.meta_value("checked")) &&
              dt < limit;
    if (!ok)
        o.check(false, name + ": " + verdict_name(c.verdict) + " Gamma1(" + std::to_string(c.level) + ") -B=" + (-c.B).str() +
                           " want Gamma1(" + d.meta_value("group") + ") -B=" + d.meta_value("minusB"));
    if (out) *out = c;
    return ok;
}

Outcome criterion4() {
    Outcome o;
    std::vector<std::string> named = {"identities/ramanujan25.idt", "identities/theta4.idt", "mod5/mod5_02.idt",
                                      "catalog/mod13_01.idt",       "catalog/mod17_01.idt",  "catalog/mod13_02.idt"};
    std::ostringstream vals;
    for (const auto& rel : named) {
        ProofCertificate c;
        prove_golden(data_path(rel), o, 30, &c);
        vals << " " << std::filesystem::path(rel).stem().string() << "(" << c.level << "," << (-c.B).str() << ")";
    }
    int n5 = 0;
    for (const auto& p : dir_files("mod5")) n5 += prove_golden(p, o, 30);
    o.notes.push_back("proved with printed level and -B:" + vals.str() + "; modulus-5 displays " + std::to_string(n5) + "/" +
                      std::to_string(dir_files("mod5").size()));
    return o;
}

using Params = std::vector<std::vector<int64_t>>;

Outcome criterion5(int& hit_count) {
    Outcome o;
    auto fam = make_family(parse_character("legendre:5"));
    struct Run {
        int type;
        int64_t T;
        Params want;
    };
    std::vector<Run> runs = {
        {1, 36, {{6, 1, -1}, {11, 1, -1}, {7, 2, -1}, {16, 1, -1}, {8, 3, -1}, {9, 4, -1}, {36, 1, -1}}},
        {2, 24, {{1, 4, -1}, {1, 4, 1}, {2, 3, 1}, {1, 9, 1}, {1, 14, 1}, {1, 24, 1}}},
        {3, 126, {{3, 7, 1, 21, 1, -1}, {2, 13, 1, 26, 1, -1}, {1, 34, 1, 17, 2, -1}, {1, 39, 1, 13, 3, -1},
                  {1, 54, 1, 27, 2, -1}, {7, 8, 1, 56, 1, -1}, {3, 22, 1, 11, 6, -1}, {2, 33, 1, 66, 1, -1},
                  {4, 21, 1, 12, 7, -1}, {1, 84, 1, 28, 3, -1}, {3, 32, 1, 96, 1, -1}, {7, 18, 1, 14, 9, -1},
                  {2, 63, 1, 126, 1, -1}}},
        {4, 24, {{6, 1, -1}}},
        {5, 24, {{1, 4, 1}, {2, 3, 1}}},
        {6, 24, {{1, 1, -1}, {1, 1, 1}}},
        {7, 24, {{1, 9, -1}}},
        {8, 24, {{3, -1}}},
        {9, 0, {{11, 1, 1}}},
        {10, 120, {{19, 4, -1, 76, 1, 1}, {28, 3, -1, 12, 7, 1}, {12, 7, -1, 28, 3, 1}}},
    };
    auto t0 = Clock::now();
    std::ostringstream counts;
    for (const auto& r : runs) {
        auto hs = find_type(r.type, fam, r.T, {});
        Params got;
        int proved = 0;
        for (const auto& h : hs) {
            got.push_back(h.params);
            proved += h.cert && h.cert->verdict == Verdict::proved;
        }
        hit_count += (int)hs.size();
        o.check(got == r.want, "type " + std::to_string(r.type) + " list differs");
        o.check(proved == (int)hs.size(), "type " + std::to_string(r.type) + ": " + std::to_string(proved) + "/" +
                                              std::to_string(hs.size()) + " proved");
        counts << " t" << r.type << ":" << hs.size();
    }
    double dt = since(t0);
    o.check(dt < 600, "suite slower than 10 min");
    o.notes.push_back("hits" + counts.str());
    return o;
}

Outcome criterion6(int& proved_count) {
    Outcome o;
    int total = 0, proved = 0;
    double worst = 0;
    std::vector<std::string> misprints;
    bool only_documented = true;
    auto t0 = Clock::now();
    for (const auto& p : dir_files("catalog")) {
        ++total;
        auto t1 = Clock::now();
        Outcome one;
        bool ok = prove_golden(p, one, 300);
        worst = std::max(worst, since(t1));
        if (ok) {
            ++proved;
            continue;
        }
        auto d = load(p);
        std::string name = std::filesystem::path(p).stem().string();
        std::string fix = d.meta_value("misprint");
        if (fix.empty()) {
            only_documented = false;
            o.check(false, one.notes.empty() ? name : one.notes[0]);
            continue;
        }
        // Printed form must be false by independent expansion, the correction must prove.
        bool printed_false = !oracle::same(oracle::expand_side(d.lhs, 60), oracle::expand_side(d.rhs, 60));
        Outcome fixed;
        bool fixed_ok = prove_golden(data_path(fix), fixed, 300);
        auto cd = load(data_path(fix));
        bool fixed_true = oracle::same(oracle::expand_side(cd.lhs, 60), oracle::expand_side(cd.rhs, 60));
        if (!(printed_false && fixed_ok && fixed_true)) only_documented = false;
        o.check(false, name + " as printed is false (" + (printed_false ? "independent expansion differs" : "expansion agrees") +
                           "); corrected form " + (fixed_ok ? "proved" : "not proved") + " with Gamma1(" +
                           cd.meta_value("group") + ") -B=" + cd.meta_value("minusB"));
        misprints.push_back(name);
    }
    double dt = since(t0);
    o.check(dt < 3600, "batch slower than 60 min");
    o.check(worst < 300, "an identity took longer than 5 min");
    proved_count = proved;
    o.documented = !o.pass && only_documented && !misprints.empty();
    std::ostringstream s;
    s << proved << "/" << total << " displays proved with printed level and -B";
    o.notes.insert(o.notes.begin(), s.str());
    return o;
}

JacMonomial random_monomial(std::mt19937_64& rng) {
    int64_t L = std::uniform_int_distribution<int64_t>(1, 24)(rng);
    auto ds = divisors(L);
    JacMonomial m;
    m.coeff = std::uniform_int_distribution<int>(1, 9)(rng) * (std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
    m.q_exp = Frac(std::uniform_int_distribution<int>(-30, 30)(rng), std::uniform_int_distribution<int>(1, 12)(rng));
    int nf = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int k = 0; k < nf; ++k) {
        int64_t b = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(rng)];
        int64_t g = std::uniform_int_distribution<int64_t>(0, b / 2)(rng);
        int e = std::uniform_int_distribution<int>(-3, 3)(rng);
        if (e) m.factors[JacFactor(g, b)] += Frac(e);
    }
    m.clean();
    return m;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(20240601);

    int valence = 0, tries = 0;
    while (valence < 200 && tries < 200000) {
        ++tries;
        int64_t N = std::uniform_int_distribution<int64_t>(3, 30)(rng);
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
        ++valence;
        Frac s(0);
        for (const Frac& x : getaprod_cusp_ORDS(L, cusps_and_widths(N))) s = s + x;
        o.check(s == Frac(0), "(a) valence sum " + s.str() + " for " + L.str() + " at N=" + std::to_string(N));
    }
    o.check(valence == 200, "(a) only " + std::to_string(valence) + " modular lists drawn");

    for (int i = 0; i < 100; ++i) {
        int64_t b = std::uniform_int_distribution<int64_t>(2, 30)(rng);
        int64_t g = std::uniform_int_distribution<int64_t>(1, b - 1)(rng);
        std::vector<std::pair<int64_t, int64_t>> fs;
        for (int64_t n = 1; b * (n - 1) < 200; ++n) fs.push_back({b * (n - 1) + g, 1}), fs.push_back({b * n - g, 1}), fs.push_back({b * n, 1});
        auto prod = QSeries::from_ints(oracle::naive_product(fs, 200), Frac(0), Frac(200));
        o.check(oracle::same(jac_series(g, b, 200), prod), "(b) triple product g=" + std::to_string(g) + " b=" + std::to_string(b));
    }

    for (int i = 0; i < 100; ++i) {
        JacMonomial m = random_monomial(rng);
        auto s = jac_to_series(m, 150);
        auto r = jacprodmake(s, 150);
        bool ok = r.has_value() && oracle::same(jac_to_series(*r, 150), s);
        o.check(ok, "(c) round trip of " + m.str());
    }

    for (int64_t N = 3; N <= 60; ++N) {
        auto S = cusps_and_widths(N);
        int64_t w = 0;
        for (int64_t x : S.widths) w += x;
        o.check(w == projective_index(N), "(d) width sum at N=" + std::to_string(N));
    }

    auto files = dir_files("catalog");
    std::map<std::string, int> verdicts;
    for (int i = 0; i < 50; ++i) {
        auto d = load(files[std::uniform_int_distribution<size_t>(0, files.size() - 1)(rng)]);
        auto c = prove(normalize_statement(to_statement(mutate(d, rng))));
        ++verdicts[verdict_name(c.verdict)];
        o.check(c.verdict != Verdict::proved, "(e) a mutated identity was proved");
    }
    int coeff_rejected = 0;
    for (int i = 0; i < 50; ++i) {
        auto d = load(files[std::uniform_int_distribution<size_t>(0, files.size() - 1)(rng)]);
        auto& t = d.lhs[std::uniform_int_distribution<size_t>(0, d.lhs.size() - 1)(rng)];
        t.coeff += 1;
        coeff_rejected += prove(normalize_statement(to_statement(d))).verdict != Verdict::proved;
    }
    o.check(coeff_rejected == 50, "(e) coefficient perturbations: only " + std::to_string(coeff_rejected) + "/50 rejected");
    std::ostringstream s;
    s << "(a) " << valence << " lists, (b) 100, (c) 100, (d) N=3..60, (e) 50 mutations rejected (";
    bool first = true;
    for (const auto& [k, v] : verdicts) s << (first ? "" : ", ") << k << " " << v, first = false;
    s << "), 50 coefficient perturbations rejected " << coeff_rejected;
    o.notes.insert(o.notes.begin(), s.str());
    return o;
}

}  // namespace

int main() {
    int hits = 0, catalog_proved = 0;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 cusp tables", criterion1},
        {"2 cusp orders", criterion2},
        {"3 bound", criterion3},
        {"4 end-to-end proofs", criterion4},
        {"5 search reproduction", [&] { return criterion5(hits); }},
        {"6 catalog regression", [&] { return criterion6(catalog_proved); }},
        {"7 property suites", criterion7},
    };
    bool blocking = false;
    for (const auto& [name, run] : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = Outcome();
            o.check(false, std::string("exception: ") + e.what());
        }
        double dt = since(t0);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << " (" << std::fixed;
        std::cout.precision(2);
        std::cout << dt << " s)";
        if (!o.pass && o.documented) std::cout << " [documented misprint]";
        std::cout << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        if (!o.pass && !o.documented) blocking = true;
    }
    std::cout << "INFO identities reproduced: " << hits << " search hits + " << catalog_proved << " catalog displays = "
              << hits + catalog_proved << "\n";
    return blocking ? 1 : 0;
}
