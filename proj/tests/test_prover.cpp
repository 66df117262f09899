#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <random>

using namespace etaid;

namespace {

std::string data_path(const std::string& rel) { return std::string(ETAID_DATA) + "/" + rel; }

DslDocument load(const std::string& rel) { return parse_identity(oracle::slurp(data_path(rel))); }

ProofCertificate prove_doc(const DslDocument& d, const ProveOptions& o = {}) {
    return prove(normalize_statement(to_statement(d)), o);
}

std::vector<std::string> catalog() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(data_path("catalog"))) out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("Ramanujan's level-25 identity") {
    auto d = load("identities/ramanujan25.idt");
    auto c = prove_doc(d);
    CHECK(c.verdict == Verdict::proved);
    CHECK(c.level == 25);
    CHECK(c.B == Frac(-9));
    CHECK(min_tot_ords(c.ords) == Frac(-9));
    CHECK(c.required_order == 10);
    CHECK(c.checked_order == 59);
    CHECK_FALSE(oracle::expand_side({d.lhs[0]}, 80).is_zero());
    CHECK(oracle::same(oracle::expand_side(d.lhs, 80), oracle::expand_side(d.rhs, 80)));
}

TEST_CASE("Jacobi's theta identity") {
    auto c = prove_doc(load("identities/theta4.idt"));
    CHECK(c.verdict == Verdict::proved);
    CHECK(c.level == 4);
    CHECK(c.B == Frac(-1));
}

TEST_CASE("wrong coefficient fails at the first differing power") {
    auto c = prove_doc(load("cli/false.idt"));
    CHECK(c.verdict == Verdict::failed);
    CHECK(c.failed_exponent >= 0);
    CHECK(c.failed_exponent < c.checked_order);
}

TEST_CASE("a non-modular term is rejected before any expansion") {
    auto c = prove_doc(load("cli/not_modular.idt"));
    CHECK(c.verdict == Verdict::not_modular);
    CHECK(c.not_modular_term == 0);
}

TEST_CASE("checked order follows safety, threshold and minimum") {
    auto d = load("identities/ramanujan25.idt");
    ProveOptions o;
    o.safety = 0;
    CHECK(prove_doc(d, o).checked_order == 10);
    o.safety = 50;
    o.qthreshold = 20;
    CHECK(prove_doc(d, o).checked_order == 20);
    o.qthreshold = 3;
    CHECK(prove_doc(d, o).checked_order == 10);
    o.min_order = 100;
    auto c = prove_doc(d, o);
    CHECK(c.checked_order == 100);
    CHECK(c.verdict == Verdict::proved);
}

TEST_CASE("a level override is honoured") {
    auto d = load("identities/ramanujan25.idt");
    d.meta.push_back({"level", "50"});
    auto c = prove_doc(d);
    CHECK(c.level == 50);
    CHECK(c.verdict == Verdict::proved);
}

TEST_CASE("the bound does not depend on term order or normalization") {
    for (const auto& path : catalog()) {
        auto s = to_statement(parse_identity(oracle::slurp(path)));
        auto a = prove(normalize_statement(s));
        auto t = s;
        std::reverse(t.terms.begin(), t.terms.end());
        auto b = prove(normalize_statement(t));
        CHECK_MESSAGE(a.B == b.B, path);
        CHECK_MESSAGE(a.level == b.level, path);
        CHECK_MESSAGE(a.verdict == b.verdict, path);
    }
}

TEST_CASE("catalog certificates agree with independent expansions") {
    int proved = 0;
    for (const auto& path : catalog()) {
        auto d = parse_identity(oracle::slurp(path));
        auto c = prove_doc(d);
        if (c.verdict != Verdict::proved) continue;
        ++proved;
        CHECK_MESSAGE(std::to_string(c.level) == d.meta_value("group"), path);
        CHECK_MESSAGE((-c.B).str() == d.meta_value("minusB"), path);
        CHECK_MESSAGE(oracle::same(oracle::expand_side(d.lhs, 40), oracle::expand_side(d.rhs, 40)), path);
    }
    CHECK(proved >= 121);
}

TEST_CASE("certificate JSON") {
    auto c = prove_doc(load("identities/ramanujan25.idt"));
    auto j = nlohmann::json::parse(certificate_json(c));
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"] == "proved");
    CHECK(j["level"] == 25);
    CHECK(j["B"] == "-9");
    CHECK(j["cusps"].size() == 28);
    CHECK(j["widths"].size() == 28);
    CHECK(j["ords"].size() == 3);
    CHECK(j["ords"][0].size() == 28);
    CHECK(j["required_order"] == 10);
    CHECK(j["checked_order"] == 59);
    CHECK(std::string(verdict_name(Verdict::not_modular)) == "not-modular");
    CHECK(ords_table(c, true).find("\\\\") != std::string::npos);
    CHECK(proof_summary(c).find("PROVED") != std::string::npos);
}

TEST_CASE("mutated catalog identities are rejected") {
    std::mt19937_64 rng(99);
    auto files = catalog();
    int rejected = 0;
    for (int i = 0; i < 30; ++i) {
        auto d = parse_identity(oracle::slurp(files[(size_t)i * 4 % files.size()]));
        auto c = prove_doc(mutate(d, rng));
        rejected += c.verdict != Verdict::proved;
    }
    CHECK(rejected == 30);
}
