#include "etaid/etaid.h"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <memory>

namespace {

std::string data_path(const std::string& rel) { return oracle::slurp(std::string(ETAID_DATA) + "/" + rel); }

struct Ctx {
    etaid_ctx* p = etaid_ctx_new();
    ~Ctx() { etaid_ctx_free(p); }
};

std::string take(char* s) {
    std::string r = s ? s : "";
    etaid_string_free(s);
    return r;
}

}  // namespace

TEST_CASE("options") {
    Ctx c;
    int64_t v = 0;
    CHECK(etaid_get_option(c.p, "safety", &v) == ETAID_OK);
    CHECK(v == 50);
    CHECK(etaid_set_option(c.p, "safety", 7) == ETAID_OK);
    CHECK(etaid_get_option(c.p, "safety", &v) == ETAID_OK);
    CHECK(v == 7);
    CHECK(etaid_set_option(c.p, "bogus", 1) == ETAID_ERR_INVALID);
    CHECK(std::string(etaid_last_error(c.p)).find("bogus") != std::string::npos);
    CHECK(etaid_set_option(c.p, "jobs", 0) == ETAID_ERR_INVALID);
    CHECK(std::string(etaid_version()) == "1.0.0");
}

TEST_CASE("prove through the C interface") {
    Ctx c;
    etaid_cert* cert = nullptr;
    REQUIRE(etaid_prove_text(c.p, data_path("identities/ramanujan25.idt").c_str(), &cert) == ETAID_OK);
    CHECK(etaid_cert_verdict(cert) == ETAID_PROVED);
    CHECK(etaid_cert_level(cert) == 25);
    int64_t n = 0, d = 0;
    etaid_cert_bound(cert, &n, &d);
    CHECK(n == -9);
    CHECK(d == 1);
    CHECK(etaid_cert_checked_order(cert) == 59);
    CHECK(nlohmann::json::parse(etaid_cert_json(cert))["verdict"] == "proved");
    CHECK(std::string(etaid_cert_summary(cert)).find("PROVED") != std::string::npos);
    CHECK(std::string(etaid_cert_log(cert)).find("STEP") != std::string::npos);
    CHECK(std::string(etaid_cert_table(cert, 1)).find("\\\\") != std::string::npos);
    etaid_cert_free(cert);

    REQUIRE(etaid_prove_text(c.p, data_path("cli/false.idt").c_str(), &cert) == ETAID_OK);
    CHECK(etaid_cert_verdict(cert) == ETAID_FAILED);
    etaid_cert_free(cert);
    REQUIRE(etaid_prove_text(c.p, data_path("cli/not_modular.idt").c_str(), &cert) == ETAID_OK);
    CHECK(etaid_cert_verdict(cert) == ETAID_NOT_MODULAR);
    etaid_cert_free(cert);

    cert = nullptr;
    CHECK(etaid_prove_text(c.p, data_path("cli/bad_syntax.idt").c_str(), &cert) == ETAID_ERR_PARSE);
    CHECK(cert == nullptr);
    CHECK(std::string(etaid_last_error(c.p)).find("offset") != std::string::npos);
    CHECK(etaid_prove_text(c.p, nullptr, &cert) != ETAID_OK);
}

TEST_CASE("cusps, expansion and mutation") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(etaid_cusps(c.p, 10, "json", &out) == ETAID_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["count"] == 8);
    CHECK(j["width_sum"] == 36);
    CHECK(etaid_cusps(c.p, 10, "yaml", &out) == ETAID_ERR_INVALID);
    CHECK(etaid_cusps(c.p, 0, "text", &out) == ETAID_ERR_INVALID);

    REQUIRE(etaid_expand_text(c.p, "EETA(1)", 3, "json", &out) == ETAID_OK);
    auto e = nlohmann::json::parse(take(out));
    CHECK(e["coefficients"][0][0] == "1/24");
    CHECK(e["coefficients"][1] == nlohmann::json::array({"25/24", "-1"}));
    CHECK(etaid_expand_text(c.p, "EETA(", 3, "text", &out) == ETAID_ERR_PARSE);

    std::string doc = data_path("identities/theta4.idt");
    REQUIRE(etaid_mutate_text(c.p, doc.c_str(), 5, &out) == ETAID_OK);
    std::string m1 = take(out);
    REQUIRE(etaid_mutate_text(c.p, doc.c_str(), 5, &out) == ETAID_OK);
    CHECK(take(out) == m1);
    etaid_cert* cert = nullptr;
    REQUIRE(etaid_prove_text(c.p, m1.c_str(), &cert) == ETAID_OK);
    CHECK(etaid_cert_verdict(cert) != ETAID_PROVED);
    etaid_cert_free(cert);
}

TEST_CASE("search through the C interface") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(etaid_search(c.p, data_path("search/mod17_type1.json").c_str(), "json", &out) == ETAID_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["modulus"] == 17);
    REQUIRE(j["runs"].size() == 1);
    CHECK(j["runs"][0]["params"] == nlohmann::json::parse("[[2,1,-1]]"));
    CHECK(etaid_search(c.p, "{\"character\": \"legendre:7\", \"runs\": [{\"type\": 1, \"T\": 4}]}", "json", &out) ==
          ETAID_ERR_INVALID);
    CHECK(etaid_search(c.p, "{not json", "json", &out) == ETAID_ERR_PARSE);
}
