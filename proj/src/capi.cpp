#include "etaid/etaid.h"

#include "dsl.hpp"
#include "search.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

struct etaid_ctx {
    std::map<std::string, int64_t> opts;
    std::string error;
};

struct etaid_cert {
    etaid::ProofCertificate cert;
    std::string json, table, latex_table, summary, log;
};

namespace {

const std::map<std::string, int64_t>& option_defaults() {
    static const std::map<std::string, int64_t> d{
        {"safety", 50}, {"qthreshold", 3000}, {"order", 0}, {"acc", 20}, {"jobs", 1}, {"normalize", 1}, {"verbose", 0}};
    return d;
}

int64_t opt(const etaid_ctx* ctx, const std::string& k) {
    auto it = ctx->opts.find(k);
    return it != ctx->opts.end() ? it->second : option_defaults().at(k);
}

bool opt_set(const etaid_ctx* ctx, const std::string& k) { return ctx->opts.count(k) > 0; }

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// Runs f, mapping exceptions to status codes and the context error.
template <class F>
etaid_status guarded(etaid_ctx* ctx, F&& f) {
    if (!ctx) return ETAID_ERR_INVALID;
    ctx->error.clear();
    try {
        return f();
    } catch (const etaid::ParseError& e) {
        ctx->error = e.what();
        return ETAID_ERR_PARSE;
    } catch (const nlohmann::json::exception& e) {
        ctx->error = std::string("config: ") + e.what();
        return ETAID_ERR_PARSE;
    } catch (const etaid::Error& e) {
        ctx->error = e.what();
        return ETAID_ERR_INVALID;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return ETAID_ERR_INTERNAL;
    }
}

enum class Format { text, json, md, latex };

Format parse_format(const char* f) {
    std::string s = f ? f : "text";
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "md" || s == "markdown") return Format::md;
    if (s == "latex" || s == "tex") return Format::latex;
    throw etaid::Error("unknown format '" + s + "'");
}

std::string cusp_report(int64_t N, Format f) {
    auto S = etaid::cusps_and_widths(N);
    std::ostringstream os;
    int64_t total = 0;
    for (auto w : S.widths) total += w;
    switch (f) {
        case Format::json: {
            nlohmann::ordered_json j;
            j["level"] = N;
            j["count"] = S.cusps.size();
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (size_t i = 0; i < S.cusps.size(); ++i)
                rows.push_back({{"cusp", S.cusps[i].is_infinity() ? "1/0" : std::to_string(S.cusps[i].a) + "/" + std::to_string(S.cusps[i].c)},
                                {"width", S.widths[i]}});
            j["cusps"] = rows;
            j["width_sum"] = total;
            return j.dump(2) + "\n";
        }
        case Format::md:
            os << "| cusp | width |\n|---|---|\n";
            for (size_t i = 0; i < S.cusps.size(); ++i) os << "| " << S.cusps[i].str() << " | " << S.widths[i] << " |\n";
            return os.str();
        case Format::latex:
            os << "\\begin{array}{c|c}\n\\mbox{cusp} & \\mbox{width} \\\\\n\\hline\n";
            for (size_t i = 0; i < S.cusps.size(); ++i) {
                const auto& z = S.cusps[i];
                std::string c = z.is_infinity() ? "\\infty" : z.c == 1 ? std::to_string(z.a)
                                                                       : "\\frac{" + std::to_string(z.a) + "}{" + std::to_string(z.c) + "}";
                os << c << " & " << S.widths[i] << " \\\\\n";
            }
            os << "\\end{array}\n";
            return os.str();
        case Format::text:
            os << "Gamma1(" << N << "): " << S.cusps.size() << " cusps, width sum " << total << "\n";
            for (size_t i = 0; i < S.cusps.size(); ++i) os << S.cusps[i].str() << "\t" << S.widths[i] << "\n";
            return os.str();
    }
    return "";
}

struct Run {
    int type;
    int64_t T;
};

std::string search_report(etaid_ctx* ctx, const std::string& config, Format f) {
    auto j = nlohmann::json::parse(config);
    if (!j.is_object()) throw etaid::ParseError("config must be an object", 0);
    std::string desc = j.at("character").get<std::string>();
    if (j.contains("modulus")) {
        auto chi0 = etaid::parse_character(desc);
        int64_t M = j["modulus"].get<int64_t>();
        if (chi0.modulus != M) desc += " mod " + std::to_string(M);
    }
    auto fam = etaid::make_family(etaid::parse_character(desc));

    etaid::SearchOptions o;
    o.acc = j.value("acc", o.acc);
    o.qthreshold = j.value("qthreshold", o.qthreshold);
    o.safety = j.value("safety", o.safety);
    o.prove = j.value("prove", o.prove);
    o.stage1_order = j.value("stage1_order", o.stage1_order);
    o.exclude_threshold = j.value("exclude_threshold", o.exclude_threshold);
    o.type9_max = j.value("type9_max", o.type9_max);
    o.jobs = j.value("jobs", o.jobs);
    if (opt_set(ctx, "acc")) o.acc = opt(ctx, "acc");
    if (opt_set(ctx, "qthreshold")) o.qthreshold = opt(ctx, "qthreshold");
    if (opt_set(ctx, "safety")) o.safety = opt(ctx, "safety");
    if (opt_set(ctx, "jobs")) o.jobs = (int)opt(ctx, "jobs");
    if (o.acc < 1 || o.qthreshold < 1 || o.safety < 0 || o.jobs < 1 || o.stage1_order < 20)
        throw etaid::Error("search options out of range");

    std::vector<Run> runs;
    if (j.contains("runs")) {
        for (const auto& r : j["runs"]) runs.push_back({r.at("type").get<int>(), r.value("T", (int64_t)0)});
    } else {
        int64_t T = j.value("threshold", (int64_t)24);
        for (const auto& k : j.at("types")) runs.push_back({k.get<int>(), T});
    }
    for (const auto& r : runs) {
        if (r.type < 1 || r.type > 10) throw etaid::Error("type must be in 1..10");
        if (r.type != 9 && r.T < 1) throw etaid::Error("threshold must be positive");
    }

    nlohmann::ordered_json out;
    out["character"] = fam.chi.desc;
    out["modulus"] = fam.N();
    out["g_residues"] = fam.g_res;
    out["h_residues"] = fam.h_res;
    out["runs"] = nlohmann::ordered_json::array();
    std::ostringstream os;
    if (f == Format::md) os << "# Character " << fam.chi.desc << " (modulus " << fam.N() << ")\n";
    for (const auto& r : runs) {
        auto hits = etaid::find_type(r.type, fam, r.T, o);
        nlohmann::ordered_json jr;
        jr["type"] = r.type;
        if (r.type != 9) jr["T"] = r.T;
        jr["params"] = nlohmann::ordered_json::array();
        for (const auto& h : hits) jr["params"].push_back(h.params);
        jr["hits"] = nlohmann::ordered_json::parse(etaid::hits_json(hits, fam));
        out["runs"].push_back(jr);
        std::string head = "type " + std::to_string(r.type) + (r.type != 9 ? " T=" + std::to_string(r.T) : "");
        switch (f) {
            case Format::md: os << "\n## " << head << "\n\n" << etaid::hits_markdown(hits); break;
            case Format::latex: os << "% " << head << "\n" << (hits.empty() ? "" : etaid::hits_latex(hits)); break;
            case Format::text: {
                std::string ps;
                for (const auto& h : hits) {
                    std::string p;
                    for (auto x : h.params) p += (p.empty() ? "" : ",") + std::to_string(x);
                    ps += (ps.empty() ? "" : ",") + ("[" + p + "]");
                }
                os << head << ": [" << ps << "]\n";
                for (const auto& h : hits) {
                    os << "  " << h.identity() << "  Gamma1(" << h.level << ")";
                    if (h.cert) os << "  -B=" << (-h.cert->B).str() << "  " << etaid::verdict_name(h.cert->verdict);
                    os << "\n";
                }
                break;
            }
            case Format::json: break;
        }
    }
    return f == Format::json ? out.dump(2) + "\n" : os.str();
}

}  // namespace

extern "C" {

const char* etaid_version(void) { return "1.0.0"; }

etaid_ctx* etaid_ctx_new(void) {
    try {
        return new etaid_ctx();
    } catch (...) {
        return nullptr;
    }
}

void etaid_ctx_free(etaid_ctx* ctx) { delete ctx; }

const char* etaid_last_error(const etaid_ctx* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

etaid_status etaid_set_option(etaid_ctx* ctx, const char* key, int64_t value) {
    return guarded(ctx, [&] {
        std::string k = key ? key : "";
        if (!option_defaults().count(k)) throw etaid::Error("unknown option '" + k + "'");
        bool ok = k == "safety" || k == "order" ? value >= 0 : k == "normalize" || k == "verbose" ? value == 0 || value == 1 : value >= 1;
        if (!ok) throw etaid::Error("value out of range for '" + k + "'");
        ctx->opts[k] = value;
        return ETAID_OK;
    });
}

etaid_status etaid_get_option(const etaid_ctx* ctx, const char* key, int64_t* value) {
    if (!ctx || !key || !value || !option_defaults().count(key)) return ETAID_ERR_INVALID;
    *value = opt(ctx, key);
    return ETAID_OK;
}

etaid_status etaid_prove_text(etaid_ctx* ctx, const char* text, etaid_cert** out) {
    return guarded(ctx, [&] {
        if (!text || !out) throw etaid::Error("null argument");
        *out = nullptr;
        auto doc = etaid::parse_identity(text);
        auto s = etaid::to_statement(doc);
        if (opt(ctx, "normalize")) s = etaid::normalize_statement(s);
        etaid::ProveOptions po;
        po.safety = opt(ctx, "safety");
        po.qthreshold = opt(ctx, "qthreshold");
        po.min_order = opt(ctx, "order");
        auto c = std::make_unique<etaid_cert>();
        c->cert = etaid::prove(s, po);
        c->json = etaid::certificate_json(c->cert);
        if (c->cert.verdict != etaid::Verdict::not_modular) {
            c->table = etaid::ords_table(c->cert, false);
            c->latex_table = etaid::ords_table(c->cert, true);
        }
        c->summary = etaid::proof_summary(c->cert);
        for (const auto& l : c->cert.log) c->log += l + "\n";
        *out = c.release();
        return ETAID_OK;
    });
}

etaid_verdict etaid_cert_verdict(const etaid_cert* c) {
    switch (c->cert.verdict) {
        case etaid::Verdict::proved: return ETAID_PROVED;
        case etaid::Verdict::failed: return ETAID_FAILED;
        case etaid::Verdict::not_modular: return ETAID_NOT_MODULAR;
    }
    return ETAID_FAILED;
}

int64_t etaid_cert_level(const etaid_cert* c) { return c->cert.level; }

void etaid_cert_bound(const etaid_cert* c, int64_t* num, int64_t* den) {
    if (num) *num = c->cert.B.num();
    if (den) *den = c->cert.B.den();
}

int64_t etaid_cert_checked_order(const etaid_cert* c) { return c->cert.checked_order; }
int64_t etaid_cert_failed_exponent(const etaid_cert* c) { return c->cert.failed_exponent; }
const char* etaid_cert_json(const etaid_cert* c) { return c->json.c_str(); }
const char* etaid_cert_table(const etaid_cert* c, int latex) { return latex ? c->latex_table.c_str() : c->table.c_str(); }
const char* etaid_cert_summary(const etaid_cert* c) { return c->summary.c_str(); }
const char* etaid_cert_log(const etaid_cert* c) { return c->log.c_str(); }
void etaid_cert_free(etaid_cert* c) { delete c; }

etaid_status etaid_cusps(etaid_ctx* ctx, int64_t level, const char* format, char** out) {
    return guarded(ctx, [&] {
        if (!out) throw etaid::Error("null argument");
        if (level < 1 || level > 100000) throw etaid::Error("level must be in 1..100000");
        *out = dup(cusp_report(level, parse_format(format)));
        return ETAID_OK;
    });
}

etaid_status etaid_expand_text(etaid_ctx* ctx, const char* expr, int64_t order, const char* format, char** out) {
    return guarded(ctx, [&] {
        if (!expr || !out) throw etaid::Error("null argument");
        if (order < 1 || order > 100000) throw etaid::Error("order must be in 1..100000");
        Format f = parse_format(format);
        auto ts = etaid::parse_expression(expr);
        auto s = etaid::expand_terms(ts, order);
        std::string r;
        if (f == Format::json) {
            nlohmann::ordered_json j;
            j["expression"] = etaid::print_terms(ts);
            j["order"] = order;
            nlohmann::ordered_json cs = nlohmann::ordered_json::array();
            for (const auto& [e, v] : s.terms()) cs.push_back({e.str(), etaid::big_str(v)});
            j["coefficients"] = cs;
            r = j.dump(2) + "\n";
        } else {
            r = s.str(1 << 30) + "\n";
        }
        *out = dup(r);
        return ETAID_OK;
    });
}

etaid_status etaid_search(etaid_ctx* ctx, const char* config_json, const char* format, char** out) {
    return guarded(ctx, [&] {
        if (!config_json || !out) throw etaid::Error("null argument");
        *out = dup(search_report(ctx, config_json, parse_format(format)));
        return ETAID_OK;
    });
}

etaid_status etaid_mutate_text(etaid_ctx* ctx, const char* text, uint64_t seed, char** out) {
    return guarded(ctx, [&] {
        if (!text || !out) throw etaid::Error("null argument");
        std::mt19937_64 rng(seed);
        *out = dup(etaid::print_identity(etaid::mutate(etaid::parse_identity(text), rng)));
        return ETAID_OK;
    });
}

void etaid_string_free(char* s) { std::free(s); }

}  // extern "C"
