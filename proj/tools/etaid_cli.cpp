// etaid command-line tool: prove, search, cusps, expand, mutate.
//
// Exit codes: 0 proved / success, 1 identity false or proof declined,
// 2 parse or input error, 3 a term is not a modular function, 4 internal error.
#include "etaid/etaid.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitProved = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotModular = 3;
constexpr int kExitInternal = 4;

int status_exit(etaid_status s) {
    switch (s) {
        case ETAID_OK: return kExitProved;
        case ETAID_ERR_PARSE:
        case ETAID_ERR_INVALID: return kExitInput;
        default: return kExitInternal;
    }
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

struct Common {
    int64_t order = 0;
    int64_t safety = 50;
    int64_t acc = 20;
    int64_t qthreshold = 3000;
    int jobs = 1;
    std::string format = "text";
    bool verbose = false;
    std::string out;
};

struct Ctx {
    etaid_ctx* p = etaid_ctx_new();
    ~Ctx() { etaid_ctx_free(p); }
};

// Applies only the options given on the command line.
bool apply(etaid_ctx* ctx, const CLI::App& app, const Common& c) {
    auto set = [&](const char* flag, const char* key, int64_t v) {
        if (app.count(flag) == 0) return true;
        if (etaid_set_option(ctx, key, v) == ETAID_OK) return true;
        std::cerr << "error: " << etaid_last_error(ctx) << "\n";
        return false;
    };
    return set("--order", "order", c.order) && set("--safety", "safety", c.safety) && set("--acc", "acc", c.acc) &&
           set("--qthreshold", "qthreshold", c.qthreshold) && set("--jobs", "jobs", c.jobs);
}

struct ProveResult {
    int code = kExitInternal;
    std::string text;  // what goes to stdout
    std::string cert;  // certificate JSON
    std::string error;
};

ProveResult prove_one(const CLI::App& app, const Common& c, const std::string& path, bool confirm) {
    ProveResult r;
    std::string text;
    if (!read_file(path, text)) {
        r.code = kExitInput;
        r.error = path + ": cannot read";
        return r;
    }
    Ctx ctx;
    if (!apply(ctx.p, app, c)) {
        r.code = kExitInput;
        return r;
    }
    etaid_cert* cert = nullptr;
    etaid_status s = etaid_prove_text(ctx.p, text.c_str(), &cert);
    if (s != ETAID_OK) {
        r.code = status_exit(s);
        r.error = path + ": " + etaid_last_error(ctx.p);
        return r;
    }
    std::ostringstream os;
    etaid_verdict v = etaid_cert_verdict(cert);
    if (confirm && v != ETAID_NOT_MODULAR) {
        std::cout << path << ": each term is a modular function on Gamma1(" << etaid_cert_level(cert) << ").\n"
                  << "Do you want to prove the identity? (yes/no) " << std::flush;
        std::string answer;
        std::getline(std::cin, answer);
        if (answer != "yes" && answer != "y") {
            r.code = kExitFailed;
            r.text = "not proved: declined\n";
            etaid_cert_free(cert);
            return r;
        }
    }
    if (c.format == "json") {
        os << etaid_cert_json(cert) << "\n";
    } else if (c.format == "latex") {
        os << etaid_cert_table(cert, 1);
    } else {
        bool md = c.format == "md";
        os << (md ? "## " : "== ") << path << (md ? "\n\n" : "\n");
        if (c.verbose) os << etaid_cert_log(cert);
        if (md && v != ETAID_NOT_MODULAR) os << "```\n" << etaid_cert_table(cert, 0) << "```\n";
        else if (c.verbose && v != ETAID_NOT_MODULAR) os << etaid_cert_table(cert, 0);
        os << etaid_cert_summary(cert);
        if (v == ETAID_FAILED) os << "first failing exponent: " << etaid_cert_failed_exponent(cert) << "\n";
    }
    r.text = os.str();
    r.cert = etaid_cert_json(cert);
    r.code = v == ETAID_PROVED ? kExitProved : v == ETAID_FAILED ? kExitFailed : kExitNotModular;
    etaid_cert_free(cert);
    return r;
}

int combine(const std::vector<ProveResult>& rs) {
    int worst = kExitProved;
    auto rank = [](int c) {
        switch (c) {
            case kExitProved: return 0;
            case kExitFailed: return 1;
            case kExitNotModular: return 2;
            case kExitInput: return 3;
            default: return 4;
        }
    };
    for (const auto& r : rs)
        if (rank(r.code) > rank(worst)) worst = r.code;
    return worst;
}

int cmd_prove(const CLI::App& app, const Common& c, const std::vector<std::string>& files, bool confirm) {
    std::vector<ProveResult> rs(files.size());
    int jobs = confirm ? 1 : std::max(1, std::min<int>(c.jobs, (int)files.size()));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < files.size();) rs[i] = prove_one(app, c, files[i], confirm);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < files.size(); ++i) {
        std::cout << rs[i].text;
        if (!rs[i].error.empty()) std::cerr << "error: " << rs[i].error << "\n";
    }
    if (!c.out.empty()) {
        if (files.size() == 1) {
            if (!rs[0].cert.empty() && !write_file(c.out, rs[0].cert + "\n")) {
                std::cerr << "error: cannot write " << c.out << "\n";
                return kExitInput;
            }
        } else {
            std::filesystem::create_directories(c.out);
            for (size_t i = 0; i < files.size(); ++i) {
                if (rs[i].cert.empty()) continue;
                auto p = std::filesystem::path(c.out) / (std::filesystem::path(files[i]).stem().string() + ".json");
                if (!write_file(p.string(), rs[i].cert + "\n")) {
                    std::cerr << "error: cannot write " << p << "\n";
                    return kExitInput;
                }
            }
        }
    }
    return combine(rs);
}

int emit(etaid_ctx* ctx, etaid_status s, char* result, const std::string& out) {
    if (s != ETAID_OK) {
        std::cerr << "error: " << etaid_last_error(ctx) << "\n";
        return status_exit(s);
    }
    std::string text = result;
    etaid_string_free(result);
    if (out.empty()) {
        std::cout << text;
    } else if (!write_file(out, text)) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitInput;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proofs and searches for identities between generalized eta-products"};
    app.set_version_flag("--version", std::string(etaid_version()));
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", c.order, "Verify the q-expansion at least to this order")->check(CLI::NonNegativeNumber);
        sub->add_option("--safety", c.safety, "Extra coefficients checked beyond the bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--acc", c.acc, "Bound on recovered product exponents")->check(CLI::PositiveNumber);
        sub->add_option("--qthreshold", c.qthreshold, "Cap on the checked order when the safety margin would exceed it")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "md", "latex"}));
        sub->add_flag("--verbose", c.verbose, "Print the proof step by step");
        sub->add_option("--out", c.out, "Write the certificate or report here");
    };

    std::vector<std::string> files;
    bool confirm = false;
    auto* prove = app.add_subcommand("prove", "Prove identity documents");
    prove->add_option("files", files, "Identity documents")->required();
    prove->add_flag("--confirm", confirm, "Ask before proving");
    add_common(prove);

    std::string config;
    auto* search = app.add_subcommand("search", "Run template searches from a JSON config");
    search->add_option("config", config, "Search config")->required();
    add_common(search);

    int64_t level = 0;
    auto* cusps = app.add_subcommand("cusps", "Cusps of Gamma1(N) with widths");
    cusps->add_option("--level,-N", level, "Level N")->required()->check(CLI::PositiveNumber);
    add_common(cusps);

    std::string expr;
    auto* expand = app.add_subcommand("expand", "q-expansion of an expression");
    expand->add_option("expr", expr, "Expression, e.g. GETA(5,1)^2*EETA(1)")->required();
    add_common(expand);

    std::string mfile;
    uint64_t seed = 1;
    auto* mutate = app.add_subcommand("mutate", "Perturb one exponent of an identity document");
    mutate->add_option("file", mfile, "Identity document")->required();
    mutate->add_option("--seed", seed, "Random seed");
    mutate->add_option("--out", c.out, "Write the mutated document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : kExitInput;
    }

    if (*prove) return cmd_prove(*prove, c, files, confirm);

    Ctx ctx;
    if (*search) {
        std::string text;
        if (!read_file(config, text)) {
            std::cerr << "error: cannot read " << config << "\n";
            return kExitInput;
        }
        if (!apply(ctx.p, *search, c)) return kExitInput;
        char* r = nullptr;
        etaid_status s = etaid_search(ctx.p, text.c_str(), c.format.c_str(), &r);
        return emit(ctx.p, s, r, c.out);
    }
    if (*cusps) {
        char* r = nullptr;
        etaid_status s = etaid_cusps(ctx.p, level, c.format.c_str(), &r);
        return emit(ctx.p, s, r, c.out);
    }
    if (*expand) {
        char* r = nullptr;
        int64_t order = expand->count("--order") ? c.order : 10;
        etaid_status s = etaid_expand_text(ctx.p, expr.c_str(), order, c.format.c_str(), &r);
        return emit(ctx.p, s, r, c.out);
    }
    if (*mutate) {
        std::string text;
        if (!read_file(mfile, text)) {
            std::cerr << "error: cannot read " << mfile << "\n";
            return kExitInput;
        }
        char* r = nullptr;
        etaid_status s = etaid_mutate_text(ctx.p, text.c_str(), seed, &r);
        return emit(ctx.p, s, r, c.out);
    }
    return kExitInternal;
}
