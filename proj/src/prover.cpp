#include "prover.hpp"

#include "modularity.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace etaid {

namespace {

GetaProduct scaled_product(const GetaProduct& P, int64_t scale) {
    GetaProduct Q;
    Q.geta = P.geta.scaled(scale);
    for (const auto& f : P.eta) Q.eta.push_back({f.d * scale, f.e});
    Q.normalize();
    return Q;
}

std::string rat_str(const BigRat& r) { return r.get_str(); }

}  // namespace

Frac min_tot_ords(const std::vector<std::vector<Frac>>& ords) {
    if (ords.empty()) return Frac(0);
    size_t n = ords[0].size();
    for (const auto& v : ords)
        if (v.size() != n) throw Error("min_tot_ords: order vectors have different lengths");
    Frac B;
    for (size_t i = 1; i < n; ++i) {
        Frac m(0);
        for (const auto& v : ords) m = std::min(m, v[i]);
        B += m;
    }
    return B;
}

int64_t infer_level(const IdentityStatement& s) {
    int64_t N = 1;
    for (const auto& t : s.terms) {
        for (const auto& e : t.prod.geta.entries) N = lcm64(N, e.delta * t.scale);
        for (const auto& f : t.prod.eta) N = lcm64(N, f.d * t.scale);
    }
    if (s.level) {
        if (s.level % N) throw Error("level " + std::to_string(s.level) + " is not a multiple of " + std::to_string(N));
        N = s.level;
    }
    if (N < 3) N *= (N == 1 ? 3 : 2);
    return N;
}

ProofCertificate prove(const IdentityStatement& s, const ProveOptions& opt) {
    if (s.terms.empty()) throw Error("identity has no terms");
    ProofCertificate c;
    c.level = infer_level(s);
    c.constant = s.constant;
    std::vector<GetaProduct> prods;
    for (const auto& t : s.terms) {
        prods.push_back(scaled_product(t.prod, t.scale));
        c.terms.push_back(prods.back().str());
        c.coeffs.push_back(t.coeff);
    }
    auto say = [&](const std::string& m) { c.log.push_back(m); };
    say("STEP 1: modularity on Gamma1(" + std::to_string(c.level) + ")");
    for (size_t j = 0; j < prods.size(); ++j) {
        std::string why;
        if (!is_gamma1_modfunc(prods[j], c.level, &why)) {
            c.verdict = Verdict::not_modular;
            c.not_modular_term = (int)j;
            c.message = "term " + std::to_string(j + 1) + " is not a modular function on Gamma1(" + std::to_string(c.level) + "): " + why;
            say(c.message);
            return c;
        }
        say("  term " + std::to_string(j + 1) + " of " + std::to_string(prods.size()) + ": " + prods[j].str() + " ok");
    }
    say("STEP 2: cusps and widths");
    c.cusps = cusps_and_widths(c.level);
    say("  " + std::to_string(c.cusps.cusps.size()) + " inequivalent cusps");
    say("STEP 3: orders at cusps");
    for (const auto& P : prods) {
        c.ords.push_back(getaprod_cusp_ORDS(P, c.cusps));
        Frac tot;
        for (Frac x : c.ords.back()) tot += x;
        if (!tot.is_zero()) throw Error("internal: total order of " + P.str() + " is " + tot.str());
        if (c.ords.back()[0] != getaprod_lead_exp(P)) throw Error("internal: order at infinity disagrees with the q-prefactor of " + P.str());
    }
    for (size_t i = 0; i < c.cusps.cusps.size(); ++i) {
        Frac m(0);
        for (const auto& v : c.ords) m = std::min(m, v[i]);
        c.lower.push_back(m);
    }
    c.B = min_tot_ords(c.ords);
    say("STEP 4: mintotord = " + c.B.str());
    int64_t needed = (-c.B).floor() + 1;
    c.required_order = needed;
    c.checked_order = std::max({needed, std::min(needed - 1 + opt.safety, opt.qthreshold), opt.min_order});
    say("STEP 5: need v[oo] > " + (-c.B).str() + "; verifying to O(q^" + std::to_string(c.checked_order) + ")");
    QSeries g = QSeries::constant(s.constant, Frac(c.checked_order));
    for (size_t j = 0; j < prods.size(); ++j) {
        JacMonomial m = getaprod_to_jac(prods[j]);
        m.coeff = c.coeffs[j];
        g = g + jac_to_series(m, c.checked_order);
    }
    if (g.is_zero()) {
        c.verdict = Verdict::proved;
        c.message = "the identity holds to O(q^" + std::to_string(c.checked_order) + ") and is proved";
    } else {
        Frac e = g.lead_exp();
        c.verdict = Verdict::failed;
        c.failed_exponent = e.floor();
        c.message = "coefficient of q^" + e.str() + " is " + g.lead_coeff().get_str() + ", not 0";
        if (e > -c.B) c.message += " (beyond the bound; inconsistent data)";
    }
    say(c.message);
    return c;
}

IdentityStatement normalize_statement(const IdentityStatement& s) {
    if (sgn(s.constant) != 0 || s.terms.empty()) return s;
    IdentityStatement out;
    out.level = infer_level(s);
    std::vector<GetaProduct> prods;
    for (const auto& t : s.terms) prods.push_back(scaled_product(t.prod, t.scale));
    size_t k = 0;
    for (size_t j = 1; j < prods.size(); ++j)
        if (getaprod_lead_exp(prods[j]) < getaprod_lead_exp(prods[k])) k = j;
    GetaProduct inv = prods[k].inverse();
    for (size_t j = 0; j < prods.size(); ++j) {
        BigRat c = s.terms[j].coeff / s.terms[k].coeff;
        GetaProduct P = multiply(prods[j], inv);
        if (P.empty()) out.constant += c;
        else out.terms.push_back({c, P, 1});
    }
    return out;
}

IdentityStatement statement_from_jac(const JacExpr& x) {
    IdentityStatement s;
    for (const auto& t : x.terms) {
        if (t.factors.empty() && t.q_exp.is_zero()) {
            s.constant += t.coeff;
            continue;
        }
        GetaTerm g = jac_to_getaprod(t);
        s.terms.push_back({g.coeff, g.prod, 1});
    }
    return s;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::proved: return "proved";
        case Verdict::failed: return "failed";
        case Verdict::not_modular: return "not-modular";
    }
    return "?";
}

std::string certificate_json(const ProofCertificate& c) {
    using nlohmann::json;
    json j;
    j["schema"] = 1;
    j["level"] = c.level;
    json cusps = json::array(), widths = json::array();
    for (size_t i = 0; i < c.cusps.cusps.size(); ++i) {
        const auto& z = c.cusps.cusps[i];
        cusps.push_back(z.is_infinity() ? "1/0" : std::to_string(z.a) + "/" + std::to_string(z.c));
        widths.push_back(c.cusps.widths[i]);
    }
    j["cusps"] = cusps;
    j["widths"] = widths;
    json terms = json::array();
    for (size_t k = 0; k < c.terms.size(); ++k) terms.push_back({{"coeff", rat_str(c.coeffs[k])}, {"geta", c.terms[k]}});
    j["terms"] = terms;
    j["constant"] = rat_str(c.constant);
    json ords = json::array();
    for (const auto& v : c.ords) {
        json row = json::array();
        for (Frac x : v) row.push_back(x.str());
        ords.push_back(row);
    }
    j["ords"] = ords;
    json lower = json::array();
    for (Frac x : c.lower) lower.push_back(x.str());
    j["lower_bounds"] = lower;
    j["B"] = c.B.str();
    j["required_order"] = c.required_order;
    j["checked_order"] = c.checked_order;
    j["verdict"] = verdict_name(c.verdict);
    if (c.verdict == Verdict::failed) j["failed_exponent"] = c.failed_exponent;
    if (c.verdict == Verdict::not_modular) j["not_modular_term"] = c.not_modular_term;
    j["message"] = c.message;
    return j.dump(2);
}

namespace {

std::string latex_frac(const std::string& s) {
    auto p = s.find('/');
    if (p == std::string::npos) return s;
    std::string n = s.substr(0, p);
    std::string sign;
    if (n[0] == '-') {
        sign = "-";
        n = n.substr(1);
    }
    return sign + "\\frac{" + n + "}{" + s.substr(p + 1) + "}";
}

}  // namespace

std::string ords_table(const ProofCertificate& c, bool latex) {
    std::ostringstream os;
    const size_t nt = c.ords.size();
    if (latex) {
        os << "\\begin{array}{c|" ;
        for (size_t j = 0; j <= nt; ++j) os << (j ? "|c" : "c");
        os << "}\n\\hline\n\\zeta";
        for (size_t j = 0; j < nt; ++j) os << " & \\mathrm{ORD}(f_{" << j + 1 << "},\\zeta)";
        os << " & \\mbox{Lower bound for $\\mathrm{ORD}(g,\\zeta)$} \\\\\n\\hline\n";
        for (size_t i = 1; i < c.cusps.cusps.size(); ++i) {
            os << latex_frac(c.cusps.cusps[i].str());
            for (size_t j = 0; j < nt; ++j) os << " & " << latex_frac(c.ords[j][i].str());
            os << " & " << latex_frac(c.lower[i].str()) << " \\\\\n";
        }
        os << "\\hline\n\\end{array}\n";
        return os.str();
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"cusp"};
    for (size_t j = 0; j < nt; ++j) head.push_back("ORD(f" + std::to_string(j + 1) + ")");
    head.push_back("lower bound");
    rows.push_back(head);
    for (size_t i = 1; i < c.cusps.cusps.size(); ++i) {
        std::vector<std::string> r{c.cusps.cusps[i].str()};
        for (size_t j = 0; j < nt; ++j) r.push_back(c.ords[j][i].str());
        r.push_back(c.lower[i].str());
        rows.push_back(r);
    }
    std::vector<size_t> w(head.size(), 0);
    for (const auto& r : rows)
        for (size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
    for (const auto& r : rows) {
        for (size_t k = 0; k < r.size(); ++k) os << (k ? "  " : "") << std::string(w[k] - r[k].size(), ' ') << r[k];
        os << "\n";
    }
    os << "sum of lower bounds: " << c.B.str() << "\n";
    return os.str();
}

std::string proof_summary(const ProofCertificate& c) {
    std::ostringstream os;
    if (c.verdict == Verdict::not_modular) {
        os << "*** " << c.message << "\n";
        return os.str();
    }
    os << "*** Each term is a modular function on Gamma1(" << c.level << "). Also -mintotord=" << (-c.B).str() << ".\n"
       << "    To prove the identity we need to check up to O(q^" << c.required_order << ").\n"
       << "    We check up to O(q^" << c.checked_order << ").\n";
    if (c.verdict == Verdict::proved) os << "*** The identity is PROVED!\n";
    else os << "*** The identity is FALSE: " << c.message << "\n";
    return os.str();
}

}  // namespace etaid
