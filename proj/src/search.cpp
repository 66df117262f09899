#include "search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace etaid {

namespace {

GHAtom G(int64_t n, bool star = false, int64_t p = 1) { return {GHKind::G, star, n, p}; }
GHAtom H(int64_t n, bool star = false, int64_t p = 1) { return {GHKind::H, star, n, p}; }

GHTerm term(BigRat c, std::vector<GHAtom> atoms) { return {c, std::move(atoms)}; }

// x1 + c x2 with x1, x2 products of two atoms.
std::vector<GHTerm> pair_sum(GHAtom a1, GHAtom a2, int64_t c, GHAtom b1, GHAtom b2) {
    return {term(1, {a1, a2}), term(c, {b1, b2})};
}

bool contains(const std::vector<std::vector<int64_t>>& v, const std::vector<int64_t>& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// Coprime splittings n = a*b in order of increasing a.
std::vector<std::pair<int64_t, int64_t>> splits(int64_t n) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t a : divisors(n))
        if (gcd64(a, n / a) == 1) out.emplace_back(a, n / a);
    return out;
}

std::string latex_atom(const GHAtom& a) {
    std::string s = std::string(a.kind == GHKind::G ? "G" : "H") + (a.star ? "^{*}" : "") + "(" + std::to_string(a.n) + ")";
    if (a.power != 1) s += "^{" + std::to_string(a.power) + "}";
    return s;
}

std::string latex_terms(const std::vector<GHTerm>& ts) {
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); ++i) {
        BigRat c = ts[i].coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        os << (i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + "));
        std::string body;
        for (const auto& a : ts[i].atoms) body += (body.empty() ? "" : "\\,") + latex_atom(a);
        if (body.empty()) os << c.get_str();
        else os << (c == 1 ? "" : c.get_str() + "\\,") << body;
    }
    return os.str();
}

}  // namespace

std::string SearchHit::identity() const { return expr.str() + " = " + rec.rid.str(); }

std::vector<Candidate> enumerate_type(int k, const GHFamily& fam, int64_t T, const std::vector<std::vector<int64_t>>& exclude) {
    std::vector<Candidate> out;
    auto cond = [&](const std::vector<GHTerm>& ts) {
        // Terms whose q-powers differ by a non-integer cannot add up to an eta-quotient.
        Frac e0;
        for (size_t i = 0; i < ts.size(); ++i) {
            Frac e;
            for (const auto& a : ts[i].atoms) e += gh_lead_exp(fam, a.kind, a.n) * Frac(a.power);
            if (i == 0) e0 = e;
            else if (!(e - e0).is_integer()) return false;
        }
        return true;
    };
    auto add = [&](std::vector<int64_t> params, std::vector<GHTerm> num, std::vector<GHTerm> den = {}) {
        if (!cond(num) || !cond(den)) return;
        out.push_back({std::move(params), GHExpr{std::move(num), std::move(den)}});
    };
    const int64_t start = k == 6 ? 1 : 2;
    switch (k) {
        case 1: case 2: case 4: case 5: case 6: case 7:
            for (int64_t n = start; n <= T; ++n)
                for (auto [a, b] : splits(n)) {
                    bool even = a % 2 == 0 || b % 2 == 0;
                    if ((k == 1 || k == 4) && !(b < a)) continue;
                    if ((k == 2 || k == 5 || k == 7) && !(a <= b)) continue;
                    if (k == 6 && !(a >= b)) continue;
                    if ((k == 4 || k == 5) && !even) continue;
                    if (k == 7 && (a % 2 == 0 || b % 2 == 0)) continue;
                    for (int64_t c : {-1, 1}) {
                        std::vector<GHTerm> num;
                        if (k == 1) num = pair_sum(G(a), H(b), c, G(b), H(a));
                        if (k == 2) num = pair_sum(G(a), G(b), c, H(a), H(b));
                        if (k == 4) num = pair_sum(G(a, true), H(b, true), c, G(b, true), H(a, true));
                        if (k == 5) num = pair_sum(G(a, true), G(b, true), c, H(a, true), H(b, true));
                        if (k == 6) num = pair_sum(G(a), H(b, true), c, G(a, true), H(b));
                        if (k == 7) num = pair_sum(G(a, true), G(b), c, H(a, true), H(b));
                        add({a, b, c}, num);
                    }
                }
            break;
        case 3: case 10:
            for (int64_t n = 2; n <= T; ++n)
                for (auto [a2, b2] : splits(n)) {
                    if (!(b2 < a2)) continue;
                    for (auto [a1, b1] : splits(n)) {
                        if (k == 3 && !(a1 <= b1)) continue;
                        if (k == 10 && !(a1 > b1)) continue;
                        for (int64_t c1 : {-1, 1})
                            for (int64_t c2 : {-1, 1}) {
                                if (k == 3 && contains(exclude, {a2, b2, c2})) continue;
                                if (k == 10 && contains(exclude, {a1, b1, c1})) continue;
                                if (k == 3)
                                    add({a1, b1, c1, a2, b2, c2}, pair_sum(G(a1), G(b1), c1, H(a1), H(b1)),
                                        pair_sum(G(a2), H(b2), c2, H(a2), G(b2)));
                                else
                                    add({a1, b1, c1, a2, b2, c2}, pair_sum(G(a1), H(b1), c1, H(a1), G(b1)),
                                        pair_sum(G(a2), H(b2, true), c2, H(a2), G(b2, true)));
                            }
                    }
                }
            break;
        case 8:
            for (int64_t a = 2; a <= T; ++a)
                for (int64_t c : {-1, 1}) add({a, c}, {term(1, {G(1, false, a), H(a)}), term(c, {H(1, false, a), G(a)})});
            break;
        case 9:
            for (int64_t s = 3; s <= 2 * T; ++s)
                for (int64_t a = s / 2 + 1; a < s && a <= T; ++a) {
                    int64_t b = s - a;
                    for (int64_t x : {0, -1}) {
                        std::vector<GHTerm> num = {term(1, {G(1, false, a), H(1, false, b)}), term(-1, {H(1, false, a), G(1, false, b)})};
                        if (x) num.push_back(term(x, {}));
                        add({a, b, -x}, num);
                    }
                }
            break;
        default:
            throw Error("unknown identity type " + std::to_string(k));
    }
    return out;
}

std::optional<SearchHit> examine(int k, const GHFamily& fam, const Candidate& c, const SearchOptions& o) {
    JacExpr num = gh_to_jac(fam, c.expr.num), den = gh_to_jac(fam, c.expr.den);
    auto r = check_ram_idf(num, den, o.acc, o.stage1_order);
    if (!r) return std::nullopt;
    int64_t T1 = r->period + 21;
    if (T1 > o.stage1_order) {
        r = check_ram_idf(num, den, o.acc, T1);
        if (!r) return std::nullopt;
    }
    SearchHit h;
    h.type = k;
    h.params = c.params;
    h.expr = c.expr;
    h.rec = *r;
    h.level = r->period;
    if (!o.prove) return h;
    JacExpr diff = identity_difference(*r);
    if (diff.terms.empty()) return h;
    Rebased p = processjacid(diff);
    IdentityStatement st = statement_from_jac(p.expr);
    st.level = p.period;
    if (st.terms.empty()) return h;
    ProveOptions po;
    po.safety = o.safety;
    po.qthreshold = o.qthreshold;
    h.cert = prove(st, po);
    h.level = h.cert->level;
    if (h.cert->verdict != Verdict::proved) return std::nullopt;
    return h;
}

std::vector<SearchHit> find_type(int k, const GHFamily& fam, int64_t T, const SearchOptions& o) {
    std::vector<std::vector<int64_t>> exclude;
    if (k == 3 || k == 10) {
        SearchOptions o1 = o;
        o1.prove = false;
        for (const auto& h : find_type(1, fam, o.exclude_threshold ? o.exclude_threshold : T, o1)) exclude.push_back(h.params);
    }
    std::vector<Candidate> cands = enumerate_type(k, fam, k == 9 ? o.type9_max : T, exclude);
    std::vector<std::optional<SearchHit>> res(cands.size());
    if (k == 9) {
        // Only the first identity in (a+b, a, x) order is wanted.
        for (size_t i = 0; i < cands.size(); ++i)
            if ((res[i] = examine(k, fam, cands[i], o))) break;
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr err;
        std::mutex mu;
        auto work = [&] {
            for (size_t i; (i = next++) < cands.size();) {
                try {
                    res[i] = examine(k, fam, cands[i], o);
                } catch (...) {
                    std::lock_guard<std::mutex> g(mu);
                    if (!err) err = std::current_exception();
                }
            }
        };
        int jobs = std::max(1, o.jobs);
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    std::vector<SearchHit> hits;
    for (auto& r : res)
        if (r) hits.push_back(std::move(*r));
    return hits;
}

std::string eta_quotient_latex(const EtaQuotient& q) {
    std::string num, den;
    for (const auto& f : q.entries) {
        std::string s = "\\eta(" + (f.d == 1 ? std::string("") : std::to_string(f.d)) + "\\tau)";
        int64_t e = std::abs(f.e);
        if (e != 1) s += "^{" + std::to_string(e) + "}";
        (f.e > 0 ? num : den) += s;
    }
    std::string c = q.coeff == 1 ? "" : "{" + q.coeff.get_str() + "}";
    if (num.empty() && den.empty()) return q.coeff.get_str();
    if (den.empty()) return c + (c.empty() ? "" : "\\,") + num;
    return c + (c.empty() ? "" : "\\,") + "\\frac{" + (num.empty() ? "1" : num) + "}{" + den + "}";
}

std::string gh_latex(const GHExpr& e) {
    if (e.den.empty()) return latex_terms(e.num);
    return "\\frac{" + latex_terms(e.num) + "}{" + latex_terms(e.den) + "}";
}

std::string hits_json(const std::vector<SearchHit>& hits, const GHFamily& fam) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json j;
        j["type"] = h.type;
        j["params"] = h.params;
        j["modulus"] = fam.N();
        j["character"] = fam.chi.desc;
        j["expression"] = h.expr.str();
        j["rid"] = h.rec.rid.str();
        j["ebase"] = h.rec.ebase;
        j["ldq"] = h.rec.ldq.str();
        j["jac_base"] = h.rec.period;
        j["level"] = h.level;
        if (h.cert) {
            j["B"] = h.cert->B.str();
            j["minusB"] = (-h.cert->B).str();
            j["verdict"] = verdict_name(h.cert->verdict);
            j["checked_order"] = h.cert->checked_order;
            j["certificate"] = nlohmann::ordered_json::parse(certificate_json(*h.cert));
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string hits_markdown(const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    os << "| type | parameters | identity | group | -B |\n|---|---|---|---|---|\n";
    for (const auto& h : hits) {
        std::string ps;
        for (auto p : h.params) ps += (ps.empty() ? "" : ",") + std::to_string(p);
        os << "| " << h.type << " | [" << ps << "] | `" << h.identity() << "` | Gamma1(" << h.level << ") | "
           << (h.cert ? (-h.cert->B).str() : "-") << " |\n";
    }
    return os.str();
}

std::string hits_latex(const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    os << "\\begin{alignat}{3}\n";
    for (size_t i = 0; i < hits.size(); ++i) {
        const auto& h = hits[i];
        os << gh_latex(h.expr) << " &= " << eta_quotient_latex(h.rec.rid) << ",&\\quad &\\Gamma_1(" << h.level << ")";
        if (h.cert) os << ", &\\quad -B=" << (-h.cert->B).str();
        os << (i + 1 < hits.size() ? ",\\\\\n" : ".\n");
    }
    os << "\\end{alignat}\n";
    return os.str();
}

}  // namespace etaid
