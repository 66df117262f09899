#include "characters.hpp"

#include "modularity.hpp"

#include <algorithm>
#include <sstream>

namespace etaid {

int kronecker(int64_t a, int64_t n) {
    BigInt A((long)a);
    return mpz_kronecker_si(A.get_mpz_t(), (long)n);
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw Error("character: bad " + what + " '" + s + "'");
    }
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Splits at commas that are not inside a nested "mod" clause; characters never contain parentheses.
std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

RealCharacter induce(const RealCharacter& base, int64_t M, const std::string& desc) {
    if (M < 1 || M % base.modulus) throw Error("character: cannot induce modulus " + std::to_string(base.modulus) + " to " + std::to_string(M));
    RealCharacter c;
    c.modulus = M;
    c.desc = desc;
    c.table.resize((size_t)M);
    for (int64_t r = 0; r < M; ++r) c.table[(size_t)r] = gcd64(r, M) == 1 ? base(r) : 0;
    return c;
}

RealCharacter from_function(int64_t M, const std::string& desc, int (*f)(int64_t, int64_t), int64_t param, bool top) {
    RealCharacter c;
    c.modulus = M;
    c.desc = desc;
    c.table.resize((size_t)M);
    for (int64_t r = 0; r < M; ++r) c.table[(size_t)r] = gcd64(r, M) == 1 ? (top ? f(param, r) : f(r, param)) : 0;
    return c;
}

RealCharacter parse_base(const std::string& s0) {
    std::string s = trim(s0);
    auto at = s.rfind(" mod ");
    if (at != std::string::npos && s.rfind("product:", 0) != 0 && s.rfind("induced:", 0) != 0) {
        int64_t M = parse_int(s.substr(at + 5), "modulus");
        RealCharacter inner = parse_base(s.substr(0, at));
        return induce(inner, M, s);
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("character: expected kind:argument in '" + s + "'");
    std::string kind = trim(s.substr(0, colon)), arg = trim(s.substr(colon + 1));
    if (kind == "legendre") {
        int64_t p = parse_int(arg, "prime");
        if (!is_prime(p) || p == 2) throw Error("character: legendre needs an odd prime, got " + arg);
        return from_function(p, s, kronecker, p, false);
    }
    if (kind == "jacobi") {
        int64_t m = parse_int(arg, "modulus");
        if (m < 3 || m % 2 == 0) throw Error("character: jacobi needs an odd modulus > 1, got " + arg);
        return from_function(m, s, kronecker, m, false);
    }
    if (kind == "kronecker") {
        int64_t d = parse_int(arg, "discriminant");
        if (d == 0) throw Error("character: kronecker:0 is not a character");
        int64_t r = mod64(d, 4);
        int64_t M = (r == 0 || r == 1) ? std::abs(d) : 4 * std::abs(d);
        return from_function(M, s, kronecker, d, true);
    }
    if (kind == "induced") {
        auto m = arg.rfind(" mod ");
        if (m == std::string::npos) throw Error("character: induced needs ' mod M'");
        return induce(parse_base(arg.substr(0, m)), parse_int(arg.substr(m + 5), "modulus"), s);
    }
    if (kind == "product") {
        auto m = arg.rfind(" mod ");
        if (m == std::string::npos) throw Error("character: product needs ' mod M'");
        int64_t M = parse_int(arg.substr(m + 5), "modulus");
        RealCharacter c;
        c.modulus = M;
        c.desc = s;
        c.table.assign((size_t)M, 1);
        for (const auto& part : split_list(arg.substr(0, m))) {
            RealCharacter f = induce(parse_base(part), M, part);
            for (int64_t r = 0; r < M; ++r) c.table[(size_t)r] *= f.table[(size_t)r];
        }
        return c;
    }
    throw Error("character: unknown kind '" + kind + "'");
}

std::string atom_str(const GHAtom& a) {
    std::string s = std::string(a.kind == GHKind::G ? "G" : "H") + (a.star ? "*" : "") + "(" + std::to_string(a.n) + ")";
    if (a.power != 1) s += "^" + (a.power < 0 ? "(" + std::to_string(a.power) + ")" : std::to_string(a.power));
    return s;
}

std::string terms_str(const std::vector<GHTerm>& ts) {
    if (ts.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); ++i) {
        const auto& t = ts[i];
        BigRat c = t.coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (i == 0) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        std::string body;
        for (const auto& a : t.atoms) body += (body.empty() ? "" : "*") + atom_str(a);
        if (body.empty()) os << c.get_str();
        else if (c == 1) os << body;
        else os << c.get_str() << "*" << body;
    }
    return os.str();
}

// Orders of num and den chosen so both are known `rel` integer steps past their true leading terms.
std::optional<QSeries> expand_rel(const JacExpr& x, int64_t rel) {
    Frac lead = x.terms[0].q_exp;
    for (const auto& t : x.terms) lead = std::min(lead, t.q_exp);
    for (int iter = 0; iter < 4; ++iter) {
        int64_t T = (lead + Frac(rel)).ceil() + 1;
        QSeries s = jac_to_series(x, T);
        if (s.is_zero()) return std::nullopt;
        if (s.lead_exp() + Frac(rel) <= s.order()) return s;
        lead = s.lead_exp();
    }
    return std::nullopt;
}

bool exps_congruent(const JacExpr& x) {
    for (const auto& t : x.terms)
        if (!(t.q_exp - x.terms[0].q_exp).is_integer()) return false;
    return true;
}

}  // namespace

RealCharacter parse_character(const std::string& desc) {
    RealCharacter c = parse_base(desc);
    c.desc = trim(desc);
    return c;
}

std::string character_defect(const RealCharacter& chi) {
    const int64_t M = chi.modulus;
    if (M < 3) return "modulus must be at least 3";
    bool nonprincipal = false;
    for (int64_t r = 0; r < M; ++r) {
        int v = chi(r);
        if ((v != 0) != (gcd64(r, M) == 1)) return "chi(" + std::to_string(r) + ") vanishes incorrectly";
        if (v == -1) nonprincipal = true;
        for (int64_t s = 0; s < M; ++s)
            if (chi(r * s) != v * chi(s)) return "not multiplicative at " + std::to_string(r) + "*" + std::to_string(s);
    }
    if (!nonprincipal) return "principal character";
    if (chi(M - 1) != 1) return "odd character (chi(-1) = -1)";
    return "";
}

GHFamily make_family(const RealCharacter& chi) {
    std::string bad = character_defect(chi);
    if (!bad.empty()) throw Error("character " + chi.desc + ": " + bad);
    GHFamily f;
    f.chi = chi;
    for (int64_t g = 1; 2 * g < chi.modulus; ++g) {
        if (chi(g) == 1) f.g_res.push_back(g);
        if (chi(g) == -1) f.h_res.push_back(g);
    }
    return f;
}

ProductForm reduce_period(const ProductForm& p) {
    for (int64_t d : divisors(p.L)) {
        bool ok = true;
        for (int64_t k = d; k < p.L && ok; ++k) ok = p.a[(size_t)k] == p.a[(size_t)(k % d)];
        if (!ok) continue;
        ProductForm r = p;
        r.L = d;
        r.a.resize((size_t)d);
        return r;
    }
    return p;
}

JacMonomial geta_star_jac(int64_t delta, int64_t g, int64_t n) {
    if (delta < 1 || n < 1) throw Error("geta*: delta and scale must be positive");
    g = mod64(g, delta);
    if (g == 0) throw Error("geta*: g must not be divisible by delta");
    ProductForm p;
    p.L = 4 * delta * n;
    p.a.assign((size_t)p.L, Frac(0));
    p.q_exp = Frac(n * delta, 2) * p2(Frac(g, delta));
    for (int64_t r = 1; r < 2 * delta; ++r) {
        int cnt = (r % delta == g) + (r % delta == delta - g);
        for (int k = 0; k < cnt; ++k) {
            int64_t sgn1 = r % 2 == 0 ? 1 : -1;
            p.a[(size_t)(n * r % p.L)] += Frac(sgn1);
            p.a[(size_t)((n * r + 2 * delta * n) % p.L)] += Frac(sgn1);
            if (r % 2) p.a[(size_t)(2 * n * r % p.L)] += Frac(1);
        }
    }
    return from_product_form(reduce_period(p));
}

std::string GHExpr::str() const {
    if (den.empty()) return terms_str(num);
    auto wrap = [](const std::vector<GHTerm>& t) {
        std::string s = terms_str(t);
        return t.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num) + "/" + wrap(den);
}

JacMonomial gh_monomial(const GHFamily& fam, GHKind which, int64_t n, bool star) {
    if (n < 1) throw Error("G/H argument must be positive");
    const auto& res = which == GHKind::G ? fam.g_res : fam.h_res;
    JacMonomial m;
    if (!star) {
        GetaList L;
        for (int64_t g : res) L.entries.push_back({fam.N(), g, Frac(1)});
        L.normalize();
        m = getalist_to_jac(L, n);
    } else {
        for (int64_t g : res) m = m * geta_star_jac(fam.N(), g, n);
    }
    return jac_pow(m, -1);
}

Frac gh_lead_exp(const GHFamily& fam, GHKind which, int64_t n) {
    Frac s;
    for (int64_t g : which == GHKind::G ? fam.g_res : fam.h_res) s -= Frac(n * fam.N(), 2) * p2(Frac(g, fam.N()));
    return s;
}

JacExpr gh_to_jac(const GHFamily& fam, const std::vector<GHTerm>& terms) {
    JacExpr x;
    for (const auto& t : terms) {
        JacMonomial m;
        m.coeff = t.coeff;
        for (const auto& a : t.atoms) m = m * jac_pow(gh_monomial(fam, a.kind, a.n, a.star), a.power);
        x.add(m);
    }
    return x;
}

JacMonomial eta_quotient_jac(const EtaQuotient& q) {
    JacMonomial m;
    m.coeff = q.coeff;
    for (const auto& f : q.entries) {
        m.factors[JacFactor(0, f.d)] += Frac(f.e);
        m.q_exp += Frac(f.d * f.e, 24);
    }
    m.clean();
    return m;
}

std::optional<RamIdResult> check_ram_idf(const JacExpr& num, const JacExpr& den0, int64_t acc, int64_t T) {
    const int64_t M = T - 10;
    if (M < 2) throw Error("check_ram_idf: order must exceed 11");
    if (num.terms.empty()) return std::nullopt;
    JacExpr den = den0;
    if (den.terms.empty()) den.terms.push_back(JacMonomial{});
    if (!exps_congruent(num) || !exps_congruent(den)) return std::nullopt;
    RamIdResult r;
    r.num = num;
    r.den = den0;
    for (const auto& t : num.terms) r.period = lcm64(r.period, t.base());
    for (const auto& t : den.terms) r.period = lcm64(r.period, t.base());
    auto sn = expand_rel(num, M);
    auto sd = expand_rel(den, M);
    if (!sn || !sd) return std::nullopt;
    QSeries q = *sn / *sd;
    auto nl = normalize_lead(q, M);
    if (!nl || (int64_t)nl->g.size() < M) return std::nullopt;
    auto a = peel_exponents(nl->g, acc);
    if (!a) return std::nullopt;
    r.exponents.assign(a->begin() + 1, a->end());
    r.ldq = nl->lead_exp;
    r.rid.coeff = nl->lead_coeff;
    Frac pref;
    for (int64_t d = 1; d < M; ++d) {
        int64_t e = 0;
        for (int64_t k : divisors(d)) e += mobius(d / k) * (*a)[(size_t)k];
        if (!e) continue;
        if (r.period % d) return std::nullopt;
        r.rid.entries.push_back({d, e});
        r.ebase = lcm64(r.ebase, d);
        pref += Frac(d * e, 24);
    }
    // Factors eta(d tau) with d >= M are invisible at this order; the prefactor is only decisive without them.
    auto ds = divisors(r.period);
    if (ds.back() < M && pref != r.ldq) return std::nullopt;
    return r;
}

std::optional<RamIdResult> check_ram_idf(const GHFamily& fam, const GHExpr& e, int64_t acc, int64_t T) {
    return check_ram_idf(gh_to_jac(fam, e.num), gh_to_jac(fam, e.den), acc, T);
}

JacExpr identity_difference(const RamIdResult& r) {
    JacExpr x = r.num;
    JacMonomial rid = eta_quotient_jac(r.rid);
    rid.coeff = -rid.coeff;
    if (r.den.terms.empty()) {
        x.add(rid);
    } else {
        for (const auto& t : r.den.terms) x.add(rid * t);
    }
    return x;
}

}  // namespace etaid
