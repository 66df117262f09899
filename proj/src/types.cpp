#include "types.hpp"

#include <algorithm>
#include <sstream>

namespace etaid {

namespace {

std::string pow_str(const std::string& base, Frac e) {
    if (e == Frac(1)) return base;
    return base + "^" + (e.is_integer() ? e.str() : "(" + e.str() + ")");
}

std::string frac_exp(Frac e) { return e.is_integer() && e.num() >= 0 ? e.str() : "(" + e.str() + ")"; }

std::string join_quotient(std::string lead, const std::vector<std::string>& num, const std::vector<std::string>& den) {
    for (const auto& n : num) lead += (lead.empty() ? "" : "*") + n;
    if (lead.empty()) lead = "1";
    if (den.empty()) return lead;
    std::string d;
    for (const auto& x : den) d += (d.empty() ? "" : "*") + x;
    return lead + "/" + (den.size() > 1 ? "(" + d + ")" : d);
}

}  // namespace

void GetaList::normalize() {
    std::map<std::pair<int64_t, int64_t>, Frac> acc;
    for (const auto& e : entries) {
        if (e.delta < 1) throw Error("geta-list: delta must be positive");
        int64_t g = mod64(e.g, e.delta);
        if (g == 0) throw Error("geta-list: g must not be divisible by delta");
        g = std::min(g, e.delta - g);
        acc[{e.delta, g}] += e.r;
    }
    entries.clear();
    for (const auto& [k, r] : acc) {
        if (r.is_zero()) continue;
        bool half = 2 * k.second == k.first;
        if (!(r * Frac(2)).is_integer() || (!half && !r.is_integer()))
            throw Error("geta-list: exponent " + r.str() + " not allowed for g=" + std::to_string(k.second) +
                        ", delta=" + std::to_string(k.first));
        entries.push_back({k.first, k.second, r});
    }
}

GetaList GetaList::from_triples(const std::vector<GetaEntry>& v) {
    GetaList L;
    L.entries = v;
    L.normalize();
    return L;
}

GetaList GetaList::scaled(int64_t n) const {
    GetaList L;
    for (const auto& e : entries) L.entries.push_back({e.delta * n, e.g * n, e.r});
    L.normalize();
    return L;
}

GetaList GetaList::inverse() const {
    GetaList L = *this;
    for (auto& e : L.entries) e.r = -e.r;
    return L;
}

GetaList concat(const GetaList& a, const GetaList& b) {
    GetaList L = a;
    L.entries.insert(L.entries.end(), b.entries.begin(), b.entries.end());
    L.normalize();
    return L;
}

std::string GetaList::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << "[" << entries[i].delta << "," << entries[i].g << "," << entries[i].r.str() << "]";
    }
    os << "]";
    return os.str();
}

void EtaQuotient::normalize() {
    std::map<int64_t, int64_t> acc;
    for (const auto& f : entries) {
        if (f.d < 1) throw Error("eta quotient: d must be positive");
        acc[f.d] += f.e;
    }
    entries.clear();
    for (auto [d, e] : acc)
        if (e) entries.push_back({d, e});
}

std::string EtaQuotient::str() const {
    std::vector<std::string> num, den;
    for (const auto& f : entries) {
        std::string b = "eta(" + (f.d == 1 ? std::string("tau") : std::to_string(f.d) + "tau") + ")";
        if (f.e > 0) num.push_back(pow_str(b, Frac(f.e)));
        else den.push_back(pow_str(b, Frac(-f.e)));
    }
    return join_quotient(coeff == 1 ? "" : coeff.get_str(), num, den);
}

void GetaProduct::normalize() {
    geta.normalize();
    EtaQuotient q;
    q.entries = eta;
    q.normalize();
    eta = q.entries;
}

GetaProduct GetaProduct::inverse() const {
    GetaProduct p;
    p.geta = geta.inverse();
    p.eta = eta;
    for (auto& f : p.eta) f.e = -f.e;
    return p;
}

GetaProduct multiply(const GetaProduct& a, const GetaProduct& b) {
    GetaProduct p;
    p.geta = concat(a.geta, b.geta);
    p.eta = a.eta;
    p.eta.insert(p.eta.end(), b.eta.begin(), b.eta.end());
    p.normalize();
    return p;
}

std::string GetaProduct::str() const {
    std::ostringstream os;
    os << geta.str();
    if (!eta.empty()) {
        os << " eta[";
        for (size_t i = 0; i < eta.size(); ++i) os << (i ? "," : "") << "[" << eta[i].d << "," << eta[i].e << "]";
        os << "]";
    }
    return os.str();
}

JacFactor::JacFactor(int64_t g0, int64_t b0) : b(b0) {
    if (b0 < 1) throw Error("JAC base must be positive");
    if (g0 == b0 && b0 > 0) throw Error("JAC(b,b) vanishes identically");
    int64_t r = mod64(g0, b0);
    g = std::min(r, b0 - r) % b0;
}

void JacMonomial::clean() {
    for (auto it = factors.begin(); it != factors.end();) {
        if (it->second.is_zero()) it = factors.erase(it);
        else ++it;
    }
}

int64_t JacMonomial::base() const {
    int64_t L = 1;
    for (const auto& [f, e] : factors) L = lcm64(L, f.b);
    return L;
}

std::string JacMonomial::str() const {
    std::ostringstream os;
    std::vector<std::string> num, den;
    for (const auto& [f, e] : factors) {
        std::string s = "JAC(" + std::to_string(f.g) + "," + std::to_string(f.b) + ")";
        if (e > Frac(0)) num.push_back(pow_str(s, e));
        else den.push_back(pow_str(s, -e));
    }
    std::vector<std::string> parts;
    if (coeff != 1 && coeff != -1) parts.push_back(BigRat(abs(coeff)).get_str());
    if (!q_exp.is_zero()) parts.push_back(q_exp == Frac(1) ? "q" : "q^" + frac_exp(q_exp));
    parts.insert(parts.end(), num.begin(), num.end());
    if (parts.empty()) parts.push_back("1");
    if (sgn(coeff) < 0) os << "-";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    if (!den.empty()) {
        os << "/";
        if (den.size() > 1) os << "(";
        for (size_t i = 0; i < den.size(); ++i) os << (i ? "*" : "") << den[i];
        if (den.size() > 1) os << ")";
    }
    return os.str();
}

JacMonomial operator*(const JacMonomial& a, const JacMonomial& b) {
    JacMonomial m = a;
    m.coeff *= b.coeff;
    m.q_exp += b.q_exp;
    for (const auto& [f, e] : b.factors) m.factors[f] += e;
    m.period = 0;
    m.clean();
    return m;
}

JacMonomial jac_pow(const JacMonomial& a, int64_t k) {
    JacMonomial m;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.coeff.get_num_mpz_t(), (unsigned long)std::abs(k));
    mpz_pow_ui(den.get_mpz_t(), a.coeff.get_den_mpz_t(), (unsigned long)std::abs(k));
    m.coeff = k >= 0 ? BigRat(num, den) : BigRat(den, num);
    m.coeff.canonicalize();
    m.q_exp = a.q_exp * Frac(k);
    for (const auto& [f, e] : a.factors) m.factors[f] = e * Frac(k);
    m.clean();
    return m;
}

JacMonomial operator/(const JacMonomial& a, const JacMonomial& b) { return a * jac_pow(b, -1); }

void JacExpr::add(const JacMonomial& m) {
    if (sgn(m.coeff) == 0) return;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->q_exp == m.q_exp && it->factors == m.factors) {
            it->coeff += m.coeff;
            if (sgn(it->coeff) == 0) terms.erase(it);
            return;
        }
    }
    terms.push_back(m);
}

std::string JacExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        std::string s = terms[i].str();
        if (i == 0) os << s;
        else if (s[0] == '-') os << " - " << s.substr(1);
        else os << " + " << s;
    }
    return os.str();
}

JacExpr operator+(const JacExpr& a, const JacExpr& b) {
    JacExpr r = a;
    for (const auto& t : b.terms) r.add(t);
    return r;
}

JacExpr operator*(const JacExpr& a, const JacMonomial& m) {
    JacExpr r;
    for (const auto& t : a.terms) r.add(t * m);
    return r;
}

JacExpr operator*(const JacExpr& a, const JacExpr& b) {
    JacExpr r;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) r.add(x * y);
    return r;
}

}  // namespace etaid
