#include "dsl.hpp"

#include "characters.hpp"

#include <cctype>
#include <sstream>

namespace etaid {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<DslTerm> side() {
        std::vector<DslTerm> out;
        ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
        out.push_back(term(sign));
        for (;;) {
            ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            out.push_back(term(c == '-' ? -1 : 1));
        }
        return out;
    }

    void expect_end() {
        ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    }

    bool accept(char c) {
        ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, pos_); }

private:
    const std::string& s_;
    size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    void expect(char c) {
        ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits() {
        ws();
        size_t b = pos_;
        while (std::isdigit((unsigned char)peek())) ++pos_;
        if (b == pos_) fail("expected a number");
        if (pos_ - b > 17) fail("number too large");
        return s_.substr(b, pos_ - b);
    }

    int64_t integer() {
        ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = get() == '-';
        int64_t v = std::stoll(digits());
        return neg ? -v : v;
    }

    DslTerm term(int sign) {
        DslTerm t;
        ws();
        bool have = false;
        if (std::isdigit((unsigned char)peek())) {
            BigInt num(digits()), den(1);
            size_t save = pos_;
            ws();
            if (peek() == '/') {
                ++pos_;
                ws();
                if (std::isdigit((unsigned char)peek())) {
                    den = BigInt(digits());
                    if (den == 0) fail("zero denominator");
                } else {
                    pos_ = save;
                }
            } else {
                pos_ = save;
            }
            t.coeff = BigRat(num, den);
            t.coeff.canonicalize();
            have = true;
        }
        for (;;) {
            ws();
            char c = peek();
            int pw = 1;
            if (c == '*' || c == '/') {
                ++pos_;
                if (c == '/') pw = -1;
                ws();
                if (!std::isalpha((unsigned char)peek())) fail("expected a factor");
            } else if (!std::isalpha((unsigned char)c)) {
                break;
            }
            DslFactor f = factor();
            f.power *= pw;
            t.factors.push_back(f);
            have = true;
        }
        if (!have) fail("expected a term");
        if (sign < 0) t.coeff = -t.coeff;
        return t;
    }

    DslFactor factor() {
        size_t b = pos_;
        while (std::isalpha((unsigned char)peek())) ++pos_;
        std::string name = s_.substr(b, pos_ - b);
        DslFactor f;
        if (name == "GETA") f.kind = DslFactor::Kind::geta;
        else if (name == "EETA") f.kind = DslFactor::Kind::eeta;
        else if (name == "GETAL") f.kind = DslFactor::Kind::getal;
        else if (name == "GSTAR") f.kind = DslFactor::Kind::gstar;
        else {
            pos_ = b;
            fail("unknown factor '" + name + "'");
        }
        expect('(');
        f.delta = integer();
        if (f.delta < 1) fail("modulus must be positive");
        if (f.kind == DslFactor::Kind::eeta) {
            expect(')');
        } else {
            ws();
            bool list = f.kind == DslFactor::Kind::getal || (f.kind == DslFactor::Kind::gstar && peek() == ';');
            f.list_form = f.kind == DslFactor::Kind::gstar && list;
            if (list) {
                expect(';');
                f.gs.push_back(integer());
                while (accept(',')) f.gs.push_back(integer());
                expect(';');
                f.scale = integer();
                expect(')');
            } else {
                expect(',');
                f.gs.push_back(integer());
                if (accept(',')) f.scale = integer();
                expect(')');
            }
            if (f.scale < 1) fail("scale must be positive");
            for (int64_t g : f.gs)
                if (mod64(g, f.delta) == 0) fail("g must not be divisible by the modulus");
        }
        if (accept('^')) {
            if (accept('(')) {
                f.power = integer();
                expect(')');
            } else {
                f.power = integer();
            }
        }
        return f;
    }
};

std::string factor_str(const DslFactor& f) {
    std::ostringstream os;
    auto glist = [&] {
        std::string s;
        for (int64_t g : f.gs) s += (s.empty() ? "" : ",") + std::to_string(g);
        return s;
    };
    switch (f.kind) {
        case DslFactor::Kind::eeta: os << "EETA(" << f.delta << ")"; break;
        case DslFactor::Kind::getal: os << "GETAL(" << f.delta << ";" << glist() << ";" << f.scale << ")"; break;
        case DslFactor::Kind::geta:
        case DslFactor::Kind::gstar:
            os << (f.kind == DslFactor::Kind::geta ? "GETA(" : "GSTAR(");
            if (f.list_form) os << f.delta << ";" << glist() << ";" << f.scale << ")";
            else os << f.delta << "," << f.gs.at(0) << (f.scale != 1 ? "," + std::to_string(f.scale) : "") << ")";
            break;
    }
    if (f.power != 1) os << "^" << f.power;
    return os.str();
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::string DslDocument::meta_value(const std::string& key) const {
    for (const auto& [k, v] : meta)
        if (k == key) return v;
    return "";
}

DslDocument parse_identity(const std::string& text) {
    DslDocument d;
    std::string body;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.rfind("#!", 0) == 0) {
            std::string rest = trim(t.substr(2));
            auto sp = rest.find_first_of(" \t");
            d.meta.emplace_back(rest.substr(0, sp), sp == std::string::npos ? "" : trim(rest.substr(sp)));
            continue;
        }
        if (t.empty() || t[0] == '#') {
            body += '\n';
            continue;
        }
        body += line + '\n';
    }
    Parser p(body);
    d.lhs = p.side();
    if (!p.accept('=')) p.fail("expected '='");
    d.rhs = p.side();
    p.expect_end();
    return d;
}

std::vector<DslTerm> parse_expression(const std::string& text) {
    Parser p(text);
    auto ts = p.side();
    p.expect_end();
    return ts;
}

std::string print_terms(const std::vector<DslTerm>& ts) {
    if (ts.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); ++i) {
        BigRat c = ts[i].coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        os << (i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + "));
        std::string body;
        for (const auto& f : ts[i].factors) body += (body.empty() ? "" : "*") + factor_str(f);
        if (body.empty()) os << c.get_str();
        else if (c == 1) os << body;
        else os << c.get_str() << "*" << body;
    }
    return os.str();
}

std::string print_identity(const DslDocument& d) {
    std::string out;
    for (const auto& [k, v] : d.meta) out += "#! " + k + (v.empty() ? "" : " " + v) + "\n";
    return out + print_terms(d.lhs) + " = " + print_terms(d.rhs) + "\n";
}

GetaProduct factor_product(const DslFactor& f) {
    GetaProduct P;
    switch (f.kind) {
        case DslFactor::Kind::eeta: P.eta.push_back({f.delta, f.power}); break;
        case DslFactor::Kind::geta:
        case DslFactor::Kind::getal: {
            GetaList L;
            for (int64_t g : f.gs) L.entries.push_back({f.delta, g, Frac(f.power)});
            L.normalize();
            P.geta = L.scaled(f.scale);
            break;
        }
        case DslFactor::Kind::gstar: {
            JacMonomial m;
            for (int64_t g : f.gs) m = m * geta_star_jac(f.delta, g, f.scale);
            P = jac_to_getaprod(jac_pow(m, f.power)).prod;
            break;
        }
    }
    P.normalize();
    return P;
}

JacMonomial term_jac(const DslTerm& t) {
    GetaProduct P;
    for (const auto& f : t.factors) P = multiply(P, factor_product(f));
    JacMonomial m = getaprod_to_jac(P);
    m.coeff = t.coeff;
    return m;
}

QSeries expand_terms(const std::vector<DslTerm>& ts, int64_t order) {
    QSeries s = QSeries::zero(Frac(order));
    for (const auto& t : ts) s = s + jac_to_series(term_jac(t), order);
    return s;
}

IdentityStatement to_statement(const DslDocument& d) {
    IdentityStatement s;
    auto add = [&](const DslTerm& t, int sign) {
        GetaProduct P;
        for (const auto& f : t.factors) P = multiply(P, factor_product(f));
        BigRat c = t.coeff * sign;
        if (sgn(c) == 0) return;
        if (P.empty()) s.constant += c;
        else s.terms.push_back({c, P, 1});
    };
    for (const auto& t : d.lhs) add(t, 1);
    for (const auto& t : d.rhs) add(t, -1);
    std::string lv = d.meta_value("level");
    if (!lv.empty()) {
        try {
            s.level = std::stoll(lv);
        } catch (const std::logic_error&) {
            throw Error("bad level '" + lv + "'");
        }
    }
    if (s.terms.empty()) throw Error("identity has no eta-product terms");
    return s;
}

DslDocument mutate(const DslDocument& d, std::mt19937_64& rng) {
    std::vector<std::pair<int, std::pair<size_t, size_t>>> slots;
    for (size_t i = 0; i < d.lhs.size(); ++i)
        for (size_t j = 0; j < d.lhs[i].factors.size(); ++j) slots.push_back({0, {i, j}});
    for (size_t i = 0; i < d.rhs.size(); ++i)
        for (size_t j = 0; j < d.rhs[i].factors.size(); ++j) slots.push_back({1, {i, j}});
    if (slots.empty()) throw Error("nothing to mutate");
    DslDocument m = d;
    auto [side, ij] = slots[std::uniform_int_distribution<size_t>(0, slots.size() - 1)(rng)];
    DslFactor& f = (side == 0 ? m.lhs : m.rhs)[ij.first].factors[ij.second];
    int64_t step = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    f.power += f.power + step == 0 ? -step : step;
    return m;
}

}  // namespace etaid
