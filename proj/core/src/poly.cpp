#include "adicert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace adicert {

std::uint32_t Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

MonomialOrder MonomialOrder::natural(OrderKind k, std::size_t nvars) {
    MonomialOrder o;
    o.kind = k;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind != OrderKind::Lex) {
        std::uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::Grevlex) {
        // reverse lexicographic on the reversed priority list
        for (std::size_t i = perm.size(); i-- > 0;) {
            std::uint32_t ea = a.e[perm[i]], eb = b.e[perm[i]];
            if (ea != eb) return ea > eb ? -1 : 1;
        }
        return 0;
    }
    for (std::size_t i = 0; i < perm.size(); ++i) {
        std::uint32_t ea = a.e[perm[i]], eb = b.e[perm[i]];
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

CtxPtr make_ctx(std::vector<std::string> vars, std::uint32_t p, OrderKind kind) {
    if (p != 0 && !is_prime_u32(p)) throw DomainError("characteristic must be prime");
    auto ctx = std::make_shared<PolyCtx>();
    ctx->order = MonomialOrder::natural(kind, vars.size());
    ctx->vars = std::move(vars);
    ctx->p = p;
    return ctx;
}

bool same_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

void check_same_ctx(const Poly& a, const Poly& b) {
    if (!same_ctx(a.ctx, b.ctx)) throw DomainError("polynomial ring mismatch");
}

Poly Poly::constant(CtxPtr c, const Coeff& k) {
    Poly f(c);
    if (!k.is_zero()) f.terms.push_back({Monomial::unit(c->nvars()), k});
    return f;
}

Poly Poly::constant(CtxPtr c, long long k) {
    auto p = c->p;
    return constant(std::move(c), Coeff::from_int(k, p));
}

Poly Poly::variable(CtxPtr c, std::size_t i) {
    Poly f(c);
    Monomial m = Monomial::unit(c->nvars());
    m.e[i] = 1;
    f.terms.push_back({m, Coeff::one(c->p)});
    return f;
}

Poly Poly::from_term(CtxPtr c, const Monomial& m, const Coeff& k) {
    Poly f(c);
    if (!k.is_zero()) f.terms.push_back({m, k});
    return f;
}

bool Poly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms[0].m.is_unit());
}

const Term& Poly::lt() const {
    if (terms.empty()) throw DomainError("leading term of zero polynomial");
    return terms.front();
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.m.degree());
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ctx(*this, o);
    Poly r(ctx);
    r.terms.reserve(terms.size() + o.terms.size());
    std::size_t i = 0, j = 0;
    const auto& ord = ctx->order;
    while (i < terms.size() && j < o.terms.size()) {
        int c = ord.compare(terms[i].m, o.terms[j].m);
        if (c > 0) {
            r.terms.push_back(terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(o.terms[j++]);
        } else {
            Coeff s = terms[i].c + o.terms[j].c;
            if (!s.is_zero()) r.terms.push_back({terms[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms.size(); ++i) r.terms.push_back(terms[i]);
    for (; j < o.terms.size(); ++j) r.terms.push_back(o.terms[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx);
    r.terms.reserve(terms.size());
    for (const auto& t : terms) r.terms.push_back({t.m, -t.c});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Coeff& k) const {
    Poly r(ctx);
    if (k.is_zero()) return r;
    r.terms.reserve(terms.size());
    for (const auto& t : terms) {
        Coeff c = t.c * k;
        if (!c.is_zero()) r.terms.push_back({t.m * m, c});
    }
    return r;
}

Poly Poly::scale(const Coeff& k) const { return mul_term(Monomial::unit(ctx->nvars()), k); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ctx(*this, o);
    Poly r(ctx);
    for (const auto& t : o.terms) r = r + mul_term(t.m, t.c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(ctx, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const { return cmp(o) == 0; }

int Poly::cmp(const Poly& o) const {
    check_same_ctx(*this, o);
    std::size_t n = std::min(terms.size(), o.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ctx->order.compare(terms[i].m, o.terms[i].m);
        if (c != 0) return c;
        if (terms[i].c != o.terms[i].c) {
            // any fixed tiebreak works; compare printed form
            return terms[i].c.str() < o.terms[i].c.str() ? -1 : 1;
        }
    }
    if (terms.size() != o.terms.size()) return terms.size() < o.terms.size() ? -1 : 1;
    return 0;
}

static void append_monomial(std::ostringstream& os, const PolyCtx& ctx, const Monomial& m) {
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << ctx.vars[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        std::string cs = t.c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        if (t.m.is_unit()) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            append_monomial(os, *ctx, t.m);
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    const CtxPtr& ctx;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Poly parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = s[pos] == '-';
            ++pos;
        }
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Poly t = parse_term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_power();
        while (peek() == '*') {
            ++pos;
            acc = acc * parse_power();
        }
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        while (peek() == '^') {
            ++pos;
            base = base.pow(parse_nat());
        }
        return base;
    }

    unsigned parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        unsigned v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    Poly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v = 0;
            std::uint64_t r = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                int digit = s[pos] - '0';
                if (ctx->p == 0)
                    v = v * 10 + digit;
                else
                    r = (r * 10 + digit) % ctx->p;
                ++pos;
            }
            if (pos < s.size() &&
                (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                fail("implicit multiplication is not allowed");
            if (ctx->p == 0) return Poly::constant(ctx, Coeff::from_rational(v));
            return Poly::constant(ctx,
                                  Coeff::from_int(static_cast<long long>(r), ctx->p));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                name += s[pos];
                ++pos;
            }
            for (std::size_t i = 0; i < ctx->nvars(); ++i)
                if (ctx->vars[i] == name) return Poly::variable(ctx, i);
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        fail("unexpected character");
    }
};

} // namespace

Poly parse_polynomial(const std::string& text, const CtxPtr& ctx) {
    Parser p{text, ctx};
    Poly f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

Poly extend_to_ctx(const Poly& f, const CtxPtr& bigger,
                   const std::vector<std::uint32_t>& vmap) {
    Poly r(bigger);
    for (const auto& t : f.terms) {
        Monomial m = Monomial::unit(bigger->nvars());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) m.e[vmap[i]] = t.m.e[i];
        Coeff c = t.c;
        if (bigger->p != f.ctx->p) throw DomainError("coefficient domain mismatch");
        r = r + Poly::from_term(bigger, m, c);
    }
    return r;
}

} // namespace adicert
