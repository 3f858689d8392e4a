/*
 * poly.hpp
 * --------
 * Multivariate polynomials over an exact coefficient domain, with
 * monomial orders (grevlex / lex / grlex plus a variable priority
 * permutation). Terms are kept strictly descending in the active order;
 * the zero polynomial is the empty term list.
 */
#pragma once

#include "adicert/coeff.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace adicert {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct Monomial {
    std::vector<std::uint32_t> e;

    static Monomial unit(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }
    std::uint32_t degree() const;
    bool is_unit() const { return degree() == 0; }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class OrderKind { Grevlex, Lex, Grlex };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<std::uint32_t> perm; // perm[0] = index of highest-priority variable

    static MonomialOrder natural(OrderKind k, std::size_t nvars);
    // -1 if a < b, 0 if equal, 1 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool operator==(const MonomialOrder& o) const { return kind == o.kind && perm == o.perm; }
};

struct PolyCtx {
    std::vector<std::string> vars;
    std::uint32_t p = 0; // 0 = Q
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    bool same(const PolyCtx& o) const {
        return vars == o.vars && p == o.p && order == o.order;
    }
};

using CtxPtr = std::shared_ptr<const PolyCtx>;

CtxPtr make_ctx(std::vector<std::string> vars, std::uint32_t p = 0,
                OrderKind kind = OrderKind::Grevlex);

struct Term {
    Monomial m;
    Coeff c;
};

class Poly {
public:
    CtxPtr ctx;
    std::vector<Term> terms; // strictly descending in ctx->order, no zero coeffs

    Poly() = default;
    explicit Poly(CtxPtr c) : ctx(std::move(c)) {}

    static Poly zero(CtxPtr c) { return Poly(std::move(c)); }
    static Poly constant(CtxPtr c, const Coeff& k);
    static Poly constant(CtxPtr c, long long k);
    static Poly variable(CtxPtr c, std::size_t i);
    static Poly from_term(CtxPtr c, const Monomial& m, const Coeff& k);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    const Term& lt() const; // leading term, requires nonzero
    std::uint32_t total_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const Coeff& k) const;
    Poly mul_term(const Monomial& m, const Coeff& k) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // total order for canonical sorting / map keys
    int cmp(const Poly& o) const;

    std::string str() const;
};

void check_same_ctx(const Poly& a, const Poly& b);
bool same_ctx(const CtxPtr& a, const CtxPtr& b);

// DSL grammar: expr := [sign] term (('+'|'-') term)*, term := power ('*' power)*,
// power := atom ('^' nat)*, atom := identifier | nat | '(' expr ')'.
// Implicit multiplication is a syntax error; whitespace is insignificant.
Poly parse_polynomial(const std::string& text, const CtxPtr& ctx);

// Re-express f in a context with more variables; vmap[i] = index of old var i.
Poly extend_to_ctx(const Poly& f, const CtxPtr& bigger,
                   const std::vector<std::uint32_t>& vmap);

} // namespace adicert
