#pragma once

#include <adicert/derived.hpp>

#include <random>

namespace th {

using namespace adicert;

inline Poly P(const RingPtr& A, const std::string& s) {
    return A->reduce(parse_polynomial(s, A->ctx));
}

inline Poly P(const CtxPtr& ctx, const std::string& s) {
    return parse_polynomial(s, ctx);
}

inline RingPtr QXY() { return make_poly_ring({"x", "y"}); }
inline RingPtr QX() { return make_poly_ring({"x"}); }

// Q[x,y]/(xy), the running zero-divisor example
inline RingPtr QXY_xy() {
    CtxPtr ctx = make_ctx({"x", "y"});
    return make_quotient_ring(ctx, {P(ctx, "x*y")});
}

// same invariants <=> same annihilator and Fitting chain; exact enough for
// the desk-scale oracles used below
inline bool iso_fingerprint(const FpModule& a, const FpModule& b) {
    return fingerprint(a) == fingerprint(b);
}

// deterministic random polynomial: <= 3 vars, degree <= maxdeg
inline Poly random_poly(std::mt19937& rng, const CtxPtr& ctx, unsigned maxdeg,
                        unsigned maxterms = 4) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> nt(1, maxterms);
    Poly f = Poly::zero(ctx);
    unsigned terms = nt(rng);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m = Monomial::unit(ctx->nvars());
        unsigned budget = maxdeg == 0 ? 0 : rng() % (maxdeg + 1);
        for (unsigned d = 0; d < budget; ++d) ++m.e[rng() % ctx->nvars()];
        int c = coef(rng);
        if (c == 0) c = 1;
        f = f + Poly::from_term(ctx, m, Coeff::from_int(c, ctx->p));
    }
    return f;
}

} // namespace th
