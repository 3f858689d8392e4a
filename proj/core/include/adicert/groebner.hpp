/*
 * groebner.hpp
 * ------------
 * Buchberger engine for submodules of free modules over a polynomial
 * ring (ideals are the rank-1 case). Module order is position-over-term
 * by default, term-over-position selectable. Supplies reduced bases,
 * normal forms (optionally with cofactor tracking), syzygy modules and
 * colon computations. Reduced-basis results are memoized.
 */
#pragma once

#include "adicert/poly.hpp"

#include <optional>
#include <vector>

namespace adicert {

struct MTerm {
    std::uint32_t comp = 0;
    Monomial m;
    Coeff c;
};

// Module element: terms strictly descending in the module order.
struct MVec {
    CtxPtr ctx;
    std::uint32_t rank = 1;
    std::vector<MTerm> terms;

    static MVec zero(CtxPtr ctx, std::uint32_t rank);
    static MVec basis(CtxPtr ctx, std::uint32_t rank, std::uint32_t comp);
    static MVec from_polys(const std::vector<Poly>& comps);
    static MVec poly_in_comp(const Poly& f, std::uint32_t rank, std::uint32_t comp);
    std::vector<Poly> to_polys() const;
    Poly component(std::uint32_t i) const;

    bool is_zero() const { return terms.empty(); }
    const MTerm& lt() const;

    MVec add(const MVec& o, bool top) const;
    MVec neg() const;
    MVec sub(const MVec& o, bool top) const { return add(o.neg(), top); }
    MVec mul_term(const Monomial& m, const Coeff& c) const;
    MVec mul_poly(const Poly& f, bool top) const;
    bool operator==(const MVec& o) const;
    std::string str() const;
};

// -1 if a < b in the module order (POT unless top).
int mterm_compare(const MTerm& a, const MTerm& b, const MonomialOrder& ord, bool top);

struct GBasis {
    CtxPtr ctx;
    std::uint32_t rank = 1;
    bool top = false;
    bool reduced = true;
    std::vector<MVec> gens; // sorted ascending by leading term

    bool trivial() const; // contains a unit in some component? (rank-1 only meaningful)
    std::string key() const;
    bool operator==(const GBasis& o) const;
};

GBasis buchberger(CtxPtr ctx, std::uint32_t rank, const std::vector<MVec>& gens,
                  bool top = false);
GBasis buchberger_polys(const CtxPtr& ctx, const std::vector<Poly>& gens);

MVec normal_form(const MVec& v, const GBasis& gb);
Poly normal_form(const Poly& f, const GBasis& gb);

// Full division: v = sum_i cof[i] * gb.gens[i] + remainder.
MVec normal_form_tracked(const MVec& v, const GBasis& gb, std::vector<Poly>& cof);

// Generating set of { c in A^m : sum c_i gens_i = 0 } over the polynomial ring.
std::vector<MVec> syzygy_module(CtxPtr ctx, std::uint32_t rank,
                                const std::vector<MVec>& gens, bool top = false);

// (N : f) = { m : f*m in N } as a submodule of the same ambient module.
GBasis colon(const GBasis& submodule, const Poly& f);

// Audit: every S-polynomial of the basis reduces to zero.
bool is_groebner(const GBasis& gb);

// Tracked basis: gb.gens[k] = sum_i rep[k][i] * inputs[i].
struct TrackedGB {
    GBasis gb;
    std::vector<std::vector<Poly>> rep;
    std::size_t ninputs = 0;
};

TrackedGB buchberger_tracked(CtxPtr ctx, std::uint32_t rank,
                             const std::vector<MVec>& inputs, bool top = false);

// Express v = sum_i c_i * inputs[i] + remainder through a tracked basis.
std::vector<Poly> express(const MVec& v, const TrackedGB& tgb, MVec* remainder);

std::size_t gb_cache_size();
void gb_cache_clear();

} // namespace adicert
