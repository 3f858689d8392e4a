#include <doctest.h>

#include "helpers.hpp"

using namespace adicert;
using th::P;

TEST_CASE("polynomial arithmetic and parsing") {
    CtxPtr ctx = make_ctx({"x", "y"});
    Poly f = P(ctx, "x + y");
    CHECK(f * f == P(ctx, "x^2 + 2*x*y + y^2"));
    CHECK(f - f == Poly::zero(ctx));
    CHECK(P(ctx, "(x + 1)*(x - 1)") == P(ctx, "x^2 - 1"));
    CHECK(P(ctx, "x^3").total_degree() == 3);
    CHECK_THROWS_AS(P(ctx, "x y"), ParseError);   // implicit multiplication
    CHECK_THROWS_AS(P(ctx, "z + 1"), ParseError); // unknown variable
}

TEST_CASE("monomial orders disagree where they should") {
    CtxPtr grev = make_ctx({"x", "y"}, 0, OrderKind::Grevlex);
    CtxPtr lex = make_ctx({"x", "y"}, 0, OrderKind::Lex);
    // grevlex ranks by total degree first; lex by x-power first
    CHECK(P(grev, "y^3 + x^2").lt().m == P(grev, "y^3").lt().m);
    CHECK(P(lex, "y^3 + x^2").lt().m == P(lex, "x^2").lt().m);
}

TEST_CASE("prime field arithmetic") {
    CtxPtr ctx = make_ctx({"x"}, 5);
    CHECK(P(ctx, "3*x + 2*x") == Poly::zero(ctx)); // 5 = 0 in F_5
    CHECK(P(ctx, "x + x + x + x + x + x") == P(ctx, "x"));
}

TEST_CASE("groebner basis: membership through normal forms") {
    CtxPtr ctx = make_ctx({"x", "y"});
    GBasis gb = buchberger_polys(ctx, {P(ctx, "x^2 - 1"), P(ctx, "x*y - 1")});
    CHECK(is_groebner(gb));
    // x*(xy-1) - y*(x^2-1) = y - x
    CHECK(normal_form(P(ctx, "y - x"), gb).is_zero());
    CHECK(!normal_form(P(ctx, "x"), gb).is_zero());
}

TEST_CASE("colon ideal: (x^2) : x = (x)") {
    CtxPtr ctx = make_ctx({"x"});
    GBasis gb = buchberger_polys(ctx, {P(ctx, "x^2")});
    GBasis q = colon(gb, P(ctx, "x"));
    CHECK(normal_form(P(ctx, "x"), q).is_zero());
    CHECK(!normal_form(Poly::constant(ctx, 1), q).is_zero());
}

TEST_CASE("syzygies of (x, y) are generated by (y, -x)") {
    CtxPtr ctx = make_ctx({"x", "y"});
    std::vector<MVec> gens = {MVec::from_polys({P(ctx, "x")}),
                              MVec::from_polys({P(ctx, "y")})};
    auto syz = syzygy_module(ctx, 1, gens);
    REQUIRE(!syz.empty());
    for (const auto& s : syz) {
        auto c = s.to_polys();
        CHECK((c[0] * P(ctx, "x") + c[1] * P(ctx, "y")).is_zero());
    }
    // and (y, -x) lies in the computed span
    GBasis sgb = buchberger(ctx, 2, syz);
    CHECK(normal_form(MVec::from_polys({P(ctx, "y"), P(ctx, "-x")}), sgb).is_zero());
}

TEST_CASE("module groebner keeps unit-component pairs (regression)") {
    // the coprime-LT criterion is unsound for module pairs; this input lost
    // the generator (0, 1) when it was applied
    CtxPtr ctx = make_ctx({"x"});
    std::vector<MVec> gens = {
        MVec::from_polys({Poly::constant(ctx, 1), Poly::constant(ctx, -1)}),
        MVec::from_polys({Poly::constant(ctx, 1), Poly::zero(ctx)})};
    GBasis gb = buchberger(ctx, 2, gens);
    CHECK(normal_form(MVec::basis(ctx, 2, 1), gb).is_zero());
}

TEST_CASE("tracked basis expresses members exactly") {
    CtxPtr ctx = make_ctx({"x", "y"});
    std::vector<MVec> inputs = {MVec::from_polys({P(ctx, "x^2 + y")}),
                                MVec::from_polys({P(ctx, "y^2 - 1")})};
    TrackedGB t = buchberger_tracked(ctx, 1, inputs);
    Poly target = P(ctx, "y") * P(ctx, "x^2 + y") + P(ctx, "x") * P(ctx, "y^2 - 1");
    MVec rem;
    auto c = express(MVec::from_polys({target}), t, &rem);
    CHECK(rem.is_zero());
    Poly back = Poly::zero(ctx);
    for (std::size_t i = 0; i < inputs.size(); ++i)
        back = back + c[i] * inputs[i].component(0);
    CHECK(back == target);
}

TEST_CASE("normal_form_tracked is a division identity") {
    std::mt19937 rng(7);
    CtxPtr ctx = make_ctx({"x", "y"});
    for (int it = 0; it < 20; ++it) {
        GBasis gb = buchberger_polys(
            ctx, {th::random_poly(rng, ctx, 2), th::random_poly(rng, ctx, 2)});
        Poly v = th::random_poly(rng, ctx, 3);
        std::vector<Poly> cof;
        MVec r = normal_form_tracked(MVec::from_polys({v}), gb, cof);
        Poly back = r.component(0);
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            back = back + cof[i] * gb.gens[i].component(0);
        CHECK(back == v);
    }
}

TEST_CASE("randomized Buchberger audits (small batch)") {
    std::mt19937 rng(11);
    CtxPtr ctx = make_ctx({"x", "y", "z"});
    for (int it = 0; it < 40; ++it) {
        std::vector<Poly> gens;
        unsigned n = 1 + rng() % 3;
        for (unsigned i = 0; i < n; ++i) gens.push_back(th::random_poly(rng, ctx, 3));
        GBasis gb = buchberger_polys(ctx, gens);
        CHECK(is_groebner(gb));
        for (const auto& g : gens)
            CHECK(normal_form(g, gb).is_zero());
    }
}

TEST_CASE("memo cache returns equal bases") {
    CtxPtr ctx = make_ctx({"x", "y"});
    std::vector<Poly> gens = {P(ctx, "x^3 - y"), P(ctx, "x*y - 1")};
    GBasis a = buchberger_polys(ctx, gens);
    std::size_t sz = gb_cache_size();
    GBasis b = buchberger_polys(ctx, gens);
    CHECK(a == b);
    CHECK(gb_cache_size() == sz); // second request was served from the cache
}
