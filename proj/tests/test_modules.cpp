#include <doctest.h>

#include "helpers.hpp"

using namespace adicert;
using th::P;

TEST_CASE("cokernel of x on Q[x] is Q[x]/(x)") {
    RingPtr A = th::QX();
    FpModule F = FpModule::free_module(A, 1);
    FpModule C = cokernel(ModuleMap::multiplication(F, P(A, "x")));
    CHECK(th::iso_fingerprint(C, FpModule::cyclic(A, {P(A, "x")})));
    CHECK(vector_space_dim(C) == std::uint64_t{1});
}

TEST_CASE("tensor of cyclic modules reduces") {
    RingPtr A = th::QX();
    FpModule M = FpModule::cyclic(A, {P(A, "x^2")});
    FpModule N = FpModule::cyclic(A, {P(A, "x^3")});
    CHECK(th::iso_fingerprint(tensor(M, N), M)); // min of the powers
    // unit object
    CHECK(th::iso_fingerprint(tensor(M, FpModule::free_module(A, 1)), M));
}

TEST_CASE("tensor_over_quotient gives the truncation levels") {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule F = FpModule::free_module(A, 1);
    CHECK(th::iso_fingerprint(tensor_over_quotient(F, a, 1),
                              FpModule::cyclic(A, {P(A, "x^2")})));
    CHECK(vector_space_dim(tensor_over_quotient(F, a, 3)) == std::uint64_t{4});
}

TEST_CASE("fitting ideals") {
    RingPtr A = th::QX();
    FpModule M = FpModule::cyclic(A, {P(A, "x")});
    CHECK(normal_form(P(A, "x"), fitting_ideal(M, 0)).is_zero());
    CHECK(ideal_is_unit(fitting_ideal(M, 1)));

    FpModule F = FpModule::free_module(A, 1);
    CHECK(ideal_is_zero(A, fitting_ideal(F, 0)));
    CHECK(ideal_is_unit(fitting_ideal(F, 1)));

    RingPtr B = th::QXY();
    FpModule D{B, 2, {{P(B, "x"), Poly::zero(B->ctx)},
                      {Poly::zero(B->ctx), P(B, "y")}}};
    GBasis f0 = fitting_ideal(D, 0);
    CHECK(normal_form(P(B, "x*y"), f0).is_zero());
    CHECK(!normal_form(P(B, "x"), f0).is_zero());
}

TEST_CASE("projectivity trichotomy") {
    RingPtr A = th::QX();
    CHECK(is_projective_const_rank(FpModule::free_module(A, 2)).verdict ==
          ProjVerdict::Yes);

    CtxPtr ctx = make_ctx({"x"});
    RingPtr B = make_quotient_ring(ctx, {P(ctx, "x^2")});
    CHECK(is_projective_const_rank(FpModule::cyclic(B, {P(B, "x")})).verdict ==
          ProjVerdict::No);

    RingPtr C = make_quotient_ring(ctx, {P(ctx, "x^2 - x")});
    CHECK(is_projective_const_rank(FpModule::cyclic(C, {P(C, "x")})).verdict ==
          ProjVerdict::Inconclusive);
}

TEST_CASE("kernel of multiplication by x on Q[x]/(x^2)") {
    RingPtr A = th::QX();
    FpModule M = FpModule::cyclic(A, {P(A, "x^2")});
    KernelResult K = kernel(ModuleMap::multiplication(M, P(A, "x")));
    CHECK(vector_space_dim(K.module) == std::uint64_t{1});
    // inclusion composed with multiplication is zero
    ModuleMap mul = ModuleMap::multiplication(M, P(A, "x"));
    CHECK(mul.compose_after(K.inclusion).is_zero_map());
}

TEST_CASE("tor of cyclic modules") {
    RingPtr A = th::QX();
    FpModule M = FpModule::cyclic(A, {P(A, "x")});
    CHECK(vector_space_dim(tor(M, M, 1)) == std::uint64_t{1});
    CHECK(tor(FpModule::free_module(A, 1), M, 1).is_zero_module());
}

TEST_CASE("free resolutions compose to zero") {
    RingPtr A = th::QXY();
    FpModule M = FpModule::cyclic(A, {P(A, "x"), P(A, "y")});
    auto res = free_resolution(M, 3);
    REQUIRE(res.size() >= 3);
    PolyMat prod = mat_mul(A, res[1], res[2]);
    for (const auto& row : prod)
        for (const auto& e : row) CHECK(A->is_zero(e));
}

TEST_CASE("inverse_of: identity yes, x no") {
    RingPtr A = th::QX();
    FpModule M = FpModule::cyclic(A, {P(A, "x^3")});
    CHECK(inverse_of(ModuleMap::identity(M)).has_value());
    CHECK(!inverse_of(ModuleMap::multiplication(M, P(A, "x"))).has_value());
    // unit scalar is invertible
    auto inv = inverse_of(ModuleMap::multiplication(M, Poly::constant(A->ctx, 2)));
    REQUIRE(inv.has_value());
}

TEST_CASE("min_generators over a field-like quotient") {
    CtxPtr ctx = make_ctx({"x"});
    RingPtr k = make_quotient_ring(ctx, {P(ctx, "x")}); // Q
    CHECK(k->looks_like_field());
    CHECK(min_generators(FpModule::free_module(k, 3)) == std::uint64_t{3});
}
