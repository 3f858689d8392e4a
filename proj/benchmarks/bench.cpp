#include <adicert/derived.hpp>

#include <benchmark/benchmark.h>

using namespace adicert;

namespace {

Poly P(const RingPtr& A, const std::string& s) {
    return A->reduce(parse_polynomial(s, A->ctx));
}

void BM_buchberger(benchmark::State& state) {
    CtxPtr ctx = make_ctx({"x", "y", "z"});
    std::vector<Poly> gens = {parse_polynomial("x^2 + y*z - 1", ctx),
                              parse_polynomial("y^2 + x*z - 1", ctx),
                              parse_polynomial("z^2 + x*y - 1", ctx)};
    for (auto _ : state) {
        gb_cache_clear();
        benchmark::DoNotOptimize(buchberger_polys(ctx, gens));
    }
}
BENCHMARK(BM_buchberger);

void BM_koszul_complex(benchmark::State& state) {
    CtxPtr ctx = make_ctx({"x", "y"});
    RingPtr A = make_quotient_ring(ctx, {parse_polynomial("x*y", ctx)});
    std::vector<Poly> seq = {P(A, "x"), P(A, "y")};
    unsigned j = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(koszul_complex(KoszulSpec::make(A, seq, j)));
}
BENCHMARK(BM_koszul_complex)->Arg(1)->Arg(2)->Arg(4);

void BM_koszul_cohomology(benchmark::State& state) {
    CtxPtr ctx = make_ctx({"x", "y"});
    RingPtr A = make_quotient_ring(ctx, {parse_polynomial("x*y", ctx)});
    std::vector<Poly> seq = {P(A, "x"), P(A, "y")};
    unsigned j = static_cast<unsigned>(state.range(0));
    FreeComplex K = koszul_complex(KoszulSpec::make(A, seq, j));
    for (auto _ : state) {
        gb_cache_clear();
        benchmark::DoNotOptimize(cohomology(K, -1));
    }
}
BENCHMARK(BM_koszul_cohomology)->Arg(1)->Arg(2)->Arg(3);

void BM_wpr_tower(benchmark::State& state) {
    CtxPtr ctx = make_ctx({"x", "y"});
    RingPtr A = make_quotient_ring(ctx, {parse_polynomial("x*y", ctx)});
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    unsigned J = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        gb_cache_clear();
        benchmark::DoNotOptimize(wpr_check(A, a, J));
    }
}
BENCHMARK(BM_wpr_tower)->Arg(2)->Arg(4);

void BM_completion_tower(benchmark::State& state) {
    CtxPtr ctx = make_ctx({"x"});
    RingPtr A = make_quotient_ring(ctx, {});
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule F = FpModule::free_module(A, 1);
    unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        gb_cache_clear();
        benchmark::DoNotOptimize(completion_tower(F, a, k));
    }
}
BENCHMARK(BM_completion_tower)->Arg(2)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
