#include <doctest.h>

#include "helpers.hpp"

using namespace adicert;
using th::P;

TEST_CASE("wpr: principal and two-generator ideals in Q[x,y]/(xy)") {
    RingPtr A = th::QXY_xy();
    for (auto gens : {std::vector<std::string>{"x"},
                      std::vector<std::string>{"x", "y"}}) {
        std::vector<Poly> g;
        for (const auto& s : gens) g.push_back(P(A, s));
        IdealSpec a = IdealSpec::make(A, g);
        WprReport r = wpr_check(A, a, 4);
        CHECK(r.certified);
        for (const auto& [deg, cert] : r.per_degree) {
            CHECK(cert.verdict == Verdict::ProZero);
            CHECK(cert.replay(r.towers.at(deg)));
            for (const auto& [j0, j1] : cert.witnesses)
                CHECK(j1 - j0 <= 1); // witness offset <= 1 on these examples
        }
    }
}

TEST_CASE("wpr on a regular sequence is certified") {
    RingPtr A = th::QXY();
    IdealSpec a = IdealSpec::make(A, {P(A, "x"), P(A, "y")});
    CHECK(wpr_check(A, a, 3).certified);
}

TEST_CASE("non-WPR shadow stays inconclusive (honesty)") {
    // A = Q[t, x1, x2, x3]/(x_i t^i): the ann(t^j) chain keeps growing
    std::vector<std::string> vars = {"t", "x1", "x2", "x3"};
    CtxPtr ctx = make_ctx(vars);
    std::vector<Poly> rels;
    for (int i = 1; i <= 3; ++i)
        rels.push_back(P(ctx, "x" + std::to_string(i) + "*t^" + std::to_string(i)));
    RingPtr A = make_quotient_ring(ctx, rels);
    IdealSpec a = IdealSpec::make(A, {A->reduce(P(ctx, "t"))});
    WprReport r = wpr_check(A, a, 3);
    CHECK(!r.certified);
    const Certificate& c = r.per_degree.at(-1);
    CHECK(c.verdict == Verdict::Inconclusive); // never "no"
    // evidence: every composite out of j0 = 1 is nonzero
    const ModuleTower& T = r.towers.at(-1);
    for (unsigned j1 = 2; j1 <= 3; ++j1)
        CHECK(!T.composite(j1, 1).is_zero_map());
}

TEST_CASE("derived completion of a complete module") {
    RingPtr A = th::QXY();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule M = FpModule::cyclic(A, {P(A, "x^2")});
    DerivedValue dv = derived_completion(M, a, 4);
    CHECK(dv.all_certified());
    const DegreeValue& d0 = dv.degrees.at(0);
    CHECK(d0.cert.verdict == Verdict::Stabilized);
    CHECK(d0.cert.stable_from <= 2);
    REQUIRE(d0.value.has_value());
    CHECK(th::iso_fingerprint(*d0.value, M));
    const DegreeValue& dm1 = dv.degrees.at(-1);
    CHECK(dm1.cert.verdict == Verdict::ProZero);
}

TEST_CASE("derived completion of a torsion quotient stabilizes at its exponent") {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    for (unsigned m = 1; m <= 3; ++m) {
        FpModule M = FpModule::cyclic(A, {P(A, "x").pow(m)});
        DerivedValue dv = derived_completion(M, a, 4);
        CHECK(dv.all_certified());
        const DegreeValue& d0 = dv.degrees.at(0);
        CHECK(d0.cert.verdict == Verdict::Stabilized);
        CHECK(d0.cert.stable_from <= m);
        CHECK(th::iso_fingerprint(*d0.value, M));
    }
}

TEST_CASE("derived torsion recognition") {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FreeComplex K = koszul_complex(KoszulSpec::make(A, {P(A, "x")}, 1));
    CHECK(is_derived_torsion(K, a, 4).verdict == TriVerdict::Yes);

    FreeComplex F = FreeComplex::concentrated(A, 1, 0);
    TorsionVerdict free_case = is_derived_torsion(F, a, 4);
    CHECK(free_case.verdict == TriVerdict::No);
    CHECK(free_case.witness_degree == 0);

    CHECK(is_derived_torsion(cone(ChainMap::identity(K)), a, 4).verdict ==
          TriVerdict::Yes); // acyclic: vacuously torsion
}

TEST_CASE("derived nakayama") {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FreeComplex K = koszul_complex(KoszulSpec::make(A, {P(A, "x")}, 1));
    NakayamaCheck yes = derived_nakayama_check(K, a, 1);
    CHECK(yes.verdict == TriVerdict::Yes);
    CHECK(yes.kunneth_ok);

    NakayamaCheck no = derived_nakayama_check(FreeComplex::concentrated(A, 2, 0), a, 1);
    CHECK(no.verdict == TriVerdict::No);
    CHECK(no.g0 == 2);
    CHECK(no.kunneth_ok);
}

TEST_CASE("compare-completion refuses radical-incompatible inputs") {
    RingPtr A = th::QXY();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    CompareReport r = completion_koszul_compare(A, a, {P(A, "y")}, 3);
    CHECK(r.refused);
    CHECK(!r.witness.is_zero());
}

TEST_CASE("flat base change preserves witnesses (small case)") {
    RingPtr A = th::QXY_xy();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    BaseChangeReport r = flat_base_change_wpr(A, a, {"z"}, 4);
    CHECK(r.base.certified);
    CHECK(r.extended.certified);
    CHECK(r.offsets_preserved);
}
