// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is recomputed from scratch; no cached fixtures.
#include "les.hpp"

#include <adicert/session.hpp>

#include <iostream>

using namespace adicert;
using th::P;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what
              << std::endl;
    if (!ok) ++failures;
}

bool c1_koszul() {
    RingPtr A = th::QXY();
    std::vector<Poly> xy = {P(A, "x"), P(A, "y")};
    for (unsigned j = 1; j <= 4; ++j) {
        FreeComplex K = koszul_complex(KoszulSpec::make(A, xy, j));
        if (!cohomology(K, -1).is_zero_module()) return false;
        if (!cohomology(K, -2).is_zero_module()) return false;
        auto dim = vector_space_dim(cohomology(K, 0));
        if (dim != std::uint64_t{j} * j) return false; // A/(x^j, y^j)
        // exterior model = iterated two-term tensor, matrix for matrix
        FreeComplex T = tensor_complexes(
            koszul_complex(KoszulSpec::make(A, {xy[0]}, j)),
            koszul_complex(KoszulSpec::make(A, {xy[1]}, j)));
        if (K.lo != T.lo || K.hi != T.hi) return false;
        for (int n = K.lo; n <= K.hi; ++n)
            if (K.rank(n) != T.rank(n) || K.d(n) != T.d(n)) return false;
    }
    // j = 1: H^0 is the residue field Q
    FreeComplex K1 = koszul_complex(KoszulSpec::make(A, xy, 1));
    return vector_space_dim(cohomology(K1, 0)) == std::uint64_t{1};
}

bool c2_wpr_positive() {
    RingPtr A = th::QXY_xy();
    for (auto gens : {std::vector<Poly>{P(A, "x")},
                      std::vector<Poly>{P(A, "x"), P(A, "y")}}) {
        WprReport r = wpr_check(A, IdealSpec::make(A, gens), 4);
        if (!r.certified) return false;
        for (const auto& [deg, cert] : r.per_degree) {
            if (cert.verdict != Verdict::ProZero) return false;
            if (!cert.replay(r.towers.at(deg))) return false;
            for (const auto& [j0, j1] : cert.witnesses)
                if (j1 - j0 > 1) return false;
        }
    }
    return true;
}

bool c3_non_wpr_shadow() {
    // A_5 = Q[t, x1..x5]/(x_i t^i)
    std::vector<std::string> vars = {"t"};
    for (int i = 1; i <= 5; ++i) vars.push_back("x" + std::to_string(i));
    CtxPtr ctx = make_ctx(vars);
    std::vector<Poly> rels;
    for (int i = 1; i <= 5; ++i)
        rels.push_back(P(ctx, "x" + std::to_string(i) + "*t^" + std::to_string(i)));
    RingPtr A = make_quotient_ring(ctx, rels);
    IdealSpec a = IdealSpec::make(A, {A->reduce(P(ctx, "t"))});
    WprReport r = wpr_check(A, a, 5);
    if (r.certified) return false;
    const Certificate& c = r.per_degree.at(-1);
    if (c.verdict != Verdict::Inconclusive) return false; // in particular not "no"
    const ModuleTower& T = r.towers.at(-1);
    for (unsigned j1 = 2; j1 <= 5; ++j1)
        if (T.composite(j1, 1).is_zero_map()) return false;
    return true;
}

bool c4_nakayama() {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule F = FpModule::free_module(A, 1);
    ModuleMap phi = ModuleMap::multiplication(F, P(A, "1 - x"));
    for (unsigned k = 1; k <= 6; ++k) {
        NakayamaLift nl = nakayama_lift(phi, a, {Poly::constant(A->ctx, 1)}, k);
        if (!nl.ok) return false;
        Poly expect = Poly::zero(A->ctx);
        for (unsigned i = 0; i <= k; ++i) expect = expect + P(A, "x").pow(i);
        if (nl.lift[0] != expect) return false;
        Poly resid = P(A, "1 - x") * nl.lift[0] - Poly::constant(A->ctx, 1);
        GBasis pw = buchberger_polys(A->ctx, {P(A, "x").pow(k + 1)});
        if (!normal_form(resid, pw).is_zero()) return false;
    }
    NakayamaLift refuse = nakayama_lift(ModuleMap::multiplication(F, P(A, "x")),
                                        a, {Poly::constant(A->ctx, 1)}, 2);
    return !refuse.ok && !refuse.coker_witness.empty();
}

bool c5_flatness() {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    if (!adically_flat_check(FpModule::free_module(A, 1), a, 3, 2).consistent)
        return false;
    if (!adically_flat_check(FpModule::free_module(A, 2), a, 3, 2).consistent)
        return false;
    FlatReport bad = adically_flat_check(FpModule::cyclic(A, {P(A, "x")}), a, 3, 2);
    if (bad.consistent) return false;
    for (const auto& v : bad.violations)
        if (v.level == 0 && v.tor_degree == 1) return true;
    return false;
}

bool c6_derived_completion() {
    RingPtr A = th::QXY();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule M = FpModule::cyclic(A, {P(A, "x^2")});
    DerivedValue dv = derived_completion(M, a, 4);
    if (!dv.all_certified()) return false;
    const DegreeValue& d0 = dv.degrees.at(0);
    if (d0.cert.verdict != Verdict::Stabilized || d0.cert.stable_from > 2)
        return false;
    if (!d0.value || !th::iso_fingerprint(*d0.value, M)) return false;
    // degree -1 is pro-zero; the true minimal offset here is 2 (x^2 kills M
    // while x does not kill ann_M(x^2) = M)
    const DegreeValue& dm1 = dv.degrees.at(-1);
    if (dm1.cert.verdict != Verdict::ProZero) return false;
    unsigned max_off = 0;
    for (const auto& [j0, j1] : dm1.cert.witnesses)
        max_off = std::max(max_off, j1 - j0);
    if (max_off > 2) return false;

    RingPtr B = th::QX();
    IdealSpec b = IdealSpec::make(B, {P(B, "x")});
    for (unsigned m = 1; m <= 3; ++m) {
        FpModule N = FpModule::cyclic(B, {P(B, "x").pow(m)});
        DerivedValue dt = derived_completion(N, b, 4);
        const DegreeValue& e0 = dt.degrees.at(0);
        if (e0.cert.verdict != Verdict::Stabilized) return false;
        if (e0.cert.stable_from != m) return false;
        if (!e0.value || !th::iso_fingerprint(*e0.value, N)) return false;
    }
    return true;
}

bool c7_derived_torsion() {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FreeComplex K = koszul_complex(KoszulSpec::make(A, {P(A, "x")}, 1));
    if (is_derived_torsion(K, a, 4).verdict != TriVerdict::Yes) return false;
    TorsionVerdict fre = is_derived_torsion(FreeComplex::concentrated(A, 1, 0), a, 4);
    return fre.verdict == TriVerdict::No; // certified Gamma = 0 != M
}

// certified and the degreewise value is zero (pro-zero, or stabilized to 0)
bool certified_zero(const DegreeValue& dv) {
    if (dv.cert.verdict == Verdict::ProZero) return true;
    return dv.cert.verdict == Verdict::Stabilized && dv.value &&
           dv.value->is_zero_module();
}

bool c8_mgm() {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    FpModule M = FpModule::cyclic(A, {P(A, "x^2")});
    DerivedValue dc = derived_completion(M, a, 4);
    if (!dc.all_certified()) return false;
    const DegreeValue& d0 = dc.degrees.at(0);
    if (d0.cert.verdict != Verdict::Stabilized || !d0.value) return false;
    for (const auto& [deg, dv] : dc.degrees)
        if (deg != 0 && !certified_zero(dv)) return false;
    DerivedValue dt = derived_torsion(*d0.value, a, 4);
    if (!dt.all_certified()) return false;
    const DegreeValue& t0 = dt.degrees.at(0);
    if (t0.cert.verdict != Verdict::Stabilized || !t0.value) return false;
    if (!th::iso_fingerprint(*t0.value, M)) return false;
    for (const auto& [deg, dv] : dt.degrees)
        if (deg != 0 && !certified_zero(dv)) return false;
    return true;
}

bool c9_compare() {
    RingPtr A = th::QXY_xy();
    IdealSpec a = IdealSpec::make(A, {P(A, "x"), P(A, "y")});
    std::vector<Poly> b = {P(A, "x^2"), P(A, "y^2")};
    CompareReport r = completion_koszul_compare(A, a, b, 4);
    if (r.refused || !r.certified) return false;
    // the comparison is a pro-isomorphism: kernels vanish from some level,
    // cokernel towers are pro-zero (literal levelwise isomorphism is false:
    // every truncation carries extra negative-degree classes)
    for (const auto& [deg, c] : r.coker_certs)
        if (c.verdict != Verdict::ProZero) return false;
    // quotient match from the first level with a^{k+1} inside (b)
    return r.quotient_match_ok;
}

bool c10_derived_nakayama() {
    RingPtr A = th::QX();
    IdealSpec a = IdealSpec::make(A, {P(A, "x")});
    NakayamaCheck yes =
        derived_nakayama_check(koszul_complex(KoszulSpec::make(A, {P(A, "x")}, 1)), a, 1);
    if (yes.verdict != TriVerdict::Yes || !yes.kunneth_ok) return false;
    NakayamaCheck no =
        derived_nakayama_check(FreeComplex::concentrated(A, 2, 0), a, 1);
    return no.verdict == TriVerdict::No && no.kunneth_ok;
}

bool c11_base_change() {
    RingPtr A = th::QXY_xy();
    for (auto gens : {std::vector<Poly>{P(A, "x")},
                      std::vector<Poly>{P(A, "x"), P(A, "y")}}) {
        BaseChangeReport r =
            flat_base_change_wpr(A, IdealSpec::make(A, gens), {"z"}, 4);
        if (!r.base.certified || !r.extended.certified || !r.offsets_preserved)
            return false;
    }
    return true;
}

bool c12_engine() {
    // 200 randomized Buchberger audits
    std::mt19937 rng(2026);
    CtxPtr ctx = make_ctx({"x", "y", "z"});
    for (int it = 0; it < 200; ++it) {
        std::vector<Poly> gens;
        unsigned n = 1 + rng() % 3;
        for (unsigned i = 0; i < n; ++i)
            gens.push_back(th::random_poly(rng, ctx, 3, 3));
        GBasis gb = buchberger_polys(ctx, gens);
        if (!is_groebner(gb)) return false;
        for (const auto& g : gens)
            if (!normal_form(g, gb).is_zero()) return false;
    }

    // 100 randomized cone long-exact-sequence checks
    std::mt19937 rng2(7);
    RingPtr A = th::QXY();
    for (int it = 0; it < 100; ++it) {
        Poly f = th::random_poly(rng2, A->ctx, 2, 2);
        if (f.is_zero()) f = P(A, "x");
        FreeComplex C = koszul_complex(KoszulSpec::make(A, {A->reduce(f)}, 1));
        if (it % 3 == 0) {
            Poly g = th::random_poly(rng2, A->ctx, 2, 2);
            if (g.is_zero()) g = P(A, "y");
            C = tensor_complexes(
                C, koszul_complex(KoszulSpec::make(A, {A->reduce(g)}, 1)));
        }
        Poly s = th::random_poly(rng2, A->ctx, 1, 2);
        if (!th::cone_les_ok(th::scalar_map(C, A->reduce(s)))) return false;
    }

    // determinism of session runs
    std::string script = "ring A = Q[x,y] / (x*y)\nideal a = (x) in A\n"
                         "module M = A/(x^2)\nwpr a=a J=3\ntorsion M=M a=a bound=3\n";
    Report r1 = run_session_text(script);
    Report r2 = run_session_text(script);
    return strip_timings(r1.json).dump() == strip_timings(r2.json).dump() &&
           r1.exit_code == r2.exit_code;
}

} // namespace

int main() {
    report(1, "Koszul correctness (cohomology + exterior/tensor match)", c1_koszul());
    report(2, "WPR positive certification with offset <= 1", c2_wpr_positive());
    report(3, "non-WPR shadow stays inconclusive, never \"no\"", c3_non_wpr_shadow());
    report(4, "Complete Nakayama lifting and refusal", c4_nakayama());
    report(5, "adic flatness: free passes, torsion fails with Tor_1 witness",
           c5_flatness());
    report(6, "derived completion recognizes complete modules (offset <= 2)",
           c6_derived_completion());
    report(7, "derived torsion recognition", c7_derived_torsion());
    report(8, "MGM round-trip on Q[x]/(x^2)", c8_mgm());
    report(9, "completion preserves WPR (pro-isomorphism comparison)", c9_compare());
    report(10, "derived Nakayama generator bound", c10_derived_nakayama());
    report(11, "flat base change preserves witness offsets", c11_base_change());
    report(12, "engine properties: GB audits, cone LES, determinism", c12_engine());
    return failures == 0 ? 0 : 1;
}
