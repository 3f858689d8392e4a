#include "adicert/derived.hpp"

#include <algorithm>

namespace adicert {

ModuleTower koszul_cohomology_tower(const RingPtr& A, const IdealSpec& a, int i,
                                    unsigned J) {
    if (J < 1) throw DomainError("tower bound must be >= 1");
    int p = static_cast<int>(a.size());
    if (i < -p || i > 0) throw DomainError("degree outside the Koszul window");
    ComplexTower T;
    for (unsigned j = 1; j <= J; ++j)
        T.levels.push_back(koszul_complex(KoszulSpec::make(A, a.gens, j)));
    for (unsigned j = 1; j < J; ++j)
        T.transitions.push_back(koszul_transition(A, a.gens, j + 1, j));
    return cohomology_tower(T, i);
}

WprReport wpr_check(const RingPtr& A, const IdealSpec& a, unsigned J) {
    if (J < 2) throw DomainError("wpr_check needs J >= 2");
    WprReport rep;
    rep.a = a;
    rep.J = J;
    int p = static_cast<int>(a.size());
    bool all = true;
    for (int i = -p; i <= -1; ++i) {
        ModuleTower T = koszul_cohomology_tower(A, a, i, J);
        Certificate c = is_pro_zero_up_to(T, J);
        all = all && c.verdict == Verdict::ProZero;
        rep.per_degree[i] = std::move(c);
        rep.towers[i] = std::move(T);
    }
    rep.certified = all;
    return rep;
}

bool DerivedValue::all_certified() const {
    for (const auto& [i, dv] : degrees)
        if (dv.cert.verdict != Verdict::ProZero &&
            dv.cert.verdict != Verdict::Stabilized)
            return false;
    return true;
}

static DegreeValue certify_degree(ModuleTower T, unsigned J) {
    DegreeValue dv;
    Certificate cs = stabilization(T, J);
    if (cs.verdict == Verdict::Stabilized) {
        dv.value = limit_under_certificate(T, cs);
        dv.cert = std::move(cs);
    } else {
        Certificate cz = is_pro_zero_up_to(T, J);
        if (cz.verdict == Verdict::ProZero) {
            dv.value = limit_under_certificate(T, cz);
            dv.cert = std::move(cz);
        } else {
            dv.cert = std::move(cz);
        }
    }
    dv.tower = std::move(T);
    return dv;
}

DerivedValue derived_completion(const FpModule& M, const IdealSpec& a, unsigned J) {
    if (J < 2) throw DomainError("derived_completion needs J >= 2");
    if (!same_ring(M.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    const RingPtr& A = M.ring;
    int p = static_cast<int>(a.size());

    std::vector<ModuleComplex> lvls;
    for (unsigned j = 1; j <= J; ++j)
        lvls.push_back(
            tensor_with_module(koszul_complex(KoszulSpec::make(A, a.gens, j)), M));
    std::vector<ChainMap> trans;
    for (unsigned j = 1; j < J; ++j)
        trans.push_back(koszul_transition(A, a.gens, j + 1, j));

    DerivedValue out;
    out.kind = SystemKind::Inverse;
    for (int i = -p; i <= 0; ++i) {
        ModuleTower T;
        T.kind = SystemKind::Inverse;
        for (unsigned j = 0; j < J; ++j)
            T.levels.push_back(mc_cohomology(lvls[j], i).mod);
        for (unsigned j = 0; j + 1 < J; ++j)
            T.transitions.push_back(
                mc_induced_map(trans[j].comp, lvls[j + 1], lvls[j], i));
        out.degrees[i] = certify_degree(std::move(T), J);
    }
    return out;
}

DerivedValue derived_torsion(const FpModule& M, const IdealSpec& a, unsigned J) {
    if (J < 2) throw DomainError("derived_torsion needs J >= 2");
    if (!same_ring(M.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    const RingPtr& A = M.ring;
    int p = static_cast<int>(a.size());

    std::vector<ModuleComplex> lvls;
    for (unsigned j = 1; j <= J; ++j)
        lvls.push_back(hom_complex(koszul_complex(KoszulSpec::make(A, a.gens, j)), M));

    DerivedValue out;
    out.kind = SystemKind::Direct;
    for (int i = 0; i <= p; ++i) {
        ModuleTower T;
        T.kind = SystemKind::Direct;
        for (unsigned j = 0; j < J; ++j)
            T.levels.push_back(mc_cohomology(lvls[j], i).mod);
        for (unsigned j = 0; j + 1 < J; ++j) {
            // Hom(K(a^{j+1}), M) <- covariant in the contravariant slot:
            // the transition K^{j+2} -> K^{j+1} induces level j+1 -> j+2
            // in the direct system, with transposed shapes per degree
            ChainMap t = koszul_transition(A, a.gens, j + 2, j + 1);
            std::map<int, PolyMat> shapes;
            for (int n = 0; n <= p; ++n) {
                PolyMat s = t.at(-n);
                shapes[n] = mat_transpose(A, s, static_cast<std::uint32_t>(s.size()),
                                          s.empty() ? 0
                                                    : static_cast<std::uint32_t>(
                                                          s[0].size()));
            }
            T.transitions.push_back(mc_induced_map(shapes, lvls[j], lvls[j + 1], i));
        }
        out.degrees[i] = certify_degree(std::move(T), J);
    }
    return out;
}

std::string tri_name(TriVerdict v) {
    switch (v) {
    case TriVerdict::Yes: return "yes";
    case TriVerdict::No: return "no";
    case TriVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

TorsionVerdict is_derived_torsion(const FreeComplex& C, const IdealSpec& a,
                                  unsigned bound) {
    TorsionVerdict out;
    bool all_stable = true;
    for (int i = C.lo; i <= C.hi; ++i) {
        FpModule H = cohomology(C, i);
        if (H.is_zero_module()) continue;
        TorsionResult tr = torsion_submodule(H, a, bound);
        if (tr.cert.verdict != Verdict::Stabilized) {
            all_stable = false;
            continue;
        }
        if (!tr.is_all_of_m) {
            out.verdict = TriVerdict::No;
            out.witness_degree = i;
            return out;
        }
    }
    out.verdict = all_stable ? TriVerdict::Yes : TriVerdict::Inconclusive;
    return out;
}

// does f^m reduce into the ideal (gens) of A for some m <= bound?
static bool power_in_ideal(const RingPtr& A, const Poly& f,
                           const std::vector<Poly>& gens, unsigned bound,
                           Poly* bad_power) {
    RingPtr R = extend_relations(A, gens);
    Poly p = Poly::constant(A->ctx, 1);
    for (unsigned m = 1; m <= bound; ++m) {
        p = A->reduce(p * f);
        if (R->is_zero(p)) return true;
    }
    if (bad_power) *bad_power = p;
    return false;
}

CompareReport completion_koszul_compare(const RingPtr& A, const IdealSpec& a,
                                        const std::vector<Poly>& b, unsigned kmax) {
    if (kmax < 1) throw DomainError("compare needs kmax >= 1");
    if (b.empty()) throw DomainError("comparison sequence must be nonempty");
    CompareReport rep;

    // radical compatibility within exponent kmax
    for (const auto& f : b) {
        Poly bad;
        if (!power_in_ideal(A, f, a.gens, kmax, &bad)) {
            rep.refused = true;
            rep.witness = bad;
            rep.message = "no power of " + f.str() + " up to " + std::to_string(kmax) +
                          " reduces into the ideal";
            return rep;
        }
    }
    for (const auto& f : a.gens) {
        Poly bad;
        if (!power_in_ideal(A, f, b, kmax, &bad)) {
            rep.refused = true;
            rep.witness = bad;
            rep.message = "no power of " + f.str() + " up to " + std::to_string(kmax) +
                          " reduces into the comparison sequence's ideal";
            return rep;
        }
    }

    FreeComplex Kb = koszul_complex(KoszulSpec::make(A, b, 1));
    ModuleComplex base = tensor_with_module(Kb, FpModule::free_module(A, 1));
    int q = static_cast<int>(b.size());

    std::vector<ModuleComplex> lvls;
    for (unsigned k = 0; k <= kmax; ++k)
        lvls.push_back(tensor_with_module(
            Kb, FpModule::cyclic(A, power_products(a, k + 1))));

    bool all_degrees = true;
    for (int i = -q; i <= 0; ++i) {
        // comparison maps f_k: H^i(K(A;b)) -> H^i(K(A_k;b)); they commute
        // with the truncation tower, so kernels shrink and the transition
        // matrices descend to the cokernels
        std::vector<ModuleMap> cmp;
        std::map<int, PolyMat> big;
        big[i] = mat_identity(A, Kb.rank(i));
        for (unsigned k = 0; k <= kmax; ++k)
            cmp.push_back(mc_induced_map_expanded(big, base, lvls[k], i));

        std::optional<unsigned> inj_from;
        for (unsigned k = 0; k <= kmax; ++k) {
            if (kernel(cmp[k]).module.is_zero_module()) {
                if (!inj_from) inj_from = k;
            } else {
                inj_from.reset();
            }
        }

        ModuleTower coker_tower;
        coker_tower.kind = SystemKind::Inverse;
        for (unsigned k = 0; k <= kmax; ++k)
            coker_tower.levels.push_back(cokernel(cmp[k]));
        std::map<int, PolyMat> idshape;
        idshape[i] = mat_identity(A, Kb.rank(i));
        for (unsigned k = 0; k < kmax; ++k) {
            ModuleMap t = mc_induced_map(idshape, lvls[k + 1], lvls[k], i);
            coker_tower.transitions.push_back(ModuleMap::make_unchecked(
                coker_tower.levels[k + 1], coker_tower.levels[k], t.mat));
        }
        Certificate cz = is_pro_zero_up_to(coker_tower, kmax + 1);

        if (inj_from) rep.injective_from[i] = *inj_from;
        rep.coker_certs[i] = cz;
        if (!inj_from || cz.verdict != Verdict::ProZero) all_degrees = false;
    }

    // A/b vs A_k/b from the first k with a^{k+1} inside (b)
    RingPtr Rb = extend_relations(A, b);
    for (unsigned k = 0; k <= kmax; ++k) {
        bool inside = true;
        for (const auto& p : power_products(a, k + 1))
            if (!Rb->is_zero(p)) {
                inside = false;
                break;
            }
        if (inside) {
            rep.quotient_match_level = k;
            RingPtr Rbk = extend_relations(truncate_ring(A, a, k), b);
            rep.quotient_match_ok = Rb->rel == Rbk->rel;
            break;
        }
    }

    rep.certified = all_degrees && rep.quotient_match_ok;
    if (!rep.certified && rep.message.empty())
        rep.message = all_degrees ? "quotient comparison failed"
                                  : "comparison maps did not stabilize to isomorphisms";
    return rep;
}

NakayamaCheck derived_nakayama_check(const FreeComplex& P, const IdealSpec& a,
                                     unsigned r) {
    NakayamaCheck out;
    const RingPtr& A = P.ring;
    if (!same_ring(A, a.ring))
        throw DomainError("ideal must live in the complex's ring");
    RingPtr A0 = truncate_ring(A, a, 0);
    if (!A0->looks_like_field()) {
        out.refused = true;
        out.message = "A/a is not recognizably a field; minimal generator counts "
                      "are only decided over fields";
        return out;
    }

    std::optional<int> top;
    for (int i = P.hi; i >= P.lo; --i)
        if (!cohomology(P, i).is_zero_module()) {
            top = i;
            break;
        }
    FpModule A0mod = FpModule::cyclic(A, a.gens);
    if (!top) {
        // acyclic input: the zero-generator case
        for (int i = P.lo; i <= P.hi; ++i)
            if (!mc_cohomology(tensor_with_module(P, A0mod), i).mod.is_zero_module()) {
                out.refused = true;
                out.message = "acyclic complex with nonzero level-0 cohomology";
                return out;
            }
        out.g0 = 0;
        out.g0_cross = 0;
        out.kunneth_ok = true;
        out.verdict = TriVerdict::Yes;
        return out;
    }
    out.top_degree = *top;

    FpModule h0P = mc_cohomology(tensor_with_module(P, A0mod), *top).mod;
    auto g0 = min_generators(change_ring(h0P, A0));
    FpModule cross = tensor(cohomology(P, *top), A0mod);
    auto gc = min_generators(change_ring(cross, A0));
    if (!g0 || !gc) {
        out.refused = true;
        out.message = "generator count undecided";
        return out;
    }
    out.g0 = *g0;
    out.g0_cross = *gc;
    out.kunneth_ok = *g0 == *gc;
    if (out.g0 > r) {
        out.verdict = TriVerdict::No;
        out.message = "top cohomology needs " + std::to_string(out.g0) +
                      " generators, more than " + std::to_string(r);
    } else if (out.kunneth_ok) {
        out.verdict = TriVerdict::Yes;
    } else {
        out.verdict = TriVerdict::Inconclusive;
        out.message = "generator counts disagree across the level-0 reduction";
    }
    return out;
}

BaseChangeReport flat_base_change_wpr(const RingPtr& A, const IdealSpec& a,
                                      const std::vector<std::string>& extra_vars,
                                      unsigned J) {
    if (J < 2) throw DomainError("flat_base_change_wpr needs J >= 2");
    if (extra_vars.empty()) throw DomainError("need at least one new variable");
    std::vector<std::string> vars = A->ctx->vars;
    for (const auto& v : extra_vars) {
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
            throw DomainError("variable '" + v + "' is not fresh");
        vars.push_back(v);
    }
    CtxPtr bctx = make_ctx(vars, A->ctx->p, A->ctx->order.kind);
    std::vector<std::uint32_t> vmap(A->ctx->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i)
        vmap[i] = static_cast<std::uint32_t>(i);

    std::vector<Poly> brels;
    for (const auto& f : A->rel_gens()) brels.push_back(extend_to_ctx(f, bctx, vmap));
    RingPtr B = make_quotient_ring(bctx, brels);
    std::vector<Poly> bgens;
    for (const auto& f : a.gens) bgens.push_back(extend_to_ctx(f, bctx, vmap));
    IdealSpec aB = IdealSpec::make(B, bgens);

    BaseChangeReport rep;
    rep.base = wpr_check(A, a, J);
    rep.extended = wpr_check(B, aB, J);

    bool ok = true;
    for (const auto& [i, cert] : rep.base.per_degree) {
        if (cert.verdict != Verdict::ProZero) continue;
        const ModuleTower& TB = rep.extended.towers.at(i);
        for (const auto& [j0, j1] : cert.witnesses)
            if (!TB.composite(j1, j0).is_zero_map()) ok = false;
    }
    rep.offsets_preserved = ok;
    return rep;
}

} // namespace adicert
