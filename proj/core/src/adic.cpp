#include "adicert/adic.hpp"

namespace adicert {

const FpModule& CompletionTower::level_mod(unsigned k) const {
    return tower.level(k + 1);
}

CompletionTower completion_tower(const FpModule& M, const IdealSpec& a, unsigned kmax) {
    if (kmax < 1) throw DomainError("completion tower needs kmax >= 1");
    if (!same_ring(M.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    CompletionTower out;
    out.M = M;
    out.a = a;
    out.kmax = kmax;
    out.tower.kind = SystemKind::Inverse;
    for (unsigned k = 0; k <= kmax; ++k)
        out.tower.levels.push_back(tensor_over_quotient(M, a, k));
    for (unsigned k = 0; k < kmax; ++k) {
        // canonical surjection M_{k+1} -> M_k: the identity on generators
        out.tower.transitions.push_back(ModuleMap::make(
            out.tower.levels[k + 1], out.tower.levels[k],
            mat_identity(M.ring, M.rank)));
    }
    return out;
}

// generators of ann_M(a^i) inside A^{M.rank}
static std::vector<PolyRow> annihilator_of_power(const FpModule& M, const IdealSpec& a,
                                                 unsigned i) {
    std::vector<Poly> pows = power_products(a, i);
    FpModule tgt = direct_sum_power(M, static_cast<std::uint32_t>(pows.size()));
    PolyMat mat = mat_zero(M.ring, tgt.rank, M.rank);
    for (std::size_t t = 0; t < pows.size(); ++t)
        for (std::uint32_t r = 0; r < M.rank; ++r)
            mat[t * M.rank + r][r] = pows[t];
    ModuleMap f = ModuleMap::make_unchecked(M, tgt, std::move(mat));
    return kernel(f).gens;
}

TorsionResult torsion_submodule(const FpModule& M, const IdealSpec& a, unsigned bound) {
    if (bound < 1) throw DomainError("torsion bound must be >= 1");
    if (!same_ring(M.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    TorsionResult out;
    out.cert.bound = bound;
    std::vector<PolyRow> prev = annihilator_of_power(M, a, 1);
    unsigned stable_at = 0;
    for (unsigned i = 1; i <= bound; ++i) {
        std::vector<PolyRow> next = annihilator_of_power(M, a, i + 1);
        if (same_span(M.ring, M.rank, prev, next, M.rels)) {
            stable_at = i; // the ascending chain is constant from here on
            break;
        }
        prev = std::move(next);
    }
    out.gens = prev;
    out.module = make_subquotient(M.ring, M.rank, out.gens, M.rels).mod;
    if (stable_at > 0) {
        out.cert.verdict = Verdict::Stabilized;
        out.cert.stable_from = stable_at;
        std::vector<PolyRow> units;
        for (std::uint32_t r = 0; r < M.rank; ++r) {
            PolyRow e(M.rank, Poly::zero(M.ring->ctx));
            e[r] = Poly::constant(M.ring->ctx, 1);
            units.push_back(std::move(e));
        }
        out.is_all_of_m = same_span(M.ring, M.rank, out.gens, units, M.rels);
    } else {
        out.cert.verdict = Verdict::Inconclusive;
        out.cert.blocking_level = bound;
    }
    return out;
}

static std::vector<PolyRow> scaled_basis_rows(const RingPtr& ring, std::uint32_t rank,
                                              const std::vector<Poly>& scalars) {
    std::vector<PolyRow> rows;
    for (const auto& f : scalars)
        for (std::uint32_t r = 0; r < rank; ++r) {
            PolyRow v(rank, Poly::zero(ring->ctx));
            v[r] = f;
            rows.push_back(std::move(v));
        }
    return rows;
}

static TrackedGB tracked_span(const RingPtr& ring, std::uint32_t rank,
                              const std::vector<PolyRow>& inputs) {
    std::vector<MVec> mv;
    for (const auto& v : inputs) mv.push_back(MVec::from_polys(v));
    return buchberger_tracked(ring->ctx, rank, mv);
}

NakayamaLift nakayama_lift(const ModuleMap& phi, const IdealSpec& a,
                           const PolyRow& n, unsigned k) {
    const RingPtr& A = phi.src.ring;
    if (!same_ring(A, a.ring)) throw DomainError("ideal must live in the map's ring");
    if (n.size() != phi.tgt.rank) throw DomainError("target element rank mismatch");
    NakayamaLift out;

    // surjectivity of phi_0 over A_0 = A/a
    RingPtr A0 = truncate_ring(A, a, 0);
    FpModule src0 = change_ring(phi.src, A0);
    FpModule tgt0 = change_ring(phi.tgt, A0);
    FpModule coker0 = cokernel(ModuleMap::make_unchecked(src0, tgt0, phi.mat));
    if (!coker0.is_zero_module()) {
        for (std::uint32_t r = 0; r < coker0.rank; ++r) {
            PolyRow e(coker0.rank, Poly::zero(A0->ctx));
            e[r] = Poly::constant(A0->ctx, 1);
            if (!coker0.element_is_zero(e)) {
                out.coker_witness = e;
                break;
            }
        }
        out.message = "level-0 reduction of the map is not surjective";
        return out;
    }

    std::uint32_t tr = phi.tgt.rank, sr = phi.src.rank;
    // level-0 lifts: u_s with phi(u_s) = e_s modulo a*(tgt) + relations
    std::vector<PolyRow> base;
    for (std::uint32_t j = 0; j < sr; ++j) {
        PolyRow col(tr, Poly::zero(A->ctx));
        for (std::uint32_t i = 0; i < tr; ++i) col[i] = phi.mat[i][j];
        base.push_back(std::move(col));
    }
    std::size_t nmap = base.size();
    auto extra0 = scaled_basis_rows(A, tr, a.gens);
    base.insert(base.end(), extra0.begin(), extra0.end());
    base.insert(base.end(), phi.tgt.rels.begin(), phi.tgt.rels.end());
    auto ringrows = scaled_basis_rows(A, tr, A->rel_gens());
    base.insert(base.end(), ringrows.begin(), ringrows.end());
    TrackedGB lift_gb = tracked_span(A, tr, base);

    std::vector<PolyRow> u;
    for (std::uint32_t s = 0; s < tr; ++s) {
        MVec rem = MVec::zero(A->ctx, tr);
        auto cof = express(MVec::basis(A->ctx, tr, s), lift_gb, &rem);
        if (!rem.is_zero()) {
            out.message = "internal: basis vector escaped the level-0 span";
            return out;
        }
        PolyRow us(cof.begin(), cof.begin() + nmap);
        for (auto& f : us) f = A->reduce(f);
        u.push_back(std::move(us));
    }

    PolyRow r = n;
    for (auto& f : r) f = A->reduce(f);
    PolyRow m(sr, Poly::zero(A->ctx));
    for (unsigned i = 0; i <= k; ++i) {
        std::vector<Poly> pows =
            i == 0 ? std::vector<Poly>{Poly::constant(A->ctx, 1)}
                   : power_products(a, i);
        std::vector<PolyRow> inputs = scaled_basis_rows(A, tr, pows);
        std::size_t nhead = inputs.size();
        inputs.insert(inputs.end(), phi.tgt.rels.begin(), phi.tgt.rels.end());
        inputs.insert(inputs.end(), ringrows.begin(), ringrows.end());
        TrackedGB step_gb = tracked_span(A, tr, inputs);
        MVec rem = MVec::zero(A->ctx, tr);
        auto cof = express(MVec::from_polys(r), step_gb, &rem);
        if (!rem.is_zero()) {
            out.message = "residual escaped the expected adic filtration";
            return out;
        }
        // m_i = sum c_{p,t} * p * u_t  (c on generator p*e_t)
        PolyRow mi(sr, Poly::zero(A->ctx));
        for (std::size_t h = 0; h < nhead; ++h) {
            const Poly& p = pows[h / tr];
            std::uint32_t t = static_cast<std::uint32_t>(h % tr);
            if (cof[h].is_zero()) continue;
            Poly cp = cof[h] * p;
            for (std::uint32_t s = 0; s < sr; ++s) mi[s] = mi[s] + cp * u[t][s];
        }
        for (auto& f : mi) f = A->reduce(f);
        out.corrections.push_back(mi);
        for (std::uint32_t s = 0; s < sr; ++s) m[s] = A->reduce(m[s] + mi[s]);
        PolyRow phim = phi.apply(mi);
        for (std::uint32_t s = 0; s < tr; ++s) r[s] = A->reduce(r[s] - phim[s]);
        out.residuals.push_back(r);
    }

    // residual must sit in a^{k+1}(tgt) + relations
    std::vector<PolyRow> tail = scaled_basis_rows(A, tr, power_products(a, k + 1));
    tail.insert(tail.end(), phi.tgt.rels.begin(), phi.tgt.rels.end());
    if (!in_span(A, tr, r, tail)) {
        out.message = "final residual not in the expected ideal power";
        return out;
    }
    out.lift = m;
    out.ok = true;
    return out;
}

bool adic_generators_check(const FpModule& M, const IdealSpec& a,
                           const std::vector<PolyRow>& candidates) {
    if (!same_ring(M.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    RingPtr A0 = truncate_ring(M.ring, a, 0);
    FpModule M0 = change_ring(M, A0);
    std::uint32_t c = static_cast<std::uint32_t>(candidates.size());
    PolyMat mat = mat_zero(A0, M.rank, c);
    for (std::uint32_t j = 0; j < c; ++j) {
        if (candidates[j].size() != M.rank)
            throw DomainError("candidate rank mismatch");
        for (std::uint32_t i = 0; i < M.rank; ++i) mat[i][j] = candidates[j][i];
    }
    ModuleMap f = ModuleMap::make_unchecked(FpModule::free_module(A0, c), M0,
                                            std::move(mat));
    return cokernel(f).is_zero_module();
}

FlatReport adically_flat_check(const FpModule& P, const IdealSpec& a,
                               unsigned kmax, unsigned tor_depth) {
    if (!same_ring(P.ring, a.ring))
        throw DomainError("ideal must live in the module's ring");
    if (tor_depth < 1) throw DomainError("tor depth must be >= 1");
    FlatReport rep;
    rep.kmax = kmax;
    rep.tor_depth = tor_depth;
    for (unsigned k = 0; k <= kmax; ++k) {
        FpModule Ak = FpModule::cyclic(P.ring, power_products(a, k + 1));
        for (unsigned i = 1; i <= tor_depth; ++i) {
            FpModule T = tor(Ak, P, i);
            if (!T.is_zero_module())
                rep.violations.push_back(
                    {k, i, "Tor_" + std::to_string(i) + "(A_" + std::to_string(k) +
                               ", P) != 0"});
        }
        FpModule Pk = change_ring(tensor_over_quotient(P, a, k),
                                  truncate_ring(P.ring, a, k));
        ProjVerdict v = is_projective_const_rank(Pk).verdict;
        rep.level_projectivity.push_back(v);
        if (v == ProjVerdict::No)
            rep.violations.push_back(
                {k, 0, "P_" + std::to_string(k) + " not projective over A_" +
                           std::to_string(k)});
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

} // namespace adicert
