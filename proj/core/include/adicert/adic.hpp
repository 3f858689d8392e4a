/*
 * adic.hpp
 * --------
 * Truncated adic completion and torsion. A completion is never a single
 * object here: it is the tower M_k = M/a^{k+1}M with its canonical
 * surjections plus whatever certificates the towers machinery can attach.
 * Includes the complete-Nakayama lifting algorithm (literal correction
 * series, no Newton acceleration) and the levelwise adic-flatness check.
 */
#pragma once

#include "adicert/towers.hpp"

namespace adicert {

struct CompletionTower {
    FpModule M;
    IdealSpec a;
    unsigned kmax = 0;
    ModuleTower tower; // tower level j holds M_{j-1} = M / a^j M

    const FpModule& level_mod(unsigned k) const; // M_k, 0 <= k <= kmax
};

CompletionTower completion_tower(const FpModule& M, const IdealSpec& a, unsigned kmax);

struct TorsionResult {
    FpModule module;            // the chain value at stabilization (or last level)
    std::vector<PolyRow> gens;  // its generators inside A^{M.rank}
    Certificate cert;           // stabilized(i) or inconclusive(bound)
    bool is_all_of_m = false;   // gens span all of M (meaningful when stabilized)
};

// Ascending chain ann_M(a^i), i = 1..bound; stabilization of the chain at
// one step is permanent, so a stabilized verdict is exact.
TorsionResult torsion_submodule(const FpModule& M, const IdealSpec& a, unsigned bound);

struct NakayamaLift {
    bool ok = false;
    PolyRow lift;                       // m with phi(m) = n mod a^{k+1} N
    std::vector<PolyRow> corrections;   // m_i in a^i M, lift = sum m_i
    std::vector<PolyRow> residuals;     // residual after each correction
    PolyRow coker_witness;              // nonzero class in coker(phi_0) when refused
    std::string message;
};

// phi acts on presentations standing for the completed modules; n is a
// target element; the result satisfies phi(m) - n in a^{k+1}(tgt) + rels.
// Refused (ok = false, witness) when phi is not surjective mod a.
NakayamaLift nakayama_lift(const ModuleMap& phi, const IdealSpec& a,
                           const PolyRow& n, unsigned k);

// yes iff the candidates generate M_0 = M/aM over A_0.
bool adic_generators_check(const FpModule& M, const IdealSpec& a,
                           const std::vector<PolyRow>& candidates);

struct FlatViolation {
    unsigned level = 0;
    unsigned tor_degree = 0; // 0 means a projectivity failure instead
    std::string detail;
};

struct FlatReport {
    bool consistent = false;
    unsigned kmax = 0, tor_depth = 0;
    std::vector<FlatViolation> violations;
    std::vector<ProjVerdict> level_projectivity; // index = level k
};

// Per level k <= kmax: Tor_i(A_k, P) for 1 <= i <= tor_depth must vanish and
// P_k should test projective over A_k. Consistent-with-adically-flat up to
// (kmax, tor_depth) when no violation is witnessed.
FlatReport adically_flat_check(const FpModule& P, const IdealSpec& a,
                               unsigned kmax, unsigned tor_depth);

} // namespace adicert
