/*
 * towers.hpp
 * ----------
 * Inverse and direct systems of finitely presented modules with explicit
 * transitions, plus the certificate machinery that gives finite evidence
 * for pro-zero and stabilization verdicts. "Inconclusive" is a first-class
 * outcome; "not pro-zero" is never asserted, since the property quantifies
 * over unbounded levels.
 */
#pragma once

#include "adicert/complexes.hpp"

#include <nlohmann/json.hpp>

namespace adicert {

enum class SystemKind { Inverse, Direct };

// Levels are 1-based: level(j) for j = 1..J. For Inverse systems
// transitions[j-1] maps level j+1 -> level j; for Direct systems it maps
// level j -> level j+1.
struct ModuleTower {
    SystemKind kind = SystemKind::Inverse;
    std::vector<FpModule> levels;
    std::vector<ModuleMap> transitions;

    unsigned J() const { return static_cast<unsigned>(levels.size()); }
    const FpModule& level(unsigned j) const;
    const ModuleMap& step(unsigned j) const; // the transition adjacent to level j
    // Inverse: the composite level j1 -> j0 (j1 >= j0); Direct: j0 -> j1.
    ModuleMap composite(unsigned j1, unsigned j0) const;
    void validate() const;
};

struct ComplexTower {
    std::vector<FreeComplex> levels;
    std::vector<ChainMap> transitions; // level j+1 -> level j

    unsigned J() const { return static_cast<unsigned>(levels.size()); }
};

// Inverse ModuleTower of H^i applied levelwise.
ModuleTower cohomology_tower(const ComplexTower& T, int i);

enum class Verdict { ProZero, Stabilized, NotProZeroUpTo, Inconclusive };

std::string verdict_name(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    unsigned bound = 0; // the J the certificate was computed at

    // pro-zero: (j0, j1) pairs whose composite transition is zero
    std::vector<std::pair<unsigned, unsigned>> witnesses;

    // stabilized: transitions touching levels > stable_from are isomorphisms,
    // with the explicit inverse matrix per step
    unsigned stable_from = 0;
    std::vector<std::pair<unsigned, PolyMat>> inverses;

    // inconclusive: the smallest j0 without a witness (pro-zero search) or
    // the first non-invertible step (stabilization search); 0 when unused
    unsigned blocking_level = 0;

    nlohmann::json to_json() const;
    bool replay(const ModuleTower& T) const; // re-verify the stored evidence
};

// NotProZeroUpTo exists in the verdict vocabulary but is never produced:
// failure to find witnesses up to J yields Inconclusive.
Certificate is_pro_zero_up_to(const ModuleTower& T, unsigned J);

Certificate stabilization(const ModuleTower& T, unsigned J);

// stabilized -> the stable level; pro-zero -> 0. Refuses otherwise.
FpModule limit_under_certificate(const ModuleTower& T, const Certificate& c);

} // namespace adicert
