/*
 * complexes.hpp
 * -------------
 * Bounded cohomologically-indexed complexes of finite free modules with
 * degree +1 differentials, strict chain maps, tensor / Hom / cone /
 * shift and cohomology as finitely presented subquotients.
 *
 * Tensor basis bookkeeping is part of the contract: summands of
 * (P (x) Q)^n are ordered by (left degree, left index, right index).
 */
#pragma once

#include "adicert/modules.hpp"

#include <map>

namespace adicert {

PolyMat mat_zero(const RingPtr& ring, std::uint32_t rows, std::uint32_t cols);
PolyMat mat_identity(const RingPtr& ring, std::uint32_t n);
PolyMat mat_mul(const RingPtr& ring, const PolyMat& a, const PolyMat& b);
PolyMat mat_scale(const PolyMat& a, const Poly& f);
PolyMat mat_transpose(const RingPtr& ring, const PolyMat& a,
                      std::uint32_t rows, std::uint32_t cols);

struct FreeComplex {
    RingPtr ring;
    int lo = 0, hi = -1; // empty when lo > hi
    std::map<int, std::uint32_t> ranks;
    std::map<int, PolyMat> diff; // diff[n]: C^n -> C^{n+1}

    std::uint32_t rank(int n) const;
    PolyMat d(int n) const; // zero matrix of the right shape when absent
    bool empty() const { return lo > hi; }
    void validate() const; // shapes and d o d = 0 over the ring

    static FreeComplex concentrated(RingPtr ring, std::uint32_t rank, int degree);
    static FreeComplex zero(RingPtr ring);
    std::string str() const;
};

struct ChainMap {
    FreeComplex src, tgt;
    std::map<int, PolyMat> comp;

    PolyMat at(int n) const;
    void validate() const; // strictness: commutes with the differentials
    ChainMap compose_after(const ChainMap& g) const;
    static ChainMap identity(const FreeComplex& C);
};

FreeComplex tensor_complexes(const FreeComplex& P, const FreeComplex& Q);
FreeComplex shift_complex(const FreeComplex& C, int n); // shift^i = C^{i+n}
FreeComplex cone(const ChainMap& f); // cone^n = src^{n+1} (+) tgt^n
FreeComplex hom_into_ring(const FreeComplex& P); // Hom(P, A), degrees negated

// Complex of copies of a fixed module: degree n component is coeff^{ranks[n]}
// with shape-level differentials acting through the entries.
struct ModuleComplex {
    FpModule coeff;
    int lo = 0, hi = -1;
    std::map<int, std::uint32_t> ranks;
    std::map<int, PolyMat> diff;

    std::uint32_t rank(int n) const;
    PolyMat d(int n) const;
};

ModuleComplex tensor_with_module(const FreeComplex& P, const FpModule& M);
// Hom(P, M)^n = Hom(P^{-n}, M); differentials are transposed shapes
ModuleComplex hom_complex(const FreeComplex& P, const FpModule& M);

Subquotient mc_cohomology(const ModuleComplex& C, int i);
Subquotient cohomology_sub(const FreeComplex& C, int i);
FpModule cohomology(const FreeComplex& C, int i);

// coefficients of each vector on the subquotient generators; throws if a
// vector does not lie in span(gens) + span(denom)
PolyMat express_in_subquotient(const std::vector<PolyRow>& vecs, const Subquotient& sq);

ModuleMap induced_map(const ChainMap& f, int i);
// shape_map[n] carries level-n shapes of a chain map between module
// complexes over the same coefficient module
ModuleMap mc_induced_map(const std::map<int, PolyMat>& shape_map,
                         const ModuleComplex& src, const ModuleComplex& tgt, int i);
// chain map between module complexes with possibly different coefficients,
// entries already expanded to the full block matrices
ModuleMap mc_induced_map_expanded(const std::map<int, PolyMat>& big_map,
                                  const ModuleComplex& src, const ModuleComplex& tgt,
                                  int i);

bool acyclic_in_window(const FreeComplex& C, int lo, int hi);
bool quasi_iso_via_cone(const ChainMap& f, int lo, int hi);
bool quasi_iso_via_induced(const ChainMap& f, int lo, int hi);

} // namespace adicert
