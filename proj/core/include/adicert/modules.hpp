/*
 * modules.hpp
 * -----------
 * Finitely presented modules over a presented quotient ring and maps
 * between them. A module is (rank, relation rows); every submodule
 * computation is routed through the Groebner engine with the ring
 * relations adjoined in each component.
 */
#pragma once

#include "adicert/rings.hpp"

#include <optional>

namespace adicert {

using PolyRow = std::vector<Poly>;
using PolyMat = std::vector<PolyRow>; // row-major

struct FpModule {
    RingPtr ring;
    std::uint32_t rank = 0;
    std::vector<PolyRow> rels; // rows = relations among the rank generators

    static FpModule free_module(RingPtr ring, std::uint32_t r);
    static FpModule zero_module(RingPtr ring);
    static FpModule cyclic(const RingPtr& ring, const std::vector<Poly>& ann_gens);

    GBasis rel_gb() const; // rows + ring relations in every component
    bool is_zero_module() const;
    bool element_is_zero(const PolyRow& v) const;
    bool elements_equal(const PolyRow& v, const PolyRow& w) const;
    FpModule reduced() const; // relation entries reduced, zero rows dropped
    std::string str() const;
};

struct ModuleMap {
    FpModule src, tgt;
    PolyMat mat; // tgt.rank x src.rank

    // checks well-definedness: source relations land in the target relations
    static ModuleMap make(FpModule src, FpModule tgt, PolyMat mat);
    static ModuleMap make_unchecked(FpModule src, FpModule tgt, PolyMat mat);
    static ModuleMap identity(const FpModule& M);
    static ModuleMap multiplication(const FpModule& M, const Poly& f);
    static ModuleMap zero_map(FpModule src, FpModule tgt);

    PolyRow apply(const PolyRow& v) const;
    ModuleMap compose_after(const ModuleMap& g) const; // this o g
    bool is_zero_map() const;
    bool is_identity_like() const; // equals identity modulo target relations
    bool equals(const ModuleMap& o) const;
};

// Subquotient (span(gens) + span(denom)) / span(denom) inside A^ambient,
// presented on the listed generators.
struct Subquotient {
    FpModule mod;
    std::uint32_t ambient = 0;
    std::vector<PolyRow> gens;
    std::vector<PolyRow> denom;
};

Subquotient make_subquotient(const RingPtr& ring, std::uint32_t ambient,
                             const std::vector<PolyRow>& gens,
                             const std::vector<PolyRow>& denom);

// Syzygies of vecs over the quotient ring (coefficient vectors, length vecs.size()).
std::vector<PolyRow> syzygies_over_ring(const RingPtr& ring, std::uint32_t ambient,
                                        const std::vector<PolyRow>& vecs);

GBasis module_gb(const RingPtr& ring, std::uint32_t ambient,
                 const std::vector<PolyRow>& rows);

bool in_span(const RingPtr& ring, std::uint32_t ambient, const PolyRow& v,
             const std::vector<PolyRow>& rows);
bool same_span(const RingPtr& ring, std::uint32_t ambient,
               const std::vector<PolyRow>& a, const std::vector<PolyRow>& b,
               const std::vector<PolyRow>& denom);

struct KernelResult {
    FpModule module;
    ModuleMap inclusion;
    std::vector<PolyRow> gens; // kernel generators inside A^{src.rank}
};

KernelResult kernel(const ModuleMap& f);
FpModule cokernel(const ModuleMap& f);
Subquotient image(const ModuleMap& f);
FpModule tensor(const FpModule& M, const FpModule& N);
// M_k = M / a^{k+1} M (still presented over the ambient ring)
FpModule tensor_over_quotient(const FpModule& M, const IdealSpec& a, unsigned k);
// reinterpret a presentation over a ring with more relations
FpModule change_ring(const FpModule& M, const RingPtr& B);

GBasis fitting_ideal(const FpModule& M, unsigned r);
bool ideal_is_zero(const RingPtr& ring, const GBasis& ideal_gb);
bool ideal_is_unit(const GBasis& ideal_gb);
bool ideal_is_idempotent(const RingPtr& ring, const GBasis& ideal_gb);
GBasis annihilator(const FpModule& M);

enum class ProjVerdict { Yes, No, Inconclusive };
struct ProjReport {
    ProjVerdict verdict = ProjVerdict::Inconclusive;
    std::uint32_t rank = 0;      // when yes
    std::uint32_t witness_r = 0; // offending Fitting index when no
};
ProjReport is_projective_const_rank(const FpModule& M);

// d[i]: F_i -> F_{i-1} with F_0 = A^{M.rank}; d[0] unused, built to length len.
std::vector<PolyMat> free_resolution(const FpModule& M, unsigned len);

FpModule tor(const FpModule& M, const FpModule& N, unsigned i);

// N^copies with block-diagonal relations; index (slot, gen) -> slot*N.rank + gen.
FpModule direct_sum_power(const FpModule& N, std::uint32_t copies);
// shape matrix acting on N^cols -> N^rows via entries times identity blocks
PolyMat expand_matrix(const PolyMat& shape, std::uint32_t block);

// explicit two-sided inverse if f is an isomorphism (semi-decision)
std::optional<PolyMat> inverse_of(const ModuleMap& f);

// dimension over the base field when finite
std::optional<std::uint64_t> vector_space_dim(const FpModule& M);
// minimal generator count; only decided when the ring looks like a field
std::optional<std::uint64_t> min_generators(const FpModule& M);

std::string fingerprint(const FpModule& M); // annihilator + Fitting invariants

} // namespace adicert
