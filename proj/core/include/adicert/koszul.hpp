/*
 * koszul.hpp
 * ----------
 * Koszul complexes of power sequences in the exterior-algebra model,
 * the inverse-system transition maps between powers, and duals.
 *
 * Basis of degree -k: the k-subsets of {1..p} as sorted index lists in
 * lexicographic order; pos(s, S) is the 1-based position of s in S.
 */
#pragma once

#include "adicert/complexes.hpp"

namespace adicert {

struct KoszulSpec {
    RingPtr ring;
    std::vector<Poly> seq; // a_1..a_p, reduced mod ring relations
    unsigned j = 1;        // power: the complex of (a_1^j, ..., a_p^j)

    static KoszulSpec make(RingPtr ring, std::vector<Poly> seq, unsigned j = 1);
};

// k-subsets of {0..p-1} in lexicographic order
std::vector<std::vector<unsigned>> k_subsets(unsigned p, unsigned k);

FreeComplex koszul_complex(const KoszulSpec& spec);

// strict chain map K(A; a^{j1}) -> K(A; a^{j0}); multiplication by
// prod_{s in S} a_s^{j1-j0} on the basis element e_S
ChainMap koszul_transition(const RingPtr& ring, const std::vector<Poly>& seq,
                           unsigned j1, unsigned j0);

FreeComplex dual_koszul(const KoszulSpec& spec); // Hom(K, A), degrees [0, p]

} // namespace adicert
