#include "adicert/koszul.hpp"

namespace adicert {

KoszulSpec KoszulSpec::make(RingPtr ring, std::vector<Poly> seq, unsigned j) {
    if (seq.empty()) throw DomainError("Koszul sequence must be nonempty");
    if (j < 1) throw DomainError("Koszul power must be >= 1");
    for (auto& f : seq) {
        check_same_ctx(f, Poly::zero(ring->ctx));
        f = ring->reduce(f);
    }
    return KoszulSpec{std::move(ring), std::move(seq), j};
}

std::vector<std::vector<unsigned>> k_subsets(unsigned p, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > p) return out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        // advance to the next subset in lex order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && cur[i] == p - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (unsigned t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

static std::size_t subset_index(const std::vector<std::vector<unsigned>>& list,
                                const std::vector<unsigned>& s) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == s) return i;
    throw DomainError("subset not found");
}

FreeComplex koszul_complex(const KoszulSpec& spec) {
    const RingPtr& A = spec.ring;
    unsigned p = static_cast<unsigned>(spec.seq.size());
    std::vector<Poly> aj;
    for (const auto& a : spec.seq) aj.push_back(A->reduce(a.pow(spec.j)));

    FreeComplex K = FreeComplex::zero(A);
    K.lo = -static_cast<int>(p);
    K.hi = 0;
    std::vector<std::vector<std::vector<unsigned>>> bases(p + 1);
    for (unsigned k = 0; k <= p; ++k) {
        bases[k] = k_subsets(p, k);
        K.ranks[-static_cast<int>(k)] = static_cast<std::uint32_t>(bases[k].size());
    }
    for (unsigned k = 1; k <= p; ++k) {
        // d^{-k}: degree -k -> degree -(k-1)
        PolyMat m = mat_zero(A, static_cast<std::uint32_t>(bases[k - 1].size()),
                             static_cast<std::uint32_t>(bases[k].size()));
        for (std::size_t col = 0; col < bases[k].size(); ++col) {
            const auto& S = bases[k][col];
            for (unsigned pos = 0; pos < k; ++pos) {
                std::vector<unsigned> rest;
                for (unsigned t = 0; t < k; ++t)
                    if (t != pos) rest.push_back(S[t]);
                std::size_t row = subset_index(bases[k - 1], rest);
                Poly term = aj[S[pos]];
                if (pos % 2 == 1) term = -term; // (-1)^{pos(s,S)-1}, pos 1-based
                m[row][col] = m[row][col] + term;
            }
        }
        K.diff[-static_cast<int>(k)] = std::move(m);
    }
    return K;
}

ChainMap koszul_transition(const RingPtr& ring, const std::vector<Poly>& seq,
                           unsigned j1, unsigned j0) {
    if (j1 < j0 || j0 < 1) throw DomainError("koszul_transition requires j1 >= j0 >= 1");
    unsigned p = static_cast<unsigned>(seq.size());
    ChainMap f;
    f.src = koszul_complex(KoszulSpec::make(ring, seq, j1));
    f.tgt = koszul_complex(KoszulSpec::make(ring, seq, j0));
    for (unsigned k = 0; k <= p; ++k) {
        auto basis = k_subsets(p, k);
        PolyMat m = mat_zero(ring, static_cast<std::uint32_t>(basis.size()),
                             static_cast<std::uint32_t>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Poly prod = Poly::constant(ring->ctx, 1);
            for (unsigned s : basis[i]) prod = prod * seq[s].pow(j1 - j0);
            m[i][i] = ring->reduce(prod);
        }
        f.comp[-static_cast<int>(k)] = std::move(m);
    }
    return f;
}

FreeComplex dual_koszul(const KoszulSpec& spec) {
    return hom_into_ring(koszul_complex(spec));
}

} // namespace adicert
