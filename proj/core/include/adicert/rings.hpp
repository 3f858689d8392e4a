/*
 * rings.hpp
 * ---------
 * Presentations of quotient rings A = k[x...]/I carried with a reduced
 * Groebner basis of the relation ideal, ideal specs (finite generator
 * sequences), ideal powers and truncation rings A_k = A / a^{k+1}.
 */
#pragma once

#include "adicert/groebner.hpp"

#include <memory>

namespace adicert {

class RingPresentation {
public:
    CtxPtr ctx;
    GBasis rel; // reduced rank-1 basis of the relation ideal

    Poly reduce(const Poly& f) const { return normal_form(f, rel); }
    bool is_zero(const Poly& f) const { return reduce(f).is_zero(); }
    bool elements_equal(const Poly& f, const Poly& g) const {
        return reduce(f - g).is_zero();
    }
    std::vector<Poly> rel_gens() const;
    bool is_zero_ring() const { return rel.trivial(); }
    // recognizes fields whose variables all reduce to constants (A/m with
    // rational points); a semi-decision, never a false positive
    bool looks_like_field() const;
    std::string describe() const;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_poly_ring(std::vector<std::string> vars, std::uint32_t p = 0,
                       OrderKind order = OrderKind::Grevlex);
RingPtr make_quotient_ring(const CtxPtr& ctx, const std::vector<Poly>& relations);
RingPtr extend_relations(const RingPtr& A, const std::vector<Poly>& extra);

bool same_ring(const RingPtr& a, const RingPtr& b);

struct IdealSpec {
    RingPtr ring;
    std::vector<Poly> gens; // nonempty, reduced mod the ring relations

    static IdealSpec make(RingPtr ring, std::vector<Poly> gens);
    std::size_t size() const { return gens.size(); }
};

// All e-fold products of the generators (multiset monomials); e >= 1.
std::vector<Poly> power_products(const IdealSpec& a, unsigned e);

// A_k = A / a^{k+1}
RingPtr truncate_ring(const RingPtr& A, const IdealSpec& a, unsigned k);

} // namespace adicert
