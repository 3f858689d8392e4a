#include "adicert/rings.hpp"

#include <sstream>

namespace adicert {

std::vector<Poly> RingPresentation::rel_gens() const {
    std::vector<Poly> out;
    for (const auto& g : rel.gens) out.push_back(g.component(0));
    return out;
}

bool RingPresentation::looks_like_field() const {
    if (is_zero_ring()) return false;
    for (std::size_t i = 0; i < ctx->nvars(); ++i)
        if (!reduce(Poly::variable(ctx, i)).is_constant()) return false;
    return true;
}

std::string RingPresentation::describe() const {
    std::ostringstream os;
    os << (ctx->p == 0 ? "Q" : "F" + std::to_string(ctx->p)) << "[";
    for (std::size_t i = 0; i < ctx->vars.size(); ++i)
        os << (i ? "," : "") << ctx->vars[i];
    os << "]";
    if (!rel.gens.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < rel.gens.size(); ++i)
            os << (i ? ", " : "") << rel.gens[i].component(0).str();
        os << ")";
    }
    return os.str();
}

RingPtr make_poly_ring(std::vector<std::string> vars, std::uint32_t p, OrderKind order) {
    auto ctx = make_ctx(std::move(vars), p, order);
    auto ring = std::make_shared<RingPresentation>();
    ring->ctx = ctx;
    ring->rel = buchberger_polys(ctx, {});
    return ring;
}

RingPtr make_quotient_ring(const CtxPtr& ctx, const std::vector<Poly>& relations) {
    auto ring = std::make_shared<RingPresentation>();
    ring->ctx = ctx;
    ring->rel = buchberger_polys(ctx, relations);
    return ring;
}

RingPtr extend_relations(const RingPtr& A, const std::vector<Poly>& extra) {
    std::vector<Poly> gens = A->rel_gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return make_quotient_ring(A->ctx, gens);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_ctx(a->ctx, b->ctx) && a->rel == b->rel;
}

IdealSpec IdealSpec::make(RingPtr ring, std::vector<Poly> gens) {
    if (gens.empty()) throw DomainError("ideal spec needs at least one generator");
    for (auto& g : gens) g = ring->reduce(g);
    return IdealSpec{std::move(ring), std::move(gens)};
}

std::vector<Poly> power_products(const IdealSpec& a, unsigned e) {
    if (e == 0) throw DomainError("power_products needs e >= 1");
    // nondecreasing index tuples give each multiset product exactly once
    std::vector<std::pair<std::size_t, Poly>> frontier;
    for (std::size_t i = 0; i < a.gens.size(); ++i) frontier.push_back({i, a.gens[i]});
    for (unsigned s = 2; s <= e; ++s) {
        std::vector<std::pair<std::size_t, Poly>> next;
        for (const auto& [i, f] : frontier)
            for (std::size_t j = i; j < a.gens.size(); ++j)
                next.push_back({j, f * a.gens[j]});
        frontier = std::move(next);
    }
    std::vector<Poly> out;
    for (const auto& [i, f] : frontier) {
        Poly r = a.ring->reduce(f);
        if (r.is_zero()) continue;
        bool dup = false;
        for (const auto& g : out)
            if (g == r) { dup = true; break; }
        if (!dup) out.push_back(std::move(r));
    }
    return out;
}

RingPtr truncate_ring(const RingPtr& A, const IdealSpec& a, unsigned k) {
    if (!same_ring(A, a.ring)) throw DomainError("ideal not over the given ring");
    std::vector<Poly> extra = power_products(a, k + 1);
    return extend_relations(A, extra);
}

} // namespace adicert
