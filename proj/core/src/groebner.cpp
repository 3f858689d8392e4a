#include "adicert/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace adicert {

int mterm_compare(const MTerm& a, const MTerm& b, const MonomialOrder& ord, bool top) {
    if (top) {
        int c = ord.compare(a.m, b.m);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1; // e_0 > e_1 > ...
        return 0;
    }
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ord.compare(a.m, b.m);
}

MVec MVec::zero(CtxPtr ctx, std::uint32_t rank) {
    MVec v;
    v.ctx = std::move(ctx);
    v.rank = rank;
    return v;
}

MVec MVec::basis(CtxPtr ctx, std::uint32_t rank, std::uint32_t comp) {
    MVec v = zero(ctx, rank);
    v.terms.push_back({comp, Monomial::unit(v.ctx->nvars()), Coeff::one(v.ctx->p)});
    return v;
}

MVec MVec::from_polys(const std::vector<Poly>& comps) {
    if (comps.empty()) throw DomainError("empty component list");
    CtxPtr ctx;
    for (const auto& f : comps)
        if (f.ctx) { ctx = f.ctx; break; }
    if (!ctx) throw DomainError("component polynomials carry no context");
    MVec v = zero(ctx, static_cast<std::uint32_t>(comps.size()));
    for (std::uint32_t i = 0; i < comps.size(); ++i)
        for (const auto& t : comps[i].terms) v.terms.push_back({i, t.m, t.c});
    // POT with ascending component: already grouped by component, each group descending
    return v;
}

MVec MVec::poly_in_comp(const Poly& f, std::uint32_t rank, std::uint32_t comp) {
    MVec v = zero(f.ctx, rank);
    for (const auto& t : f.terms) v.terms.push_back({comp, t.m, t.c});
    return v;
}

std::vector<Poly> MVec::to_polys() const {
    std::vector<Poly> out(rank, Poly::zero(ctx));
    for (const auto& t : terms)
        out[t.comp] = out[t.comp] + Poly::from_term(ctx, t.m, t.c);
    return out;
}

Poly MVec::component(std::uint32_t i) const {
    Poly f = Poly::zero(ctx);
    for (const auto& t : terms)
        if (t.comp == i) f = f + Poly::from_term(ctx, t.m, t.c);
    return f;
}

const MTerm& MVec::lt() const {
    if (terms.empty()) throw DomainError("leading term of zero vector");
    return terms.front();
}

MVec MVec::add(const MVec& o, bool top) const {
    if (!same_ctx(ctx, o.ctx) || rank != o.rank) throw DomainError("module mismatch");
    MVec r = zero(ctx, rank);
    r.terms.reserve(terms.size() + o.terms.size());
    const auto& ord = ctx->order;
    std::size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        int c = mterm_compare(terms[i], o.terms[j], ord, top);
        if (c > 0) {
            r.terms.push_back(terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(o.terms[j++]);
        } else {
            Coeff s = terms[i].c + o.terms[j].c;
            if (!s.is_zero()) r.terms.push_back({terms[i].comp, terms[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms.size(); ++i) r.terms.push_back(terms[i]);
    for (; j < o.terms.size(); ++j) r.terms.push_back(o.terms[j]);
    return r;
}

MVec MVec::neg() const {
    MVec r = *this;
    for (auto& t : r.terms) t.c = -t.c;
    return r;
}

MVec MVec::mul_term(const Monomial& m, const Coeff& c) const {
    MVec r = zero(ctx, rank);
    if (c.is_zero()) return r;
    r.terms.reserve(terms.size());
    for (const auto& t : terms) {
        Coeff k = t.c * c;
        if (!k.is_zero()) r.terms.push_back({t.comp, t.m * m, k});
    }
    return r;
}

MVec MVec::mul_poly(const Poly& f, bool top) const {
    MVec r = zero(ctx, rank);
    for (const auto& t : f.terms) r = r.add(mul_term(t.m, t.c), top);
    return r;
}

bool MVec::operator==(const MVec& o) const {
    if (rank != o.rank || terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].comp != o.terms[i].comp || !(terms[i].m == o.terms[i].m) ||
            terms[i].c != o.terms[i].c)
            return false;
    return true;
}

std::string MVec::str() const {
    std::ostringstream os;
    os << "(";
    auto ps = to_polys();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ", ";
        os << ps[i].str();
    }
    os << ")";
    return os.str();
}

bool GBasis::trivial() const {
    for (const auto& g : gens)
        if (g.terms.size() == 1 && g.lt().m.is_unit()) return true;
    return false;
}

std::string GBasis::key() const {
    std::ostringstream os;
    os << rank << "|" << top << "|" << static_cast<int>(ctx->order.kind) << "|" << ctx->p;
    for (const auto& v : ctx->vars) os << "," << v;
    for (const auto& g : gens) os << ";" << g.str();
    return os.str();
}

bool GBasis::operator==(const GBasis& o) const {
    if (rank != o.rank || top != o.top || gens.size() != o.gens.size()) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(gens[i] == o.gens[i])) return false;
    return true;
}

// ------------------------------------------------------------------ engine

namespace {

struct Work {
    MVec v;
    std::vector<Poly> u; // representation over the inputs (tracked mode)
};

struct Pair {
    std::size_t i, j;
    std::uint32_t comp;
    Monomial lcm;
    bool alive = true;
};

struct Engine {
    CtxPtr ctx;
    std::uint32_t rank;
    bool top;
    bool track;
    bool collect_syz;
    bool use_criteria;

    std::size_t ninputs = 0;
    std::vector<Work> basis;
    std::vector<Pair> pairs;
    std::vector<std::vector<Poly>> syzygies;

    // Full normal form of v against the basis; updates tracking u in place.
    MVec reduce_full(MVec v, std::vector<Poly>* u) const {
        MVec r = MVec::zero(ctx, rank);
        const auto& ord = ctx->order;
        while (!v.is_zero()) {
            const MTerm t = v.lt();
            std::size_t found = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const MTerm& lk = basis[k].v.lt();
                if (lk.comp == t.comp && lk.m.divides(t.m)) {
                    found = k;
                    break;
                }
            }
            if (found < basis.size()) {
                const Work& g = basis[found];
                Monomial mon = t.m / g.v.lt().m;
                Coeff cf = t.c / g.v.lt().c;
                v = v.sub(g.v.mul_term(mon, cf), top);
                if (u) {
                    Poly q = Poly::from_term(ctx, mon, cf);
                    for (std::size_t i = 0; i < u->size(); ++i)
                        (*u)[i] = (*u)[i] - q * g.u[i];
                }
            } else {
                r.terms.push_back(t);
                v.terms.erase(v.terms.begin());
            }
        }
        (void)ord;
        return r;
    }

    void add_pairs_for(std::size_t k) {
        const MTerm& lk = basis[k].v.lt();
        for (std::size_t i = 0; i < k; ++i) {
            const MTerm& li = basis[i].v.lt();
            if (li.comp != lk.comp) continue;
            pairs.push_back({i, k, lk.comp, Monomial::lcm(li.m, lk.m), true});
        }
    }

    bool pair_pending(std::size_t a, std::size_t b) const {
        for (const auto& p : pairs)
            if (p.alive && ((p.i == a && p.j == b) || (p.i == b && p.j == a))) return true;
        return false;
    }

    void run(const std::vector<MVec>& inputs) {
        ninputs = inputs.size();
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            std::vector<Poly> u;
            if (track) {
                u.assign(ninputs, Poly::zero(ctx));
                u[i] = Poly::constant(ctx, 1);
            }
            if (inputs[i].is_zero()) {
                if (collect_syz && track) syzygies.push_back(u);
                continue;
            }
            basis.push_back({inputs[i], std::move(u)});
            add_pairs_for(basis.size() - 1);
        }
        const auto& ord = ctx->order;
        while (true) {
            // normal selection: smallest lcm in the monomial order
            std::size_t best = pairs.size();
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (!pairs[k].alive) continue;
                if (best == pairs.size()) {
                    best = k;
                    continue;
                }
                int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
                if (c < 0 || (c == 0 && pairs[k].comp < pairs[best].comp)) best = k;
            }
            if (best == pairs.size()) break;
            Pair p = pairs[best];
            pairs[best].alive = false;

            const MTerm& li = basis[p.i].v.lt();
            const MTerm& lj = basis[p.j].v.lt();
            if (use_criteria) {
                // product criterion: valid for ideals only, not module pairs
                if (rank == 1 && li.m.coprime(lj.m)) continue;
                bool chained = false;
                for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
                    if (k == p.i || k == p.j) continue;
                    const MTerm& lk = basis[k].v.lt();
                    if (lk.comp == p.comp && lk.m.divides(p.lcm) &&
                        !pair_pending(p.i, k) && !pair_pending(p.j, k))
                        chained = true;
                }
                if (chained) continue;
            }

            Monomial mi = p.lcm / li.m, mj = p.lcm / lj.m;
            MVec s = basis[p.i].v.mul_term(mi, li.c.inverse())
                         .sub(basis[p.j].v.mul_term(mj, lj.c.inverse()), top);
            std::vector<Poly> u;
            if (track) {
                u.assign(ninputs, Poly::zero(ctx));
                Poly qi = Poly::from_term(ctx, mi, li.c.inverse());
                Poly qj = Poly::from_term(ctx, mj, lj.c.inverse());
                for (std::size_t t = 0; t < ninputs; ++t)
                    u[t] = qi * basis[p.i].u[t] - qj * basis[p.j].u[t];
            }
            MVec r = reduce_full(std::move(s), track ? &u : nullptr);
            if (r.is_zero()) {
                if (collect_syz && track) syzygies.push_back(std::move(u));
            } else {
                basis.push_back({std::move(r), std::move(u)});
                add_pairs_for(basis.size() - 1);
            }
        }
    }

    // Minimalize + tail-reduce + monic; keeps tracking consistent.
    void reduce_basis() {
        // drop elements whose leading term is divisible by another's
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[j]) continue;
                const MTerm& li = basis[i].v.lt();
                const MTerm& lj = basis[j].v.lt();
                if (lj.comp == li.comp && lj.m.divides(li.m) &&
                    (!(lj.m == li.m) || j < i)) {
                    keep[i] = false;
                    break;
                }
            }
        }
        std::vector<Work> kept;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) kept.push_back(std::move(basis[i]));
        basis = std::move(kept);

        // tail-reduce each element against the others
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Work w = std::move(basis[i]);
            std::vector<Work> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Engine sub{ctx, rank, top, track, false, false};
            sub.basis = std::move(others);
            sub.ninputs = ninputs;
            MVec r = sub.reduce_full(std::move(w.v), track ? &w.u : nullptr);
            w.v = std::move(r);
            basis[i] = std::move(w);
        }
        // monic normalization
        for (auto& w : basis) {
            if (w.v.is_zero()) continue;
            Coeff inv = w.v.lt().c.inverse();
            w.v = w.v.mul_term(Monomial::unit(ctx->nvars()), inv);
            if (track) {
                Poly q = Poly::constant(ctx, Coeff::one(ctx->p)).scale(inv);
                for (auto& f : w.u) f = f * q;
            }
        }
        // deterministic order: ascending leading terms
        std::sort(basis.begin(), basis.end(), [&](const Work& a, const Work& b) {
            return mterm_compare(a.v.lt(), b.v.lt(), ctx->order, top) < 0;
        });
    }
};

std::mutex g_cache_mutex;
std::map<std::string, GBasis> g_cache;

} // namespace

GBasis buchberger(CtxPtr ctx, std::uint32_t rank, const std::vector<MVec>& gens,
                  bool top) {
    if (rank == 0) throw DomainError("ambient rank must be positive");
    for (const auto& g : gens)
        if (!same_ctx(g.ctx, ctx) || g.rank != rank)
            throw DomainError("generator outside the ambient module");
    GBasis probe;
    probe.ctx = ctx;
    probe.rank = rank;
    probe.top = top;
    probe.gens = gens;
    std::sort(probe.gens.begin(), probe.gens.end(),
              [](const MVec& a, const MVec& b) { return a.str() < b.str(); });
    std::string key = probe.key();
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    Engine e{ctx, rank, top, false, false, true};
    e.run(gens);
    e.reduce_basis();
    GBasis out;
    out.ctx = std::move(ctx);
    out.rank = rank;
    out.top = top;
    out.reduced = true;
    for (auto& w : e.basis) out.gens.push_back(std::move(w.v));
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        g_cache.emplace(std::move(key), out);
    }
    return out;
}

GBasis buchberger_polys(const CtxPtr& ctx, const std::vector<Poly>& gens) {
    std::vector<MVec> vs;
    for (const auto& f : gens) vs.push_back(MVec::poly_in_comp(f, 1, 0));
    return buchberger(ctx, 1, vs);
}

MVec normal_form(const MVec& v, const GBasis& gb) {
    Engine e{gb.ctx, gb.rank, gb.top, false, false, false};
    for (const auto& g : gb.gens) e.basis.push_back({g, {}});
    return e.reduce_full(v, nullptr);
}

Poly normal_form(const Poly& f, const GBasis& gb) {
    if (gb.rank != 1) throw DomainError("polynomial normal form needs a rank-1 basis");
    return normal_form(MVec::poly_in_comp(f, 1, 0), gb).component(0);
}

MVec normal_form_tracked(const MVec& v, const GBasis& gb, std::vector<Poly>& cof) {
    Engine e{gb.ctx, gb.rank, gb.top, true, false, false};
    e.ninputs = gb.gens.size();
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        std::vector<Poly> u(gb.gens.size(), Poly::zero(gb.ctx));
        u[i] = Poly::constant(gb.ctx, 1);
        e.basis.push_back({gb.gens[i], std::move(u)});
    }
    cof.assign(gb.gens.size(), Poly::zero(gb.ctx));
    // reduce_full computes v = r + sum (-u)_i g_i with u starting at zero
    std::vector<Poly> u(gb.gens.size(), Poly::zero(gb.ctx));
    MVec r = e.reduce_full(v, &u);
    for (std::size_t i = 0; i < u.size(); ++i) cof[i] = -u[i];
    return r;
}

std::vector<MVec> syzygy_module(CtxPtr ctx, std::uint32_t rank,
                                const std::vector<MVec>& gens, bool top) {
    Engine e{ctx, rank, top, true, true, false};
    e.run(gens);
    std::vector<MVec> out;
    std::uint32_t m = static_cast<std::uint32_t>(gens.size());
    for (const auto& s : e.syzygies) {
        if (m == 0) break;
        MVec v = MVec::from_polys(std::vector<Poly>(s.begin(), s.end()));
        v.rank = m;
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

GBasis colon(const GBasis& submodule, const Poly& f) {
    if (f.is_zero()) throw DomainError("colon by zero");
    const CtxPtr& ctx = submodule.ctx;
    std::uint32_t r = submodule.rank;
    std::vector<MVec> gens;
    for (std::uint32_t i = 0; i < r; ++i)
        gens.push_back(MVec::poly_in_comp(f, r, i));
    for (const auto& n : submodule.gens) gens.push_back(n);
    auto syz = syzygy_module(ctx, r, gens, submodule.top);
    std::vector<MVec> result;
    for (const auto& s : syz) {
        auto ps = s.to_polys();
        std::vector<Poly> head(ps.begin(), ps.begin() + r);
        MVec v = MVec::from_polys(head);
        v.ctx = ctx;
        if (!v.is_zero()) result.push_back(std::move(v));
    }
    return buchberger(ctx, r, result, submodule.top);
}

bool is_groebner(const GBasis& gb) {
    Engine e{gb.ctx, gb.rank, gb.top, false, false, false};
    for (const auto& g : gb.gens) e.basis.push_back({g, {}});
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
            const MTerm& li = gb.gens[i].lt();
            const MTerm& lj = gb.gens[j].lt();
            if (li.comp != lj.comp) continue;
            Monomial l = Monomial::lcm(li.m, lj.m);
            MVec s = gb.gens[i].mul_term(l / li.m, li.c.inverse())
                         .sub(gb.gens[j].mul_term(l / lj.m, lj.c.inverse()), gb.top);
            if (!e.reduce_full(std::move(s), nullptr).is_zero()) return false;
        }
    }
    return true;
}

TrackedGB buchberger_tracked(CtxPtr ctx, std::uint32_t rank,
                             const std::vector<MVec>& inputs, bool top) {
    Engine e{ctx, rank, top, true, false, true};
    e.run(inputs);
    e.reduce_basis();
    TrackedGB out;
    out.gb.ctx = std::move(ctx);
    out.gb.rank = rank;
    out.gb.top = top;
    out.gb.reduced = true;
    out.ninputs = inputs.size();
    for (auto& w : e.basis) {
        out.gb.gens.push_back(std::move(w.v));
        out.rep.push_back(std::move(w.u));
    }
    return out;
}

std::vector<Poly> express(const MVec& v, const TrackedGB& tgb, MVec* remainder) {
    std::vector<Poly> cof;
    MVec r = normal_form_tracked(v, tgb.gb, cof);
    if (remainder) *remainder = r;
    std::vector<Poly> out(tgb.ninputs, Poly::zero(tgb.gb.ctx));
    for (std::size_t k = 0; k < cof.size(); ++k)
        for (std::size_t i = 0; i < tgb.ninputs; ++i)
            out[i] = out[i] + cof[k] * tgb.rep[k][i];
    return out;
}

std::size_t gb_cache_size() {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    return g_cache.size();
}

void gb_cache_clear() {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    g_cache.clear();
}

} // namespace adicert
