#include "adicert/modules.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace adicert {

namespace {

std::vector<MVec> rows_to_mvecs(std::uint32_t ambient, const std::vector<PolyRow>& rows) {
    std::vector<MVec> out;
    for (const auto& r : rows) {
        if (r.size() != ambient) throw DomainError("row length mismatch");
        MVec v = MVec::from_polys(r);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<PolyRow> ring_rel_rows(const RingPtr& ring, std::uint32_t ambient) {
    std::vector<PolyRow> out;
    for (const auto& g : ring->rel_gens()) {
        for (std::uint32_t i = 0; i < ambient; ++i) {
            PolyRow row(ambient, Poly::zero(ring->ctx));
            row[i] = g;
            out.push_back(std::move(row));
        }
    }
    return out;
}

PolyRow zero_row(const RingPtr& ring, std::uint32_t n) {
    return PolyRow(n, Poly::zero(ring->ctx));
}

PolyRow mvec_to_row(const MVec& v) { return v.to_polys(); }

std::vector<PolyRow> columns_of(const RingPtr& ring, const PolyMat& m,
                                std::uint32_t nrows, std::uint32_t ncols) {
    std::vector<PolyRow> cols;
    for (std::uint32_t j = 0; j < ncols; ++j) {
        PolyRow c = zero_row(ring, nrows);
        for (std::uint32_t i = 0; i < nrows; ++i) c[i] = m[i][j];
        cols.push_back(std::move(c));
    }
    return cols;
}

} // namespace

GBasis module_gb(const RingPtr& ring, std::uint32_t ambient,
                 const std::vector<PolyRow>& rows) {
    if (ambient == 0) throw DomainError("module_gb over zero ambient");
    auto vs = rows_to_mvecs(ambient, rows);
    auto rr = rows_to_mvecs(ambient, ring_rel_rows(ring, ambient));
    vs.insert(vs.end(), rr.begin(), rr.end());
    return buchberger(ring->ctx, ambient, vs);
}

std::vector<PolyRow> syzygies_over_ring(const RingPtr& ring, std::uint32_t ambient,
                                        const std::vector<PolyRow>& vecs) {
    std::size_t n = vecs.size();
    if (n == 0) return {};
    if (ambient == 0) {
        // everything is zero: unit syzygies
        std::vector<PolyRow> out;
        for (std::size_t i = 0; i < n; ++i) {
            PolyRow row = zero_row(ring, static_cast<std::uint32_t>(n));
            row[i] = Poly::constant(ring->ctx, 1);
            out.push_back(std::move(row));
        }
        return out;
    }
    std::vector<MVec> inputs;
    for (const auto& v : vecs) {
        MVec m = MVec::from_polys(v);
        m.ctx = ring->ctx;
        inputs.push_back(std::move(m));
    }
    for (const auto& r : ring_rel_rows(ring, ambient)) {
        MVec m = MVec::from_polys(r);
        if (!m.is_zero()) inputs.push_back(std::move(m));
    }
    auto syz = syzygy_module(ring->ctx, ambient, inputs);
    std::vector<PolyRow> out;
    for (const auto& s : syz) {
        auto ps = s.to_polys();
        PolyRow head(ps.begin(), ps.begin() + n);
        bool zero = true;
        for (auto& f : head) {
            f = ring->reduce(f);
            if (!f.is_zero()) zero = false;
        }
        if (!zero) out.push_back(std::move(head));
    }
    return out;
}

bool in_span(const RingPtr& ring, std::uint32_t ambient, const PolyRow& v,
             const std::vector<PolyRow>& rows) {
    if (ambient == 0) return true;
    MVec m = MVec::from_polys(v);
    m.ctx = ring->ctx;
    if (m.is_zero()) return true;
    return normal_form(m, module_gb(ring, ambient, rows)).is_zero();
}

bool same_span(const RingPtr& ring, std::uint32_t ambient,
               const std::vector<PolyRow>& a, const std::vector<PolyRow>& b,
               const std::vector<PolyRow>& denom) {
    std::vector<PolyRow> bd = b, ad = a;
    bd.insert(bd.end(), denom.begin(), denom.end());
    ad.insert(ad.end(), denom.begin(), denom.end());
    for (const auto& v : a)
        if (!in_span(ring, ambient, v, bd)) return false;
    for (const auto& v : b)
        if (!in_span(ring, ambient, v, ad)) return false;
    return true;
}

// ----------------------------------------------------------------- FpModule

FpModule FpModule::free_module(RingPtr ring, std::uint32_t r) {
    return FpModule{std::move(ring), r, {}};
}

FpModule FpModule::zero_module(RingPtr ring) { return FpModule{std::move(ring), 0, {}}; }

FpModule FpModule::cyclic(const RingPtr& ring, const std::vector<Poly>& ann_gens) {
    FpModule m{ring, 1, {}};
    for (const auto& g : ann_gens) m.rels.push_back({ring->reduce(g)});
    return m;
}

GBasis FpModule::rel_gb() const {
    if (rank == 0) throw DomainError("relation basis of a rank-0 presentation");
    return module_gb(ring, rank, rels);
}

bool FpModule::is_zero_module() const {
    if (rank == 0) return true;
    GBasis gb = rel_gb();
    for (std::uint32_t i = 0; i < rank; ++i)
        if (!normal_form(MVec::basis(ring->ctx, rank, i), gb).is_zero()) return false;
    return true;
}

bool FpModule::element_is_zero(const PolyRow& v) const {
    if (rank == 0) return true;
    MVec m = MVec::from_polys(v);
    m.ctx = ring->ctx;
    return m.is_zero() || normal_form(m, rel_gb()).is_zero();
}

bool FpModule::elements_equal(const PolyRow& v, const PolyRow& w) const {
    PolyRow d(rank, Poly::zero(ring->ctx));
    for (std::uint32_t i = 0; i < rank; ++i) d[i] = v[i] - w[i];
    return element_is_zero(d);
}

FpModule FpModule::reduced() const {
    FpModule m{ring, rank, {}};
    for (const auto& r : rels) {
        PolyRow row;
        bool zero = true;
        for (const auto& f : r) {
            Poly g = ring->reduce(f);
            if (!g.is_zero()) zero = false;
            row.push_back(std::move(g));
        }
        if (!zero) m.rels.push_back(std::move(row));
    }
    return m;
}

std::string FpModule::str() const {
    std::ostringstream os;
    os << ring->describe() << "^" << rank;
    if (!rels.empty()) {
        os << " / [";
        for (std::size_t i = 0; i < rels.size(); ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < rels[i].size(); ++j)
                os << (j ? ", " : "") << rels[i][j].str();
        }
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- ModuleMap

ModuleMap ModuleMap::make(FpModule src, FpModule tgt, PolyMat mat) {
    ModuleMap f = make_unchecked(std::move(src), std::move(tgt), std::move(mat));
    for (const auto& r : f.src.rels) {
        PolyRow image = f.apply(r);
        if (!f.tgt.element_is_zero(image))
            throw DomainError("module map not well-defined on source relations");
    }
    return f;
}

ModuleMap ModuleMap::make_unchecked(FpModule src, FpModule tgt, PolyMat mat) {
    if (mat.size() != tgt.rank) throw DomainError("map matrix row count mismatch");
    for (const auto& row : mat)
        if (row.size() != src.rank) throw DomainError("map matrix column count mismatch");
    if (!same_ctx(src.ring->ctx, tgt.ring->ctx))
        throw DomainError("map between different coefficient contexts");
    return ModuleMap{std::move(src), std::move(tgt), std::move(mat)};
}

ModuleMap ModuleMap::identity(const FpModule& M) {
    PolyMat m(M.rank, zero_row(M.ring, M.rank));
    for (std::uint32_t i = 0; i < M.rank; ++i) m[i][i] = Poly::constant(M.ring->ctx, 1);
    return make_unchecked(M, M, std::move(m));
}

ModuleMap ModuleMap::multiplication(const FpModule& M, const Poly& f) {
    PolyMat m(M.rank, zero_row(M.ring, M.rank));
    for (std::uint32_t i = 0; i < M.rank; ++i) m[i][i] = f;
    return make_unchecked(M, M, std::move(m));
}

ModuleMap ModuleMap::zero_map(FpModule src, FpModule tgt) {
    PolyMat m(tgt.rank, zero_row(tgt.ring, src.rank));
    return make_unchecked(std::move(src), std::move(tgt), std::move(m));
}

PolyRow ModuleMap::apply(const PolyRow& v) const {
    PolyRow out = zero_row(tgt.ring, tgt.rank);
    for (std::uint32_t i = 0; i < tgt.rank; ++i)
        for (std::uint32_t j = 0; j < src.rank; ++j)
            out[i] = out[i] + mat[i][j] * v[j];
    for (auto& f : out) f = tgt.ring->reduce(f);
    return out;
}

ModuleMap ModuleMap::compose_after(const ModuleMap& g) const {
    if (g.tgt.rank != src.rank) throw DomainError("composition rank mismatch");
    PolyMat m(tgt.rank, zero_row(tgt.ring, g.src.rank));
    for (std::uint32_t i = 0; i < tgt.rank; ++i)
        for (std::uint32_t j = 0; j < g.src.rank; ++j) {
            Poly acc = Poly::zero(tgt.ring->ctx);
            for (std::uint32_t k = 0; k < src.rank; ++k)
                acc = acc + mat[i][k] * g.mat[k][j];
            m[i][j] = tgt.ring->reduce(acc);
        }
    return make_unchecked(g.src, tgt, std::move(m));
}

bool ModuleMap::is_zero_map() const {
    for (std::uint32_t j = 0; j < src.rank; ++j) {
        PolyRow col = zero_row(tgt.ring, tgt.rank);
        for (std::uint32_t i = 0; i < tgt.rank; ++i) col[i] = mat[i][j];
        if (!tgt.element_is_zero(col)) return false;
    }
    return true;
}

bool ModuleMap::is_identity_like() const {
    if (src.rank != tgt.rank) return false;
    for (std::uint32_t j = 0; j < src.rank; ++j) {
        PolyRow col = zero_row(tgt.ring, tgt.rank);
        for (std::uint32_t i = 0; i < tgt.rank; ++i) col[i] = mat[i][j];
        col[j] = col[j] - Poly::constant(tgt.ring->ctx, 1);
        if (!tgt.element_is_zero(col)) return false;
    }
    return true;
}

bool ModuleMap::equals(const ModuleMap& o) const {
    if (src.rank != o.src.rank || tgt.rank != o.tgt.rank) return false;
    for (std::uint32_t j = 0; j < src.rank; ++j) {
        PolyRow col = zero_row(tgt.ring, tgt.rank);
        for (std::uint32_t i = 0; i < tgt.rank; ++i) col[i] = mat[i][j] - o.mat[i][j];
        if (!tgt.element_is_zero(col)) return false;
    }
    return true;
}

// ------------------------------------------------------------- subquotients

Subquotient make_subquotient(const RingPtr& ring, std::uint32_t ambient,
                             const std::vector<PolyRow>& gens,
                             const std::vector<PolyRow>& denom) {
    Subquotient sq;
    sq.ambient = ambient;
    sq.gens = gens;
    sq.denom = denom;
    std::uint32_t n = static_cast<std::uint32_t>(gens.size());
    FpModule mod{ring, n, {}};
    if (n > 0) {
        std::vector<PolyRow> all = gens;
        all.insert(all.end(), denom.begin(), denom.end());
        auto syz = syzygies_over_ring(ring, ambient, all);
        for (const auto& s : syz) {
            PolyRow head(s.begin(), s.begin() + n);
            bool zero = true;
            for (const auto& f : head)
                if (!f.is_zero()) zero = false;
            if (!zero) mod.rels.push_back(std::move(head));
        }
    }
    sq.mod = std::move(mod);
    return sq;
}

KernelResult kernel(const ModuleMap& f) {
    const RingPtr& ring = f.src.ring;
    if (f.src.rank == 0) {
        FpModule z = FpModule::zero_module(ring);
        return {z, ModuleMap::zero_map(z, f.src), {}};
    }
    std::vector<PolyRow> gens;
    if (f.tgt.rank == 0) {
        for (std::uint32_t j = 0; j < f.src.rank; ++j) {
            PolyRow e = zero_row(ring, f.src.rank);
            e[j] = Poly::constant(ring->ctx, 1);
            gens.push_back(std::move(e));
        }
    } else {
        std::vector<PolyRow> vecs = columns_of(ring, f.mat, f.tgt.rank, f.src.rank);
        std::size_t s = vecs.size();
        vecs.insert(vecs.end(), f.tgt.rels.begin(), f.tgt.rels.end());
        auto syz = syzygies_over_ring(f.tgt.ring, f.tgt.rank, vecs);
        for (const auto& row : syz) {
            PolyRow head(row.begin(), row.begin() + s);
            bool zero = true;
            for (const auto& g : head)
                if (!g.is_zero()) zero = false;
            if (!zero) gens.push_back(std::move(head));
        }
    }
    Subquotient sq = make_subquotient(ring, f.src.rank, gens, f.src.rels);
    PolyMat incl(f.src.rank, zero_row(ring, sq.mod.rank));
    for (std::uint32_t j = 0; j < sq.mod.rank; ++j)
        for (std::uint32_t i = 0; i < f.src.rank; ++i) incl[i][j] = gens[j][i];
    return {sq.mod, ModuleMap::make_unchecked(sq.mod, f.src, std::move(incl)),
            std::move(gens)};
}

FpModule cokernel(const ModuleMap& f) {
    FpModule m{f.tgt.ring, f.tgt.rank, f.tgt.rels};
    for (std::uint32_t j = 0; j < f.src.rank; ++j) {
        PolyRow col = zero_row(f.tgt.ring, f.tgt.rank);
        for (std::uint32_t i = 0; i < f.tgt.rank; ++i) col[i] = f.mat[i][j];
        m.rels.push_back(std::move(col));
    }
    return m.reduced();
}

Subquotient image(const ModuleMap& f) {
    auto cols = columns_of(f.tgt.ring, f.mat, f.tgt.rank, f.src.rank);
    return make_subquotient(f.tgt.ring, f.tgt.rank, cols, f.tgt.rels);
}

FpModule tensor(const FpModule& M, const FpModule& N) {
    if (!same_ring(M.ring, N.ring)) throw DomainError("tensor over different rings");
    const RingPtr& ring = M.ring;
    std::uint32_t rank = M.rank * N.rank;
    FpModule T{ring, rank, {}};
    for (const auto& r : M.rels)
        for (std::uint32_t j = 0; j < N.rank; ++j) {
            PolyRow row = zero_row(ring, rank);
            for (std::uint32_t i = 0; i < M.rank; ++i) row[i * N.rank + j] = r[i];
            T.rels.push_back(std::move(row));
        }
    for (const auto& s : N.rels)
        for (std::uint32_t i = 0; i < M.rank; ++i) {
            PolyRow row = zero_row(ring, rank);
            for (std::uint32_t j = 0; j < N.rank; ++j) row[i * N.rank + j] = s[j];
            T.rels.push_back(std::move(row));
        }
    return T.reduced();
}

FpModule tensor_over_quotient(const FpModule& M, const IdealSpec& a, unsigned k) {
    if (!same_ring(M.ring, a.ring)) throw DomainError("ideal over a different ring");
    FpModule m = M;
    for (const auto& mu : power_products(a, k + 1))
        for (std::uint32_t i = 0; i < M.rank; ++i) {
            PolyRow row = zero_row(M.ring, M.rank);
            row[i] = mu;
            m.rels.push_back(std::move(row));
        }
    return m.reduced();
}

FpModule change_ring(const FpModule& M, const RingPtr& B) {
    if (!same_ctx(M.ring->ctx, B->ctx)) throw DomainError("ring context mismatch");
    FpModule m{B, M.rank, M.rels};
    return m.reduced();
}

// ------------------------------------------------------------ Fitting ideals

namespace {

Poly determinant(const RingPtr& ring, const PolyMat& m, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols) {
    if (rows.empty()) return Poly::constant(ring->ctx, 1);
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Poly acc = Poly::zero(ring->ctx);
    std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly& pivot = m[rows[0]][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> subcols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) subcols.push_back(cols[t]);
        Poly minor = determinant(ring, m, subrows, subcols);
        Poly term = pivot * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn,
                  std::vector<std::size_t>& cur, std::size_t start) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        combinations(n, k, fn, cur, i + 1);
        cur.pop_back();
    }
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur;
    combinations(n, k, fn, cur, 0);
}

} // namespace

GBasis fitting_ideal(const FpModule& M, unsigned r) {
    const RingPtr& ring = M.ring;
    std::vector<Poly> gens = ring->rel_gens();
    if (r >= M.rank) {
        gens.push_back(Poly::constant(ring->ctx, 1));
        return buchberger_polys(ring->ctx, gens);
    }
    std::size_t s = M.rank - r;
    if (M.rels.size() >= s) {
        for_each_combination(M.rels.size(), s, [&](const std::vector<std::size_t>& rows) {
            for_each_combination(M.rank, s, [&](const std::vector<std::size_t>& cols) {
                Poly d = ring->reduce(determinant(ring, M.rels, rows, cols));
                if (!d.is_zero()) gens.push_back(std::move(d));
            });
        });
    }
    return buchberger_polys(ring->ctx, gens);
}

bool ideal_is_zero(const RingPtr& ring, const GBasis& ideal_gb) {
    for (const auto& g : ideal_gb.gens)
        if (!ring->is_zero(g.component(0))) return false;
    return true;
}

bool ideal_is_unit(const GBasis& ideal_gb) { return ideal_gb.trivial(); }

bool ideal_is_idempotent(const RingPtr& ring, const GBasis& ideal_gb) {
    std::vector<Poly> sq = ring->rel_gens();
    std::vector<Poly> gens;
    for (const auto& g : ideal_gb.gens) gens.push_back(g.component(0));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) sq.push_back(gens[i] * gens[j]);
    GBasis sq_gb = buchberger_polys(ring->ctx, sq);
    for (const auto& g : gens)
        if (!normal_form(g, sq_gb).is_zero()) return false;
    return true;
}

GBasis annihilator(const FpModule& M) {
    const RingPtr& ring = M.ring;
    if (M.rank == 0) {
        std::vector<Poly> one = {Poly::constant(ring->ctx, 1)};
        return buchberger_polys(ring->ctx, one);
    }
    auto colon_by_basis = [&](std::uint32_t i) {
        std::vector<PolyRow> vecs;
        PolyRow e = zero_row(ring, M.rank);
        e[i] = Poly::constant(ring->ctx, 1);
        vecs.push_back(std::move(e));
        vecs.insert(vecs.end(), M.rels.begin(), M.rels.end());
        auto syz = syzygies_over_ring(ring, M.rank, vecs);
        std::vector<Poly> gens;
        for (const auto& s : syz)
            if (!s[0].is_zero()) gens.push_back(s[0]);
        return gens;
    };
    std::vector<Poly> acc = colon_by_basis(0);
    for (std::uint32_t i = 1; i < M.rank; ++i) {
        std::vector<Poly> other = colon_by_basis(i);
        // intersect (acc) with (other) via the kernel of A -> A/acc (+) A/other
        std::vector<PolyRow> vecs;
        PolyRow diag = zero_row(ring, 2);
        diag[0] = Poly::constant(ring->ctx, 1);
        diag[1] = Poly::constant(ring->ctx, 1);
        vecs.push_back(std::move(diag));
        for (const auto& f : acc) {
            PolyRow row = zero_row(ring, 2);
            row[0] = f;
            vecs.push_back(std::move(row));
        }
        for (const auto& f : other) {
            PolyRow row = zero_row(ring, 2);
            row[1] = f;
            vecs.push_back(std::move(row));
        }
        auto syz = syzygies_over_ring(ring, 2, vecs);
        std::vector<Poly> meet;
        for (const auto& s : syz)
            if (!s[0].is_zero()) meet.push_back(s[0]);
        acc = std::move(meet);
    }
    std::vector<Poly> gens = M.ring->rel_gens();
    gens.insert(gens.end(), acc.begin(), acc.end());
    return buchberger_polys(ring->ctx, gens);
}

ProjReport is_projective_const_rank(const FpModule& M) {
    if (M.rank == 0) return {ProjVerdict::Yes, 0, 0};
    std::vector<GBasis> fitt;
    for (unsigned r = 0; r <= M.rank; ++r) fitt.push_back(fitting_ideal(M, r));
    const RingPtr& ring = M.ring;
    for (unsigned r = 0; r <= M.rank; ++r) {
        bool lower_zero = r == 0 ? true : ideal_is_zero(ring, fitt[r - 1]);
        if (lower_zero && ideal_is_unit(fitt[r])) return {ProjVerdict::Yes, r, 0};
    }
    for (unsigned r = 0; r <= M.rank; ++r) {
        if (ideal_is_zero(ring, fitt[r]) || ideal_is_unit(fitt[r])) continue;
        if (!ideal_is_idempotent(ring, fitt[r])) return {ProjVerdict::No, 0, r};
    }
    return {ProjVerdict::Inconclusive, 0, 0};
}

// --------------------------------------------------------------- resolutions

std::vector<PolyMat> free_resolution(const FpModule& M, unsigned len) {
    const RingPtr& ring = M.ring;
    std::vector<PolyMat> d(len + 1); // d[i]: F_i -> F_{i-1}, d[0] unused
    std::uint32_t prev_rank = M.rank;
    std::vector<PolyRow> cols; // columns of d[i] as vectors in F_{i-1}
    for (const auto& r : M.rels) cols.push_back(r);
    for (unsigned i = 1; i <= len; ++i) {
        std::uint32_t ncols = static_cast<std::uint32_t>(cols.size());
        PolyMat mat(prev_rank, zero_row(ring, ncols));
        for (std::uint32_t j = 0; j < ncols; ++j)
            for (std::uint32_t k = 0; k < prev_rank; ++k) mat[k][j] = cols[j][k];
        d[i] = std::move(mat);
        if (i == len) break;
        std::vector<PolyRow> next;
        if (ncols > 0 && prev_rank > 0) next = syzygies_over_ring(ring, prev_rank, cols);
        prev_rank = ncols;
        cols = std::move(next);
    }
    return d;
}

FpModule direct_sum_power(const FpModule& N, std::uint32_t copies) {
    FpModule m{N.ring, N.rank * copies, {}};
    for (std::uint32_t s = 0; s < copies; ++s)
        for (const auto& r : N.rels) {
            PolyRow row = zero_row(N.ring, m.rank);
            for (std::uint32_t j = 0; j < N.rank; ++j) row[s * N.rank + j] = r[j];
            m.rels.push_back(std::move(row));
        }
    return m;
}

PolyMat expand_matrix(const PolyMat& shape, std::uint32_t block) {
    std::size_t rows = shape.size();
    std::size_t cols = rows ? shape[0].size() : 0;
    if (rows == 0 || cols == 0) return PolyMat(rows * block);
    const CtxPtr& ctx = [&] {
        for (const auto& row : shape)
            for (const auto& f : row)
                if (f.ctx) return f.ctx;
        throw DomainError("matrix without context");
    }();
    PolyMat out(rows * block, PolyRow(cols * block, Poly::zero(ctx)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::uint32_t b = 0; b < block; ++b)
                out[i * block + b][j * block + b] = shape[i][j];
    return out;
}

FpModule tor(const FpModule& M, const FpModule& N, unsigned i) {
    if (!same_ring(M.ring, N.ring)) throw DomainError("Tor over different rings");
    if (i == 0) return tensor(M, N);
    if (M.rank == 0 || N.rank == 0) return FpModule::zero_module(M.ring);
    const RingPtr& ring = M.ring;
    auto d = free_resolution(M, i + 1);
    std::uint32_t fi = static_cast<std::uint32_t>(d[i].empty() ? 0 : d[i][0].size());
    if (fi == 0) return FpModule::zero_module(ring);
    std::uint32_t fim1 = static_cast<std::uint32_t>(d[i].size());
    std::uint32_t fip1 = static_cast<std::uint32_t>(d[i + 1].empty() ? 0 : d[i + 1][0].size());
    std::uint32_t nb = N.rank;

    FpModule cod = direct_sum_power(N, fim1);
    PolyMat gi = expand_matrix(d[i], nb);
    // kernel of (d_i tensor id_N) inside N^{fi}
    std::vector<PolyRow> vecs = columns_of(ring, gi, fim1 * nb, fi * nb);
    std::size_t ncols = vecs.size();
    vecs.insert(vecs.end(), cod.rels.begin(), cod.rels.end());
    auto syz = syzygies_over_ring(ring, fim1 * nb, vecs);
    std::vector<PolyRow> ker_gens;
    for (const auto& s : syz) {
        PolyRow head(s.begin(), s.begin() + ncols);
        bool zero = true;
        for (const auto& f : head)
            if (!f.is_zero()) zero = false;
        if (!zero) ker_gens.push_back(std::move(head));
    }
    FpModule dom = direct_sum_power(N, fi);
    std::vector<PolyRow> denom = dom.rels;
    if (fip1 > 0) {
        PolyMat gip1 = expand_matrix(d[i + 1], nb);
        auto imcols = columns_of(ring, gip1, fi * nb, fip1 * nb);
        denom.insert(denom.end(), imcols.begin(), imcols.end());
    }
    return make_subquotient(ring, fi * nb, ker_gens, denom).mod;
}

// ----------------------------------------------------------- isomorphy tools

std::optional<PolyMat> inverse_of(const ModuleMap& f) {
    const RingPtr& ring = f.src.ring;
    if (f.src.rank == 0 || f.tgt.rank == 0) {
        if (f.src.is_zero_module() && f.tgt.is_zero_module())
            return PolyMat(f.src.rank, zero_row(ring, f.tgt.rank));
        return std::nullopt;
    }
    if (!cokernel(f).is_zero_module()) return std::nullopt;

    // tracked basis over the target ambient: columns of f, then target
    // relations, then ring relations per component
    std::vector<PolyRow> inputs = columns_of(f.tgt.ring, f.mat, f.tgt.rank, f.src.rank);
    std::size_t s = inputs.size();
    inputs.insert(inputs.end(), f.tgt.rels.begin(), f.tgt.rels.end());
    auto rr = ring_rel_rows(f.tgt.ring, f.tgt.rank);
    inputs.insert(inputs.end(), rr.begin(), rr.end());
    std::vector<MVec> mv;
    for (const auto& v : inputs) {
        MVec m = MVec::from_polys(v);
        m.ctx = ring->ctx;
        mv.push_back(std::move(m));
    }
    TrackedGB tgb = buchberger_tracked(ring->ctx, f.tgt.rank, mv);

    PolyMat psi(f.src.rank, zero_row(ring, f.tgt.rank));
    for (std::uint32_t j = 0; j < f.tgt.rank; ++j) {
        MVec rem = MVec::zero(ring->ctx, f.tgt.rank);
        auto cof = express(MVec::basis(ring->ctx, f.tgt.rank, j), tgb, &rem);
        if (!rem.is_zero()) return std::nullopt;
        for (std::uint32_t i = 0; i < f.src.rank; ++i)
            psi[i][j] = f.src.ring->reduce(cof[i]);
    }
    // psi must be well-defined and a two-sided inverse
    ModuleMap back = ModuleMap::make_unchecked(f.tgt, f.src, psi);
    for (const auto& r : f.tgt.rels)
        if (!f.src.element_is_zero(back.apply(r))) return std::nullopt;
    if (!back.compose_after(f).is_identity_like()) return std::nullopt;
    if (!f.compose_after(back).is_identity_like()) return std::nullopt;
    return psi;
}

// ------------------------------------------------------------- dimensions

std::optional<std::uint64_t> vector_space_dim(const FpModule& M) {
    if (M.rank == 0) return 0;
    GBasis gb = M.rel_gb();
    const std::size_t nv = M.ring->ctx->nvars();
    std::uint64_t total = 0;
    for (std::uint32_t comp = 0; comp < M.rank; ++comp) {
        std::vector<Monomial> lts;
        for (const auto& g : gb.gens)
            if (g.lt().comp == comp) lts.push_back(g.lt().m);
        bool killed = false;
        for (const auto& m : lts)
            if (m.is_unit()) killed = true;
        if (killed) continue;
        // finiteness: a pure power of every variable must appear
        std::vector<std::uint32_t> bound(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) {
            std::uint32_t best = 0;
            for (const auto& m : lts) {
                bool pure = m.e[v] > 0;
                for (std::size_t w = 0; w < nv && pure; ++w)
                    if (w != v && m.e[w] > 0) pure = false;
                if (pure && (best == 0 || m.e[v] < best)) best = m.e[v];
            }
            if (best == 0) return std::nullopt;
            bound[v] = best;
        }
        // count standard monomials below the bounds
        std::vector<std::uint32_t> exps(nv, 0);
        std::uint64_t count = 0;
        while (true) {
            Monomial m{exps};
            bool divisible = false;
            for (const auto& l : lts)
                if (l.divides(m)) { divisible = true; break; }
            if (!divisible) ++count;
            std::size_t v = 0;
            while (v < nv) {
                if (++exps[v] < bound[v]) break;
                exps[v] = 0;
                ++v;
            }
            if (v == nv) break;
        }
        total += count;
    }
    return total;
}

std::optional<std::uint64_t> min_generators(const FpModule& M) {
    if (!M.ring->looks_like_field()) return std::nullopt;
    return vector_space_dim(M);
}

std::string fingerprint(const FpModule& M) {
    std::ostringstream os;
    GBasis ann = annihilator(M);
    os << "ann{";
    for (const auto& g : ann.gens) os << g.component(0).str() << ";";
    os << "} fitt{";
    // stop at the first unit ideal: the chain is ascending, so everything
    // past it is a unit too, and trailing units depend only on the chosen
    // presentation rank, not on the module
    for (unsigned r = 0; r <= M.rank; ++r) {
        GBasis f = fitting_ideal(M, r);
        os << r << ":[";
        for (const auto& g : f.gens) os << g.component(0).str() << ";";
        os << "]";
        if (ideal_is_unit(f)) break;
    }
    os << "}";
    auto dim = vector_space_dim(M);
    if (dim) os << " dim=" << *dim;
    return os.str();
}

} // namespace adicert
