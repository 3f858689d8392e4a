#include "adicert/complexes.hpp"

#include <sstream>

namespace adicert {

PolyMat mat_zero(const RingPtr& ring, std::uint32_t rows, std::uint32_t cols) {
    return PolyMat(rows, PolyRow(cols, Poly::zero(ring->ctx)));
}

PolyMat mat_identity(const RingPtr& ring, std::uint32_t n) {
    PolyMat m = mat_zero(ring, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m[i][i] = Poly::constant(ring->ctx, 1);
    return m;
}

PolyMat mat_mul(const RingPtr& ring, const PolyMat& a, const PolyMat& b) {
    std::uint32_t rows = static_cast<std::uint32_t>(a.size());
    std::uint32_t mid = static_cast<std::uint32_t>(b.size());
    std::uint32_t cols = mid ? static_cast<std::uint32_t>(b[0].size()) : 0;
    PolyMat out = mat_zero(ring, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) {
            Poly acc = Poly::zero(ring->ctx);
            for (std::uint32_t k = 0; k < mid; ++k) acc = acc + a[i][k] * b[k][j];
            out[i][j] = ring->reduce(acc);
        }
    return out;
}

PolyMat mat_scale(const PolyMat& a, const Poly& f) {
    PolyMat out = a;
    for (auto& row : out)
        for (auto& g : row) g = g * f;
    return out;
}

PolyMat mat_transpose(const RingPtr& ring, const PolyMat& a, std::uint32_t rows,
                      std::uint32_t cols) {
    PolyMat out = mat_zero(ring, cols, rows);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
    return out;
}

static PolyRow apply_mat(const RingPtr& ring, const PolyMat& m, const PolyRow& v) {
    std::uint32_t rows = static_cast<std::uint32_t>(m.size());
    PolyRow out(rows, Poly::zero(ring->ctx));
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < v.size(); ++j)
            out[i] = out[i] + m[i][j] * v[j];
    for (auto& f : out) f = ring->reduce(f);
    return out;
}

// -------------------------------------------------------------- FreeComplex

std::uint32_t FreeComplex::rank(int n) const {
    auto it = ranks.find(n);
    return it == ranks.end() ? 0 : it->second;
}

PolyMat FreeComplex::d(int n) const {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return mat_zero(ring, rank(n + 1), rank(n));
}

void FreeComplex::validate() const {
    if (empty()) return;
    for (int n = lo; n <= hi; ++n) {
        PolyMat dn = d(n);
        if (dn.size() != rank(n + 1))
            throw DomainError("differential row count mismatch at degree " +
                              std::to_string(n));
        for (const auto& row : dn)
            if (row.size() != rank(n))
                throw DomainError("differential column count mismatch at degree " +
                                  std::to_string(n));
        PolyMat sq = mat_mul(ring, d(n + 1), dn);
        for (const auto& row : sq)
            for (const auto& f : row)
                if (!f.is_zero())
                    throw DomainError("d o d != 0 at degree " + std::to_string(n));
    }
}

FreeComplex FreeComplex::concentrated(RingPtr ring, std::uint32_t rank, int degree) {
    FreeComplex c;
    c.ring = std::move(ring);
    c.lo = c.hi = degree;
    if (rank > 0) c.ranks[degree] = rank;
    return c;
}

FreeComplex FreeComplex::zero(RingPtr ring) {
    FreeComplex c;
    c.ring = std::move(ring);
    return c;
}

std::string FreeComplex::str() const {
    std::ostringstream os;
    os << "[";
    for (int n = lo; n <= hi; ++n) os << (n > lo ? ", " : "") << n << ":" << rank(n);
    os << "]";
    return os.str();
}

PolyMat ChainMap::at(int n) const {
    auto it = comp.find(n);
    if (it != comp.end()) return it->second;
    return mat_zero(tgt.ring, tgt.rank(n), src.rank(n));
}

void ChainMap::validate() const {
    int lo = std::min(src.lo, tgt.lo) - 1, hi = std::max(src.hi, tgt.hi) + 1;
    for (int n = lo; n <= hi; ++n) {
        PolyMat a = mat_mul(tgt.ring, tgt.d(n), at(n));
        PolyMat b = mat_mul(tgt.ring, at(n + 1), src.d(n));
        if (a.size() != b.size()) throw DomainError("chain map shape mismatch");
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (!tgt.ring->is_zero(a[i][j] - b[i][j]))
                    throw DomainError("chain map does not commute with differentials");
    }
}

ChainMap ChainMap::compose_after(const ChainMap& g) const {
    ChainMap out;
    out.src = g.src;
    out.tgt = tgt;
    int lo = std::min(g.src.lo, tgt.lo), hi = std::max(g.src.hi, tgt.hi);
    for (int n = lo; n <= hi; ++n) {
        if (tgt.rank(n) == 0 || g.src.rank(n) == 0) continue;
        out.comp[n] = mat_mul(tgt.ring, at(n), g.at(n));
    }
    return out;
}

ChainMap ChainMap::identity(const FreeComplex& C) {
    ChainMap f;
    f.src = f.tgt = C;
    for (int n = C.lo; n <= C.hi; ++n)
        if (C.rank(n) > 0) f.comp[n] = mat_identity(C.ring, C.rank(n));
    return f;
}

// ------------------------------------------------------------------- tensor

FreeComplex tensor_complexes(const FreeComplex& P, const FreeComplex& Q) {
    if (!same_ring(P.ring, Q.ring)) throw DomainError("tensor over different rings");
    FreeComplex T = FreeComplex::zero(P.ring);
    if (P.empty() || Q.empty()) return T;
    T.lo = P.lo + Q.lo;
    T.hi = P.hi + Q.hi;
    // offset of summand P^i (x) Q^{n-i} inside degree n, by ascending i
    auto offsets = [&](int n) {
        std::vector<std::pair<int, std::uint32_t>> out; // (i, offset)
        std::uint32_t off = 0;
        for (int i = P.lo; i <= P.hi; ++i) {
            std::uint32_t r = P.rank(i) * Q.rank(n - i);
            if (r > 0) out.push_back({i, off});
            off += r;
        }
        return out;
    };
    auto total = [&](int n) {
        std::uint32_t t = 0;
        for (int i = P.lo; i <= P.hi; ++i) t += P.rank(i) * Q.rank(n - i);
        return t;
    };
    for (int n = T.lo; n <= T.hi; ++n) {
        std::uint32_t rn = total(n);
        if (rn > 0) T.ranks[n] = rn;
    }
    for (int n = T.lo; n < T.hi + 1; ++n) {
        std::uint32_t rn = total(n), rn1 = total(n + 1);
        if (rn == 0 || rn1 == 0) continue;
        PolyMat m = mat_zero(T.ring, rn1, rn);
        auto src_off = offsets(n);
        auto tgt_off = offsets(n + 1);
        auto find_tgt = [&](int i) -> long {
            for (const auto& [ti, to] : tgt_off)
                if (ti == i) return static_cast<long>(to);
            return -1;
        };
        for (const auto& [i, off] : src_off) {
            int j = n - i;
            std::uint32_t rp = P.rank(i), rq = Q.rank(j);
            // d_P (x) id : (i, j) -> (i+1, j)
            long t1 = find_tgt(i + 1);
            if (t1 >= 0 && P.rank(i + 1) > 0) {
                PolyMat dp = P.d(i);
                for (std::uint32_t a = 0; a < P.rank(i + 1); ++a)
                    for (std::uint32_t b = 0; b < rp; ++b)
                        for (std::uint32_t q = 0; q < rq; ++q)
                            m[t1 + a * rq + q][off + b * rq + q] = dp[a][b];
            }
            // (-1)^i id (x) d_Q : (i, j) -> (i, j+1)
            long t2 = find_tgt(i);
            if (t2 >= 0 && Q.rank(j + 1) > 0) {
                PolyMat dq = Q.d(j);
                bool flip = ((i % 2) + 2) % 2 == 1;
                for (std::uint32_t a = 0; a < Q.rank(j + 1); ++a)
                    for (std::uint32_t b = 0; b < rq; ++b)
                        for (std::uint32_t p = 0; p < rp; ++p)
                            m[t2 + p * Q.rank(j + 1) + a][off + p * rq + b] =
                                flip ? -dq[a][b] : dq[a][b];
            }
        }
        T.diff[n] = std::move(m);
    }
    return T;
}

FreeComplex shift_complex(const FreeComplex& C, int n) {
    FreeComplex S = FreeComplex::zero(C.ring);
    if (C.empty()) return S;
    S.lo = C.lo - n;
    S.hi = C.hi - n;
    for (const auto& [deg, r] : C.ranks) S.ranks[deg - n] = r;
    bool flip = ((n % 2) + 2) % 2 == 1;
    for (const auto& [deg, m] : C.diff)
        S.diff[deg - n] = flip ? mat_scale(m, Poly::constant(C.ring->ctx, -1)) : m;
    return S;
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& P = f.src;
    const FreeComplex& Q = f.tgt;
    FreeComplex C = FreeComplex::zero(Q.ring);
    int lo = std::min(P.lo - 1, Q.lo), hi = std::max(P.hi - 1, Q.hi);
    if (P.empty() && Q.empty()) return C;
    C.lo = lo;
    C.hi = hi;
    auto rk = [&](int n) { return P.rank(n + 1) + Q.rank(n); };
    for (int n = lo; n <= hi; ++n)
        if (rk(n) > 0) C.ranks[n] = rk(n);
    for (int n = lo; n <= hi; ++n) {
        std::uint32_t rn = rk(n), rn1 = rk(n + 1);
        if (rn == 0 || rn1 == 0) continue;
        PolyMat m = mat_zero(C.ring, rn1, rn);
        PolyMat dp = P.d(n + 1);
        PolyMat dq = Q.d(n);
        PolyMat fm = f.at(n + 1);
        std::uint32_t sp = P.rank(n + 1);
        std::uint32_t tp = P.rank(n + 2);
        for (std::uint32_t i = 0; i < tp; ++i)
            for (std::uint32_t j = 0; j < sp; ++j) m[i][j] = -dp[i][j];
        for (std::uint32_t i = 0; i < Q.rank(n + 1); ++i)
            for (std::uint32_t j = 0; j < sp; ++j) m[tp + i][j] = fm[i][j];
        for (std::uint32_t i = 0; i < Q.rank(n + 1); ++i)
            for (std::uint32_t j = 0; j < Q.rank(n); ++j) m[tp + i][sp + j] = dq[i][j];
        C.diff[n] = std::move(m);
    }
    return C;
}

FreeComplex hom_into_ring(const FreeComplex& P) {
    FreeComplex D = FreeComplex::zero(P.ring);
    if (P.empty()) return D;
    D.lo = -P.hi;
    D.hi = -P.lo;
    for (const auto& [deg, r] : P.ranks) D.ranks[-deg] = r;
    for (int n = D.lo; n < D.hi; ++n) {
        // Hom(P^{-n}, A) -> Hom(P^{-n-1}, A): transpose of d_P^{-n-1}
        if (P.rank(-n) == 0 || P.rank(-n - 1) == 0) continue;
        D.diff[n] = mat_transpose(P.ring, P.d(-n - 1), P.rank(-n), P.rank(-n - 1));
    }
    return D;
}

// ----------------------------------------------------------- ModuleComplex

std::uint32_t ModuleComplex::rank(int n) const {
    auto it = ranks.find(n);
    return it == ranks.end() ? 0 : it->second;
}

PolyMat ModuleComplex::d(int n) const {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return mat_zero(coeff.ring, rank(n + 1), rank(n));
}

ModuleComplex tensor_with_module(const FreeComplex& P, const FpModule& M) {
    ModuleComplex C;
    C.coeff = M;
    C.lo = P.lo;
    C.hi = P.hi;
    C.ranks = P.ranks;
    C.diff = P.diff;
    return C;
}

ModuleComplex hom_complex(const FreeComplex& P, const FpModule& M) {
    ModuleComplex C;
    C.coeff = M;
    if (P.empty()) {
        C.lo = 0;
        C.hi = -1;
        return C;
    }
    C.lo = -P.hi;
    C.hi = -P.lo;
    for (const auto& [deg, r] : P.ranks) C.ranks[-deg] = r;
    for (int n = C.lo; n < C.hi; ++n) {
        if (P.rank(-n) == 0 || P.rank(-n - 1) == 0) continue;
        C.diff[n] = mat_transpose(P.ring, P.d(-n - 1), P.rank(-n), P.rank(-n - 1));
    }
    return C;
}

Subquotient mc_cohomology(const ModuleComplex& C, int i) {
    const RingPtr& ring = C.coeff.ring;
    std::uint32_t m = C.coeff.rank;
    std::uint32_t ri = C.rank(i);
    std::uint32_t ambient = ri * m;
    if (ambient == 0) return make_subquotient(ring, 0, {}, {});
    FpModule here = direct_sum_power(C.coeff, ri);

    std::vector<PolyRow> zgens;
    std::uint32_t rnext = C.rank(i + 1);
    if (rnext == 0) {
        for (std::uint32_t j = 0; j < ambient; ++j) {
            PolyRow e(ambient, Poly::zero(ring->ctx));
            e[j] = Poly::constant(ring->ctx, 1);
            zgens.push_back(std::move(e));
        }
    } else {
        PolyMat big = expand_matrix(C.d(i), m);
        FpModule next = direct_sum_power(C.coeff, rnext);
        std::vector<PolyRow> vecs;
        for (std::uint32_t j = 0; j < ambient; ++j) {
            PolyRow col(rnext * m, Poly::zero(ring->ctx));
            for (std::uint32_t r = 0; r < rnext * m; ++r) col[r] = big[r][j];
            vecs.push_back(std::move(col));
        }
        std::size_t ncols = vecs.size();
        vecs.insert(vecs.end(), next.rels.begin(), next.rels.end());
        auto syz = syzygies_over_ring(ring, rnext * m, vecs);
        for (const auto& s : syz) {
            PolyRow head(s.begin(), s.begin() + ncols);
            bool zero = true;
            for (const auto& f : head)
                if (!f.is_zero()) zero = false;
            if (!zero) zgens.push_back(std::move(head));
        }
    }
    std::vector<PolyRow> denom = here.rels;
    std::uint32_t rprev = C.rank(i - 1);
    if (rprev > 0) {
        PolyMat bigprev = expand_matrix(C.d(i - 1), m);
        for (std::uint32_t j = 0; j < rprev * m; ++j) {
            PolyRow col(ambient, Poly::zero(ring->ctx));
            for (std::uint32_t r = 0; r < ambient; ++r) col[r] = bigprev[r][j];
            denom.push_back(std::move(col));
        }
    }
    return make_subquotient(ring, ambient, zgens, denom);
}

Subquotient cohomology_sub(const FreeComplex& C, int i) {
    return mc_cohomology(tensor_with_module(C, FpModule::free_module(C.ring, 1)), i);
}

FpModule cohomology(const FreeComplex& C, int i) { return cohomology_sub(C, i).mod; }

PolyMat express_in_subquotient(const std::vector<PolyRow>& vecs, const Subquotient& sq) {
    const RingPtr& ring = sq.mod.ring;
    std::uint32_t n = sq.mod.rank;
    PolyMat out = mat_zero(ring, n, static_cast<std::uint32_t>(vecs.size()));
    if (vecs.empty()) return out;
    if (sq.ambient == 0) return out;

    std::vector<PolyRow> inputs = sq.gens;
    inputs.insert(inputs.end(), sq.denom.begin(), sq.denom.end());
    for (const auto& g : ring->rel_gens())
        for (std::uint32_t i = 0; i < sq.ambient; ++i) {
            PolyRow row(sq.ambient, Poly::zero(ring->ctx));
            row[i] = g;
            inputs.push_back(std::move(row));
        }
    std::vector<MVec> mv;
    for (const auto& v : inputs) {
        MVec m = MVec::from_polys(v);
        m.ctx = ring->ctx;
        mv.push_back(std::move(m));
    }
    TrackedGB tgb = buchberger_tracked(ring->ctx, sq.ambient, mv);
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        MVec v = MVec::from_polys(vecs[j]);
        v.ctx = ring->ctx;
        MVec rem = MVec::zero(ring->ctx, sq.ambient);
        auto cof = express(v, tgb, &rem);
        if (!rem.is_zero()) throw DomainError("element not in the subquotient");
        for (std::uint32_t i = 0; i < n; ++i) out[i][j] = ring->reduce(cof[i]);
    }
    return out;
}

ModuleMap induced_map(const ChainMap& f, int i) {
    Subquotient hs = cohomology_sub(f.src, i);
    Subquotient ht = cohomology_sub(f.tgt, i);
    std::vector<PolyRow> images;
    PolyMat fm = f.at(i);
    for (const auto& g : hs.gens) images.push_back(apply_mat(f.tgt.ring, fm, g));
    PolyMat mat = express_in_subquotient(images, ht);
    return ModuleMap::make(hs.mod, ht.mod, std::move(mat));
}

ModuleMap mc_induced_map(const std::map<int, PolyMat>& shape_map,
                         const ModuleComplex& src, const ModuleComplex& tgt, int i) {
    std::map<int, PolyMat> big;
    auto it = shape_map.find(i);
    if (it != shape_map.end()) big[i] = expand_matrix(it->second, src.coeff.rank);
    return mc_induced_map_expanded(big, src, tgt, i);
}

ModuleMap mc_induced_map_expanded(const std::map<int, PolyMat>& big_map,
                                  const ModuleComplex& src, const ModuleComplex& tgt,
                                  int i) {
    Subquotient hs = mc_cohomology(src, i);
    Subquotient ht = mc_cohomology(tgt, i);
    const RingPtr& ring = tgt.coeff.ring;
    std::vector<PolyRow> images;
    auto it = big_map.find(i);
    for (const auto& g : hs.gens) {
        if (it == big_map.end()) {
            images.push_back(PolyRow(ht.ambient, Poly::zero(ring->ctx)));
        } else {
            images.push_back(apply_mat(ring, it->second, g));
        }
    }
    PolyMat mat = express_in_subquotient(images, ht);
    return ModuleMap::make(hs.mod, ht.mod, std::move(mat));
}

bool acyclic_in_window(const FreeComplex& C, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (!cohomology(C, i).is_zero_module()) return false;
    return true;
}

bool quasi_iso_via_cone(const ChainMap& f, int lo, int hi) {
    return acyclic_in_window(cone(f), lo, hi);
}

bool quasi_iso_via_induced(const ChainMap& f, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (!inverse_of(induced_map(f, i)).has_value()) return false;
    return true;
}

} // namespace adicert
