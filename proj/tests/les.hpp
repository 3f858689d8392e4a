// Long-exact-sequence audit for mapping cones, shared between the unit
// tests and the acceptance suite. All checks are membership-based.
#pragma once

#include "helpers.hpp"

namespace th {

inline ChainMap scalar_map(const FreeComplex& C, const Poly& g) {
    ChainMap f;
    f.src = C;
    f.tgt = C;
    for (int n = C.lo; n <= C.hi; ++n)
        if (C.rank(n) > 0)
            f.comp[n] = mat_scale(mat_identity(C.ring, C.rank(n)), g);
    f.validate();
    return f;
}

// tgt -> cone(f), the strict inclusion y |-> (0, y)
inline ChainMap cone_inclusion(const ChainMap& f, const FreeComplex& cn) {
    ChainMap inc;
    inc.src = f.tgt;
    inc.tgt = cn;
    for (int n = cn.lo; n <= cn.hi; ++n) {
        std::uint32_t s1 = f.src.rank(n + 1), t = f.tgt.rank(n);
        if (t == 0) continue;
        PolyMat m = mat_zero(cn.ring, s1 + t, t);
        for (std::uint32_t i = 0; i < t; ++i)
            m[s1 + i][i] = Poly::constant(cn.ring->ctx, 1);
        inc.comp[n] = m;
    }
    inc.validate();
    return inc;
}

// cone(f) -> shift(src, 1), the strict projection (x, y) |-> x
inline ChainMap cone_projection(const ChainMap& f, const FreeComplex& cn,
                                const FreeComplex& shifted_src) {
    ChainMap pr;
    pr.src = cn;
    pr.tgt = shifted_src;
    for (int n = cn.lo; n <= cn.hi; ++n) {
        std::uint32_t s1 = f.src.rank(n + 1), t = f.tgt.rank(n);
        if (s1 == 0) continue;
        PolyMat m = mat_zero(cn.ring, s1, s1 + t);
        for (std::uint32_t i = 0; i < s1; ++i)
            m[i][i] = Poly::constant(cn.ring->ctx, 1);
        pr.comp[n] = m;
    }
    pr.validate();
    return pr;
}

// ker(g) inside the presentation of g.src lies in the column span of f.mat
inline bool exact_at(const ModuleMap& f, const ModuleMap& g) {
    if (!g.compose_after(f).is_zero_map()) return false;
    const FpModule& Y = f.tgt;
    std::vector<PolyRow> span;
    for (std::uint32_t j = 0; j < f.src.rank; ++j) {
        PolyRow col(Y.rank);
        for (std::uint32_t i = 0; i < Y.rank; ++i) col[i] = f.mat[i][j];
        span.push_back(col);
    }
    for (const auto& r : Y.rels) span.push_back(r);
    for (const auto& k : kernel(g).gens)
        if (!in_span(Y.ring, Y.rank, k, span)) return false;
    return true;
}

// identification H^n(shift(C,1)) = H^{n+1}(C): both are subquotients of the
// same free module, so the map is written by expressing generators
inline ModuleMap shift_identification(const FreeComplex& shifted,
                                      const FreeComplex& C, int n) {
    Subquotient a = cohomology_sub(shifted, n);
    Subquotient b = cohomology_sub(C, n + 1);
    // already in map convention: row per b-generator, column per input vector
    PolyMat m = express_in_subquotient(a.gens, b);
    return ModuleMap::make(a.mod, b.mod, m);
}

// exactness of H^n(src) -> H^n(tgt) -> H^n(cone) -> H^{n+1}(src) -> H^{n+1}(tgt)
inline bool cone_les_ok(const ChainMap& f) {
    FreeComplex cn = cone(f);
    FreeComplex sh = shift_complex(f.src, 1);
    ChainMap inc = cone_inclusion(f, cn);
    ChainMap pr = cone_projection(f, cn, sh);
    int lo = std::min(cn.lo, std::min(f.src.lo - 1, f.tgt.lo)) - 1;
    int hi = std::max(cn.hi, std::max(f.src.hi, f.tgt.hi)) + 1;
    for (int n = lo; n <= hi; ++n) {
        ModuleMap fh = induced_map(f, n);
        ModuleMap ih = induced_map(inc, n);
        ModuleMap ph = induced_map(pr, n);
        ModuleMap conn = shift_identification(sh, f.src, n).compose_after(ph);
        ModuleMap fh1 = induced_map(f, n + 1);
        if (!exact_at(fh, ih)) return false;
        if (!exact_at(ih, conn)) return false;
        if (!exact_at(conn, fh1)) return false;
    }
    return true;
}

} // namespace th
