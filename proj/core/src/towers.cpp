#include "adicert/towers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace adicert {

const FpModule& ModuleTower::level(unsigned j) const {
    if (j < 1 || j > levels.size()) throw DomainError("tower level out of range");
    return levels[j - 1];
}

const ModuleMap& ModuleTower::step(unsigned j) const {
    if (j < 1 || j >= levels.size()) throw DomainError("tower transition out of range");
    return transitions[j - 1];
}

ModuleMap ModuleTower::composite(unsigned j1, unsigned j0) const {
    if (j0 < 1 || j1 > levels.size() || j1 < j0)
        throw DomainError("tower composite out of range");
    if (j1 == j0) return ModuleMap::identity(level(j0));
    if (kind == SystemKind::Inverse) {
        ModuleMap f = step(j1 - 1); // level j1 -> j1-1
        for (unsigned j = j1 - 1; j > j0; --j) f = step(j - 1).compose_after(f);
        return f;
    }
    ModuleMap f = step(j0); // level j0 -> j0+1
    for (unsigned j = j0 + 1; j < j1; ++j) f = step(j).compose_after(f);
    return f;
}

void ModuleTower::validate() const {
    if (levels.size() >= 1 && transitions.size() + 1 != levels.size())
        throw DomainError("tower needs one transition per adjacent level pair");
    for (unsigned j = 1; j + 1 <= levels.size(); ++j) {
        const ModuleMap& t = step(j);
        const FpModule& hi = level(j + 1);
        const FpModule& lo = level(j);
        const FpModule& s = kind == SystemKind::Inverse ? hi : lo;
        const FpModule& g = kind == SystemKind::Inverse ? lo : hi;
        if (t.src.rank != s.rank || t.tgt.rank != g.rank)
            throw DomainError("tower transition shape mismatch at level " +
                              std::to_string(j));
    }
}

ModuleTower cohomology_tower(const ComplexTower& T, int i) {
    ModuleTower out;
    out.kind = SystemKind::Inverse;
    for (const auto& C : T.levels) out.levels.push_back(cohomology(C, i));
    for (const auto& f : T.transitions) out.transitions.push_back(induced_map(f, i));
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::ProZero: return "pro-zero";
    case Verdict::Stabilized: return "stabilized";
    case Verdict::NotProZeroUpTo: return "not-pro-zero-up-to";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

static std::string mat_digest(const PolyMat& m) {
    std::ostringstream os;
    for (const auto& row : m)
        for (const auto& f : row) os << f.str() << ";";
    std::ostringstream hex;
    hex << std::hex << std::hash<std::string>{}(os.str());
    return hex.str();
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["verdict"] = verdict_name(verdict);
    j["bound"] = bound;
    if (verdict == Verdict::ProZero) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& [j0, j1] : witnesses) w.push_back({{"j0", j0}, {"j1", j1}});
        j["witnesses"] = w;
    }
    if (verdict == Verdict::Stabilized) {
        j["stable_from"] = stable_from;
        nlohmann::json inv = nlohmann::json::array();
        for (const auto& [lvl, m] : inverses)
            inv.push_back({{"level", lvl}, {"inverse_hash", mat_digest(m)}});
        j["inverses"] = inv;
    }
    if (verdict == Verdict::Inconclusive && blocking_level > 0)
        j["blocking_level"] = blocking_level;
    return j;
}

bool Certificate::replay(const ModuleTower& T) const {
    if (verdict == Verdict::ProZero) {
        for (const auto& [j0, j1] : witnesses)
            if (!T.composite(j1, j0).is_zero_map()) return false;
        return true;
    }
    if (verdict == Verdict::Stabilized) {
        for (const auto& [lvl, inv] : inverses) {
            const ModuleMap& t = T.step(lvl);
            ModuleMap g = ModuleMap::make_unchecked(t.tgt, t.src, inv);
            if (!g.compose_after(t).is_identity_like()) return false;
            if (!t.compose_after(g).is_identity_like()) return false;
        }
        return true;
    }
    return true; // inconclusive certificates carry no positive claims
}

Certificate is_pro_zero_up_to(const ModuleTower& T, unsigned J) {
    if (J < 1 || J > T.J()) throw DomainError("pro-zero bound outside tower range");
    Certificate c;
    c.bound = J;
    // For each start level find the smallest zero composite within the bound.
    // A start level without a witness is tolerated only when the search was
    // cut off by the bound itself: its window is shorter than the largest
    // witnessed offset. Otherwise the failure is a real gap and the verdict
    // is inconclusive. A pro-zero certificate stays valid at larger bounds.
    unsigned omax = 0;
    std::vector<unsigned> unwitnessed;
    for (unsigned j0 = 1; j0 <= J; ++j0) {
        bool found = false;
        for (unsigned j1 = j0; j1 <= J; ++j1) {
            if (T.composite(j1, j0).is_zero_map()) {
                c.witnesses.push_back({j0, j1});
                omax = std::max(omax, j1 - j0);
                found = true;
                break;
            }
        }
        if (!found) unwitnessed.push_back(j0);
    }
    for (unsigned j0 : unwitnessed) {
        if (c.witnesses.empty() || j0 + omax <= J) {
            c.verdict = Verdict::Inconclusive;
            c.blocking_level = j0;
            c.witnesses.clear();
            return c;
        }
    }
    c.verdict = Verdict::ProZero;
    return c;
}

Certificate stabilization(const ModuleTower& T, unsigned J) {
    if (J < 2) throw DomainError("stabilization needs J >= 2");
    if (J > T.J()) throw DomainError("stabilization bound outside tower range");
    Certificate c;
    c.bound = J;
    // smallest s with every step between levels s..J invertible
    unsigned s = J;
    std::vector<std::pair<unsigned, PolyMat>> inv;
    for (unsigned j = J - 1; j >= 1; --j) {
        auto found = inverse_of(T.step(j));
        if (!found) {
            c.blocking_level = j;
            break;
        }
        inv.push_back({j, std::move(*found)});
        s = j;
    }
    if (s == J) {
        c.verdict = Verdict::Inconclusive;
        return c;
    }
    c.verdict = Verdict::Stabilized;
    c.stable_from = s;
    c.inverses.assign(inv.rbegin(), inv.rend());
    return c;
}

FpModule limit_under_certificate(const ModuleTower& T, const Certificate& c) {
    if (c.verdict == Verdict::Stabilized) return T.level(c.stable_from);
    if (c.verdict == Verdict::ProZero)
        return FpModule::zero_module(T.level(1).ring);
    throw DomainError("limit requires a pro-zero or stabilized certificate");
}

} // namespace adicert
