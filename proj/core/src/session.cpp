#include "adicert/session.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace adicert {

namespace {

using nlohmann::json;

struct SessionParseError {
    std::string message;
    unsigned line = 0;
    unsigned col = 0;
};

[[noreturn]] void fail(unsigned line, unsigned col, const std::string& msg) {
    throw SessionParseError{msg, line, col};
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// split on a separator at paren/bracket depth zero
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct SessionState {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, IdealSpec> ideals; // ideal and seq declarations
    std::map<std::string, FpModule> modules;
    std::map<std::string, FreeComplex> complexes;

    bool name_taken(const std::string& n) const {
        return rings.count(n) || ideals.count(n) || modules.count(n) ||
               complexes.count(n);
    }
};

const RingPtr& need_ring(const SessionState& st, const std::string& n, unsigned line) {
    auto it = st.rings.find(n);
    if (it == st.rings.end()) fail(line, 0, "unknown ring '" + n + "'");
    return it->second;
}

const IdealSpec& need_ideal(const SessionState& st, const std::string& n,
                            unsigned line) {
    auto it = st.ideals.find(n);
    if (it == st.ideals.end()) fail(line, 0, "unknown ideal/seq '" + n + "'");
    return it->second;
}

const FpModule& need_module(const SessionState& st, const std::string& n,
                            unsigned line) {
    auto it = st.modules.find(n);
    if (it == st.modules.end()) fail(line, 0, "unknown module '" + n + "'");
    return it->second;
}

const FreeComplex& need_complex(const SessionState& st, const std::string& n,
                                unsigned line) {
    auto it = st.complexes.find(n);
    if (it == st.complexes.end()) fail(line, 0, "unknown complex '" + n + "'");
    return it->second;
}

std::vector<Poly> parse_poly_list(const std::string& inner, const RingPtr& ring,
                                  unsigned line) {
    std::vector<Poly> out;
    for (const auto& part : split_top(inner, ',')) {
        if (part.empty()) fail(line, 0, "empty entry in polynomial list");
        try {
            out.push_back(ring->reduce(parse_polynomial(part, ring->ctx)));
        } catch (const ParseError& e) {
            fail(line, static_cast<unsigned>(e.position),
                 "in '" + part + "': " + e.what());
        }
    }
    return out;
}

// "[a,b; c,d]" -> rows of polynomials
std::vector<std::vector<Poly>> parse_matrix(const std::string& text,
                                            const RingPtr& ring, unsigned line) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail(line, 0, "expected a bracketed matrix, got '" + text + "'");
    std::vector<std::vector<Poly>> rows;
    for (const auto& row : split_top(s.substr(1, s.size() - 2), ';'))
        rows.push_back(parse_poly_list(row, ring, line));
    return rows;
}

unsigned parse_uint(const std::string& s, unsigned line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument("");
        return static_cast<unsigned>(v);
    } catch (...) {
        fail(line, 0, "expected a nonnegative integer for " + what + ", got '" + s +
                          "'");
    }
}

// ------------------------------------------------------------ declarations

void declare_ring(SessionState& st, const std::string& name, const std::string& rhs,
                  unsigned line, const SessionOptions& opt) {
    // FIELD[v1,...] possibly followed by / (relations)
    std::string body = rhs, rels;
    auto slash = split_top(rhs, '/');
    if (slash.size() > 2) fail(line, 0, "too many '/' in ring declaration");
    body = slash[0];
    if (slash.size() == 2) rels = slash[1];

    std::size_t lb = body.find('[');
    std::size_t rb = body.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        fail(line, 0, "expected FIELD[vars] in ring declaration");
    std::string field = trim(body.substr(0, lb));
    if (!opt.field.empty()) field = opt.field;
    std::uint32_t p = 0;
    if (field == "Q") {
        p = 0;
    } else if (field.rfind("Fp:", 0) == 0) {
        p = parse_uint(field.substr(3), line, "characteristic");
        if (!is_prime_u32(p)) fail(line, 0, "characteristic must be prime");
    } else {
        fail(line, 0, "unknown coefficient field '" + field + "' (use Q or Fp:<p>)");
    }
    std::vector<std::string> vars;
    for (const auto& v : split_top(body.substr(lb + 1, rb - lb - 1), ',')) {
        if (v.empty()) fail(line, 0, "empty variable name");
        vars.push_back(v);
    }
    OrderKind ord = OrderKind::Grevlex;
    if (opt.order == "lex") ord = OrderKind::Lex;
    else if (!opt.order.empty() && opt.order != "grevlex")
        fail(line, 0, "unknown monomial order '" + opt.order + "'");
    CtxPtr ctx = make_ctx(vars, p, ord);
    std::vector<Poly> relations;
    if (!rels.empty()) {
        std::string r = trim(rels);
        if (r.size() < 2 || r.front() != '(' || r.back() != ')')
            fail(line, 0, "ring relations must be parenthesized");
        RingPtr free_ring = make_quotient_ring(ctx, {});
        relations = parse_poly_list(r.substr(1, r.size() - 2), free_ring, line);
    }
    st.rings[name] = make_quotient_ring(ctx, relations);
}

void declare_ideal(SessionState& st, const std::string& name, const std::string& rhs,
                   unsigned line) {
    // (f1, ..., fk) in RING
    std::size_t in_pos = rhs.rfind(" in ");
    if (in_pos == std::string::npos)
        fail(line, 0, "expected '(generators) in RING'");
    std::string gens = trim(rhs.substr(0, in_pos));
    std::string rname = trim(rhs.substr(in_pos + 4));
    const RingPtr& ring = need_ring(st, rname, line);
    if (gens.size() < 2 || gens.front() != '(' || gens.back() != ')')
        fail(line, 0, "generators must be parenthesized");
    auto polys = parse_poly_list(gens.substr(1, gens.size() - 2), ring, line);
    st.ideals[name] = IdealSpec::make(ring, polys);
}

void declare_module(SessionState& st, const std::string& name, const std::string& rhs,
                    unsigned line) {
    auto slash = split_top(rhs, '/');
    if (slash.size() > 2) fail(line, 0, "too many '/' in module declaration");
    std::string head = slash[0];
    std::uint32_t rank = 1;
    std::string rname = head;
    std::size_t caret = head.find('^');
    if (caret != std::string::npos) {
        rname = trim(head.substr(0, caret));
        rank = parse_uint(trim(head.substr(caret + 1)), line, "module rank");
    }
    const RingPtr& ring = need_ring(st, trim(rname), line);
    if (slash.size() == 1) {
        st.modules[name] = FpModule::free_module(ring, rank);
        return;
    }
    std::string rel = trim(slash[1]);
    if (!rel.empty() && rel.front() == '(') {
        if (caret != std::string::npos && rank != 1)
            fail(line, 0, "cyclic form A/(...) requires rank 1");
        if (rel.back() != ')') fail(line, 0, "unbalanced parentheses");
        auto gens = parse_poly_list(rel.substr(1, rel.size() - 2), ring, line);
        st.modules[name] = FpModule::cyclic(ring, gens);
        return;
    }
    auto rows = parse_matrix(rel, ring, line);
    for (const auto& r : rows)
        if (r.size() != rank)
            fail(line, 0, "relation row width does not match the rank");
    FpModule m{ring, rank, rows};
    st.modules[name] = m.reduced();
}

void declare_complex(SessionState& st, const std::string& name, const std::string& rhs,
                     unsigned line) {
    std::string s = trim(rhs);
    if (s.rfind("koszul(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(7, s.size() - 8);
        auto parts = split_top(inner, ';');
        if (parts.size() != 2) fail(line, 0, "expected koszul(RING; f1, ..., fp)");
        const RingPtr& ring = need_ring(st, parts[0], line);
        auto seq = parse_poly_list(parts[1], ring, line);
        st.complexes[name] = koszul_complex(KoszulSpec::make(ring, seq, 1));
        return;
    }
    if (s.rfind("concentrated(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(13, s.size() - 14);
        auto parts = split_top(inner, ',');
        if (parts.size() != 2) fail(line, 0, "expected concentrated(RING^r, degree)");
        std::string head = parts[0];
        std::uint32_t rank = 1;
        std::string rname = head;
        std::size_t caret = head.find('^');
        if (caret != std::string::npos) {
            rname = trim(head.substr(0, caret));
            rank = parse_uint(trim(head.substr(caret + 1)), line, "rank");
        }
        const RingPtr& ring = need_ring(st, trim(rname), line);
        int deg = 0;
        try {
            deg = std::stoi(parts[1]);
        } catch (...) {
            fail(line, 0, "bad degree '" + parts[1] + "'");
        }
        st.complexes[name] = FreeComplex::concentrated(ring, rank, deg);
        return;
    }
    fail(line, 0, "unknown complex constructor (use koszul(...) or concentrated(...))");
}

// ---------------------------------------------------------------- commands

using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& tokens, unsigned line) {
    Params p;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos)
            fail(line, 0, "expected key=value, got '" + tokens[i] + "'");
        std::string k = tokens[i].substr(0, eq);
        if (p.count(k)) fail(line, 0, "duplicate parameter '" + k + "'");
        p[k] = tokens[i].substr(eq + 1);
    }
    return p;
}

std::string need_param(const Params& p, const std::string& k, unsigned line) {
    auto it = p.find(k);
    if (it == p.end()) fail(line, 0, "missing parameter '" + k + "'");
    return it->second;
}

unsigned uint_param(const Params& p, const std::string& k, unsigned line,
                    unsigned dflt) {
    auto it = p.find(k);
    if (it == p.end()) return dflt;
    return parse_uint(it->second, line, k);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, unsigned line) {
    if (!same_ring(a, b))
        fail(line, 0, "objects live over different rings");
}

json cert_json(const Certificate& c) { return c.to_json(); }

json module_json(const FpModule& m) {
    json j;
    j["presentation"] = m.str();
    j["is_zero"] = m.is_zero_module();
    return j;
}

json derived_json(const DerivedValue& dv) {
    json per = json::object();
    for (const auto& [i, d] : dv.degrees) {
        json e;
        e["certificate"] = cert_json(d.cert);
        if (d.value) e["value"] = module_json(*d.value);
        per[std::to_string(i)] = e;
    }
    json j;
    j["degrees"] = per;
    j["all_certified"] = dv.all_certified();
    return j;
}

std::string row_str(const PolyRow& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

// verdict categories aggregated into the exit code
enum class Outcome { Ok, Violation, Inconclusive };

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Ok: return "ok";
    case Outcome::Violation: return "violation";
    case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

Outcome run_command(SessionState& st, const std::string& cmd, const Params& p,
                    unsigned line, unsigned dJ, unsigned dkmax, json& detail) {
    if (cmd == "wpr") {
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        unsigned J = uint_param(p, "J", line, dJ);
        WprReport r = wpr_check(a.ring, a, J);
        json per = json::object();
        for (const auto& [i, c] : r.per_degree) per[std::to_string(i)] = cert_json(c);
        detail["per_degree"] = per;
        detail["certified"] = r.certified;
        return r.certified ? Outcome::Ok : Outcome::Inconclusive;
    }
    if (cmd == "koszul") {
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        unsigned j = uint_param(p, "j", line, 1);
        FreeComplex K = koszul_complex(KoszulSpec::make(a.ring, a.gens, j));
        json ranks = json::object(), coh = json::object();
        for (int i = K.lo; i <= K.hi; ++i) {
            ranks[std::to_string(i)] = K.rank(i);
            coh[std::to_string(i)] = module_json(cohomology(K, i));
        }
        detail["ranks"] = ranks;
        detail["cohomology"] = coh;
        return Outcome::Ok;
    }
    if (cmd == "complete") {
        const FpModule& M = need_module(st, need_param(p, "M", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(M.ring, a.ring, line);
        unsigned kmax = uint_param(p, "kmax", line, dkmax);
        CompletionTower t = completion_tower(M, a, kmax);
        json lv = json::array();
        for (unsigned k = 0; k <= kmax; ++k)
            lv.push_back(module_json(t.level_mod(k)));
        detail["levels"] = lv;
        detail["stabilization"] = cert_json(stabilization(t.tower, kmax + 1));
        return Outcome::Ok;
    }
    if (cmd == "lift") {
        const FpModule& M = need_module(st, need_param(p, "M", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(M.ring, a.ring, line);
        unsigned k = uint_param(p, "k", line, dkmax);
        auto mat = parse_matrix(need_param(p, "phi", line), M.ring, line);
        auto nrows = parse_matrix(need_param(p, "n", line), M.ring, line);
        if (nrows.size() != 1 || nrows[0].size() != M.rank)
            fail(line, 0, "n must be a single row of length the module rank");
        ModuleMap phi = ModuleMap::make(M, M, mat);
        NakayamaLift nl = nakayama_lift(phi, a, nrows[0], k);
        detail["ok"] = nl.ok;
        if (nl.ok) {
            detail["lift"] = row_str(nl.lift);
            json cs = json::array();
            for (const auto& c : nl.corrections) cs.push_back(row_str(c));
            detail["corrections"] = cs;
            json rs = json::array();
            for (const auto& r : nl.residuals) rs.push_back(row_str(r));
            detail["residuals"] = rs;
            return Outcome::Ok;
        }
        detail["message"] = nl.message;
        if (!nl.coker_witness.empty())
            detail["cokernel_witness"] = row_str(nl.coker_witness);
        return Outcome::Violation;
    }
    if (cmd == "flat") {
        const FpModule& P = need_module(st, need_param(p, "P", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(P.ring, a.ring, line);
        unsigned kmax = uint_param(p, "kmax", line, dkmax);
        unsigned depth =
            uint_param(p, "tor_depth", line, static_cast<unsigned>(a.size()));
        FlatReport r = adically_flat_check(P, a, kmax, depth);
        detail["consistent"] = r.consistent;
        json vs = json::array();
        for (const auto& v : r.violations)
            vs.push_back({{"level", v.level},
                          {"tor_degree", v.tor_degree},
                          {"detail", v.detail}});
        detail["violations"] = vs;
        json pj = json::array();
        for (auto v : r.level_projectivity)
            pj.push_back(v == ProjVerdict::Yes          ? "yes"
                         : v == ProjVerdict::No         ? "no"
                                                        : "inconclusive");
        detail["level_projectivity"] = pj;
        return r.consistent ? Outcome::Ok : Outcome::Violation;
    }
    if (cmd == "torsion") {
        const FpModule& M = need_module(st, need_param(p, "M", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(M.ring, a.ring, line);
        unsigned bound = uint_param(p, "bound", line, dJ);
        TorsionResult r = torsion_submodule(M, a, bound);
        detail["certificate"] = cert_json(r.cert);
        detail["module"] = module_json(r.module);
        detail["is_all_of_m"] = r.is_all_of_m;
        return r.cert.verdict == Verdict::Stabilized ? Outcome::Ok
                                                     : Outcome::Inconclusive;
    }
    if (cmd == "derived-complete") {
        const FpModule& M = need_module(st, need_param(p, "M", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(M.ring, a.ring, line);
        unsigned J = uint_param(p, "J", line, dJ);
        DerivedValue dv = derived_completion(M, a, J);
        detail = derived_json(dv);
        return dv.all_certified() ? Outcome::Ok : Outcome::Inconclusive;
    }
    if (cmd == "derived-torsion") {
        const FpModule& M = need_module(st, need_param(p, "M", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(M.ring, a.ring, line);
        unsigned J = uint_param(p, "J", line, dJ);
        DerivedValue dv = derived_torsion(M, a, J);
        detail = derived_json(dv);
        return dv.all_certified() ? Outcome::Ok : Outcome::Inconclusive;
    }
    if (cmd == "compare-completion") {
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        const IdealSpec& b = need_ideal(st, need_param(p, "b", line), line);
        if (!same_ring(a.ring, b.ring))
            fail(line, 0, "a and b must live in the same ring");
        unsigned kmax = uint_param(p, "kmax", line, dkmax);
        CompareReport r = completion_koszul_compare(a.ring, a, b.gens, kmax);
        detail["refused"] = r.refused;
        detail["certified"] = r.certified;
        if (!r.message.empty()) detail["message"] = r.message;
        if (r.refused) {
            detail["witness"] = r.witness.str();
            return Outcome::Violation;
        }
        json inj = json::object(), cok = json::object();
        for (const auto& [i, k] : r.injective_from) inj[std::to_string(i)] = k;
        for (const auto& [i, c] : r.coker_certs) cok[std::to_string(i)] = cert_json(c);
        detail["injective_from"] = inj;
        detail["cokernel_towers"] = cok;
        detail["quotient_match_level"] = r.quotient_match_level;
        detail["quotient_match_ok"] = r.quotient_match_ok;
        return r.certified ? Outcome::Ok : Outcome::Inconclusive;
    }
    if (cmd == "nakayama-derived") {
        const FreeComplex& P = need_complex(st, need_param(p, "P", line), line);
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        require_same_ring(P.ring, a.ring, line);
        unsigned r = uint_param(p, "r", line, 1);
        NakayamaCheck c = derived_nakayama_check(P, a, r);
        detail["refused"] = c.refused;
        if (c.refused) {
            detail["message"] = c.message;
            return Outcome::Inconclusive;
        }
        detail["verdict"] = tri_name(c.verdict);
        detail["top_degree"] = c.top_degree;
        detail["g0"] = c.g0;
        detail["g0_cross"] = c.g0_cross;
        detail["kunneth_ok"] = c.kunneth_ok;
        if (!c.message.empty()) detail["message"] = c.message;
        if (c.verdict == TriVerdict::Yes) return Outcome::Ok;
        if (c.verdict == TriVerdict::No) return Outcome::Violation;
        return Outcome::Inconclusive;
    }
    if (cmd == "base-change") {
        const IdealSpec& a = need_ideal(st, need_param(p, "a", line), line);
        unsigned J = uint_param(p, "J", line, dJ);
        std::vector<std::string> vars;
        for (const auto& v : split_top(need_param(p, "vars", line), ','))
            vars.push_back(v);
        BaseChangeReport r = flat_base_change_wpr(a.ring, a, vars, J);
        detail["base_certified"] = r.base.certified;
        detail["extended_certified"] = r.extended.certified;
        detail["offsets_preserved"] = r.offsets_preserved;
        json per = json::object();
        for (const auto& [i, c] : r.extended.per_degree)
            per[std::to_string(i)] = cert_json(c);
        detail["extended_per_degree"] = per;
        bool ok = r.base.certified && r.extended.certified && r.offsets_preserved;
        return ok ? Outcome::Ok : Outcome::Inconclusive;
    }
    fail(line, 0, "unknown command '" + cmd + "'");
}

} // namespace

Report run_session_text(const std::string& text, const SessionOptions& opt) {
    const unsigned default_J = opt.J;
    const unsigned default_kmax = opt.kmax;
    Report rep;
    rep.json["schema_version"] = 1;
    json commands = json::array();
    SessionState st;
    Outcome worst = Outcome::Ok;

    std::istringstream is(text);
    std::string raw;
    unsigned lineno = 0;
    unsigned cmd_index = 0;
    try {
        while (std::getline(is, raw)) {
            ++lineno;
            std::string line = raw;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;

            std::istringstream ls(line);
            std::string kw;
            ls >> kw;
            if (kw == "ring" || kw == "ideal" || kw == "seq" || kw == "module" ||
                kw == "complex") {
                std::string rest;
                std::getline(ls, rest);
                std::size_t eq = rest.find('=');
                if (eq == std::string::npos)
                    fail(lineno, 0, "expected NAME = ... in declaration");
                std::string name = trim(rest.substr(0, eq));
                std::string rhs = trim(rest.substr(eq + 1));
                if (name.empty()) fail(lineno, 0, "missing declaration name");
                if (st.name_taken(name))
                    fail(lineno, 0, "name '" + name + "' already declared");
                if (kw == "ring") declare_ring(st, name, rhs, lineno, opt);
                else if (kw == "ideal" || kw == "seq") declare_ideal(st, name, rhs, lineno);
                else if (kw == "module") declare_module(st, name, rhs, lineno);
                else declare_complex(st, name, rhs, lineno);
                continue;
            }

            // a command line
            std::vector<std::string> tokens;
            tokens.push_back(kw);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            Params params = parse_params(tokens, lineno);

            json entry;
            ++cmd_index;
            entry["id"] = "c" + std::to_string(cmd_index);
            entry["line"] = lineno;
            entry["command"] = kw;
            json pe = json::object();
            for (const auto& [k, v] : params) pe[k] = v;
            entry["params"] = pe;
            json detail = json::object();
            auto t0 = std::chrono::steady_clock::now();
            Outcome o;
            try {
                o = run_command(st, kw, params, lineno, default_J, default_kmax,
                                detail);
            } catch (const DomainError& e) {
                o = Outcome::Violation;
                detail["error"] = e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            entry["verdict"] = outcome_name(o);
            entry["detail"] = detail;
            entry["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                    .count();
            commands.push_back(entry);
            if (o == Outcome::Violation) worst = Outcome::Violation;
            else if (o == Outcome::Inconclusive && worst == Outcome::Ok)
                worst = Outcome::Inconclusive;
        }
    } catch (const SessionParseError& e) {
        rep.json["error"] = {{"message", e.message},
                             {"line", e.line},
                             {"col", e.col}};
        rep.json["commands"] = commands;
        rep.exit_code = 64;
        return rep;
    }

    rep.json["commands"] = commands;
    rep.exit_code = worst == Outcome::Ok            ? 0
                    : worst == Outcome::Violation   ? 1
                                                    : 2;
    return rep;
}

Report run_session_file(const std::string& path, const SessionOptions& opt) {
    std::ifstream f(path);
    if (!f) {
        Report rep;
        rep.json["error"] = {{"message", "cannot open '" + path + "'"},
                             {"line", 0},
                             {"col", 0}};
        rep.exit_code = 64;
        return rep;
    }
    std::ostringstream os;
    os << f.rdbuf();
    return run_session_text(os.str(), opt);
}

namespace {

void explain_certificate(std::ostringstream& os, const json& c,
                         const std::string& indent) {
    std::string verdict = c.value("verdict", "?");
    if (verdict == "pro-zero") {
        os << indent << "pro-zero at bound " << c.value("bound", 0u) << ":\n";
        for (const auto& w : c.value("witnesses", json::array()))
            os << indent << "  level " << w.value("j1", 0u) << " -> "
               << w.value("j0", 0u) << ": composite = 0 (verified)\n";
    } else if (verdict == "stabilized") {
        os << indent << "stabilized from level " << c.value("stable_from", 0u)
           << " at bound " << c.value("bound", 0u) << ":\n";
        for (const auto& w : c.value("inverses", json::array()))
            os << indent << "  level " << w.value("level", 0u)
               << ": transition invertible (inverse hash "
               << w.value("inverse_hash", std::string("?")) << ")\n";
    } else if (verdict == "inconclusive") {
        os << indent << "inconclusive at bound " << c.value("bound", 0u);
        if (c.contains("blocking_level"))
            os << "; smallest unwitnessed level: " << c["blocking_level"].get<unsigned>();
        os << "\n";
    } else {
        os << indent << verdict << "\n";
    }
}

} // namespace

std::string explain(const nlohmann::json& report, const std::string& command_id) {
    if (!report.contains("commands"))
        throw DomainError("report has no commands");
    for (const auto& entry : report["commands"]) {
        if (entry.value("id", std::string()) != command_id) continue;
        std::ostringstream os;
        os << command_id << ": " << entry.value("command", std::string()) << " -> "
           << entry.value("verdict", std::string()) << "\n";
        const json& d = entry.value("detail", json::object());
        for (const auto& key : {"per_degree", "degrees", "cokernel_towers",
                                "extended_per_degree"}) {
            if (!d.contains(key)) continue;
            for (const auto& [deg, val] : d[key].items()) {
                os << "  degree " << deg << ":\n";
                if (val.contains("certificate"))
                    explain_certificate(os, val["certificate"], "    ");
                else
                    explain_certificate(os, val, "    ");
                if (val.contains("value"))
                    os << "    value: " << val["value"].value("presentation",
                                                              std::string())
                       << "\n";
            }
        }
        if (d.contains("certificate")) explain_certificate(os, d["certificate"], "  ");
        if (d.contains("corrections")) {
            os << "  corrections:\n";
            unsigned i = 0;
            for (const auto& c : d["corrections"])
                os << "    m_" << i++ << " = " << c.get<std::string>() << "\n";
            if (d.contains("residuals")) {
                os << "  residuals (each verified in the next ideal power):\n";
                i = 0;
                for (const auto& r : d["residuals"])
                    os << "    r_" << ++i << " = " << r.get<std::string>() << "\n";
            }
        }
        if (d.contains("violations"))
            for (const auto& v : d["violations"])
                os << "  violation: " << v.value("detail", std::string()) << "\n";
        if (d.contains("message"))
            os << "  note: " << d["message"].get<std::string>() << "\n";
        return os.str();
    }
    throw DomainError("unknown command id '" + command_id + "'");
}

nlohmann::json strip_timings(nlohmann::json report) {
    if (report.contains("commands"))
        for (auto& entry : report["commands"]) entry.erase("elapsed_ms");
    return report;
}

} // namespace adicert
