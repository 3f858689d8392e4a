/*
 * session.hpp
 * -----------
 * Batch session scripts: declarations (ring / ideal / seq / module /
 * complex) followed by commands, one statement per line, '#' comments.
 * Execution produces a JSON report; the exit code summarizes the verdicts.
 *
 *   ring A = Q[x,y] / (x*y)          field: Q or Fp:<prime>
 *   ideal a = (x) in A
 *   seq b = (x^2, y^2) in A
 *   module M = A^2 / [x,0; 0,x^2]    also: A^2 (free), A/(x^2) (cyclic)
 *   complex C = koszul(A; x, y)      also: concentrated(A^2, 0)
 *
 *   wpr a=a J=4
 *   koszul a=a j=2
 *   complete M=M a=a kmax=4
 *   lift M=M a=a phi=[1-x] n=[1] k=3
 *   flat P=M a=a kmax=3 tor_depth=2
 *   torsion M=M a=a bound=4
 *   derived-complete M=M a=a J=4
 *   derived-torsion M=M a=a J=4
 *   compare-completion a=a b=b kmax=4
 *   nakayama-derived P=C a=a r=1
 *   base-change a=a vars=z,w J=4
 */
#pragma once

#include "adicert/derived.hpp"

namespace adicert {

struct Report {
    nlohmann::json json;
    int exit_code = 0; // 0 ok, 1 violation, 2 inconclusive, 64 parse/usage
};

struct SessionOptions {
    unsigned J = 4;       // default tower bound when a command omits J/bound
    unsigned kmax = 4;    // default truncation level
    std::string order;    // "", "grevlex" or "lex": override for all rings
    std::string field;    // "", "Q" or "Fp:<p>": override for all rings
};

Report run_session_text(const std::string& text, const SessionOptions& opt = {});
Report run_session_file(const std::string& path, const SessionOptions& opt = {});

// replayable narrative of one command's certificate evidence
std::string explain(const nlohmann::json& report, const std::string& command_id);

// timing fields removed, for byte-identical comparison of reports
nlohmann::json strip_timings(nlohmann::json report);

} // namespace adicert
