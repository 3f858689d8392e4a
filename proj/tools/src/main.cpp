// adicert: batch verification front door.
//
//   adicert run <script> [--json out.json] [--max-level J] [--kmax k]
//                        [--order grevlex|lex] [--field Q|Fp:p] [--threads n]
//   adicert explain <report.json> <command-id>
//
// Exit codes: 0 all verdicts ok, 1 violation witnessed, 2 inconclusive,
// 64 parse/usage error. ADICERT_CACHE_DIR, if set, caches reports keyed by
// the script contents and options (safe: reports are deterministic).

#include <adicert/session.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string cache_key(const std::string& script, const adicert::SessionOptions& o) {
    std::ostringstream os;
    os << o.J << '|' << o.kmax << '|' << o.order << '|' << o.field << '|' << script;
    std::ostringstream hex;
    hex << std::hex << std::hash<std::string>{}(os.str());
    return hex.str();
}

void print_summary(const nlohmann::json& report) {
    if (report.contains("error")) {
        const auto& e = report["error"];
        std::cerr << "parse error at line " << e.value("line", 0u) << ", col "
                  << e.value("col", 0u) << ": "
                  << e.value("message", std::string()) << "\n";
        return;
    }
    for (const auto& c : report.value("commands", nlohmann::json::array()))
        std::cout << c.value("id", std::string()) << "  "
                  << c.value("command", std::string()) << "  ->  "
                  << c.value("verdict", std::string()) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adicert: pro-zero / completion / derived-functor certification"};
    app.require_subcommand(1);

    std::string script_path, json_path, report_path, command_id;
    adicert::SessionOptions opt;
    unsigned threads = 1;

    auto* run = app.add_subcommand("run", "execute a session script");
    run->add_option("script", script_path, "session script file")->required();
    run->add_option("--json", json_path, "write the JSON report here");
    run->add_option("--max-level", opt.J, "default tower bound J");
    run->add_option("--kmax", opt.kmax, "default truncation level");
    run->add_option("--order", opt.order, "monomial order override (grevlex|lex)");
    run->add_option("--field", opt.field, "coefficient field override (Q|Fp:p)");
    run->add_option("--threads", threads,
                    "worker threads (commands currently run sequentially)");

    auto* explain_cmd = app.add_subcommand("explain", "narrate one command's evidence");
    explain_cmd->add_option("report", report_path, "JSON report file")->required();
    explain_cmd->add_option("command-id", command_id, "e.g. c1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (*run) {
            std::string script = slurp(script_path);

            const char* cache_dir = std::getenv("ADICERT_CACHE_DIR");
            std::filesystem::path cached;
            if (cache_dir && *cache_dir) {
                std::filesystem::create_directories(cache_dir);
                cached = std::filesystem::path(cache_dir) /
                         (cache_key(script, opt) + ".json");
            }

            adicert::Report rep;
            bool from_cache = false;
            if (!cached.empty() && std::filesystem::exists(cached)) {
                std::ifstream cf(cached);
                nlohmann::json stored = nlohmann::json::parse(cf);
                rep.json = stored["report"];
                rep.exit_code = stored["exit_code"].get<int>();
                from_cache = true;
            } else {
                rep = adicert::run_session_text(script, opt);
            }
            if (!cached.empty() && !from_cache && rep.exit_code != 64) {
                std::ofstream cf(cached);
                cf << nlohmann::json{{"report", rep.json},
                                     {"exit_code", rep.exit_code}}
                          .dump();
            }

            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << rep.json.dump(2) << "\n";
            }
            print_summary(rep.json);
            return rep.exit_code;
        }
        if (*explain_cmd) {
            nlohmann::json report = nlohmann::json::parse(slurp(report_path));
            if (report.contains("report")) report = report["report"];
            std::cout << adicert::explain(report, command_id);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}
