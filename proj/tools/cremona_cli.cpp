// Command-line front end: enumeration, classification, action analysis,
// verification suites and reference-table emission, all through the C
// API of the shared library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

/// Takes ownership of a C-API string and frees it.
std::string take(char* s) {
    std::string out = s ? s : "";
    crm_string_free(s);
    return out;
}

int map_status(crm_status st, const std::string& message) {
    switch (st) {
        case CRM_OK:
            return kExitPass;
        case CRM_FAIL:
            return kExitFail;
        case CRM_ERESOURCE:
            std::cerr << "resource limit: " << message << "\n";
            return kExitResource;
        case CRM_EINVAL:
            std::cerr << "invalid input: " << message << "\n";
            return kExitUsage;
        default:
            std::cerr << "internal error: " << message << "\n";
            return kExitFail;
    }
}

/// Degree from --degree/--type flags; 0 means unset.
int resolve_degree(int degree, const std::string& type) {
    static const std::map<std::string, int> ranks = {
        {"A1xA2", 3}, {"A4", 4}, {"D5", 5}, {"E6", 6}, {"E7", 7}, {"E8", 8}};
    if (!type.empty()) {
        auto it = ranks.find(type);
        if (it == ranks.end()) throw CLI::ValidationError("--type", "unknown type " + type);
        return 9 - it->second;
    }
    if (degree == 0) throw CLI::ValidationError("--degree", "a degree or type is required");
    return degree;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_verdicts_human(const json& verdicts) {
    std::size_t width = 0;
    for (const auto& v : verdicts)
        width = std::max(width, v.at("case").get<std::string>().size());
    for (const auto& v : verdicts) {
        std::string id = v.at("case").get<std::string>();
        bool passed = v.at("passed").get<bool>();
        std::printf("%-*s  %s  (%zu checks)\n", static_cast<int>(width), id.c_str(),
                    passed ? "PASS" : "FAIL", v.at("details").size());
        for (const auto& d : v.at("details")) {
            std::string result = d.at("result").get<std::string>();
            if (!passed || result.rfind("FAIL", 0) == 0)
                std::printf("    %s: %s\n", d.at("claim").get<std::string>().c_str(),
                            result.c_str());
        }
    }
}

int run_verify(const std::string& suite, bool allow_large, bool full,
               unsigned long long seed, bool as_json, bool emit_tables) {
    if (full && !allow_large) {
        std::cerr << "full rank-7 enumeration requires --allow-large "
                     "(reduced mode runs without it)\n";
        return kExitResource;
    }
    if (emit_tables) {
        char* tsv = nullptr;
        crm_status st = crm_emit_tables(&tsv);
        std::string text = take(tsv);
        if (st != CRM_OK) return map_status(st, text);
        std::cout << text;
    }
    char* report = nullptr;
    crm_status st = crm_verify(suite.c_str(), allow_large ? 1 : 0, seed, &report);
    std::string text = take(report);
    if (st != CRM_OK && st != CRM_FAIL) return map_status(st, text);
    if (as_json) {
        std::cout << text << "\n";
    } else {
        print_verdicts_human(json::parse(text));
    }
    return st == CRM_OK ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"del Pezzo lattice toolkit"};
    app.require_subcommand(1);

    int degree = 0;
    std::string type;
    bool as_json = false, list_all = false, as_dot = false;
    std::string input_path = "-";
    std::string suite = "all";
    std::string example;
    bool allow_large = false, full = false, emit_tables = false;
    unsigned long long seed = 0;

    auto add_degree = [&](CLI::App* cmd) {
        cmd->add_option("--degree", degree, "surface degree, 1..8");
        cmd->add_option("--type", type, "root-system type (A1xA2, A4, D5, E6, E7, E8)");
    };

    auto* roots = app.add_subcommand("roots", "count or list the roots");
    add_degree(roots);
    roots->add_flag("--json", as_json);
    roots->add_flag("--list", list_all, "emit the full vector list");

    auto* lines = app.add_subcommand("lines", "count or list the (-1)-classes");
    add_degree(lines);
    lines->add_flag("--json", as_json);
    lines->add_flag("--list", list_all);

    auto* graph = app.add_subcommand("graph", "incidence graph of the (-1)-classes");
    add_degree(graph);
    graph->add_flag("--json", as_json);
    graph->add_flag("--dot", as_dot, "DOT output (default)");

    auto* classify = app.add_subcommand("classify", "classify an isometry");
    classify->add_option("file", input_path, "JSON isometry file, or - for stdin");
    classify->add_flag("--json", as_json);

    auto* action = app.add_subcommand("action", "analyze a group action");
    action->add_option("file", input_path, "ActionSpec JSON file, or - for stdin");
    action->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "tables, appendix, dp6, dp5, dp4, dp3, dp2, dp1, surfaces, all");
    verify->add_flag("--allow-large", allow_large, "permit the full rank-7 enumeration");
    verify->add_flag("--full", full, "insist on full enumeration (needs --allow-large)");
    verify->add_option("--seed", seed, "seed for randomized representative searches");
    verify->add_flag("--json", as_json);
    verify->add_flag("--emit-tables", emit_tables, "print the encoded tables as TSV");

    auto* surfaces = app.add_subcommand("surfaces", "explicit-surface checks");
    auto* sverify = surfaces->add_subcommand("verify", "verify one example");
    sverify->add_option("--example", example, "tau0, g0, s_alpha, quadric, forms")
        ->required();
    sverify->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (roots->parsed() || lines->parsed()) {
            bool want_lines = lines->parsed();
            int d = resolve_degree(degree, type);
            int count = 0;
            crm_status st =
                want_lines ? crm_lines_count(d, &count) : crm_roots_count(d, &count);
            if (st != CRM_OK) return map_status(st, "degree must lie in 1..8");
            if (list_all) {
                char* text = nullptr;
                st = want_lines ? crm_lines_json(d, &text) : crm_roots_json(d, &text);
                std::string payload = take(text);
                if (st != CRM_OK) return map_status(st, payload);
                if (as_json) {
                    std::cout << payload << "\n";
                } else {
                    for (const auto& v : json::parse(payload)) {
                        for (const auto& c : v.at("coords")) std::cout << c.get<long long>() << " ";
                        std::cout << "\n";
                    }
                }
            } else if (as_json) {
                std::cout << json{{"degree", d}, {"count", count}} << "\n";
            } else {
                std::cout << count << "\n";
            }
            return kExitPass;
        }

        if (graph->parsed()) {
            int d = resolve_degree(degree, type);
            char* text = nullptr;
            crm_status st = as_json ? crm_graph_json(d, &text) : crm_graph_dot(d, &text);
            std::string payload = take(text);
            if (st != CRM_OK) return map_status(st, payload);
            std::cout << payload;
            return kExitPass;
        }

        if (classify->parsed()) {
            char* text = nullptr;
            crm_status st = crm_classify(read_input(input_path).c_str(), &text);
            std::string payload = take(text);
            if (st != CRM_OK) return map_status(st, payload);
            if (as_json) {
                std::cout << payload << "\n";
            } else {
                json j = json::parse(payload);
                std::cout << "order:      " << j.at("order") << "\n"
                          << "char poly:  " << j.at("charpoly_display").get<std::string>()
                          << "\n"
                          << "trace:      " << j.at("trace") << " (on Pic: "
                          << j.at("trace_pic") << ")\n"
                          << "minimal:    " << (j.at("minimal").get<bool>() ? "yes" : "no")
                          << "\n"
                          << "lefschetz:  " << j.at("lefschetz") << "\n";
                std::cout << "classes:    ";
                for (const auto& l : j.at("labels")) std::cout << l.get<std::string>() << " ";
                std::cout << "\n";
            }
            return kExitPass;
        }

        if (action->parsed()) {
            char* text = nullptr;
            crm_status st = crm_action_analyze(read_input(input_path).c_str(), &text);
            std::string payload = take(text);
            if (st != CRM_OK) return map_status(st, payload);
            if (as_json) {
                std::cout << payload << "\n";
            } else {
                json j = json::parse(payload);
                std::cout << "group order:      " << j.at("group_order") << "\n"
                          << "invariant rank:   " << j.at("invariant_rank_formula")
                          << " (oracle: " << j.at("invariant_rank_oracle") << ")\n"
                          << "invariant classes: " << j.at("invariant_exceptional").size()
                          << "\n"
                          << "orbit sizes:      ";
                for (const auto& o : j.at("orbits")) std::cout << o.size() << " ";
                std::cout << "\n";
            }
            return kExitPass;
        }

        if (verify->parsed())
            return run_verify(suite, allow_large, full, seed, as_json, emit_tables);

        if (surfaces->parsed()) {
            char* text = nullptr;
            crm_status st = crm_surfaces_verify(example.c_str(), &text);
            std::string payload = take(text);
            if (st != CRM_OK && st != CRM_FAIL) return map_status(st, payload);
            if (as_json)
                std::cout << payload << "\n";
            else
                print_verdicts_human(json::array({json::parse(payload)}));
            return st == CRM_OK ? kExitPass : kExitFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
