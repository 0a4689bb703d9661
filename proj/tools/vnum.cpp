// vnum: monomial-ideal v-number calculator and verification harness.
//
// Exit codes: 0 success (all checks AGREE or flagged known issues),
// 1 unexpected disagreement in a check run, 2 usage or input error,
// 3 enumeration guard exceeded.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vnum/checks.hpp"
#include "vnum/eval.hpp"
#include "vnum/report_io.hpp"
#include "vnum/vnumber.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    std::string format = "table";
    unsigned long seed = 20240913;
    std::uint64_t max_subsets = std::uint64_t(1) << 24;
    int max_witness_degree = 64;

    vnum::SearchLimits limits() const {
        vnum::SearchLimits l;
        l.max_subsets = max_subsets;
        l.max_witness_degree = max_witness_degree;
        return l;
    }
    bool json() const { return format == "json"; }
};

std::string trimmed(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t");
    size_t end = s.find_last_not_of(" \t");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
}

vnum::RangeMap parse_range_string(const std::string& text) {
    vnum::RangeMap ranges;
    if (text.empty()) {
        return ranges;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item =
            trimmed(text.substr(pos, comma == std::string::npos ? comma : comma - pos));
        pos = comma == std::string::npos ? text.size() : comma + 1;
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw vnum::InvalidInput("range item '" + item + "' is not of the form name=lo..hi");
        }
        std::string key = trimmed(item.substr(0, eq));
        std::string values = trimmed(item.substr(eq + 1));
        size_t dots = values.find("..");
        try {
            if (dots == std::string::npos) {
                long long v = std::stoll(values);
                ranges[key] = {v, v};
            } else {
                long long lo = std::stoll(values.substr(0, dots));
                long long hi = std::stoll(values.substr(dots + 2));
                ranges[key] = {lo, hi};
            }
        } catch (const std::exception&) {
            throw vnum::InvalidInput("range item '" + item + "' has non-integer bounds");
        }
    }
    return ranges;
}

int threads_from_env(int task_count) {
    int threads = int(std::thread::hardware_concurrency());
    if (threads < 1) {
        threads = 1;
    }
    if (const char* env = std::getenv("VNUM_THREADS")) {
        try {
            threads = std::min(threads, std::max(1, std::stoi(env)));
        } catch (const std::exception&) {
            throw vnum::InvalidInput("VNUM_THREADS must be an integer");
        }
    }
    return std::min(threads, std::max(1, task_count));
}

int run_gens(const GlobalOptions& global, const std::string& expr_text) {
    auto ideal = vnum::eval_text(expr_text);
    if (global.json()) {
        ordered_json j;
        j["vars"] = ideal.vars().names();
        std::vector<std::string> gens;
        for (const auto& g : ideal.gens()) {
            gens.push_back(g.to_string(ideal.vars()));
        }
        j["gens"] = gens;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ideal.to_string() << "\n";
    }
    return 0;
}

int run_v(const GlobalOptions& global, const std::string& expr_text, const std::string& method_name) {
    auto method = vnum::method_from_string(method_name);
    if (!method) {
        throw vnum::InvalidInput("unknown method '" + method_name +
                                 "' (expected auto, stable-set, colon, or witness)");
    }
    auto ideal = vnum::eval_text(expr_text);
    auto result = vnum::v_number(ideal, *method, global.limits());
    if (global.json()) {
        ordered_json j;
        j["v"] = result.value;
        j["witness"] = {{"monomial", result.witness.f.to_string(ideal.vars())},
                        {"prime", result.witness.prime.to_string()}};
        j["method"] = vnum::to_string(result.method_used);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "v = " << result.value << "\n"
                  << "witness f = " << result.witness.f.to_string(ideal.vars()) << "\n"
                  << "witness prime = " << result.witness.prime.to_string() << "\n"
                  << "method = " << vnum::to_string(result.method_used) << "\n";
    }
    return 0;
}

int run_ass(const GlobalOptions& global, const std::string& expr_text) {
    auto ideal = vnum::eval_text(expr_text);
    auto ass = vnum::associated_primes(ideal, global.limits());
    if (global.json()) {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < ass.primes.size(); ++i) {
            arr.push_back({{"prime", ass.primes[i].to_string()}, {"embedded", bool(ass.embedded[i])}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < ass.primes.size(); ++i) {
            std::cout << ass.primes[i].to_string() << (ass.embedded[i] ? "  embedded" : "  minimal")
                      << "\n";
        }
    }
    return 0;
}

int run_alpha(const GlobalOptions& global, const std::string& expr_text) {
    auto ideal = vnum::eval_text(expr_text);
    int a = vnum::alpha(ideal);
    if (global.json()) {
        std::cout << ordered_json{{"alpha", a}}.dump(2) << "\n";
    } else {
        std::cout << a << "\n";
    }
    return 0;
}

void print_reports(const GlobalOptions& global, const std::vector<vnum::CheckReport>& reports) {
    if (global.json()) {
        std::cout << vnum::reports_to_json(reports).dump(2) << "\n";
    } else {
        std::cout << vnum::reports_to_table(reports);
    }
}

int run_one_check(const GlobalOptions& global, const std::string& id, const std::string& range_text) {
    vnum::RunOptions options;
    options.seed = global.seed;
    options.limits = global.limits();
    auto reports = vnum::run_check(id, parse_range_string(range_text), options);
    print_reports(global, reports);
    return vnum::exit_code_for(reports);
}

int run_sweep(const GlobalOptions& global, const std::string& suite) {
    if (suite != "all") {
        throw vnum::InvalidInput("unknown suite '" + suite + "' (only: all)");
    }
    vnum::RunOptions options;
    options.seed = global.seed;
    options.limits = global.limits();

    const auto& registry = vnum::check_registry();
    std::vector<std::vector<vnum::CheckReport>> slots(registry.size());
    std::vector<std::string> errors(registry.size());
    int thread_count = threads_from_env(int(registry.size()));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= registry.size()) {
                return;
            }
            try {
                slots[i] = registry[i].run(registry[i].default_ranges, options);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < thread_count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (size_t i = 0; i < registry.size(); ++i) {
        if (!errors[i].empty()) {
            throw vnum::Error("check " + registry[i].id + " failed: " + errors[i]);
        }
    }

    std::vector<vnum::CheckReport> all;
    long long agree = 0;
    long long disagree_known = 0;
    long long disagree_unexpected = 0;
    long long inapplicable = 0;
    for (const auto& reports : slots) {
        for (const auto& r : reports) {
            all.push_back(r);
            switch (r.status) {
                case vnum::CheckReport::Status::Agree: ++agree; break;
                case vnum::CheckReport::Status::Disagree:
                    (r.known_issue ? disagree_known : disagree_unexpected) += 1;
                    break;
                case vnum::CheckReport::Status::Inapplicable: ++inapplicable; break;
            }
        }
    }

    if (global.json()) {
        ordered_json j;
        j["suite"] = suite;
        ordered_json checks = ordered_json::array();
        for (size_t i = 0; i < registry.size(); ++i) {
            checks.push_back({{"check_id", registry[i].id},
                              {"summary", registry[i].summary},
                              {"reports", vnum::reports_to_json(slots[i])}});
        }
        j["checks"] = std::move(checks);
        j["summary"] = {{"agree", agree},
                        {"disagree_known_issue", disagree_known},
                        {"disagree_unexpected", disagree_unexpected},
                        {"inapplicable", inapplicable}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << vnum::reports_to_table(all);
        std::cout << "\nsummary: " << agree << " agree, " << disagree_known
                  << " known-issue disagreements, " << disagree_unexpected
                  << " unexpected disagreements, " << inapplicable << " inapplicable\n";
    }
    return vnum::exit_code_for(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial-ideal v-number calculator and verification harness"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "seed for randomized fixtures")->capture_default_str();
    app.add_option("--max-subsets", global.max_subsets,
                   "guard on exhaustive vertex-subset and witness enumerations")
        ->capture_default_str();
    app.add_option("--max-witness-degree", global.max_witness_degree,
                   "guard on the witness-scan degree")
        ->capture_default_str();

    std::string expr_text;
    std::string method_name = "auto";
    std::string check_id;
    std::string range_text;
    std::string suite = "all";
    bool list_checks = false;

    auto* gens_cmd = app.add_subcommand("gens", "print the minimal generators of an ideal expression");
    gens_cmd->add_option("expr", expr_text, "ideal expression")->required();

    auto* v_cmd = app.add_subcommand("v", "compute the v-number with a certifying witness");
    v_cmd->add_option("expr", expr_text, "ideal expression")->required();
    v_cmd->add_option("--method", method_name, "auto|stable-set|colon|witness")
        ->capture_default_str();

    auto* ass_cmd = app.add_subcommand("ass", "list associated primes with embedded flags");
    ass_cmd->add_option("expr", expr_text, "ideal expression")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "least generator degree");
    alpha_cmd->add_option("expr", expr_text, "ideal expression")->required();

    auto* check_cmd = app.add_subcommand("check", "run one registered verification sweep");
    check_cmd->add_option("id", check_id, "check id (see --list)");
    check_cmd->add_option("--range", range_text, "parameter ranges, e.g. 'n=4..12,k=1..3'");
    check_cmd->add_flag("--list", list_checks, "list the registered checks");

    auto* sweep_cmd = app.add_subcommand("sweep", "run every registered check");
    sweep_cmd->add_option("--suite", suite, "suite name")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (gens_cmd->parsed()) {
            return run_gens(global, expr_text);
        }
        if (v_cmd->parsed()) {
            return run_v(global, expr_text, method_name);
        }
        if (ass_cmd->parsed()) {
            return run_ass(global, expr_text);
        }
        if (alpha_cmd->parsed()) {
            return run_alpha(global, expr_text);
        }
        if (check_cmd->parsed()) {
            if (list_checks) {
                for (const auto& def : vnum::check_registry()) {
                    std::string params;
                    for (const auto& [key, range] : def.default_ranges) {
                        params += (params.empty() ? "" : ", ") + key + "=" +
                                  std::to_string(range.first) + ".." + std::to_string(range.second);
                    }
                    std::cout << def.id << "\n  " << def.summary << "\n  defaults: " << params
                              << "\n";
                }
                return 0;
            }
            if (check_id.empty()) {
                std::cerr << "error: a check id is required (try: vnum check --list)\n";
                return 2;
            }
            return run_one_check(global, check_id, range_text);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(global, suite);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const vnum::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const vnum::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const vnum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
