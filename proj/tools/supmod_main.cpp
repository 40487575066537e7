// supmod: exact supmodularity checks, pattern search, and greedy
// transportation over the plain-text matrix formats described in the
// README. Exit codes: 0 affirmative, 1 negative (certificate printed),
// 2 usage or parse failure, 3 budget or guard exhaustion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "supmod/goodness.hpp"
#include "supmod/matrix.hpp"
#include "supmod/permute_search.hpp"
#include "supmod/supmodular.hpp"
#include "supmod/transport.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw supmod::Error("cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

int run_check(const std::string& file) {
    supmod::Matrix a = supmod::parse_matrix(read_input(file));
    if (auto cert = supmod::find_violation(a)) {
        std::cout << "not supmodular\n" << cert->to_text() << "\n";
        return kExitNo;
    }
    std::cout << "supmodular\n";
    return kExitYes;
}

int run_permute(const std::string& matrix_file, const std::string& pattern_file) {
    supmod::Matrix a = supmod::parse_matrix(read_input(matrix_file));
    supmod::PermPattern sigma = supmod::parse_pattern(read_input(pattern_file));
    std::cout << supmod::to_text(supmod::apply_permutation(a, sigma));
    return kExitYes;
}

int run_good(const std::string& pattern_file, bool has_at, int at_i, int at_j,
             bool witness) {
    supmod::PermPattern sigma = supmod::parse_pattern(read_input(pattern_file));
    if (witness) {
        if (!has_at) throw supmod::Error("--witness needs --at <i> <j>");
        std::cout << supmod::to_text(supmod::violating_witness(sigma, at_i - 1, at_j - 1));
        return kExitYes;
    }
    if (has_at) {
        const bool good = supmod::is_good_on(sigma, at_i - 1, at_j - 1);
        std::cout << (good ? "good" : "not good") << " i=" << at_i << " j=" << at_j << "\n";
        return good ? kExitYes : kExitNo;
    }
    bool all_good = true;
    for (int i = 0; i + 1 < sigma.rows(); ++i)
        for (int j = 0; j + 1 < sigma.cols(); ++j)
            if (!supmod::is_good_on(sigma, i, j)) {
                std::cout << "not good i=" << i + 1 << " j=" << j + 1 << "\n";
                all_good = false;
            }
    if (all_good) std::cout << "good everywhere\n";
    return all_good ? kExitYes : kExitNo;
}

int run_census(int m, int n, std::size_t emit_limit, int guard, bool orbits) {
    supmod::GoodCensus census = supmod::enumerate_good(m, n, emit_limit, guard);
    std::cout << supmod::to_text(census);
    if (orbits) std::cout << "orbits " << supmod::good_orbit_count(census) << "\n";
    return kExitYes;
}

int run_decide(const std::string& file, std::uint64_t budget) {
    supmod::Matrix a = supmod::parse_matrix(read_input(file));
    supmod::PermuteOutcome outcome = supmod::decide_permutable(a, budget);
    std::cout << outcome.to_text();
    switch (outcome.status) {
        case supmod::Permutability::permutable: return kExitYes;
        case supmod::Permutability::not_permutable: return kExitNo;
        case supmod::Permutability::unknown: return kExitBudget;
    }
    return kExitUsage;
}

int run_refute(const std::string& file, long long max_value) {
    supmod::CoverSet set = supmod::parse_cover(read_input(file));
    if (auto witness = supmod::refute_cover(set, max_value)) {
        std::cout << "refuted\n" << supmod::to_text(*witness);
        return kExitNo;
    }
    std::cout << "no-witness-found\n";
    return kExitYes;
}

int run_cover_test(const std::string& file, std::uint64_t trials, std::uint64_t seed,
                   long long range) {
    supmod::CoverSet set = supmod::parse_cover(read_input(file));
    supmod::CoverTestReport report =
        supmod::random_cover_test(set, trials, seed, -range, range);
    std::cout << "failures=" << report.failures << " trials=" << report.trials << "\n";
    if (report.first_failure) std::cout << supmod::to_text(*report.first_failure);
    return report.failures == 0 ? kExitYes : kExitNo;
}

int run_greedy(const std::string& file, bool oracle, std::uint64_t guard) {
    supmod::TransportInstance inst = supmod::parse_instance(read_input(file));
    supmod::TransportPlan plan = supmod::greedy_transport(inst);
    std::cout << plan.to_text();
    if (oracle) {
        supmod::TransportPlan best = supmod::brute_force_transport(inst, guard);
        std::cout << "oracle-value=" << best.value.to_string() << "\n";
        if (plan.value != best.value) return kExitNo;
    }
    return kExitYes;
}

int report_preprocess(const supmod::PreprocessResult& result) {
    switch (result.status) {
        case supmod::AssignStatus::assigned: return kExitYes;
        case supmod::AssignStatus::not_permutable:
            std::cout << "not-permutable\n";
            return kExitNo;
        case supmod::AssignStatus::budget_exhausted:
            std::cout << "budget-exhausted\n";
            return kExitBudget;
    }
    return kExitUsage;
}

int run_assign(const std::string& prices_file, int m, int n, std::uint64_t budget) {
    std::vector<supmod::Rational> prices = supmod::parse_scalars(read_input(prices_file));
    supmod::PreprocessResult result = supmod::preprocess_transporters(prices, m, n, budget);
    if (result.status != supmod::AssignStatus::assigned) return report_preprocess(result);
    std::cout << "assigned\n"
              << supmod::to_text(result.assignment->pattern) << "\n"
              << supmod::to_text(result.assignment->utility);
    return kExitYes;
}

int run_serve(const std::string& prices_file, int m, int n,
              const std::string& requests_file, std::uint64_t budget,
              long long bound, bool has_bound) {
    std::vector<supmod::Rational> prices = supmod::parse_scalars(read_input(prices_file));
    supmod::PreprocessResult result = supmod::preprocess_transporters(prices, m, n, budget);
    if (result.status != supmod::AssignStatus::assigned) return report_preprocess(result);

    std::vector<supmod::StreamRequest> requests;
    std::istringstream stream(read_input(requests_file));
    std::string line;
    std::vector<std::pair<bool, std::string>> parsed;  // ok -> index/error
    while (std::getline(stream, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            requests.push_back(supmod::parse_request_line(line));
            parsed.emplace_back(true, "");
        } catch (const supmod::Error& e) {
            parsed.emplace_back(false, e.what());
        }
    }

    std::vector<supmod::ServedRequest> served = supmod::serve_stream(
        *result.assignment, requests,
        has_bound ? std::optional<long long>(bound) : std::nullopt);

    bool all_ok = true;
    std::size_t next = 0;
    bool first = true;
    for (const auto& [ok, error] : parsed) {
        if (!first) std::cout << "\n";
        first = false;
        if (!ok) {
            std::cout << "error: " << error << "\n";
            all_ok = false;
            continue;
        }
        const supmod::ServedRequest& r = served[next++];
        if (r.plan) {
            std::cout << r.plan->to_text();
        } else {
            std::cout << "error: " << r.error << "\n";
            all_ok = false;
        }
    }
    return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact supmodular (anti-Monge) matrix toolkit"};
    app.require_subcommand(1);

    std::string matrix_file, pattern_file, cover_file, instance_file, prices_file;
    std::string requests_file = "-";
    int at_i = 0, at_j = 0, census_m = 0, census_n = 0, dim_m = 0, dim_n = 0;
    int guard_cells = 16;
    bool witness = false, orbits = false, oracle = false;
    std::size_t emit_limit = 16;
    std::uint64_t budget = 10'000'000, trials = 10'000, seed = 0, plan_guard = 10'000'000;
    long long max_value = 3, range = 10, bound = 0;

    CLI::App* check = app.add_subcommand("check", "test a matrix for supmodularity");
    check->add_option("matrix", matrix_file, "matrix file, or - for stdin")->required();

    CLI::App* permute = app.add_subcommand("permute", "rearrange a matrix by a pattern");
    permute->add_option("matrix", matrix_file)->required();
    permute->add_option("pattern", pattern_file)->required();

    CLI::App* good = app.add_subcommand("good", "goodness of a pattern's windows");
    good->add_option("pattern", pattern_file)->required();
    CLI::Option* at_opt = good->add_option("--at", [&](const CLI::results_t& vals) {
        try {
            at_i = std::stoi(vals.at(0));
            at_j = std::stoi(vals.at(1));
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }, "window row and column (1-based)")->expected(2);
    good->add_flag("--witness", witness, "emit a matrix breaking the window (needs --at)");

    CLI::App* census = app.add_subcommand("census", "count good-everywhere patterns");
    census->add_option("m", census_m)->required();
    census->add_option("n", census_n)->required();
    census->add_option("--emit-limit", emit_limit, "list patterns when count fits");
    census->add_option("--guard", guard_cells, "max m*n the census will attempt");
    census->add_flag("--orbits", orbits, "also print the symmetry-orbit count");

    CLI::App* decide = app.add_subcommand("decide", "decide permutability of a matrix");
    decide->add_option("matrix", matrix_file)->required();
    decide->add_option("--budget", budget, "search node budget");

    CLI::App* refute = app.add_subcommand("refute", "search for a cover counterexample");
    refute->add_option("cover", cover_file, "pattern blocks separated by blank lines")
        ->required();
    refute->add_option("--max-value", max_value, "entry alphabet is {0..max-value}");

    CLI::App* cover_test = app.add_subcommand("cover-test", "randomized cover check");
    cover_test->add_option("cover", cover_file)->required();
    cover_test->add_option("--trials", trials);
    cover_test->add_option("--seed", seed);
    cover_test->add_option("--range", range, "entries drawn uniformly from [-range, range]");

    CLI::App* greedy = app.add_subcommand("greedy", "greedy-solve a transportation instance");
    greedy->add_option("instance", instance_file)->required();
    greedy->add_flag("--oracle", oracle, "also run the exhaustive optimum");
    greedy->add_option("--guard", plan_guard, "oracle enumeration node guard");

    CLI::App* assign = app.add_subcommand("assign", "preprocess transporter prices");
    assign->add_option("prices", prices_file, "file of m*n per-unit prices")->required();
    assign->add_option("m", dim_m)->required();
    assign->add_option("n", dim_n)->required();
    assign->add_option("--budget", budget);

    CLI::App* serve = app.add_subcommand("serve", "greedy-serve a request stream");
    serve->add_option("prices", prices_file)->required();
    serve->add_option("m", dim_m)->required();
    serve->add_option("n", dim_n)->required();
    serve->add_option("--requests", requests_file, "request lines, - for stdin");
    serve->add_option("--budget", budget);
    CLI::Option* bound_opt = serve->add_option("--bound", bound, "per-entry unit bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitYes : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(matrix_file);
        if (permute->parsed()) return run_permute(matrix_file, pattern_file);
        if (good->parsed())
            return run_good(pattern_file, at_opt->count() > 0, at_i, at_j, witness);
        if (census->parsed())
            return run_census(census_m, census_n, emit_limit, guard_cells, orbits);
        if (decide->parsed()) return run_decide(matrix_file, budget);
        if (refute->parsed()) return run_refute(cover_file, max_value);
        if (cover_test->parsed()) return run_cover_test(cover_file, trials, seed, range);
        if (greedy->parsed()) return run_greedy(instance_file, oracle, plan_guard);
        if (assign->parsed()) return run_assign(prices_file, dim_m, dim_n, budget);
        if (serve->parsed())
            return run_serve(prices_file, dim_m, dim_n, requests_file, budget, bound,
                             bound_opt->count() > 0);
    } catch (const supmod::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
