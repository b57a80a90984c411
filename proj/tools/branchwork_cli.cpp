// Command-line front end: every capability of the core library with
// machine-readable output plus character-table cache management.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 I/O error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchwork/branching.hpp"
#include "branchwork/character_table.hpp"
#include "branchwork/counting.hpp"
#include "branchwork/errors.hpp"
#include "branchwork/partition.hpp"
#include "branchwork/plethysm.hpp"
#include "branchwork/survey.hpp"

namespace {

namespace fs = std::filesystem;
using branchwork::Partition;

struct RunConfig {
    fs::path cache_dir;
    unsigned jobs = 1;
    std::string format = "text";
    int verbosity = 0;
};

fs::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "branchwork";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "branchwork";
    return fs::path(".branchwork-cache");
}

fs::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty())
        return fs::path(flag);
    if (const char* env = std::getenv("BRANCHWORK_CACHE_DIR"); env && *env)
        return fs::path(env);
    return default_cache_dir();
}

void write_file(const fs::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out)
        throw branchwork::io_error("cannot write " + path.string());
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string csv_quote(const std::string& field) {
    return "\"" + field + "\"";
}

int run_branch(const RunConfig& cfg, int n, const std::string& shape_text) {
    const Partition lambda = Partition::parse(shape_text);
    const branchwork::BranchingTable table = branchwork::branch(lambda, n, cfg.jobs);
    if (cfg.format == "json") {
        std::cout << branchwork::branching_to_json(table);
    } else if (cfg.format == "csv") {
        std::cout << "mu,multiplicity\n";
        for (std::size_t i = 0; i < table.shapes.size(); ++i)
            std::cout << csv_quote(table.shapes[i].to_string()) << ','
                      << table.values[i].get_str() << '\n';
    } else {
        std::cout << "branch n=" << n << " lambda=" << lambda.to_string() << '\n';
        for (std::size_t i = 0; i < table.shapes.size(); ++i)
            std::cout << table.shapes[i].to_string() << ": " << table.values[i].get_str()
                      << '\n';
    }
    return 0;
}

int run_plethysm(const RunConfig& cfg, const std::string& mu_text, int m) {
    const Partition mu = Partition::parse(mu_text);
    const branchwork::GL2Decomposition dec = branchwork::plethysm_sym(mu, m);
    std::vector<int> witnesses;
    const bool with_witnesses = m >= 2 && !mu.empty();
    if (with_witnesses)
        witnesses = branchwork::verify_theorem(mu, m);
    if (cfg.format == "json") {
        std::cout << branchwork::plethysm_to_json(dec, m,
                                                  with_witnesses ? &witnesses : nullptr);
    } else if (cfg.format == "csv") {
        std::cout << "weight,multiplicity\n";
        for (const auto& [w, mult] : dec.entries)
            std::cout << csv_quote(w.to_string()) << ',' << mult.get_str() << '\n';
    } else {
        std::cout << "plethysm mu=" << mu.to_string() << " m=" << m << '\n';
        for (const auto& [w, mult] : dec.entries)
            std::cout << w.to_string() << ": " << mult.get_str() << '\n';
        if (with_witnesses) {
            std::cout << "witnesses:";
            for (int d : witnesses)
                std::cout << ' ' << d;
            std::cout << '\n';
        }
    }
    return 0;
}

int run_survey(const RunConfig& cfg, int n, int max_size, const std::string& out_path) {
    const auto records = branchwork::survey_region(n, max_size, cfg.jobs);
    const std::string payload = cfg.format == "json" ? branchwork::survey_to_json(records)
                                                     : branchwork::survey_to_csv(records);
    std::size_t complete = 0;
    for (const auto& r : records)
        complete += r.complete ? 1 : 0;
    std::ostringstream summary;
    summary << "survey n=" << n << " max_size=" << max_size << ": " << records.size()
            << " points, " << complete << " complete, " << (records.size() - complete)
            << " incomplete\n";
    if (out_path.empty()) {
        std::cout << payload;
        std::cerr << summary.str();
    } else {
        write_file(out_path, payload);
        std::cout << summary.str();
    }
    return 0;
}

int run_verify(const RunConfig& cfg, int n, const std::string& m_list) {
    std::vector<int> ms;
    std::stringstream stream(m_list);
    std::string token;
    while (std::getline(stream, token, ',')) {
        int m = 0;
        try {
            size_t used = 0;
            m = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("--m expects comma-separated integers");
        }
        if (m < 2)
            throw std::invalid_argument("--m values must be at least 2");
        ms.push_back(m);
    }
    if (ms.empty())
        throw std::invalid_argument("--m expects at least one value");

    bool all_pass = true;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (int m : ms) {
        try {
            const branchwork::CoverageReport report = branchwork::coverage_check(n, m, cfg.jobs);
            if (cfg.format == "json") {
                nlohmann::ordered_json entry;
                entry["m"] = m;
                entry["pass"] = true;
                nlohmann::ordered_json family = nlohmann::ordered_json::array();
                for (const auto& lambda : report.family)
                    family.push_back(lambda.to_string());
                entry["family"] = std::move(family);
                nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
                for (const auto& [mu, lambda] : report.witnesses)
                    witnesses[mu.to_string()] = lambda.to_string();
                entry["witnesses"] = std::move(witnesses);
                results.push_back(std::move(entry));
            } else {
                std::cout << "m=" << m << ": PASS  family:";
                for (const auto& lambda : report.family)
                    std::cout << " (" << lambda.to_string() << ")";
                std::cout << '\n';
                for (const auto& [mu, lambda] : report.witnesses)
                    std::cout << "  " << mu.to_string() << " <- " << lambda.to_string()
                              << '\n';
            }
        } catch (const branchwork::theorem_violation& e) {
            all_pass = false;
            if (cfg.format == "json") {
                nlohmann::ordered_json entry;
                entry["m"] = m;
                entry["pass"] = false;
                entry["error"] = e.what();
                results.push_back(std::move(entry));
            } else {
                std::cout << "m=" << m << ": FAIL  " << e.what() << '\n';
            }
        }
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["results"] = std::move(results);
        std::cout << j.dump(2) << '\n';
    }
    return all_pass ? 0 : 1;
}

int run_count(const RunConfig& cfg, const std::string& kind, int n, bool with_oracle) {
    const bool graphs = kind == "graphs";
    const branchwork::CountReport formula =
        graphs ? branchwork::count_graphs(n) : branchwork::count_dynamics(n);
    std::vector<std::pair<Partition, mpz_class>> summands;
    if (!graphs)
        summands = branchwork::dynamics_summands(n);

    branchwork::CountReport oracle;
    if (with_oracle)
        oracle = graphs ? branchwork::graphs_bruteforce(n, cfg.jobs)
                        : branchwork::dynamics_bruteforce(n, cfg.jobs);
    const bool agree = !with_oracle || oracle.count == formula.count;

    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["n"] = n;
        j["formula"] = formula.count.get_str();
        if (!graphs) {
            nlohmann::ordered_json s = nlohmann::ordered_json::object();
            for (const auto& [lambda, value] : summands)
                s[lambda.to_string()] = value.get_str();
            j["summands"] = std::move(s);
        }
        if (with_oracle) {
            j["oracle"] = oracle.count.get_str();
            j["agree"] = agree;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << kind << " n=" << n << ": " << formula.count.get_str() << '\n';
        if (!graphs)
            for (const auto& [lambda, value] : summands)
                std::cout << "  " << lambda.to_string() << ": " << value.get_str() << '\n';
        if (with_oracle)
            std::cout << "oracle: " << oracle.count.get_str()
                      << (agree ? " (agree)" : " (MISMATCH)") << '\n';
    }
    return agree ? 0 : 1;
}

int run_chartable(const RunConfig& cfg, int n) {
    const branchwork::CharacterTable table =
        branchwork::CharacterTable::load_or_build(n, cfg.cache_dir);
    const fs::path path = table.cache_file(cfg.cache_dir);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in)
        throw branchwork::io_error("cannot read back " + path.string());
    std::ostringstream line;
    line << path.string() << " checksum=" << std::hex << fnv1a64(buffer.str()) << std::dec
         << " rows=" << table.rank() << '\n';
    std::cout << line.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decomposition of GL_n irreps under restriction to the "
                 "symmetric group, with GL_2 plethysm, two-row surveys and "
                 "counting applications"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir_flag;
    unsigned jobs = 1;
    app.add_option("--cache-dir", cache_dir_flag,
                   "Character table cache directory (default: "
                   "$BRANCHWORK_CACHE_DIR, then the user cache dir)");
    app.add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);

    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    int exit_code = 0;
    auto config = [&](const std::string& format) {
        RunConfig cfg;
        cfg.cache_dir = resolve_cache_dir(cache_dir_flag);
        cfg.jobs = jobs;
        cfg.format = format;
        branchwork::set_character_table_cache_dir(cfg.cache_dir);
        return cfg;
    };

    // branch
    auto* branch_cmd = app.add_subcommand("branch", "Decompose one GL_n irrep into S_n irreps");
    int branch_n = 0;
    std::string branch_shape;
    std::string branch_format = "text";
    branch_cmd->add_option("--n", branch_n, "Rank of GL_n and letters of S_n")->required();
    branch_cmd->add_option("--shape", branch_shape, "Highest weight, e.g. 11,9")->required();
    branch_cmd->add_option("--format", branch_format, "text|json|csv")->check(format_check);
    branch_cmd->callback(
        [&] { exit_code = run_branch(config(branch_format), branch_n, branch_shape); });

    // plethysm
    auto* plethysm_cmd =
        app.add_subcommand("plethysm", "Decompose a Schur functor of degree-m binary forms");
    std::string plethysm_mu;
    int plethysm_m = 0;
    std::string plethysm_format = "text";
    plethysm_cmd->add_option("--mu", plethysm_mu, "Schur functor shape")->required();
    plethysm_cmd->add_option("--m", plethysm_m, "Symmetric power degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    plethysm_cmd->add_option("--format", plethysm_format, "text|json|csv")->check(format_check);
    plethysm_cmd->callback(
        [&] { exit_code = run_plethysm(config(plethysm_format), plethysm_mu, plethysm_m); });

    // survey
    auto* survey_cmd =
        app.add_subcommand("survey", "Classify the two-row region as complete/incomplete");
    int survey_n = 0;
    int survey_max_size = 0;
    std::string survey_out;
    std::string survey_format = "csv";
    survey_cmd->add_option("--n", survey_n, "Symmetric group size (>= 2)")->required();
    survey_cmd->add_option("--max-size", survey_max_size, "Largest |lambda| scanned")
        ->required();
    survey_cmd->add_option("--out", survey_out, "Output file (stdout when omitted)");
    survey_cmd->add_option("--format", survey_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    survey_cmd->callback([&] {
        exit_code = run_survey(config(survey_format), survey_n, survey_max_size, survey_out);
    });

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Check that every S_n irrep appears in a short-tail family member");
    int verify_n = 0;
    std::string verify_m = "2";
    std::string verify_format = "text";
    verify_cmd->add_option("--n", verify_n, "Symmetric group size")->required();
    verify_cmd->add_option("--m", verify_m, "Comma-separated list of m values (each >= 2)");
    verify_cmd->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->callback(
        [&] { exit_code = run_verify(config(verify_format), verify_n, verify_m); });

    // count
    auto* count_cmd =
        app.add_subcommand("count", "Count graph isomorphism classes or dynamical systems");
    std::string count_kind;
    int count_n = 0;
    bool count_oracle = false;
    std::string count_format = "text";
    count_cmd->add_option("kind", count_kind, "graphs|dynamics")
        ->required()
        ->check(CLI::IsMember({"graphs", "dynamics"}));
    count_cmd->add_option("--n", count_n, "Number of vertices/points")->required();
    count_cmd->add_flag("--oracle", count_oracle,
                        "Also run the brute-force orbit count and compare");
    count_cmd->add_option("--format", count_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    count_cmd->callback([&] {
        exit_code = run_count(config(count_format), count_kind, count_n, count_oracle);
    });

    // chartable
    auto* chartable_cmd =
        app.add_subcommand("chartable", "Build or validate one cached character table");
    int chartable_n = 0;
    chartable_cmd->add_option("--n", chartable_n, "Symmetric group size (>= 1)")->required();
    chartable_cmd->callback([&] {
        if (chartable_n < 1)
            throw std::invalid_argument("chartable: n must be at least 1");
        exit_code = run_chartable(config("text"), chartable_n);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const branchwork::theorem_violation& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const branchwork::io_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const branchwork::consistency_error& e) {
        std::cerr << "internal consistency fault: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
