// Copyright 2026 The magicpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command line front end: reproduces the solution-count table for paths,
// cross-checks the search against brute force, and compares with cycles.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magicpath/magicpath.hpp"

namespace {

using namespace magicpath;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    int workers = default_workers();
    bool unsafe_limits = false;
    bool quiet = false;
};

Settings settings_from_environment()
{
    Settings s;
    if (const char *threads = std::getenv("MAGICPATH_THREADS"); threads && *threads) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(threads, &used);
            if (used != std::string(threads).size() || value < 1)
                throw std::invalid_argument(threads);
            s.workers = value;
        } catch (const std::logic_error &) {
            throw UsageError("MAGICPATH_THREADS must be a positive integer");
        }
    }
    if (const char *unsafe = std::getenv("MAGICPATH_UNSAFE_LIMITS"))
        s.unsafe_limits = *unsafe != '\0' && std::string(unsafe) != "0";
    return s;
}

ProgressFn progress_sink(const Settings &s)
{
    if (s.quiet)
        return {};
    return [](std::size_t done, std::size_t total) {
        std::cerr << "progress: " << done << '/' << total << " tasks\n";
    };
}

Convention path_convention(const std::string &name)
{
    return name == "raw" ? Convention::raw : Convention::canonical;
}

CountReport count_path(int n, bool brute, Convention convention, bool halving, const Settings &s)
{
    if (brute)
        return count_path_bruteforce(
            n, convention,
            {.workers = s.workers, .unsafe_limits = s.unsafe_limits, .progress = progress_sink(s)});
    return count_path_fast(n, {.convention = convention,
                               .workers = s.workers,
                               .complement_halving = halving,
                               .progress = progress_sink(s)});
}

std::string format_bound(const PathCycleBound &b, Format format)
{
    std::ostringstream out;
    const auto yes = [](bool v) { return v ? "true" : "false"; };
    switch (format) {
    case Format::json:
        break;
    case Format::csv:
        out << "n,path_raw,cycle_raw,holds,strict,path_canonical,cycle_dihedral,holds_reduced,"
               "strict_reduced\n"
            << b.n << ',' << b.path_raw << ',' << b.cycle_raw << ',' << yes(b.holds()) << ','
            << yes(b.strict()) << ',' << b.path_canonical << ',' << b.cycle_dihedral << ','
            << yes(b.holds_reduced()) << ',' << yes(b.strict_reduced()) << '\n';
        break;
    case Format::table:
        out << "\npath P_" << b.n << " vs cycle C_" << b.n << '\n'
            << "  raw:     path " << b.path_raw << ", cycle " << b.cycle_raw
            << ", holds: " << yes(b.holds()) << ", strict: " << yes(b.strict()) << '\n'
            << "  reduced: path " << b.path_canonical << " (canonical), cycle "
            << b.cycle_dihedral << " (dihedral), holds: " << yes(b.holds_reduced())
            << ", strict: " << yes(b.strict_reduced()) << '\n';
        break;
    }
    return out.str();
}

nlohmann::ordered_json bound_json(const PathCycleBound &b)
{
    nlohmann::ordered_json j;
    j["n"] = b.n;
    j["path_raw"] = b.path_raw;
    j["cycle_raw"] = b.cycle_raw;
    j["holds"] = b.holds();
    j["strict"] = b.strict();
    j["path_canonical"] = b.path_canonical;
    j["cycle_dihedral"] = b.cycle_dihedral;
    j["holds_reduced"] = b.holds_reduced();
    j["strict_reduced"] = b.strict_reduced();
    return j;
}

void print_solutions(int n, Convention convention)
{
    for (const auto &l : enumerate_path_solutions(n, convention)) {
        const auto k = is_magic(l);
        std::cerr << "solution";
        if (k && k->k)
            std::cerr << " k=" << *k->k;
        std::cerr << ':';
        for (int label : l.labels())
            std::cerr << ' ' << label;
        std::cerr << '\n';
    }
}

int run(int argc, char **argv)
{
    Settings settings = settings_from_environment();

    CLI::App app{"Counts edge-magic total labelings of paths and cycles."};
    app.require_subcommand(1);
    app.add_option("--threads", settings.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    app.add_flag("--unsafe-limits", settings.unsafe_limits,
                 "lift the brute force and listing size guards");
    app.add_flag("-q,--quiet", settings.quiet, "suppress progress on standard error");

    const std::vector<std::string> modes{"fast", "brute", "bruteforce"};
    const std::vector<std::string> formats{"table", "csv", "json"};

    // count
    int count_n = 0;
    std::string count_mode = "fast";
    std::string count_convention = "canonical";
    std::string count_format = "table";
    bool count_per_k = false;
    bool count_halving = false;
    bool count_list = false;
    auto *count = app.add_subcommand("count", "count labelings of one path");
    count->add_option("-n,--length", count_n, "path length (edges)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--mode", count_mode)->check(CLI::IsMember(modes));
    count->add_option("--convention", count_convention)
        ->check(CLI::IsMember({"canonical", "raw"}));
    count->add_option("--format", count_format)->check(CLI::IsMember(formats));
    count->add_flag("--per-k", count_per_k, "break the total down by magic constant");
    count->add_flag("--complement-halving", count_halving,
                    "search only k <= 3n+3 and mirror the rest");
    count->add_flag("--list", count_list, "print every solution to standard error (n <= 4)");

    // table
    int table_max = 0;
    std::string table_mode = "fast";
    std::string table_convention = "canonical";
    std::string table_format = "table";
    bool table_per_k = false;
    auto *table = app.add_subcommand("table", "one row per path length 0..max");
    table->add_option("--max", table_max, "largest path length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--mode", table_mode)->check(CLI::IsMember(modes));
    table->add_option("--convention", table_convention)
        ->check(CLI::IsMember({"canonical", "raw"}));
    table->add_option("--format", table_format)->check(CLI::IsMember(formats));
    table->add_flag("--per-k", table_per_k, "include per-constant counts (json only)");

    // verify
    int verify_max = 6;
    auto *verify = app.add_subcommand("verify", "compare the search with brute force");
    verify->add_option("--max", verify_max, "largest path length")
        ->check(CLI::NonNegativeNumber);

    // cycle
    int cycle_n = 0;
    std::string cycle_mode = "fast";
    std::string cycle_convention = "raw";
    std::string cycle_format = "table";
    bool cycle_per_k = false;
    bool compare_path = false;
    auto *cycle = app.add_subcommand("cycle", "count labelings of a cycle");
    cycle->add_option("-n,--length", cycle_n, "cycle length (edges)")->required();
    cycle->add_option("--mode", cycle_mode)->check(CLI::IsMember(modes));
    cycle->add_option("--convention", cycle_convention)
        ->check(CLI::IsMember({"raw", "dihedral"}));
    cycle->add_option("--format", cycle_format)->check(CLI::IsMember(formats));
    cycle->add_flag("--per-k", cycle_per_k, "break the total down by magic constant");
    cycle->add_flag("--compare-path", compare_path,
                    "also compare with the path of the same edge count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    if (count->parsed()) {
        const bool brute = count_mode != "fast";
        if (!brute && count_n > kMaxEdges)
            throw UsageError("path length above " + std::to_string(kMaxEdges));
        if (brute && count_n > kBruteforcePathLimit && !settings.unsafe_limits)
            throw UsageError("brute force is limited to n <= " +
                             std::to_string(kBruteforcePathLimit) +
                             "; set MAGICPATH_UNSAFE_LIMITS or --unsafe-limits to override");
        if (count_list && count_n > 4 && !settings.unsafe_limits)
            throw UsageError("--list is limited to n <= 4");
        const auto convention = path_convention(count_convention);
        if (count_list)
            print_solutions(count_n, convention);
        const auto report = count_path(count_n, brute, convention, count_halving, settings);
        std::cout << format_record(OutputRecord::from(report, count_per_k),
                                   parse_format(count_format));
        return kExitOk;
    }

    if (table->parsed()) {
        const bool brute = table_mode != "fast";
        const int guard = brute ? kBruteforcePathLimit : kMaxEdges;
        if (table_max > guard && (!brute || !settings.unsafe_limits))
            throw UsageError("table maximum above " + std::to_string(guard) + " for this mode");
        std::vector<OutputRecord> rows;
        for (int n = 0; n <= table_max; ++n) {
            const auto report =
                count_path(n, brute, path_convention(table_convention), false, settings);
            rows.push_back(OutputRecord::from(report, table_per_k));
        }
        std::cout << format_table(rows, parse_format(table_format));
        return kExitOk;
    }

    if (verify->parsed()) {
        if (verify_max > kBruteforcePathLimit && !settings.unsafe_limits)
            throw UsageError("verify is limited to n <= " + std::to_string(kBruteforcePathLimit));
        bool all_match = true;
        for (int n = 0; n <= verify_max; ++n)
            for (auto convention : {Convention::canonical, Convention::raw}) {
                const auto fast = count_path(n, false, convention, false, settings);
                const auto brute = count_path(n, true, convention, false, settings);
                std::cout << "n=" << n << ' ' << to_string(convention) << ": ";
                if (const auto d = first_divergence(fast, brute)) {
                    all_match = false;
                    std::cout << "FAIL fast=" << d->left << " bruteforce=" << d->right;
                    if (d->k)
                        std::cout << " at k=" << *d->k;
                    std::cout << '\n';
                } else {
                    std::cout << "PASS total=" << fast.total << '\n';
                }
            }
        return all_match ? kExitOk : kExitMismatch;
    }

    if (cycle->parsed()) {
        if (cycle_n < 3)
            throw UsageError("a cycle needs at least 3 edges");
        const bool brute = cycle_mode != "fast";
        if (cycle_n > (brute ? kBruteforceCycleLimit : kMaxEdges) &&
            (!brute || !settings.unsafe_limits))
            throw UsageError("cycle length above the limit for this mode");
        const auto convention =
            cycle_convention == "dihedral" ? Convention::dihedral : Convention::raw;
        const auto report =
            brute ? count_cycle_bruteforce(cycle_n, convention,
                                           {.workers = settings.workers,
                                            .unsafe_limits = settings.unsafe_limits,
                                            .progress = progress_sink(settings)})
                  : count_cycle_fast(cycle_n, {.convention = convention,
                                               .workers = settings.workers,
                                               .progress = progress_sink(settings)});
        const auto record = OutputRecord::from(report, cycle_per_k);
        const auto format = parse_format(cycle_format);
        if (!compare_path) {
            std::cout << format_record(record, format);
            return kExitOk;
        }
        const auto bound = check_path_cycle_bound(cycle_n, settings.workers);
        if (format == Format::json) {
            nlohmann::ordered_json doc;
            doc["cycle"] = to_json(record);
            doc["comparison"] = bound_json(bound);
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << format_record(record, format);
            if (format == Format::csv)
                std::cout << '\n';
            std::cout << format_bound(bound, format);
        }
        return kExitOk;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char **argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
