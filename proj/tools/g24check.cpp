// g24check: construct G2(4) from PG(2,16) and verify the 64-dimensional
// two-distance Borsuk counterexample. See README.md for the commands.

#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "g24/modrank.hpp"
#include "g24/pipeline.hpp"

namespace {

constexpr int kUsage = static_cast<int>(g24::ExitCode::usage);

int usage_error(const std::string& msg) {
    std::cerr << "g24check: " << msg << '\n';
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct the G2(4) graph and verify the dimension-64 Borsuk counterexample"};
    g24::RunConfig cfg;
    std::string out;
    std::string flip;
    bool serial = false;

    app.add_option("command", cfg.command, "check (default), report, export-graph, export-isosets, export-vectors, export-cover")
        ->check(CLI::IsMember({"check", "report", "export-graph", "export-isosets", "export-vectors", "export-cover"}));
    app.add_option("--format", cfg.format, "graph export format")->check(CLI::IsMember({"dimacs", "json"}));
    app.add_option("--out", out, "output file (default: stdout)");
    app.add_option("--primes", cfg.primes, "primes for the modular rank bounds")->delimiter(',');
    app.add_flag("--with-clebsch-check", cfg.with_clebsch_check, "match B_1, B_2, B_3 against the 2-coclique extension of the halved 5-cube");
    app.add_flag("--with-uniqueness", cfg.with_uniqueness, "count all covers of C by special 5-cliques");
    app.add_option("--uniqueness-budget", cfg.uniqueness_budget, "search-node budget for cover counting")->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "OpenMP worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized spot checks; the pipeline itself is deterministic");
    app.add_flag("--timings", cfg.timings, "include per-stage wall-clock times");
    app.add_flag("--serial", serial, "use the serial reference kernels");
    app.add_option("--inject-flip", flip, "toggle edge I,J after construction (fault injection)")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (!out.empty()) cfg.out = out;
    if (serial) cfg.exec = g24::Exec::serial;
    if (std::set<std::uint64_t>(cfg.primes.begin(), cfg.primes.end()).size() < 2)
        return usage_error("--primes needs at least two distinct primes");
    for (auto p : cfg.primes)
        if (p <= 2 || p >= (std::uint64_t{1} << 32) || !g24::is_prime(p))
            return usage_error("--primes: " + std::to_string(p) + " is not an odd prime below 2^32");
    if (!flip.empty()) {
        const auto comma = flip.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument("no comma");
            const int i = std::stoi(flip.substr(0, comma));
            const int j = std::stoi(flip.substr(comma + 1));
            if (i < 0 || j < 0 || i >= g24::kVertexCount || j >= g24::kVertexCount || i == j)
                throw std::out_of_range("vertex");
            cfg.inject_flip = {i, j};
        } catch (const std::exception&) {
            return usage_error("--inject-flip expects two distinct vertex indices I,J");
        }
    }

    try {
        return static_cast<int>(g24::run_command(cfg, std::cout, std::cerr));
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}
