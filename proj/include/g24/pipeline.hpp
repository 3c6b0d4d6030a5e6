#pragma once

// The end-to-end check: every stage from the field tables to the final
// verdict, producing a structured report and the file exports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "g24/cliques.hpp"
#include "g24/euclid.hpp"
#include "g24/geometry.hpp"
#include "g24/graph.hpp"

namespace g24 {

inline constexpr const char* kToolName = "g24check";
inline constexpr const char* kToolVersion = "1.0.0";

enum class ExitCode : int { pass = 0, failure = 1, inconclusive = 2, usage = 3 };

enum class Stage {
    field,
    geometry,
    bases,
    graph,
    srg,
    partition,
    claim1,
    structure,
    representation,
    inner_products,
    dimensions,
    max_clique,
    cover,
    uniqueness,
    verdict,
};

const char* stage_name(Stage s);

struct RunConfig {
    std::string command = "check";
    std::optional<std::string> out;
    std::string format = "dimacs";
    std::vector<std::uint64_t> primes{kDefaultPrimeA, kDefaultPrimeB};
    bool with_clebsch_check = false;
    bool with_uniqueness = false;
    long uniqueness_budget = 1'000'000;
    int threads = 0;  // 0: OpenMP default
    std::uint64_t seed = 1;
    bool timings = false;
    Exec exec = Exec::parallel;
    /// Stop after this stage; later stages are reported as skipped.
    Stage last_stage = Stage::verdict;
    /// Test hook: toggles one edge right after the graph is built.
    std::optional<std::pair<int, int>> inject_flip;
};

enum class StageStatus { ok, failed, inconclusive, skipped };
const char* to_string(StageStatus s);

struct StageRecord {
    Stage stage{};
    std::string label;
    StageStatus status = StageStatus::skipped;
    std::string witness;
    long elapsed_us = 0;
};

/// Everything computed along the way; each member is set once its stage passed.
struct Artifacts {
    std::optional<HermitianPlane> plane;
    std::vector<Basis> bases;
    std::vector<IsoSet> isosets;
    std::optional<Graph> graph;
    std::optional<SrgParams> params;
    std::optional<Spectrum> spectrum;
    std::optional<Partition> partition;
    std::optional<ReprMatrix> y;
    std::optional<ContrastVector> p, q;
    std::vector<DimensionCertificate> dimensions;
    std::optional<MaxCliqueResult> clique;
    std::vector<SpecialClique> special;
    std::optional<CoverResult> cover;
    std::optional<CoverCount> cover_count;
    std::optional<Verdict> verdict;
};

struct RunResult {
    std::vector<StageRecord> stages;
    nlohmann::json report;
    Artifacts artifacts;
    ExitCode exit_code = ExitCode::failure;

    const StageRecord* stage(Stage s) const;
};

/// Runs the stages in order, short-circuiting on the first mandatory failure.
RunResult run_check(const RunConfig& cfg);

/// One status line per stage, "<label> ... OK", then the verdict.
std::string text_summary(const RunResult& r, bool with_timings);

void write_dimacs(std::ostream& os, const Graph& g);
void write_graph_json(std::ostream& os, const Graph& g);
void write_isosets_csv(std::ostream& os, const std::vector<IsoSet>& isosets);
void write_vectors_csv(std::ostream& os, const ReprMatrix& y);
void write_cover_csv(std::ostream& os, const CoverResult& cover);
/// Pretty-printed, newline-terminated.
void write_report(std::ostream& os, const nlohmann::json& report);

/// Runs the stages the command needs and writes its output to cfg.out or `fallback`.
/// Throws std::runtime_error when the output file cannot be written.
ExitCode run_command(const RunConfig& cfg, std::ostream& fallback, std::ostream& log);

}  // namespace g24
