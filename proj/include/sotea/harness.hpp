#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "sotea/config_io.hpp"
#include "sotea/engines.hpp"

namespace sotea {

struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<EngineConfig> configs;
    std::size_t runs_per_config = 30;
    std::size_t max_evals = kDefaultMaxEvals;  // overrides each config's budget
    std::uint64_t seed_base = 1;

    // Throws std::invalid_argument. Problem names and engine configs are
    // checked per cell instead, so one bad entry does not sink the plan.
    void validate() const;
};

Json to_json(const ExperimentPlan& plan);
ExperimentPlan plan_from_json(const Json& j);

// Every registered problem against the full design matrix.
ExperimentPlan sweep_plan(std::size_t runs = 30, std::size_t max_evals = kDefaultMaxEvals,
                          std::uint64_t seed_base = 1);

struct PlanCell {
    std::string problem;
    EngineConfig config;  // seed = seed_base + run, max_evals from the plan
    std::size_t run = 0;
};

// Problem-major, then config, then run.
std::vector<PlanCell> expand(const ExperimentPlan& plan);

// 16 hex digits of FNV-1a over the canonical JSON of the cell.
std::string cell_key(const PlanCell& cell);

struct PlanSummary {
    std::size_t cells = 0;
    std::size_t computed = 0;
    std::size_t cached = 0;
    std::vector<std::string> errors;  // one line per failed cell
};

// Store layout under out_dir:
//   plan.json
//   cells/<key>/cell.json     problem, config, run
//   cells/<key>/trace.csv
//   cells/<key>/snapshot_<generation>.dot
//   cells/<key>/record.json   written last; its presence marks the cell done
//   cells/<key>/error.json    on failure
// Cells with a record.json are skipped. jobs == 0 means hardware concurrency.
PlanSummary run_plan(const ExperimentPlan& plan, const std::filesystem::path& out_dir, std::size_t jobs = 1,
                     const std::function<void(const std::string&)>& progress = {});

struct StoredRun {
    PlanCell cell;
    RunRecord record;  // snapshots loaded only on request
};

// Completed cells, ordered by (problem, label, run).
std::vector<StoredRun> load_store(const std::filesystem::path& out_dir, bool with_snapshots = false);

}  // namespace sotea
