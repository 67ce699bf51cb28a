#include "sotea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sotea {

namespace fs = std::filesystem;

void ExperimentPlan::validate() const {
    if (problems.empty()) throw std::invalid_argument("plan: no problems");
    if (configs.empty()) throw std::invalid_argument("plan: no configs");
    if (runs_per_config < 1) throw std::invalid_argument("plan: runs_per_config must be at least 1");
    if (max_evals == 0) throw std::invalid_argument("plan: max_evals must be positive");
}

Json to_json(const ExperimentPlan& plan) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["problems"] = plan.problems;
    j["configs"] = Json::array();
    for (const auto& c : plan.configs) j["configs"].push_back(to_json(c));
    j["runs_per_config"] = plan.runs_per_config;
    j["max_evals"] = plan.max_evals;
    j["seed_base"] = plan.seed_base;
    return j;
}

ExperimentPlan plan_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("plan: expected an object");
    for (const auto& [key, v] : j.items()) {
        if (key != "schema_version" && key != "problems" && key != "configs" && key != "runs_per_config" &&
            key != "max_evals" && key != "seed_base")
            throw std::invalid_argument("plan: unknown key '" + key + "'");
    }
    if (j.value("schema_version", kSchemaVersion) != kSchemaVersion)
        throw std::invalid_argument("plan: unsupported schema_version");
    ExperimentPlan plan;
    try {
        plan.problems = j.at("problems").get<std::vector<std::string>>();
        for (const auto& c : j.at("configs")) plan.configs.push_back(engine_config_from_json(c));
        plan.runs_per_config = j.value("runs_per_config", plan.runs_per_config);
        plan.max_evals = j.value("max_evals", plan.max_evals);
        plan.seed_base = j.value("seed_base", plan.seed_base);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("plan: ") + e.what());
    }
    plan.validate();
    return plan;
}

ExperimentPlan sweep_plan(std::size_t runs, std::size_t max_evals, std::uint64_t seed_base) {
    ExperimentPlan plan;
    for (const auto& p : registry()) plan.problems.push_back(p.name);
    plan.configs = design_matrix(kDefaultPopulation, max_evals);
    plan.runs_per_config = runs;
    plan.max_evals = max_evals;
    plan.seed_base = seed_base;
    return plan;
}

std::vector<PlanCell> expand(const ExperimentPlan& plan) {
    plan.validate();
    std::vector<PlanCell> cells;
    for (const auto& p : plan.problems)
        for (const auto& c : plan.configs)
            for (std::size_t r = 0; r < plan.runs_per_config; ++r) {
                PlanCell cell{p, c, r};
                cell.config.seed = plan.seed_base + r;
                cell.config.max_evals = plan.max_evals;
                cells.push_back(std::move(cell));
            }
    return cells;
}

namespace {

Json cell_json(const PlanCell& cell) {
    return {{"schema_version", kSchemaVersion}, {"problem", cell.problem}, {"config", to_json(cell.config)}, {"run", cell.run}};
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Writes through a temporary name so a crash never leaves a partial file.
void write_atomically(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    write_text_file(tmp.string(), text);
    fs::rename(tmp, path);
}

void execute_cell(const PlanCell& cell, const fs::path& dir) {
    const ProblemSpec& p = problem(cell.problem);
    RunRecord rec = run_engine(cell.config, p);
    std::ostringstream trace;
    write_trace_csv(trace, rec.trace);
    write_atomically(dir / "trace.csv", trace.str());
    for (const auto& s : rec.snapshots)
        write_atomically(dir / ("snapshot_" + std::to_string(s.generation) + ".dot"), to_dot(s.graph));
    write_atomically(dir / "record.json", record_metadata(rec, p).dump(2) + "\n");
}

}  // namespace

std::string cell_key(const PlanCell& cell) {
    const std::string text = cell_json(cell).dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

PlanSummary run_plan(const ExperimentPlan& plan, const fs::path& out_dir, std::size_t jobs,
                     const std::function<void(const std::string&)>& progress) {
    const auto cells = expand(plan);
    fs::create_directories(out_dir / "cells");
    write_atomically(out_dir / "plan.json", to_json(plan).dump(2) + "\n");

    PlanSummary summary;
    summary.cells = cells.size();
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0}, computed{0}, cached{0};
    std::mutex report;

    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const auto& cell = cells[i];
            const fs::path dir = out_dir / "cells" / cell_key(cell);
            if (fs::exists(dir / "record.json")) {
                ++cached;
                continue;
            }
            fs::create_directories(dir);
            fs::remove(dir / "error.json");
            write_atomically(dir / "cell.json", cell_json(cell).dump(2) + "\n");
            try {
                execute_cell(cell, dir);
                ++computed;
            } catch (const std::exception& e) {
                errors[i] = cell.problem + " " + cell.config.label + " run " + std::to_string(cell.run) + ": " + e.what();
                Json err{{"schema_version", kSchemaVersion}, {"error", e.what()}};
                write_atomically(dir / "error.json", err.dump(2) + "\n");
            }
            if (progress) {
                std::lock_guard<std::mutex> lock(report);
                progress(cell.problem + " " + cell.config.label + " run " + std::to_string(cell.run));
            }
        }
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(1, cells.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    summary.computed = computed;
    summary.cached = cached;
    for (auto& e : errors)
        if (!e.empty()) summary.errors.push_back(std::move(e));
    return summary;
}

std::vector<StoredRun> load_store(const fs::path& out_dir, bool with_snapshots) {
    const fs::path cells_dir = out_dir / "cells";
    if (!fs::is_directory(cells_dir)) throw std::invalid_argument("not a result store: " + out_dir.string());
    std::vector<StoredRun> runs;
    for (const auto& entry : fs::directory_iterator(cells_dir)) {
        const fs::path dir = entry.path();
        if (!fs::exists(dir / "record.json")) continue;
        Json cj = read_json_file((dir / "cell.json").string());
        StoredRun run;
        run.cell.problem = cj.at("problem").get<std::string>();
        run.cell.config = engine_config_from_json(cj.at("config"));
        run.cell.run = cj.at("run").get<std::size_t>();
        std::istringstream trace(read_text(dir / "trace.csv"));
        run.record = record_from_json(read_json_file((dir / "record.json").string()), read_trace_csv(trace));
        if (with_snapshots) {
            Json rj = read_json_file((dir / "record.json").string());
            for (std::size_t g : rj.at("snapshot_generations").get<std::vector<std::size_t>>()) {
                auto dot = read_text(dir / ("snapshot_" + std::to_string(g) + ".dot"));
                run.record.snapshots.push_back({g, graph_from_dot(dot)});
            }
        }
        runs.push_back(std::move(run));
    }
    std::sort(runs.begin(), runs.end(), [](const StoredRun& a, const StoredRun& b) {
        return std::tie(a.cell.problem, a.cell.config.label, a.cell.run) <
               std::tie(b.cell.problem, b.cell.config.label, b.cell.run);
    });
    return runs;
}

}  // namespace sotea
