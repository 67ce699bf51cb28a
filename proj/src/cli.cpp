#include "sotea/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>

#include "sotea/analysis.hpp"
#include "sotea/growth.hpp"
#include "sotea/harness.hpp"
#include "sotea/metrics.hpp"

namespace sotea {

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::size_t jobs = 1;
};

fs::path output_dir(const GlobalOptions& g, const fs::path& fallback) {
    return g.out_dir.empty() ? fallback : fs::path(g.out_dir);
}

int cmd_problems(std::ostream& out) {
    out << std::left;
    for (const auto& p : registry()) {
        out << std::setw(16) << p.name << " dim=" << std::setw(3) << p.dim
            << " sense=" << (p.sense == Sense::minimize ? "min" : "max") << " constraints=" << p.n_constraints;
        if (p.best_known) out << " best_known=" << std::setprecision(10) << *p.best_known;
        out << '\n';
    }
    return 0;
}

int cmd_sweep(const GlobalOptions& g, std::size_t runs, std::size_t max_evals, bool dry_run, std::ostream& out) {
    auto plan = sweep_plan(runs, max_evals, g.seed.value_or(1));
    if (dry_run) {
        out << "problems=" << plan.problems.size() << " configs=" << plan.configs.size() << " runs=" << runs
            << " cells=" << plan.problems.size() * plan.configs.size() * runs << '\n';
        return 0;
    }
    fs::path dir = output_dir(g, ".");
    fs::create_directories(dir);
    fs::path path = dir / "sweep_plan.json";
    write_text_file(path.string(), to_json(plan).dump(2) + "\n");
    out << path.string() << '\n';
    return 0;
}

int cmd_run(const GlobalOptions& g, const std::string& plan_path, std::ostream& out, std::ostream& err) {
    auto plan = plan_from_json(read_json_file(plan_path));
    if (g.seed) plan.seed_base = *g.seed;
    fs::path dir = output_dir(g, "results");
    auto summary = run_plan(plan, dir, g.jobs);
    out << "cells=" << summary.cells << " computed=" << summary.computed << " cached=" << summary.cached
        << " failed=" << summary.errors.size() << " store=" << dir.string() << '\n';
    for (const auto& e : summary.errors) err << "error: " << e << '\n';
    return summary.errors.empty() ? 0 : 3;
}

int cmd_analyze(const GlobalOptions& g, const std::string& store, std::ostream& out) {
    for (const auto& path : analyze_store(store, output_dir(g, fs::path(store) / "analysis")))
        out << path.string() << '\n';
    return 0;
}

int cmd_topology(const GlobalOptions& g, const std::string& store, bool study, const std::string& problem_name,
                 std::size_t runs, std::size_t generations, std::ostream& out) {
    std::vector<TopologyStudyCell> cells;
    fs::path dir;
    if (study) {
        TopologyStudyOptions opt;
        opt.runs = runs;
        opt.generations = generations;
        opt.seed = g.seed.value_or(1);
        cells = sotea_topology_study(problem(problem_name), opt);
        dir = output_dir(g, ".");
    } else {
        if (store.empty()) throw CLI::ValidationError("topology", "give a result store or --study");
        std::map<std::pair<std::size_t, int>, std::pair<std::vector<TopologyReport>, std::size_t>> groups;
        for (const auto& r : load_store(store, true)) {
            if (r.record.family != Family::sotea) continue;
            auto& [reports, count] = groups[{r.cell.config.pop_size, r.cell.config.sotea->k_max}];
            ++count;
            for (const auto& s : r.record.snapshots) reports.push_back(analyze_topology(s.graph));
        }
        for (const auto& [key, acc] : groups) {
            TopologyStudyCell c;
            c.pop_size = key.first;
            c.k_max = key.second;
            c.runs = acc.second;
            c.snapshots = acc.first.size();
            c.mean = average_reports(acc.first);
            cells.push_back(std::move(c));
        }
        dir = output_dir(g, store);
    }
    fs::create_directories(dir);
    fs::path path = dir / "topology.csv";
    std::ofstream file(path, std::ios::binary);
    write_study_csv(file, cells);
    out << path.string() << '\n';
    return 0;
}

int cmd_grow(const GlobalOptions& g, const std::string& config_path, std::ostream& out) {
    Json j = read_json_file(config_path);
    GrowthConfig cfg = growth_config_from_json(j);
    const std::size_t replicates = j.value("replicates", std::size_t{1});
    const std::uint64_t seed = g.seed.value_or(j.value("seed", std::uint64_t{1}));
    fs::path dir = output_dir(g, ".");
    fs::create_directories(dir);
    std::ofstream csv(dir / "growth.csv", std::ios::binary);
    csv << std::setprecision(10);
    csv << "replicate,model,nodes,edges,component_nodes,k_ave,c_ave,L,c_rand,L_rand,knn_slope,tail_gamma\n";
    for (std::size_t r = 0; r < replicates; ++r) {
        Rng rng(seed + r);
        PopulationGraph graph = generate(cfg, rng);
        write_text_file((dir / ("growth_" + std::to_string(r) + ".dot")).string(), to_dot(graph));
        PopulationGraph big = largest_component(graph);
        csv << r << ',' << to_string(cfg.model) << ',' << graph.size() << ',' << graph.edge_count() << ','
            << big.size() << ',' << mean_degree(big) << ',' << average_clustering(big) << ',';
        if (big.size() >= 2 && mean_degree(big) > 1.0) {
            auto rep = analyze_topology(big);
            csv << rep.path_length << ',' << rep.c_rand << ',' << rep.path_length_rand << ',';
            if (rep.knn_fit) csv << rep.knn_fit->slope;
        } else {
            csv << ",,,";
        }
        csv << ',';
        auto k_min = cfg.model == GrowthModel::ba ? cfg.ba.m : std::size_t{1};
        if (auto tail = degree_tail_exponent(graph, k_min)) csv << tail->gamma;
        csv << '\n';
    }
    out << (dir / "growth.csv").string() << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-organising topology evolutionary algorithm toolkit", "sotea"};
    app.require_subcommand(1);

    GlobalOptions g;
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "Base seed (overrides plan or config seeds)");
    app.add_option("--out-dir", g.out_dir, "Output directory");
    app.add_option("--jobs", g.jobs, "Worker threads for run (0 = all cores)")->capture_default_str();

    auto* problems_cmd = app.add_subcommand("problems", "List the benchmark problems");

    auto* sweep_cmd = app.add_subcommand("sweep", "Write the full design-matrix plan");
    std::size_t sweep_runs = 30, sweep_evals = kDefaultMaxEvals;
    bool dry_run = false;
    sweep_cmd->add_option("--runs", sweep_runs, "Runs per design")->capture_default_str()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-evals", sweep_evals, "Evaluation budget")->capture_default_str()->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--dry-run", dry_run, "Print the cell count only");

    auto* run_cmd = app.add_subcommand("run", "Execute a plan into a result store");
    std::string plan_path;
    run_cmd->add_option("plan", plan_path, "Plan JSON")->required()->check(CLI::ExistingFile);

    auto* analyze_cmd = app.add_subcommand("analyze", "Write comparison, aggregate and profile CSVs");
    std::string store;
    analyze_cmd->add_option("store", store, "Result store directory")->required()->check(CLI::ExistingDirectory);

    auto* topology_cmd = app.add_subcommand("topology", "Network statistics of SOTEA topologies");
    std::string topo_store, topo_problem = "rastrigin";
    bool study = false;
    std::size_t topo_runs = 10, topo_generations = 1000;
    topology_cmd->add_option("store", topo_store, "Result store with SOTEA snapshots");
    topology_cmd->add_flag("--study", study, "Run the N x K_Max study instead of reading a store");
    topology_cmd->add_option("--problem", topo_problem, "Problem for --study")->capture_default_str();
    topology_cmd->add_option("--runs", topo_runs, "Runs per cell for --study")->capture_default_str();
    topology_cmd->add_option("--generations", topo_generations, "Generations for --study")->capture_default_str();

    auto* grow_cmd = app.add_subcommand("grow", "Generate reference networks and their metrics");
    std::string growth_path;
    grow_cmd->add_option("config", growth_path, "Growth JSON")->required()->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (*seed_opt) g.seed = seed;
        if (*problems_cmd) return cmd_problems(out);
        if (*sweep_cmd) return cmd_sweep(g, sweep_runs, sweep_evals, dry_run, out);
        if (*run_cmd) return cmd_run(g, plan_path, out, err);
        if (*analyze_cmd) return cmd_analyze(g, store, out);
        if (*topology_cmd) return cmd_topology(g, topo_store, study, topo_problem, topo_runs, topo_generations, out);
        if (*grow_cmd) return cmd_grow(g, growth_path, out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace sotea
