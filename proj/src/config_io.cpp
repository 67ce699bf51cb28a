#include "sotea/config_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sotea {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) bad(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) bad(where + ": unknown key '" + key + "'");
}

template <class E, class F>
E parse_enum(const Json& j, const std::string& key, F from_string) {
    auto text = j.at(key).get<std::string>();
    auto v = from_string(text);
    if (!v) bad("unknown " + key + " '" + text + "'");
    return *v;
}

}  // namespace

Json to_json(const EngineConfig& cfg) {
    Json j;
    j["family"] = std::string(to_string(cfg.family));
    j["label"] = cfg.label;
    j["pop_size"] = cfg.pop_size;
    j["max_evals"] = cfg.max_evals;
    j["max_generations"] = cfg.max_generations ? Json(*cfg.max_generations) : Json(nullptr);
    j["seed"] = cfg.seed;
    j["operators"] = std::string(to_string(cfg.operators));
    j["snapshot_every"] = cfg.snapshot_every;
    if (cfg.sotea) j["sotea"] = {{"k_max", cfg.sotea->k_max}};
    if (cfg.cga) j["cga"] = {{"radius", cfg.cga->radius}};
    if (cfg.pea)
        j["pea"] = {{"update", std::string(to_string(cfg.pea->update))},
                    {"selection", std::string(to_string(cfg.pea->selection))}};
    return j;
}

EngineConfig engine_config_from_json(const Json& j) {
    only_keys(j,
              {"family", "label", "pop_size", "max_evals", "max_generations", "seed", "operators",
               "snapshot_every", "sotea", "cga", "pea"},
              "engine config");
    try {
        EngineConfig c;
        c.family = parse_enum<Family>(j, "family", family_from_string);
        c.label = j.value("label", std::string(to_string(c.family)));
        c.pop_size = j.value("pop_size", c.pop_size);
        c.max_evals = j.value("max_evals", c.max_evals);
        if (j.contains("max_generations") && !j["max_generations"].is_null())
            c.max_generations = j["max_generations"].get<std::size_t>();
        c.seed = j.value("seed", c.seed);
        if (j.contains("operators")) c.operators = parse_enum<OperatorSet>(j, "operators", operator_set_from_string);
        c.snapshot_every = j.value("snapshot_every", c.snapshot_every);
        if (j.contains("sotea")) {
            only_keys(j["sotea"], {"k_max"}, "sotea");
            c.sotea = SoteaParams{j["sotea"].value("k_max", SoteaParams{}.k_max)};
        }
        if (j.contains("cga")) {
            only_keys(j["cga"], {"radius"}, "cga");
            c.cga = CgaParams{j["cga"].value("radius", CgaParams{}.radius)};
        }
        if (j.contains("pea")) {
            only_keys(j["pea"], {"update", "selection"}, "pea");
            PeaParams p;
            if (j["pea"].contains("update")) p.update = parse_enum<PopulationUpdate>(j["pea"], "update", update_from_string);
            if (j["pea"].contains("selection"))
                p.selection = parse_enum<SelectionScheme>(j["pea"], "selection", selection_from_string);
            c.pea = p;
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("engine config: ") + e.what());
    }
}

Json to_json(const GrowthConfig& cfg) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] = to_string(cfg.model);
    j["target_n"] = cfg.target_n;
    j["ba"] = {{"m0", cfg.ba.m0}, {"m", cfg.ba.m}};
    j["dd"] = {{"delta", cfg.dd.delta}, {"alpha_coeff", cfg.dd.alpha_coeff}, {"seed_size", cfg.dd.seed_size}};
    j["fitness"] = {{"n", cfg.fitness.n}, {"rho", to_string(cfg.fitness.rho)}, {"x_max", cfg.fitness.x_max}};
    return j;
}

GrowthConfig growth_config_from_json(const Json& j) {
    only_keys(j, {"schema_version", "model", "target_n", "ba", "dd", "fitness", "replicates", "seed"}, "growth config");
    try {
        GrowthConfig c;
        c.model = parse_enum<GrowthModel>(j, "model", growth_model_from_string);
        c.target_n = j.value("target_n", c.target_n);
        if (j.contains("ba")) {
            only_keys(j["ba"], {"m0", "m"}, "ba");
            c.ba.m0 = j["ba"].value("m0", c.ba.m0);
            c.ba.m = j["ba"].value("m", c.ba.m);
        }
        if (j.contains("dd")) {
            only_keys(j["dd"], {"delta", "alpha_coeff", "seed_size"}, "dd");
            c.dd.delta = j["dd"].value("delta", c.dd.delta);
            c.dd.alpha_coeff = j["dd"].value("alpha_coeff", c.dd.alpha_coeff);
            c.dd.seed_size = j["dd"].value("seed_size", c.dd.seed_size);
        }
        if (j.contains("fitness")) {
            only_keys(j["fitness"], {"n", "rho", "x_max"}, "fitness");
            c.fitness.n = j["fitness"].value("n", c.fitness.n);
            if (j["fitness"].contains("rho"))
                c.fitness.rho = parse_enum<FitnessDistribution>(j["fitness"], "rho", fitness_distribution_from_string);
            c.fitness.x_max = j["fitness"].value("x_max", c.fitness.x_max);
        }
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("growth config: ") + e.what());
    }
}

Json record_metadata(const RunRecord& rec, const ProblemSpec& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["problem"] = rec.problem;
    j["label"] = rec.label;
    j["family"] = std::string(to_string(rec.family));
    j["seed"] = rec.seed;
    j["evals"] = rec.evals;
    j["notes"] = rec.notes;
    j["best"] = {{"genome", rec.best.genome},
                 {"objective", rec.best.eval.objective},
                 {"penalty", rec.best.eval.penalty()},
                 {"feasible", rec.best.eval.feasible()},
                 {"cost", p.cost(rec.best.eval.objective)}};
    j["snapshot_generations"] = Json::array();
    for (const auto& s : rec.snapshots) j["snapshot_generations"].push_back(s.generation);
    return j;
}

RunRecord record_from_json(const Json& j, std::vector<GenerationRow> trace) {
    if (j.value("schema_version", 0) != kSchemaVersion) bad("record: unsupported schema_version");
    RunRecord rec;
    rec.problem = j.at("problem").get<std::string>();
    rec.label = j.at("label").get<std::string>();
    rec.family = parse_enum<Family>(j, "family", family_from_string);
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.evals = j.at("evals").get<std::size_t>();
    rec.notes = j.at("notes").get<std::vector<std::string>>();
    const ProblemSpec& p = problem(rec.problem);
    rec.best.genome = j.at("best").at("genome").get<Genome>();
    rec.best.eval = evaluate_unchecked(p, rec.best.genome);
    rec.best.fitness = {p.cost(rec.best.eval.objective), rec.best.eval.penalty()};
    rec.trace = std::move(trace);
    return rec;
}

void write_trace_csv(std::ostream& out, const std::vector<GenerationRow>& trace) {
    out << "generation,evals,best,feasible\n";
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& r : trace) out << r.generation << ',' << r.evals << ',' << r.best << ',' << (r.feasible ? 1 : 0) << '\n';
    out.precision(old);
}

std::vector<GenerationRow> read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "generation,evals,best,feasible") bad("trace: missing header");
    std::vector<GenerationRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        GenerationRow r;
        char c1 = 0, c2 = 0;
        int feasible = 0;
        std::string best;
        cells >> r.generation >> c1 >> r.evals >> c2;
        std::getline(cells, best, ',');
        cells >> feasible;
        if (c1 != ',' || c2 != ',' || cells.fail()) bad("trace: malformed row '" + line + "'");
        r.best = std::stod(best);
        r.feasible = feasible != 0;
        rows.push_back(r);
    }
    return rows;
}

PopulationGraph graph_from_dot(const std::string& dot) {
    std::istringstream in(dot);
    std::string line;
    if (!std::getline(in, line) || line.rfind("graph", 0) != 0) bad("dot: expected 'graph' header");
    std::vector<Edge> edges;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line == "}") break;
        std::istringstream cells(line);
        std::size_t a = 0, b = 0;
        std::string arrow;
        if (!(cells >> a)) bad("dot: malformed line '" + line + "'");
        n = std::max(n, a + 1);
        if (cells >> arrow && arrow == "--") {
            if (!(cells >> b)) bad("dot: malformed edge '" + line + "'");
            n = std::max(n, b + 1);
            edges.push_back({a, b});
        }
    }
    return PopulationGraph::from_edges(n, edges);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sotea
