#include "sotea/engines.hpp"

#include <cmath>
#include <stdexcept>

#include "engine_common.hpp"

namespace sotea {

std::string_view to_string(Family f) {
    switch (f) {
    case Family::sotea: return "sotea";
    case Family::cga: return "cga";
    case Family::pea_es: return "pea_es";
    case Family::pea_ga: return "pea_ga";
    }
    return "";
}

std::optional<Family> family_from_string(std::string_view name) {
    for (auto f : {Family::sotea, Family::cga, Family::pea_es, Family::pea_ga}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view to_string(PopulationUpdate u) {
    return u == PopulationUpdate::generational ? "generational" : "pseudo_steady_state";
}

std::optional<PopulationUpdate> update_from_string(std::string_view name) {
    if (name == "generational") return PopulationUpdate::generational;
    if (name == "pseudo_steady_state") return PopulationUpdate::pseudo_steady_state;
    return std::nullopt;
}

std::string_view to_string(DesignClass c) {
    switch (c) {
    case DesignClass::pea: return "PEA";
    case DesignClass::cga: return "cGA";
    case DesignClass::sotea: return "SOTEA";
    }
    return "";
}

DesignClass design_class(Family f) {
    switch (f) {
    case Family::sotea: return DesignClass::sotea;
    case Family::cga: return DesignClass::cga;
    default: return DesignClass::pea;
    }
}

void EngineConfig::validate() const {
    auto fail = [this](const std::string& what) {
        throw std::invalid_argument("engine config '" + label + "': " + what);
    };
    if (max_evals == 0) fail("max_evals must be positive");
    if (pop_size < 3) fail("pop_size must be at least 3");
    if (max_evals < pop_size) fail("max_evals must cover the initial population");
    if (max_generations && *max_generations == 0) fail("max_generations must be positive");

    const bool is_pea = family == Family::pea_es || family == Family::pea_ga;
    if (sotea.has_value() != (family == Family::sotea)) fail("sotea parameters belong to the sotea family only");
    if (cga.has_value() != (family == Family::cga)) fail("cga parameters belong to the cga family only");
    if (pea.has_value() != is_pea) fail("pea parameters belong to the pea families only");

    if (sotea) {
        if (sotea->k_max < 3) fail("k_max must be at least k_min = 3");
        if (static_cast<std::size_t>(sotea->k_max) >= pop_size) fail("k_max must be below pop_size");
    }
    if (cga && cga->radius == 0) fail("cga radius must be positive");
    if (pea) {
        if (family == Family::pea_es && pea->selection != SelectionScheme::binary_tournament &&
            pea->selection != SelectionScheme::truncation) {
            fail("ES designs select survivors by tournament or truncation");
        }
        if (family == Family::pea_ga && pea->selection != SelectionScheme::binary_tournament &&
            pea->selection != SelectionScheme::linear_ranking) {
            fail("GA designs select parents by tournament or linear ranking");
        }
        if (family == Family::pea_es && pea->update == PopulationUpdate::generational &&
            pop_size % 2 != 0) {
            fail("generational ES needs an even pop_size (lambda = 2 mu)");
        }
    }
}

bool better_for_report(const Individual& a, const Individual& b, const ProblemSpec& p) {
    bool fa = a.eval.feasible();
    bool fb = b.eval.feasible();
    if (fa != fb) return fa;
    if (!fa && a.fitness.penalty != b.fitness.penalty) return a.fitness.penalty < b.fitness.penalty;
    (void)p;
    return a.fitness.cost < b.fitness.cost;
}

namespace detail {

Individual Evaluator::make(Genome genome) {
    if (exhausted()) throw std::logic_error("evaluation budget exhausted");
    Individual ind;
    ind.eval = evaluate(problem_, genome);
    if (!std::isfinite(ind.eval.objective)) {
        throw std::overflow_error(problem_.name + ": non-finite objective value");
    }
    ind.genome = std::move(genome);
    ind.fitness = {problem_.cost(ind.eval.objective), ind.eval.penalty()};
    ++used_;
    if (!best_ || better_for_report(ind, *best_, problem_)) best_ = ind;
    return ind;
}

FitnessComparator comparator_for(const ProblemSpec& problem) {
    return problem.n_constraints > 0 ? FitnessComparator::stochastic_ranking()
                                     : FitnessComparator::unconstrained();
}

std::vector<Fitness> fitness_of(const std::vector<Individual>& pop) {
    std::vector<Fitness> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) out.push_back(ind.fitness);
    return out;
}

RunRecord start_record(const EngineConfig& cfg, const ProblemSpec& problem) {
    cfg.validate();
    RunRecord rec;
    rec.problem = problem.name;
    rec.label = cfg.label;
    rec.family = cfg.family;
    rec.seed = cfg.seed;
    return rec;
}

void record_generation(RunRecord& rec, std::size_t generation, const Evaluator& ev) {
    const Individual& b = ev.best();
    rec.trace.push_back({generation, ev.used(), b.eval.objective, b.eval.feasible()});
}

void finish_record(RunRecord& rec, const Evaluator& ev) {
    rec.best = ev.best();
    rec.evals = ev.used();
}

bool keep_going(const EngineConfig& cfg, std::size_t next_generation, const Evaluator& ev) {
    if (ev.exhausted()) return false;
    return !cfg.max_generations || next_generation <= *cfg.max_generations;
}

std::vector<Individual> initial_population(std::size_t size, Evaluator& ev, Rng& rng) {
    const VariableDomain domain = VariableDomain::of(ev.problem());
    std::vector<Individual> pop;
    pop.reserve(size);
    for (std::size_t i = 0; i < size; ++i) pop.push_back(ev.make(random_genome(domain, rng)));
    return pop;
}

}  // namespace detail

RunRecord run_engine(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng) {
    switch (cfg.family) {
    case Family::sotea: return run_sotea(cfg, problem, rng);
    case Family::cga: return run_cga(cfg, problem, rng);
    case Family::pea_es: return run_pea_es(cfg, problem, rng);
    case Family::pea_ga: return run_pea_ga(cfg, problem, rng);
    }
    throw std::invalid_argument("unknown engine family");
}

RunRecord run_engine(const EngineConfig& cfg, const ProblemSpec& problem) {
    Rng rng(cfg.seed);
    return run_engine(cfg, problem, rng);
}

std::vector<NodeId> ring_neighborhood(std::size_t n, NodeId center, std::size_t radius) {
    std::vector<NodeId> out;
    std::size_t reach = std::min(radius, n / 2);
    for (std::size_t d = 1; d <= reach; ++d) {
        NodeId right = (center + d) % n;
        NodeId left = (center + n - d) % n;
        out.push_back(right);
        if (left != right) out.push_back(left);
    }
    return out;
}

std::vector<EngineConfig> design_matrix(std::size_t pop_size, std::size_t max_evals) {
    std::vector<EngineConfig> out;
    auto base = [&](Family f, std::string label) {
        EngineConfig c;
        c.family = f;
        c.label = std::move(label);
        c.pop_size = pop_size;
        c.max_evals = max_evals;
        return c;
    };

    for (auto update : {PopulationUpdate::pseudo_steady_state, PopulationUpdate::generational}) {
        for (auto sel : {SelectionScheme::binary_tournament, SelectionScheme::truncation}) {
            for (auto ops : {OperatorSet::seven, OperatorSet::two}) {
                std::string label = std::string("es_") +
                                    (update == PopulationUpdate::generational ? "gen" : "ss") +
                                    (sel == SelectionScheme::truncation ? "_trun" : "_tour") +
                                    (ops == OperatorSet::seven ? "_7" : "_2");
                EngineConfig c = base(Family::pea_es, label);
                c.operators = ops;
                c.pea = PeaParams{update, sel};
                out.push_back(c);
            }
        }
    }
    for (auto sel : {SelectionScheme::binary_tournament, SelectionScheme::linear_ranking}) {
        for (auto ops : {OperatorSet::seven, OperatorSet::two}) {
            std::string label = std::string("ga_ss") +
                                (sel == SelectionScheme::linear_ranking ? "_lin" : "_tour") +
                                (ops == OperatorSet::seven ? "_7" : "_2");
            EngineConfig c = base(Family::pea_ga, label);
            c.operators = ops;
            c.pea = PeaParams{PopulationUpdate::pseudo_steady_state, sel};
            out.push_back(c);
        }
    }
    for (std::size_t r : kCgaRadiusSweep) {
        EngineConfig c = base(Family::cga, "cga_r" + std::to_string(r));
        c.cga = CgaParams{r};
        out.push_back(c);
    }
    for (int k : kSoteaKMaxSweep) {
        EngineConfig c = base(Family::sotea, "sotea_k" + std::to_string(k));
        c.sotea = SoteaParams{k};
        out.push_back(c);
    }
    return out;
}

}  // namespace sotea
