#include <algorithm>

#include "engine_common.hpp"
#include "sotea/topology.hpp"

namespace sotea {

namespace {

constexpr int kMateRedraws = 10;

// Endpoint of a two-step walk from n1 that is not n1 itself; after the
// redraws run out the midpoint of the last walk is used.
NodeId walk_mate(const PopulationGraph& g, NodeId n1, Rng& rng) {
    Walk w{};
    for (int i = 0; i < kMateRedraws; ++i) {
        w = two_step_walk(g, n1, rng);
        if (w.end != n1) return w.end;
    }
    return w.mid;
}

// Builds the offspring for slot n1 and returns the Best_of survivor.
template <class PickMate>
Individual breed(const std::vector<Individual>& pop, const RankTable& ranks, NodeId n1,
                 OperatorSet ops, const FitnessComparator& cmp, detail::Evaluator& ev, Rng& rng,
                 PickMate&& pick_mate) {
    const VariableDomain domain = VariableDomain::of(ev.problem());
    NodeId mate = pick_mate();
    Operator op = pick_operator(ops, rng);
    ParentSet parents;
    parents.primary = pop[n1].genome;
    parents.mate = pop[mate].genome;
    parents.primary_is_better = ranks.rank(n1) < ranks.rank(mate);
    if (op == Operator::differential_evolution) parents.donor = pop[pick_mate()].genome;
    Individual child = ev.make(create_offspring(op, parents, domain, rng));
    if (challenger_wins(child.fitness, pop[n1].fitness, cmp, rng)) return child;
    return pop[n1];
}

bool snapshot_due(const EngineConfig& cfg, std::size_t generation) {
    return cfg.snapshot_every > 0 && generation % cfg.snapshot_every == 0;
}

}  // namespace

RunRecord run_sotea(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng) {
    RunRecord rec = detail::start_record(cfg, problem);
    if (cfg.family != Family::sotea) throw std::invalid_argument("run_sotea: wrong family");
    const SetPointPolicy policy{3, cfg.sotea->k_max};
    const FitnessComparator cmp = detail::comparator_for(problem);
    detail::Evaluator ev(problem, cfg.max_evals);

    const std::size_t n = cfg.pop_size;
    std::vector<Individual> pop = detail::initial_population(n, ev, rng);
    PopulationGraph graph = PopulationGraph::ring(n);
    detail::record_generation(rec, 0, ev);

    for (std::size_t gen = 1; detail::keep_going(cfg, gen, ev); ++gen) {
        const auto fit = detail::fitness_of(pop);
        const RankTable ranks = assign_ranks(fit, cmp, rng);
        std::vector<Individual> temp = pop;
        for (NodeId n1 = 0; n1 < n && !ev.exhausted(); ++n1) {
            apply_topology_step(graph, ranks, policy, n1, rng);
            temp[n1] = breed(pop, ranks, n1, cfg.operators, cmp, ev, rng,
                             [&] { return walk_mate(graph, n1, rng); });
        }
        pop = std::move(temp);
        detail::record_generation(rec, gen, ev);
        if (snapshot_due(cfg, gen)) rec.snapshots.push_back({gen, graph});
    }
    detail::finish_record(rec, ev);
    return rec;
}

RunRecord run_cga(const EngineConfig& cfg, const ProblemSpec& problem, Rng& rng) {
    RunRecord rec = detail::start_record(cfg, problem);
    if (cfg.family != Family::cga) throw std::invalid_argument("run_cga: wrong family");
    const FitnessComparator cmp = detail::comparator_for(problem);
    detail::Evaluator ev(problem, cfg.max_evals);

    const std::size_t n = cfg.pop_size;
    const std::size_t radius = cfg.cga->radius;
    if (radius >= (n + 1) / 2) {
        rec.notes.push_back("radius " + std::to_string(radius) +
                            " covers the whole ring; mating is panmictic");
    }
    std::vector<std::vector<NodeId>> hoods(n);
    for (NodeId i = 0; i < n; ++i) hoods[i] = ring_neighborhood(n, i, radius);
    const PopulationGraph ring = PopulationGraph::ring(n);

    std::vector<Individual> pop = detail::initial_population(n, ev, rng);
    detail::record_generation(rec, 0, ev);

    std::vector<int> local;
    for (std::size_t gen = 1; detail::keep_going(cfg, gen, ev); ++gen) {
        const auto fit = detail::fitness_of(pop);
        const RankTable ranks = assign_ranks(fit, cmp, rng);
        std::vector<Individual> temp = pop;
        for (NodeId n1 = 0; n1 < n && !ev.exhausted(); ++n1) {
            const auto& hood = hoods[n1];
            // Local 1-based ranks follow the global order.
            std::vector<std::size_t> idx(hood.size());
            for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                return ranks.rank(hood[a]) < ranks.rank(hood[b]);
            });
            local.assign(hood.size(), 0);
            for (std::size_t r = 0; r < idx.size(); ++r) local[idx[r]] = static_cast<int>(r + 1);

            temp[n1] = breed(pop, ranks, n1, cfg.operators, cmp, ev, rng, [&] {
                return hood[select(SelectionScheme::linear_ranking, local, 1, rng).front()];
            });
        }
        pop = std::move(temp);
        detail::record_generation(rec, gen, ev);
        if (snapshot_due(cfg, gen)) rec.snapshots.push_back({gen, ring});
    }
    detail::finish_record(rec, ev);
    return rec;
}

}  // namespace sotea
