#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "sotea/engines.hpp"

using namespace sotea;

namespace {

EngineConfig config_for(const std::string& label, std::size_t pop, std::size_t evals) {
    for (auto c : design_matrix(pop, evals))
        if (c.label == label) return c;
    throw std::invalid_argument("no design " + label);
}

void expect_monotone(const RunRecord& rec, const ProblemSpec& p) {
    for (std::size_t i = 1; i < rec.trace.size(); ++i) {
        const auto& a = rec.trace[i - 1];
        const auto& b = rec.trace[i];
        EXPECT_LE(a.evals, b.evals);
        if (a.feasible && b.feasible) {
            EXPECT_LE(p.cost(b.best), p.cost(a.best)) << rec.label;
        }
        EXPECT_FALSE(a.feasible && !b.feasible) << rec.label;
    }
}

bool same_record(const RunRecord& a, const RunRecord& b) {
    if (a.trace.size() != b.trace.size() || a.snapshots.size() != b.snapshots.size()) return false;
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        if (a.trace[i].best != b.trace[i].best || a.trace[i].evals != b.trace[i].evals) return false;
    }
    for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
        if (!(a.snapshots[i].graph == b.snapshots[i].graph)) return false;
    }
    return a.best.genome == b.best.genome && a.evals == b.evals;
}

}  // namespace

TEST(DesignMatrix, CountsAndLabels) {
    auto all = design_matrix();
    std::size_t es = 0, ga = 0, cga = 0, so = 0;
    std::set<std::string> labels;
    for (const auto& c : all) {
        EXPECT_NO_THROW(c.validate()) << c.label;
        labels.insert(c.label);
        es += c.family == Family::pea_es;
        ga += c.family == Family::pea_ga;
        cga += c.family == Family::cga;
        so += c.family == Family::sotea;
        EXPECT_EQ(c.max_evals, 150000u);
        EXPECT_EQ(c.pop_size, 50u);
    }
    EXPECT_EQ(es, 8u);
    EXPECT_EQ(ga, 4u);
    EXPECT_EQ(cga, 5u);
    EXPECT_EQ(so, 4u);
    EXPECT_EQ(labels.size(), all.size());
    for (auto l : {"es_gen_tour_7", "es_ss_trun_2", "ga_ss_lin_2", "ga_ss_tour_7", "cga_r12", "sotea_k3",
                   "sotea_k9"})
        EXPECT_TRUE(labels.count(l)) << l;
}

TEST(EngineConfig, Validation) {
    auto c = config_for("sotea_k7", 50, 1000);
    c.max_evals = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = config_for("sotea_k7", 50, 1000);
    c.sotea->k_max = 50;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = config_for("sotea_k7", 50, 1000);
    c.cga = CgaParams{2};
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = config_for("cga_r1", 50, 1000);
    c.cga.reset();
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = config_for("es_gen_trun_7", 50, 1000);
    c.pea->selection = SelectionScheme::linear_ranking;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_THROW(run_engine(c, problem("rastrigin")), std::invalid_argument);
}

TEST(RingNeighborhood, Sizes) {
    EXPECT_EQ(ring_neighborhood(50, 0, 1).size(), 2u);
    EXPECT_EQ(ring_neighborhood(50, 7, 12).size(), 24u);
    auto all = ring_neighborhood(50, 3, 25);
    EXPECT_EQ(all.size(), 49u);
    EXPECT_EQ(std::set<NodeId>(all.begin(), all.end()).size(), 49u);
    EXPECT_FALSE(std::set<NodeId>(all.begin(), all.end()).count(3));
    auto r1 = ring_neighborhood(50, 0, 1);
    EXPECT_EQ(std::set<NodeId>(r1.begin(), r1.end()), (std::set<NodeId>{1, 49}));
}

TEST(Sotea, FullBudgetUsesExactlyThreeThousandGenerations) {
    auto cfg = config_for("sotea_k7", 50, 150000);
    cfg.seed = 3;
    const auto& p = problem("rastrigin");
    auto rec = run_engine(cfg, p);
    EXPECT_EQ(rec.evals, 150000u);
    ASSERT_EQ(rec.trace.size(), 3000u);
    EXPECT_EQ(rec.trace.back().generation, 2999u);
    EXPECT_EQ(rec.trace.back().evals, 150000u);
    expect_monotone(rec, p);
    ASSERT_EQ(rec.snapshots.size(), 59u);
    for (const auto& s : rec.snapshots) {
        EXPECT_EQ(s.generation % 50, 0u);
        EXPECT_TRUE(is_connected(s.graph));
        EXPECT_EQ(s.graph.size(), 50u);
    }
    EXPECT_LT(rec.best.eval.objective, rec.trace.front().best);
}

TEST(Sotea, DeterministicForSeed) {
    auto cfg = config_for("sotea_k5", 30, 6000);
    cfg.seed = 11;
    const auto& p = problem("welded_beam");
    auto a = run_engine(cfg, p);
    auto b = run_engine(cfg, p);
    EXPECT_TRUE(same_record(a, b));
    cfg.seed = 12;
    EXPECT_FALSE(same_record(a, run_engine(cfg, p)));
}

TEST(Sotea, GenerationCapStopsEarly) {
    auto cfg = config_for("sotea_k3", 20, 100000);
    cfg.max_generations = 10;
    auto rec = run_engine(cfg, problem("griewangk"));
    EXPECT_EQ(rec.trace.size(), 11u);
    EXPECT_EQ(rec.evals, 20u * 11u);
}

TEST(Cga, FlagsPanmicticRadius) {
    auto cfg = config_for("cga_r12", 20, 400);
    auto rec = run_engine(cfg, problem("rastrigin"));
    EXPECT_FALSE(rec.notes.empty());
    cfg = config_for("cga_r2", 20, 400);
    EXPECT_TRUE(run_engine(cfg, problem("rastrigin")).notes.empty());
}

TEST(AllDesigns, BudgetMonotoneAndDeterministic) {
    for (const auto& name : {"pressure_vessel", "sys_lin_eq"}) {
        const auto& p = problem(name);
        for (auto cfg : design_matrix(20, 3010)) {
            if (cfg.family == Family::sotea && cfg.sotea->k_max >= 20) continue;
            cfg.seed = 5;
            auto rec = run_engine(cfg, p);
            EXPECT_EQ(rec.evals, 3010u) << cfg.label;
            EXPECT_EQ(rec.trace.back().evals, 3010u) << cfg.label;
            EXPECT_EQ(rec.trace.front().evals, 20u) << cfg.label;
            expect_monotone(rec, p);
            EXPECT_TRUE(same_record(rec, run_engine(cfg, p))) << cfg.label;
            EXPECT_NO_THROW(evaluate(p, rec.best.genome));
            if (cfg.family == Family::sotea || cfg.family == Family::cga) {
                // 149 full generations plus a partial 150th.
                EXPECT_EQ(rec.snapshots.size(), 3u) << cfg.label;
            } else {
                EXPECT_TRUE(rec.snapshots.empty());
            }
        }
    }
}

TEST(PeaGa, StepsOneEvaluationAtATime) {
    auto cfg = config_for("ga_ss_lin_7", 50, 150000);
    const auto& p = problem("griewangk");
    auto rec = run_engine(cfg, p);
    EXPECT_EQ(rec.evals, 150000u);
    EXPECT_EQ(rec.trace.size(), 3000u);
    expect_monotone(rec, p);
}

TEST(Reporting, FeasibleBeatsInfeasible) {
    const auto& p = problem("pressure_vessel");
    Individual a, b;
    a.eval.objective = 10;
    a.fitness = {10, 0};
    b.eval.objective = 1;
    b.eval.violations = {5};
    b.eval.slack = {1e-6};
    b.fitness = {1, 5};
    EXPECT_TRUE(better_for_report(a, b, p));
    EXPECT_FALSE(better_for_report(b, a, p));
}
