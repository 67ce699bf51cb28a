#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sotea/engines.hpp"
#include "sotea/harness.hpp"

namespace sotea {

// Final value of one run. cost is +inf for runs that ended infeasible so
// they rank last in every comparison.
struct FinalValue {
    std::string problem;
    std::string label;
    DesignClass cls = DesignClass::sotea;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double objective = 0.0;
    bool feasible = false;
    double cost = 0.0;
};

std::vector<FinalValue> final_values(const std::vector<StoredRun>& runs);

inline constexpr std::size_t kProfileGrid = 500;

struct ProfilePoint {
    std::size_t evals = 0;
    double median_best = 0.0;   // objective units; +-inf when the median run is infeasible
    std::vector<double> bests;  // per-run best-so-far cost at this budget
};

// Best-so-far sampled every `grid` evaluations up to the largest budget
// used, then medianised across runs. Points before a run's first trace row
// are skipped.
std::vector<ProfilePoint> performance_profile(const std::vector<const RunRecord*>& runs, const ProblemSpec& p,
                                              std::size_t grid = kProfileGrid);

// |F - F_best| <= max(1e-6, 1e-4 |F_best|), or better than F_best; feasible only.
bool found_best_known(const FinalValue& v, const ProblemSpec& p);

inline constexpr double kInsignificantP = 0.05;
inline constexpr double kHighConfidenceP = 0.01;

struct PairTest {
    std::optional<DesignClass> winner;  // favoured class; empty when both directions tie
    double p = 1.0;                     // one-sided p in the winner's favour
    bool available = false;
    bool insignificant() const { return !available || p > kInsignificantP; }
    bool below_99() const { return !available || p > kHighConfidenceP; }
};

inline constexpr std::array<std::pair<DesignClass, DesignClass>, 3> kClassPairs{{
    {DesignClass::pea, DesignClass::sotea},
    {DesignClass::cga, DesignClass::sotea},
    {DesignClass::pea, DesignClass::cga},
}};

struct ClassComparison {
    std::string problem;
    std::array<std::string, 3> best_design;  // indexed by DesignClass; empty when absent
    std::array<PairTest, 3> best_vs_best;    // order of kClassPairs
    std::array<PairTest, 3> pooled;
    std::vector<std::string> gaps;
};

// Best design per class is the one with the lowest median final cost.
PairTest compare_samples(DesignClass a, const std::vector<double>& costs_a, DesignClass b,
                         const std::vector<double>& costs_b);
std::vector<ClassComparison> class_comparisons(const std::vector<FinalValue>& finals);

struct ClassAggregate {
    DesignClass cls = DesignClass::sotea;
    std::size_t problems = 0;          // problems where the class has runs
    double pct_found_best = 0.0;       // runs, averaged over problems
    double pct_top5 = 0.0;             // runs within the best 5% of all finals, averaged over problems
    double superiority_p = 1.0;        // class vs the other classes pooled, averaged over problems
    bool superiority_pass = false;     // superiority_p < kInsignificantP
    double pct_best_design = 0.0;      // problems where the class's best design had the best median
    double pct_found_best_once = 0.0;  // problems where some run found the best known
};

// One row per class present, in PEA, cGA, SOTEA order.
std::vector<ClassAggregate> aggregate_stats(const std::vector<FinalValue>& finals);

void write_final_values_csv(std::ostream& out, const std::vector<FinalValue>& finals);
void write_class_comparisons_csv(std::ostream& out, const std::vector<ClassComparison>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<ClassAggregate>& rows);
void write_profiles_csv(std::ostream& out, const std::vector<StoredRun>& runs, std::size_t grid = kProfileGrid);

// Writes final_values.csv, profiles.csv, class_comparisons.csv and
// aggregate_stats.csv into dest. Returns the paths written.
std::vector<std::filesystem::path> analyze_store(const std::filesystem::path& store, const std::filesystem::path& dest);

}  // namespace sotea
