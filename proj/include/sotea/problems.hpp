#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sotea {

using Genome = std::vector<double>;

enum class Sense { minimize, maximize };

// Objective and constraint outcome for one genome.
//
// `violations[i]` is max(0, g_i(x)); `slack[i]` is the reporting tolerance
// 1e-6 * max(1, scale_i) where scale_i is the summed magnitude of the terms
// of g_i. Engines work with the strict penalty; reports use the slack.
struct Evaluation {
    double objective = 0.0;
    std::vector<double> constraints;  // raw g_i(x), feasible when <= 0
    std::vector<double> violations;
    std::vector<double> slack;

    double penalty() const;           // sum of violations
    bool strictly_feasible() const;   // penalty() == 0
    bool feasible() const;            // every violation within its slack
};

// One inequality constraint value together with its term magnitude.
struct ConstraintValue {
    double value;
    double scale;
};

struct RawEvaluation {
    double objective;
    std::vector<ConstraintValue> constraints;
};

struct ProblemSpec {
    std::string name;
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<bool> integer;
    Sense sense = Sense::minimize;
    std::size_t n_constraints = 0;
    std::optional<double> best_known;
    std::function<RawEvaluation(std::span<const double>)> formula;

    // Objective in minimisation form (negated for maximisation problems).
    double cost(double objective) const { return sense == Sense::maximize ? -objective : objective; }
};

// Validates dimension, bounds and integrality, then evaluates.
Evaluation evaluate(const ProblemSpec& p, std::span<const double> x);

// Evaluates the formula without domain checks (published vectors that are
// rounded or off-lattice go through here).
Evaluation evaluate_unchecked(const ProblemSpec& p, std::span<const double> x);

// Sums the terms, recording their summed magnitude as the scale.
ConstraintValue terms(std::initializer_list<double> parts);

// The twelve benchmark problems, in a stable order.
const std::vector<ProblemSpec>& registry();
const ProblemSpec& problem(const std::string& name);

namespace problems {

ProblemSpec pressure_vessel();
ProblemSpec alkylation();
ProblemSpec heat_exchanger();
ProblemSpec gear_train();
ProblemSpec spring();
ProblemSpec welded_beam();
ProblemSpec freq_mod();
ProblemSpec ecc(std::size_t words = 24, std::size_t length = 12);
ProblemSpec sys_lin_eq();
ProblemSpec rastrigin(std::size_t n = 20);
ProblemSpec griewangk(std::size_t n = 10);
ProblemSpec watson();

}  // namespace problems

}  // namespace sotea
