#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sotea/problems.hpp"
#include "sotea/random.hpp"

namespace sotea {

enum class Operator {
    wrights_heuristic_xover,
    simple_xover,
    extended_line_xover,
    uniform_xover,
    blx_alpha,
    differential_evolution,
    single_point_mutation,
};

inline constexpr std::array<Operator, 7> kAllOperators{
    Operator::wrights_heuristic_xover, Operator::simple_xover,   Operator::extended_line_xover,
    Operator::uniform_xover,           Operator::blx_alpha,      Operator::differential_evolution,
    Operator::single_point_mutation,
};

// seven: uniform over all operators; two: uniform crossover 0.95, mutation 0.05.
enum class OperatorSet { seven, two };

std::string_view to_string(Operator op);
std::optional<Operator> operator_from_string(std::string_view name);
std::string_view to_string(OperatorSet set);
std::optional<OperatorSet> operator_set_from_string(std::string_view name);

Operator pick_operator(OperatorSet set, Rng& rng);

// Operator constants.
inline constexpr double kBlxAlpha = 0.5;
inline constexpr double kDeScale = 0.8;
inline constexpr double kLineLow = -0.25;
inline constexpr double kLineHigh = 1.25;
inline constexpr double kUniformXoverShare = 0.95;

struct VariableDomain {
    std::span<const double> lower;
    std::span<const double> upper;
    const std::vector<bool>* integer = nullptr;

    static VariableDomain of(const ProblemSpec& p) { return {p.lower, p.upper, &p.integer}; }
    bool is_integer(std::size_t i) const { return integer != nullptr && (*integer)[i]; }
};

// `primary` is the first parent (N1 in the distributed engines). `donor` is
// only read by differential evolution. `primary_is_better` orients Wright's
// heuristic crossover.
struct ParentSet {
    std::span<const double> primary;
    std::span<const double> mate;
    std::span<const double> donor;
    bool primary_is_better = true;
};

// Raw operator output, before clamping and rounding.
Genome apply_operator(Operator op, const ParentSet& parents, const VariableDomain& domain, Rng& rng);

// Clamp to bounds; integer coordinates rounded half away from zero, then
// re-clamped to the integral part of the bounds.
Genome repair(Genome x, const VariableDomain& domain);

// apply_operator followed by repair.
Genome create_offspring(Operator op, const ParentSet& parents, const VariableDomain& domain, Rng& rng);

// Uniform draw inside the bounds; integer coordinates drawn as uniform integers.
Genome random_genome(const VariableDomain& domain, Rng& rng);

}  // namespace sotea
