#include "sotea/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sotea {

namespace {

constexpr std::array<std::string_view, 7> kOperatorNames{
    "wrights_heuristic_xover", "simple_xover", "extended_line_xover", "uniform_xover",
    "blx_alpha",               "differential_evolution", "single_point_mutation",
};

void check_dims(const ParentSet& parents, const VariableDomain& domain) {
    if (parents.primary.size() != domain.lower.size() || parents.mate.size() != domain.lower.size()) {
        throw std::invalid_argument("create_offspring: parent dimension mismatch");
    }
}

double integral_low(double lo) { return std::ceil(lo); }
double integral_high(double hi) { return std::floor(hi); }

// Fresh value for one coordinate; integer coordinates avoid the current value.
double resample(const VariableDomain& domain, std::size_t i, double current, Rng& rng) {
    if (!domain.is_integer(i)) return uniform_real(rng, domain.lower[i], domain.upper[i]);
    auto lo = static_cast<long long>(integral_low(domain.lower[i]));
    auto hi = static_cast<long long>(integral_high(domain.upper[i]));
    if (hi <= lo) return static_cast<double>(lo);
    auto cur = static_cast<long long>(std::llround(current));
    if (cur < lo || cur > hi) {
        return static_cast<double>(std::uniform_int_distribution<long long>(lo, hi)(rng));
    }
    long long v = std::uniform_int_distribution<long long>(lo, hi - 1)(rng);
    if (v >= cur) ++v;
    return static_cast<double>(v);
}

}  // namespace

std::string_view to_string(Operator op) { return kOperatorNames[static_cast<std::size_t>(op)]; }

std::optional<Operator> operator_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kOperatorNames.size(); ++i) {
        if (kOperatorNames[i] == name) return kAllOperators[i];
    }
    return std::nullopt;
}

std::string_view to_string(OperatorSet set) { return set == OperatorSet::seven ? "seven" : "two"; }

std::optional<OperatorSet> operator_set_from_string(std::string_view name) {
    if (name == "seven") return OperatorSet::seven;
    if (name == "two") return OperatorSet::two;
    return std::nullopt;
}

Operator pick_operator(OperatorSet set, Rng& rng) {
    if (set == OperatorSet::seven) return kAllOperators[uniform_index(rng, kAllOperators.size())];
    return bernoulli(rng, kUniformXoverShare) ? Operator::uniform_xover
                                              : Operator::single_point_mutation;
}

Genome apply_operator(Operator op, const ParentSet& parents, const VariableDomain& domain, Rng& rng) {
    check_dims(parents, domain);
    const auto& p1 = parents.primary;
    const auto& p2 = parents.mate;
    const std::size_t n = p1.size();
    Genome child(p1.begin(), p1.end());

    switch (op) {
    case Operator::wrights_heuristic_xover: {
        const auto& better = parents.primary_is_better ? p1 : p2;
        const auto& worse = parents.primary_is_better ? p2 : p1;
        double r = uniform01(rng);
        for (std::size_t i = 0; i < n; ++i) child[i] = r * (better[i] - worse[i]) + better[i];
        break;
    }
    case Operator::simple_xover: {
        if (n > 1) {
            std::size_t cut = 1 + uniform_index(rng, n - 1);
            for (std::size_t i = cut; i < n; ++i) child[i] = p2[i];
        }
        break;
    }
    case Operator::extended_line_xover: {
        double alpha = uniform_real(rng, kLineLow, kLineHigh);
        for (std::size_t i = 0; i < n; ++i) child[i] = p1[i] + alpha * (p2[i] - p1[i]);
        break;
    }
    case Operator::uniform_xover: {
        for (std::size_t i = 0; i < n; ++i) {
            if (bernoulli(rng, 0.5)) child[i] = p2[i];
        }
        break;
    }
    case Operator::blx_alpha: {
        for (std::size_t i = 0; i < n; ++i) {
            double lo = std::min(p1[i], p2[i]);
            double hi = std::max(p1[i], p2[i]);
            double spread = kBlxAlpha * (hi - lo);
            child[i] = (hi > lo) ? uniform_real(rng, lo - spread, hi + spread) : lo;
        }
        break;
    }
    case Operator::differential_evolution: {
        const auto& p3 = parents.donor;
        if (p3.size() != n) {
            throw std::invalid_argument("differential_evolution requires a donor parent");
        }
        for (std::size_t i = 0; i < n; ++i) child[i] = p1[i] + kDeScale * (p2[i] - p3[i]);
        break;
    }
    case Operator::single_point_mutation: {
        std::size_t i = uniform_index(rng, n);
        child[i] = resample(domain, i, child[i], rng);
        break;
    }
    }
    return child;
}

Genome repair(Genome x, const VariableDomain& domain) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lo = domain.lower[i];
        double hi = domain.upper[i];
        double v = std::clamp(x[i], lo, hi);
        if (domain.is_integer(i)) {
            v = std::clamp(std::round(v), integral_low(lo), integral_high(hi));
        }
        x[i] = v;
    }
    return x;
}

Genome create_offspring(Operator op, const ParentSet& parents, const VariableDomain& domain, Rng& rng) {
    return repair(apply_operator(op, parents, domain, rng), domain);
}

Genome random_genome(const VariableDomain& domain, Rng& rng) {
    Genome x(domain.lower.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (domain.is_integer(i)) {
            auto lo = static_cast<long long>(integral_low(domain.lower[i]));
            auto hi = static_cast<long long>(integral_high(domain.upper[i]));
            x[i] = static_cast<double>(std::uniform_int_distribution<long long>(lo, hi)(rng));
        } else {
            x[i] = uniform_real(rng, domain.lower[i], domain.upper[i]);
        }
    }
    return x;
}

}  // namespace sotea
