#include "sotea/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sotea {

FitnessComparator FitnessComparator::stochastic_ranking(double p_f) {
    if (!(p_f >= 0.0 && p_f < 0.5)) {
        throw std::invalid_argument("stochastic ranking: P_f must lie in [0, 0.5)");
    }
    return {true, p_f};
}

std::vector<std::size_t> stochastic_rank_sort(std::span<const Fitness> pool, double p_f, Rng& rng,
                                              std::optional<std::size_t> sweeps) {
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (pool.size() < 2) return order;

    std::size_t passes = sweeps.value_or(pool.size());
    for (std::size_t pass = 0; pass < passes; ++pass) {
        bool swapped = false;
        for (std::size_t j = 0; j + 1 < pool.size(); ++j) {
            const Fitness& a = pool[order[j]];
            const Fitness& b = pool[order[j + 1]];
            double u = uniform01(rng);
            bool by_objective = (a.penalty == 0.0 && b.penalty == 0.0) || u < p_f;
            bool swap = by_objective ? a.cost > b.cost : a.penalty > b.penalty;
            if (swap) {
                std::swap(order[j], order[j + 1]);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    return order;
}

std::vector<std::size_t> rank_order(std::span<const Fitness> pool, const FitnessComparator& cmp,
                                    Rng& rng) {
    if (cmp.stochastic) return stochastic_rank_sort(pool, cmp.p_f, rng);
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pool[a].cost < pool[b].cost; });
    return order;
}

RankTable assign_ranks(std::span<const Fitness> pool, const FitnessComparator& cmp, Rng& rng) {
    return RankTable::from_order(rank_order(pool, cmp, rng));
}

bool challenger_wins(const Fitness& challenger, const Fitness& incumbent,
                     const FitnessComparator& cmp, Rng& rng) {
    if (challenger.cost == incumbent.cost && challenger.penalty == incumbent.penalty) return true;
    if (!cmp.stochastic) return challenger.cost < incumbent.cost;
    const Fitness pair[2] = {incumbent, challenger};
    return stochastic_rank_sort(pair, cmp.p_f, rng).front() == 1;
}

std::string_view to_string(SelectionScheme s) {
    switch (s) {
    case SelectionScheme::binary_tournament: return "tournament";
    case SelectionScheme::truncation: return "truncation";
    case SelectionScheme::linear_ranking: return "linear_ranking";
    case SelectionScheme::uniform_random: return "uniform_random";
    }
    return "";
}

std::optional<SelectionScheme> selection_from_string(std::string_view name) {
    for (auto s : {SelectionScheme::binary_tournament, SelectionScheme::truncation,
                   SelectionScheme::linear_ranking, SelectionScheme::uniform_random}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::vector<int> sequential_ranks(std::size_t n) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    return r;
}

std::vector<std::size_t> select(SelectionScheme scheme, std::span<const int> local_rank,
                                std::size_t count, Rng& rng) {
    const std::size_t n = local_rank.size();
    if (n == 0) throw std::invalid_argument("select: empty pool");
    std::vector<std::size_t> chosen;
    chosen.reserve(count);

    switch (scheme) {
    case SelectionScheme::binary_tournament:
        for (std::size_t c = 0; c < count; ++c) {
            if (n == 1) {
                chosen.push_back(0);
                continue;
            }
            std::size_t a = uniform_index(rng, n);
            std::size_t b = uniform_index(rng, n - 1);
            if (b >= a) ++b;
            chosen.push_back(local_rank[a] < local_rank[b] ? a : b);
        }
        break;
    case SelectionScheme::truncation: {
        if (count > n) throw std::invalid_argument("select: truncation count exceeds pool");
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return local_rank[a] < local_rank[b]; });
        chosen.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count));
        break;
    }
    case SelectionScheme::linear_ranking: {
        // weight(rank) = n - rank + 1; a uniform integer ticket in the
        // triangular total picks the member.
        std::vector<std::size_t> by_rank(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto r = static_cast<std::size_t>(local_rank[i]);
            if (r < 1 || r > n) throw std::invalid_argument("select: local ranks must be 1..n");
            by_rank[r - 1] = i;
        }
        const std::size_t total = n * (n + 1) / 2;
        for (std::size_t c = 0; c < count; ++c) {
            std::size_t ticket = uniform_index(rng, total);
            std::size_t pos = 0;
            std::size_t weight = n;
            while (ticket >= weight) {
                ticket -= weight;
                --weight;
                ++pos;
            }
            chosen.push_back(by_rank[pos]);
        }
        break;
    }
    case SelectionScheme::uniform_random:
        for (std::size_t c = 0; c < count; ++c) chosen.push_back(uniform_index(rng, n));
        break;
    }
    return chosen;
}

}  // namespace sotea
