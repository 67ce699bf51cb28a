#include "sotea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sotea {

namespace {

void check_samples(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("U test needs two non-empty samples");
    auto has_nan = [](std::span<const double> s) {
        return std::any_of(s.begin(), s.end(), [](double v) { return std::isnan(v); });
    };
    if (has_nan(a) || has_nan(b)) throw std::invalid_argument("U test sample contains NaN");
}

std::vector<double> pooled(std::span<const double> a, std::span<const double> b) {
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return all;
}

double u_from_ranks(std::span<const double> ranks, std::size_t na) {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i) r += ranks[i];
    return r - static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;
}

bool all_equal(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b) {
    check_samples(a, b);
    const auto all = pooled(a, b);
    if (all_equal(all)) return 0.5;
    const auto ranks = midranks(all);
    const std::size_t n = all.size(), na = a.size();
    if (n > 30) throw std::invalid_argument("exact U test limited to 30 values");
    const double observed = u_from_ranks(ranks, na);
    // Every way of choosing which pooled ranks belong to the first sample.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(na), true);
    std::size_t total = 0, at_most = 0;
    do {
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) r += ranks[i];
        const double u = r - static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;
        ++total;
        if (u <= observed + 1e-9) ++at_most;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return static_cast<double>(at_most) / static_cast<double>(total);
}

double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b) {
    check_samples(a, b);
    const auto all = pooled(a, b);
    const auto ranks = midranks(all);
    const double n = static_cast<double>(all.size());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    const double u = u_from_ranks(ranks, a.size());

    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    double ties = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        ties += t * t * t - t;
        i = j + 1;
    }
    const double var = na * nb / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if (!(var > 0.0)) return 0.5;
    const double z = (u - na * nb / 2.0 + 0.5) / std::sqrt(var);
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

UTest mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    check_samples(a, b);
    const auto all = pooled(a, b);
    const double u = u_from_ranks(midranks(all), a.size());
    if (all.size() <= kExactUTestLimit) return {u, mann_whitney_exact_p(a, b), true};
    return {u, mann_whitney_normal_p(a, b), false};
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty sample");
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double hi = values[mid];
    if (values.size() % 2 == 1) return hi;
    const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    if (std::isinf(lo) && std::isinf(hi) && lo == hi) return lo;
    return lo + (hi - lo) / 2.0;
}

}  // namespace sotea
