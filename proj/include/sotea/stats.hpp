#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sotea {

struct UTest {
    double u;  // U of the first sample: pairs with a > b, ties counted one half
    double p;  // one-sided, alternative "a tends to be smaller than b"
    bool exact;
};

// Samples up to this combined size use exact enumeration.
inline constexpr std::size_t kExactUTestLimit = 12;

// Midrank U statistic. p is exact for |a|+|b| <= kExactUTestLimit, otherwise
// the tie-corrected normal approximation with continuity correction. When all
// pooled values are equal the test carries no evidence and p = 0.5. +inf
// values rank last. Throws std::invalid_argument on an empty sample or NaN.
UTest mann_whitney_u(std::span<const double> a, std::span<const double> b);

// The two p-value paths, exposed for cross-checking.
double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b);
double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b);

// Midranks (1-based) of the values in their pooled order.
std::vector<double> midranks(std::span<const double> values);

// Throws std::invalid_argument on an empty sample.
double median(std::vector<double> values);

}  // namespace sotea
