#include "sotea/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sotea {

double Evaluation::penalty() const {
    double total = 0.0;
    for (double v : violations) total += v;
    return total;
}

bool Evaluation::strictly_feasible() const {
    return std::all_of(violations.begin(), violations.end(), [](double v) { return v == 0.0; });
}

bool Evaluation::feasible() const {
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (violations[i] > slack[i]) return false;
    }
    return true;
}

ConstraintValue terms(std::initializer_list<double> parts) {
    ConstraintValue c{0.0, 0.0};
    for (double p : parts) {
        c.value += p;
        c.scale += std::abs(p);
    }
    return c;
}

Evaluation evaluate_unchecked(const ProblemSpec& p, std::span<const double> x) {
    RawEvaluation raw = p.formula(x);
    Evaluation e;
    e.objective = raw.objective;
    e.constraints.reserve(raw.constraints.size());
    e.violations.reserve(raw.constraints.size());
    e.slack.reserve(raw.constraints.size());
    for (const auto& c : raw.constraints) {
        e.constraints.push_back(c.value);
        e.violations.push_back(std::max(0.0, c.value));
        e.slack.push_back(1e-6 * std::max(1.0, c.scale));
    }
    return e;
}

Evaluation evaluate(const ProblemSpec& p, std::span<const double> x) {
    if (x.size() != p.dim) {
        throw std::invalid_argument(p.name + ": expected " + std::to_string(p.dim) +
                                    " variables, got " + std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < p.dim; ++i) {
        if (!(x[i] >= p.lower[i] && x[i] <= p.upper[i])) {
            throw std::invalid_argument(p.name + ": variable " + std::to_string(i) +
                                        " outside its bounds");
        }
        if (p.integer[i] && x[i] != std::round(x[i])) {
            throw std::invalid_argument(p.name + ": variable " + std::to_string(i) +
                                        " must be integral");
        }
    }
    return evaluate_unchecked(p, x);
}

namespace problems {

namespace {

constexpr double pi = std::numbers::pi;

ProblemSpec make(std::string name, std::vector<double> lower, std::vector<double> upper,
                 std::vector<bool> integer, Sense sense, std::size_t n_constraints,
                 std::optional<double> best_known,
                 std::function<RawEvaluation(std::span<const double>)> formula) {
    ProblemSpec p;
    p.name = std::move(name);
    p.dim = lower.size();
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    p.integer = std::move(integer);
    p.sense = sense;
    p.n_constraints = n_constraints;
    p.best_known = best_known;
    p.formula = std::move(formula);
    return p;
}

}  // namespace

ProblemSpec pressure_vessel() {
    // X = (R, L, T_h, T_s); T_h and T_s count 0.0625 in plates. The thickness
    // constraints compare inches with inches.
    return make("pressure_vessel", {1, 1, 1, 1}, {100, 400, 20, 20}, {false, false, true, true},
                Sense::minimize, 4, 5850.37, [](std::span<const double> x) {
                    double th = 0.0625 * x[2];
                    double ts = 0.0625 * x[3];
                    double f = 0.6224 * x[0] * x[1] * th + 1.7781 * x[0] * x[0] * ts +
                               3.1661 * x[1] * th * th + 19.84 * x[0] * th * th;
                    return RawEvaluation{
                        f,
                        {terms({-th, 0.0193 * x[0]}),
                         terms({-ts, 0.00954 * x[0]}),
                         terms({-pi * x[0] * x[0] * x[1], -4.0 / 3.0 * pi * x[0] * x[0] * x[0],
                                1296000.0}),
                         terms({x[1], -240.0})}};
                });
}

ProblemSpec alkylation() {
    return make(
        "alkylation", {1500, 1, 3000, 85, 90, 3, 145}, {2000, 120, 3500, 93, 95, 12, 162},
        std::vector<bool>(7, false), Sense::maximize, 14, 1772.77, [](std::span<const double> x) {
            const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
            // Profit is the negated cost expression; it is near +1772.77 at the optimum.
            double f = -(1.715 * x1 + 0.035 * x1 * x6 + 4.0565 * x3 + 10.0 * x2 - 0.063 * x3 * x5);
            return RawEvaluation{
                f,
                {terms({0.0059553571 * x6 * x6 * x1, 0.88392857 * x3, -0.1175625 * x6 * x1, -x1}),
                 terms({1.1088 * x1, 0.1303533 * x1 * x6, -0.0066033 * x1 * x6 * x6, -x3}),
                 terms({6.66173269 * x6 * x6, 172.39878 * x5, -56.596669 * x4, -191.20592 * x6,
                        -10000.0}),
                 terms({1.08702 * x6, 0.32175 * x4, -0.03762 * x6 * x6, -x5, 56.85075}),
                 terms({0.006198 * x7 * x4 * x3, 2462.3121 * x2, -25.125634 * x2 * x4, -x3 * x4}),
                 terms({161.18996 * x4 * x3, 5000.0 * x2 * x4, -489510.0 * x2, -x3 * x4 * x7}),
                 terms({0.33 * x7, -x5, 44.333333}),
                 terms({0.022556 * x5, -0.007595 * x7, -1.0}),
                 terms({0.00061 * x3, -0.0005 * x1, -1.0}),
                 terms({0.819672 * x1, -x3, 0.819672}),
                 terms({24500.0 * x2, -250.0 * x2 * x4, -x3 * x4}),
                 terms({1020.4082 * x4 * x2, 1.2244898 * x3 * x4, -100000.0 * x2}),
                 terms({6.25 * x1 * x6, 6.25 * x1, -7.625 * x3, -100000.0}),
                 terms({1.22 * x3, -x6 * x1, -x1, 1.0})}};
        });
}

ProblemSpec heat_exchanger() {
    return make("heat_exchanger", {100, 1000, 1000, 10, 10}, {10000, 10000, 10000, 1000, 1000},
                std::vector<bool>(5, false), Sense::minimize, 3, 7049.25,
                [](std::span<const double> x) {
                    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
                    return RawEvaluation{
                        x1 + x2 + x3,
                        {terms({100.0 * x1, -x1 * (400.0 - x4), 833.33252 * x4, -83333.333}),
                         terms({x2 * x4, -x2 * (400.0 - x5 + x4), -1250.0 * x4, 1250.0 * x5}),
                         terms({x3 * x5, -x3 * (100.0 + x5), -2500.0 * x5, 1250000.0})}};
                });
}

ProblemSpec gear_train() {
    return make("gear_train", {12, 12, 12, 12}, {60, 60, 60, 60}, std::vector<bool>(4, true),
                Sense::minimize, 0, 2.70e-12, [](std::span<const double> x) {
                    double r = 1.0 / 6.931 - (x[0] * x[1]) / (x[2] * x[3]);
                    return RawEvaluation{r * r, {}};
                });
}

ProblemSpec spring() {
    // X = (d, D, N)
    return make("spring", {0.05, 0.25, 2}, {2, 1.3, 15}, {false, false, true}, Sense::minimize, 4,
                0.0126652303, [](std::span<const double> x) {
                    const double d = x[0], big_d = x[1], n = x[2];
                    double f = (n + 2.0) * big_d * d * d;
                    double shear = (4.0 * big_d * big_d - d * big_d) /
                                   (12566.0 * (big_d * d * d * d - d * d * d * d));
                    return RawEvaluation{
                        f,
                        {terms({1.0, -big_d * big_d * big_d * n / (71785.0 * d * d * d * d)}),
                         terms({shear, 1.0 / (5108.0 * d * d), -1.0}),
                         terms({1.0, -140.45 * d / (big_d * big_d * n)}),
                         terms({(big_d + d) / 1.5, -1.0})}};
                });
}

ProblemSpec welded_beam() {
    // X = (h, l, t, b)
    return make("welded_beam", {0.1, 0.1, 0.1, 0.1}, {2, 10, 10, 2}, std::vector<bool>(4, false),
                Sense::minimize, 7, 1.72485217, [](std::span<const double> x) {
                    constexpr double P = 6000.0, L = 14.0, delta_max = 0.25, E = 30e6, G = 12e6;
                    constexpr double tau_max = 13600.0, sigma_max = 30000.0;
                    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
                    // sqrt(2) x1 x2 is the weld throat area times the weld length.
                    double tau_p = P / (std::sqrt(2.0) * x1 * x2);
                    double m = P * (L + x2 / 2.0);
                    double half = (x1 + x3) / 2.0;
                    double r = std::sqrt(x2 * x2 / 4.0 + half * half);
                    double j = 2.0 * (std::sqrt(2.0) * x1 * x2 * (x2 * x2 / 12.0 + half * half));
                    double tau_pp = m * r / j;
                    double tau = std::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x2 / (2.0 * r) +
                                           tau_pp * tau_pp);
                    double sigma = 6.0 * P * L / (x4 * x3 * x3);
                    double delta = 4.0 * P * L * L * L / (E * x3 * x3 * x3 * x4);
                    double pc = 4.013 * E * std::sqrt(x3 * x3 * std::pow(x4, 6) / 36.0) / (L * L) *
                                (1.0 - x3 / (2.0 * L) * std::sqrt(E / (4.0 * G)));
                    double f = 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2);
                    return RawEvaluation{
                        f,
                        {terms({tau, -tau_max}),
                         terms({sigma, -sigma_max}),
                         terms({x1, -x4}),
                         terms({0.10471 * x1 * x1, 0.04811 * x3 * x4 * (14.0 + x2), -5.0}),
                         terms({0.125, -x1}),
                         terms({delta, -delta_max}),
                         terms({P, -pc})}};
                });
}

namespace {

double fm_signal(std::span<const double> x, int t) {
    constexpr double theta = 2.0 * pi / 100.0;
    return x[0] * std::sin(x[1] * t * theta +
                           x[2] * std::sin(x[3] * t * theta + x[4] * std::sin(x[5] * t * theta)));
}

}  // namespace

ProblemSpec freq_mod() {
    return make("freq_mod", std::vector<double>(6, -6.4), std::vector<double>(6, 6.35),
                std::vector<bool>(6, false), Sense::minimize, 0, 0.0,
                [](std::span<const double> x) {
                    static const std::array<double, 6> target{1.0, 5.0, 1.5, 4.8, 2.0, 4.9};
                    double f = 0.0;
                    for (int t = 0; t <= 100; ++t) {
                        double diff = fm_signal(x, t) - fm_signal(target, t);
                        f += diff * diff;
                    }
                    return RawEvaluation{f, {}};
                });
}

ProblemSpec ecc(std::size_t words, std::size_t length) {
    std::size_t n = words * length;
    return make("ecc", std::vector<double>(n, 0.0), std::vector<double>(n, 1.0),
                std::vector<bool>(n, true), Sense::maximize, 0, 0.067416,
                [words, length](std::span<const double> x) {
                    double inv_sum = 0.0;
                    for (std::size_t i = 0; i < words; ++i) {
                        for (std::size_t j = i + 1; j < words; ++j) {
                            std::size_t d = 0;
                            for (std::size_t b = 0; b < length; ++b) {
                                if ((x[i * length + b] >= 0.5) != (x[j * length + b] >= 0.5)) ++d;
                            }
                            // Coincident words make the sum diverge: F -> 0.
                            if (d == 0) return RawEvaluation{0.0, {}};
                            inv_sum += 2.0 / static_cast<double>(d * d);  // (i,j) and (j,i)
                        }
                    }
                    return RawEvaluation{1.0 / inv_sum, {}};
                });
}

ProblemSpec sys_lin_eq() {
    return make("sys_lin_eq", std::vector<double>(10, -9.0), std::vector<double>(10, 9.0),
                std::vector<bool>(10, false), Sense::minimize, 0, 0.0,
                [](std::span<const double> x) {
                    static const std::array<std::array<double, 10>, 10> a{{
                        {5, 4, 5, 2, 9, 5, 4, 2, 3, 1},
                        {9, 7, 1, 1, 7, 2, 2, 6, 6, 9},
                        {3, 1, 8, 6, 9, 7, 4, 2, 1, 6},
                        {8, 3, 7, 3, 7, 5, 3, 9, 9, 5},
                        {9, 5, 1, 6, 3, 4, 2, 3, 3, 9},
                        {1, 2, 3, 1, 7, 6, 6, 3, 3, 3},
                        {1, 5, 7, 8, 1, 4, 7, 8, 4, 8},
                        {9, 3, 8, 6, 3, 4, 7, 1, 8, 1},
                        {8, 2, 8, 5, 3, 8, 7, 2, 7, 5},
                        {2, 1, 2, 2, 9, 8, 7, 4, 4, 1},
                    }};
                    static const std::array<double, 10> b{40, 50, 47, 59, 45, 35, 53, 50, 55, 40};
                    double f = 0.0;
                    for (std::size_t i = 0; i < 10; ++i) {
                        double row = 0.0;
                        for (std::size_t j = 0; j < 10; ++j) row += a[i][j] * x[j];
                        f += std::abs(row - b[i]);
                    }
                    return RawEvaluation{f, {}};
                });
}

ProblemSpec rastrigin(std::size_t n) {
    return make("rastrigin", std::vector<double>(n, -5.12), std::vector<double>(n, 5.12),
                std::vector<bool>(n, false), Sense::minimize, 0, 0.0,
                [](std::span<const double> x) {
                    // 10 - 10 cos(2 pi x) written as 20 sin^2(pi x) keeps precision near the optimum.
                    double f = 0.0;
                    for (double xi : x) {
                        double s = std::sin(pi * xi);
                        f += xi * xi + 20.0 * s * s;
                    }
                    return RawEvaluation{f, {}};
                });
}

ProblemSpec griewangk(std::size_t n) {
    return make("griewangk", std::vector<double>(n, -600.0), std::vector<double>(n, 600.0),
                std::vector<bool>(n, false), Sense::minimize, 0, 0.0,
                [](std::span<const double> x) {
                    double sum = 0.0;
                    double prod = 1.0;
                    double log_prod = 0.0;  // sum of log cos, finite while every cosine is positive
                    bool positive = true;
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        sum += x[i] * x[i];
                        double y = x[i] / std::sqrt(static_cast<double>(i + 1));
                        double c = std::cos(y);
                        prod *= c;
                        if (c <= 0.0) positive = false;
                        if (positive) {
                            double h = std::sin(0.5 * y);
                            log_prod += std::log1p(-2.0 * h * h);
                        }
                    }
                    // 1 - prod via expm1 keeps precision near the optimum.
                    double one_minus_prod = positive ? -std::expm1(log_prod) : 1.0 - prod;
                    return RawEvaluation{sum / 4000.0 + one_minus_prod, {}};
                });
}

ProblemSpec watson() {
    return make("watson", std::vector<double>(6, -2.0), std::vector<double>(6, 2.0),
                std::vector<bool>(6, false), Sense::minimize, 0, 2.28767e-3,
                [](std::span<const double> x) {
                    double f = 0.0;
                    for (int i = 1; i <= 30; ++i) {
                        double a = (i - 1) / 29.0;
                        double lead = 0.0;
                        double power = 1.0;
                        for (int j = 1; j <= 5; ++j) {
                            lead += j * power * x[j];
                            power *= a;
                        }
                        double poly = 0.0;
                        power = 1.0;
                        for (int j = 1; j <= 6; ++j) {
                            poly += power * x[j - 1];
                            power *= a;
                        }
                        double r = lead - poly * poly - 1.0;
                        f += r * r;
                    }
                    return RawEvaluation{f + x[0] * x[0], {}};
                });
}

}  // namespace problems

const std::vector<ProblemSpec>& registry() {
    static const std::vector<ProblemSpec> all{
        problems::pressure_vessel(), problems::alkylation(), problems::heat_exchanger(),
        problems::gear_train(),      problems::spring(),     problems::welded_beam(),
        problems::freq_mod(),        problems::ecc(),        problems::sys_lin_eq(),
        problems::rastrigin(),       problems::griewangk(),  problems::watson(),
    };
    return all;
}

const ProblemSpec& problem(const std::string& name) {
    for (const auto& p : registry()) {
        if (p.name == name) return p;
    }
    throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace sotea
