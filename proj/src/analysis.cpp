#include "sotea/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sotea/stats.hpp"

namespace sotea {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t class_index(DesignClass c) { return static_cast<std::size_t>(c); }

constexpr std::array<DesignClass, 3> kClasses{DesignClass::pea, DesignClass::cga, DesignClass::sotea};

double objective_of_cost(const ProblemSpec& p, double cost) { return p.sense == Sense::maximize ? -cost : cost; }

// Per problem: label -> costs, and the class of each label.
struct ProblemFinals {
    std::map<std::string, std::vector<double>> by_label;
    std::map<std::string, DesignClass> label_class;
    std::vector<const FinalValue*> all;
};

std::map<std::string, ProblemFinals> group(const std::vector<FinalValue>& finals) {
    std::map<std::string, ProblemFinals> out;
    for (const auto& f : finals) {
        auto& g = out[f.problem];
        g.by_label[f.label].push_back(f.cost);
        g.label_class[f.label] = f.cls;
        g.all.push_back(&f);
    }
    return out;
}

// Lowest median cost among a class's designs; ties go to the first label.
std::optional<std::pair<std::string, double>> best_design(const ProblemFinals& g, DesignClass cls) {
    std::optional<std::pair<std::string, double>> best;
    for (const auto& [label, costs] : g.by_label) {
        if (g.label_class.at(label) != cls) continue;
        double m = median(costs);
        if (!best || m < best->second) best = std::make_pair(label, m);
    }
    return best;
}

std::vector<double> pooled(const ProblemFinals& g, DesignClass cls) {
    std::vector<double> out;
    for (const auto& [label, costs] : g.by_label)
        if (g.label_class.at(label) == cls) out.insert(out.end(), costs.begin(), costs.end());
    return out;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

}  // namespace

std::vector<FinalValue> final_values(const std::vector<StoredRun>& runs) {
    std::vector<FinalValue> out;
    for (const auto& r : runs) {
        const ProblemSpec& p = problem(r.cell.problem);
        FinalValue v;
        v.problem = r.cell.problem;
        v.label = r.record.label;
        v.cls = design_class(r.record.family);
        v.run = r.cell.run;
        v.seed = r.record.seed;
        v.objective = r.record.best.eval.objective;
        v.feasible = r.record.best.eval.feasible();
        v.cost = v.feasible ? p.cost(v.objective) : kInf;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<ProfilePoint> performance_profile(const std::vector<const RunRecord*>& runs, const ProblemSpec& p,
                                              std::size_t grid) {
    if (grid == 0) throw std::invalid_argument("profile grid must be positive");
    std::vector<ProfilePoint> points;
    if (runs.empty()) return points;
    std::size_t end = 0;
    for (const auto* r : runs) end = std::max(end, r->evals);
    std::vector<std::size_t> budgets;
    for (std::size_t e = grid; e <= end; e += grid) budgets.push_back(e);
    if (budgets.empty() || budgets.back() != end) budgets.push_back(end);

    std::vector<std::size_t> cursor(runs.size(), 0);
    for (std::size_t e : budgets) {
        ProfilePoint pt;
        pt.evals = e;
        bool complete = true;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto& trace = runs[i]->trace;
            while (cursor[i] < trace.size() && trace[cursor[i]].evals <= e) ++cursor[i];
            if (cursor[i] == 0) {
                complete = false;
                break;
            }
            const auto& row = trace[cursor[i] - 1];
            pt.bests.push_back(row.feasible ? p.cost(row.best) : kInf);
        }
        if (!complete) continue;
        pt.median_best = objective_of_cost(p, median(pt.bests));
        points.push_back(std::move(pt));
    }
    return points;
}

bool found_best_known(const FinalValue& v, const ProblemSpec& p) {
    if (!v.feasible || !p.best_known) return false;
    const double target = p.cost(*p.best_known);
    const double tol = std::max(1e-6, 1e-4 * std::abs(*p.best_known));
    return v.cost <= target + tol;
}

PairTest compare_samples(DesignClass a, const std::vector<double>& costs_a, DesignClass b,
                         const std::vector<double>& costs_b) {
    PairTest t;
    if (costs_a.empty() || costs_b.empty()) return t;
    t.available = true;
    const double p_ab = mann_whitney_u(costs_a, costs_b).p;
    const double p_ba = mann_whitney_u(costs_b, costs_a).p;
    if (p_ab < p_ba) {
        t.winner = a;
        t.p = p_ab;
    } else if (p_ba < p_ab) {
        t.winner = b;
        t.p = p_ba;
    } else {
        t.p = p_ab;
    }
    return t;
}

std::vector<ClassComparison> class_comparisons(const std::vector<FinalValue>& finals) {
    std::vector<ClassComparison> out;
    for (const auto& [name, g] : group(finals)) {
        ClassComparison row;
        row.problem = name;
        std::array<std::vector<double>, 3> best_costs, pooled_costs;
        for (DesignClass c : kClasses) {
            auto best = best_design(g, c);
            if (!best) {
                row.gaps.push_back(std::string("missing class ") + std::string(to_string(c)));
                continue;
            }
            row.best_design[class_index(c)] = best->first;
            best_costs[class_index(c)] = g.by_label.at(best->first);
            pooled_costs[class_index(c)] = pooled(g, c);
        }
        for (std::size_t k = 0; k < kClassPairs.size(); ++k) {
            auto [a, b] = kClassPairs[k];
            row.best_vs_best[k] = compare_samples(a, best_costs[class_index(a)], b, best_costs[class_index(b)]);
            row.pooled[k] = compare_samples(a, pooled_costs[class_index(a)], b, pooled_costs[class_index(b)]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ClassAggregate> aggregate_stats(const std::vector<FinalValue>& finals) {
    struct Acc {
        std::size_t problems = 0, p_tests = 0;
        double found = 0, top5 = 0, p_sum = 0, best_design = 0, found_once = 0;
    };
    std::array<Acc, 3> acc;

    for (const auto& [name, g] : group(finals)) {
        const ProblemSpec& p = problem(name);
        std::vector<double> all;
        for (const auto* f : g.all) all.push_back(f->cost);
        std::sort(all.begin(), all.end());
        // Best 5% of all finals on this problem, at least one run.
        const std::size_t cut = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.05 * all.size())));
        const double threshold = all[cut - 1];

        std::array<std::optional<double>, 3> best_median;
        for (DesignClass c : kClasses)
            if (auto b = best_design(g, c)) best_median[class_index(c)] = b->second;
        double overall = kInf;
        bool any = false;
        for (const auto& m : best_median)
            if (m) {
                overall = any ? std::min(overall, *m) : *m;
                any = true;
            }

        for (DesignClass c : kClasses) {
            const std::size_t ci = class_index(c);
            std::size_t runs = 0, found = 0, top = 0;
            for (const auto* f : g.all) {
                if (f->cls != c) continue;
                ++runs;
                found += found_best_known(*f, p);
                top += std::isfinite(f->cost) && f->cost <= threshold;
            }
            if (runs == 0) continue;
            auto& a = acc[ci];
            ++a.problems;
            a.found += 100.0 * static_cast<double>(found) / static_cast<double>(runs);
            a.top5 += 100.0 * static_cast<double>(top) / static_cast<double>(runs);
            a.found_once += found > 0 ? 100.0 : 0.0;
            a.best_design += *best_median[ci] == overall ? 100.0 : 0.0;
            std::vector<double> others;
            for (DesignClass o : kClasses) {
                if (o == c) continue;
                auto more = pooled(g, o);
                others.insert(others.end(), more.begin(), more.end());
            }
            if (!others.empty()) {
                a.p_sum += mann_whitney_u(pooled(g, c), others).p;
                ++a.p_tests;
            }
        }
    }

    std::vector<ClassAggregate> out;
    for (DesignClass c : kClasses) {
        const auto& a = acc[class_index(c)];
        if (a.problems == 0) continue;
        ClassAggregate r;
        r.cls = c;
        r.problems = a.problems;
        const double n = static_cast<double>(a.problems);
        r.pct_found_best = a.found / n;
        r.pct_top5 = a.top5 / n;
        r.superiority_p = a.p_tests > 0 ? a.p_sum / static_cast<double>(a.p_tests) : 1.0;
        r.superiority_pass = a.p_tests > 0 && r.superiority_p < kInsignificantP;
        r.pct_best_design = a.best_design / n;
        r.pct_found_best_once = a.found_once / n;
        out.push_back(r);
    }
    return out;
}

void write_final_values_csv(std::ostream& out, const std::vector<FinalValue>& finals) {
    out << "problem,label,class,run,seed,objective,feasible\n";
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& f : finals)
        out << f.problem << ',' << f.label << ',' << to_string(f.cls) << ',' << f.run << ',' << f.seed << ','
            << f.objective << ',' << (f.feasible ? 1 : 0) << '\n';
    out.precision(old);
}

void write_class_comparisons_csv(std::ostream& out, const std::vector<ClassComparison>& rows) {
    out << "problem,entry,comparison,design_a,design_b,winner,p,insig,below_99\n";
    for (const auto& r : rows) {
        auto emit = [&](const char* entry, const std::array<PairTest, 3>& tests, bool designs) {
            for (std::size_t k = 0; k < kClassPairs.size(); ++k) {
                auto [a, b] = kClassPairs[k];
                const auto& t = tests[k];
                out << r.problem << ',' << entry << ',' << to_string(a) << "_vs_" << to_string(b) << ','
                    << (designs ? r.best_design[class_index(a)] : "") << ','
                    << (designs ? r.best_design[class_index(b)] : "") << ',';
                if (!t.available) {
                    out << "missing,,,\n";
                    continue;
                }
                out << (t.winner ? std::string(to_string(*t.winner)) : "none") << ',' << fmt(t.p) << ','
                    << (t.insignificant() ? "insig" : "") << ',' << (t.below_99() ? 1 : 0) << '\n';
            }
        };
        emit("best", r.best_vs_best, true);
        emit("pooled", r.pooled, false);
    }
}

void write_aggregate_csv(std::ostream& out, const std::vector<ClassAggregate>& rows) {
    out << "class,problems,pct_found_best,pct_top5,superiority_p,superiority_pass,pct_best_design,"
           "pct_found_best_once\n";
    for (const auto& r : rows)
        out << to_string(r.cls) << ',' << r.problems << ',' << fmt(r.pct_found_best) << ',' << fmt(r.pct_top5) << ','
            << fmt(r.superiority_p) << ',' << (r.superiority_pass ? 1 : 0) << ',' << fmt(r.pct_best_design) << ','
            << fmt(r.pct_found_best_once) << '\n';
}

void write_profiles_csv(std::ostream& out, const std::vector<StoredRun>& runs, std::size_t grid) {
    std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>> groups;
    for (const auto& r : runs) groups[{r.cell.problem, r.record.label}].push_back(&r.record);
    out << "problem,label,evals,runs,median_best\n";
    for (const auto& [key, records] : groups) {
        const ProblemSpec& p = problem(key.first);
        for (const auto& pt : performance_profile(records, p, grid))
            out << key.first << ',' << key.second << ',' << pt.evals << ',' << pt.bests.size() << ','
                << fmt(pt.median_best) << '\n';
    }
}

std::vector<std::filesystem::path> analyze_store(const std::filesystem::path& store,
                                                 const std::filesystem::path& dest) {
    const auto runs = load_store(store);
    if (runs.empty()) throw std::invalid_argument("store has no completed runs: " + store.string());
    const auto finals = final_values(runs);
    std::filesystem::create_directories(dest);
    std::vector<std::filesystem::path> written;
    auto write = [&](const char* name, auto&& fn) {
        auto path = dest / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        fn(out);
        written.push_back(path);
    };
    write("final_values.csv", [&](std::ostream& o) { write_final_values_csv(o, finals); });
    write("profiles.csv", [&](std::ostream& o) { write_profiles_csv(o, runs); });
    write("class_comparisons.csv", [&](std::ostream& o) { write_class_comparisons_csv(o, class_comparisons(finals)); });
    write("aggregate_stats.csv", [&](std::ostream& o) { write_aggregate_csv(o, aggregate_stats(finals)); });
    return written;
}

}  // namespace sotea
