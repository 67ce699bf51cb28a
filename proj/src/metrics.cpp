#include "sotea/metrics.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "sotea/engines.hpp"

namespace sotea {

double characteristic_path_length(const PopulationGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw std::invalid_argument("path length needs at least two nodes");
    std::vector<int> dist(n);
    std::queue<NodeId> frontier;
    unsigned long long total = 0;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.push(s);
        std::size_t reached = 1;
        while (!frontier.empty()) {
            NodeId u = frontier.front();
            frontier.pop();
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                ++reached;
                frontier.push(v);
                if (v > s) total += static_cast<unsigned long long>(dist[v]);
            }
        }
        if (reached != n) throw std::invalid_argument("path length of a disconnected graph");
    }
    return static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double clustering_coefficient(const PopulationGraph& g, NodeId i) {
    const auto& nb = g.neighbors(i);
    const std::size_t k = nb.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) links += g.has_edge(nb[a], nb[b]);
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double average_clustering(const PopulationGraph& g) {
    double sum = 0.0;
    for (NodeId i = 0; i < g.size(); ++i) sum += clustering_coefficient(g, i);
    return sum / static_cast<double>(g.size());
}

double mean_degree(const PopulationGraph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.size());
}

std::vector<std::size_t> degree_histogram(const PopulationGraph& g) {
    std::vector<std::size_t> counts;
    for (NodeId i = 0; i < g.size(); ++i) {
        std::size_t k = g.degree(i);
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
    }
    return counts;
}

RandomBaselines random_baselines(std::size_t n, double k_ave) {
    if (!(k_ave > 1.0)) throw std::domain_error("random baselines need k_ave > 1");
    double nn = static_cast<double>(n);
    return {std::log(nn) / std::log(k_ave), k_ave / nn};
}

double nearest_neighbor_degree(const PopulationGraph& g, NodeId i) {
    const auto& nb = g.neighbors(i);
    if (nb.empty()) throw std::domain_error("k_NN of an isolated node");
    double sum = 0.0;
    for (NodeId j : nb) sum += static_cast<double>(g.degree(j));
    return sum / static_cast<double>(nb.size());
}

std::optional<LinearFit> least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("least_squares: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) return std::nullopt;
    double slope = sxy / sxx;
    return LinearFit{slope, my - slope * mx};
}

std::optional<LinearFit> clustering_degree_fit(const PopulationGraph& g) {
    std::vector<double> k, c;
    for (NodeId i = 0; i < g.size(); ++i) {
        k.push_back(static_cast<double>(g.degree(i)));
        c.push_back(clustering_coefficient(g, i));
    }
    return least_squares(k, c);
}

std::optional<LinearFit> knn_degree_fit(const PopulationGraph& g) {
    std::map<std::size_t, std::pair<double, std::size_t>> bins;
    for (NodeId i = 0; i < g.size(); ++i) {
        if (g.degree(i) == 0) continue;
        auto& [sum, count] = bins[g.degree(i)];
        sum += nearest_neighbor_degree(g, i);
        ++count;
    }
    std::vector<double> k, knn;
    for (const auto& [deg, acc] : bins) {
        k.push_back(static_cast<double>(deg));
        knn.push_back(acc.first / static_cast<double>(acc.second));
    }
    return least_squares(k, knn);
}

PoissonFit poisson_chi_square(std::span<const std::size_t> histogram, double k_ave) {
    std::size_t n = 0;
    for (auto c : histogram) n += c;
    if (histogram.empty() || n == 0) return {0.0, 0};
    double chi = 0.0;
    double pmf = std::exp(-k_ave);
    double cumulative = 0.0;
    std::size_t bins = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        if (k > 0) pmf *= k_ave / static_cast<double>(k);
        double p = (k + 1 == histogram.size()) ? 1.0 - cumulative : pmf;
        cumulative += pmf;
        double expected = static_cast<double>(n) * p;
        if (expected <= 0.0) continue;
        double diff = static_cast<double>(histogram[k]) - expected;
        chi += diff * diff / expected;
        ++bins;
    }
    return {chi, bins > 2 ? bins - 2 : 0};
}

TopologyReport analyze_topology(const PopulationGraph& g) {
    TopologyReport r;
    r.path_length = characteristic_path_length(g);
    r.k_ave = mean_degree(g);
    auto hist = degree_histogram(g);
    r.k_hist.assign(hist.begin(), hist.end());
    r.c_ave = average_clustering(g);
    auto base = random_baselines(g.size(), r.k_ave);
    r.c_rand = base.clustering;
    r.path_length_rand = base.path_length;
    r.ck_fit = clustering_degree_fit(g);
    r.knn_fit = knn_degree_fit(g);
    r.poisson_chi_square = poisson_chi_square(hist, r.k_ave).chi_square;
    return r;
}

TopologyReport average_reports(std::span<const TopologyReport> reports) {
    TopologyReport out;
    if (reports.empty()) return out;
    const double n = static_cast<double>(reports.size());
    LinearFit ck{0, 0}, knn{0, 0};
    std::size_t ck_count = 0, knn_count = 0;
    for (const auto& r : reports) {
        out.path_length += r.path_length / n;
        out.k_ave += r.k_ave / n;
        out.c_ave += r.c_ave / n;
        out.c_rand += r.c_rand / n;
        out.path_length_rand += r.path_length_rand / n;
        out.poisson_chi_square += r.poisson_chi_square / n;
        if (out.k_hist.size() < r.k_hist.size()) out.k_hist.resize(r.k_hist.size(), 0.0);
        for (std::size_t k = 0; k < r.k_hist.size(); ++k) out.k_hist[k] += r.k_hist[k] / n;
        if (r.ck_fit) {
            ck.slope += r.ck_fit->slope;
            ck.intercept += r.ck_fit->intercept;
            ++ck_count;
        }
        if (r.knn_fit) {
            knn.slope += r.knn_fit->slope;
            knn.intercept += r.knn_fit->intercept;
            ++knn_count;
        }
    }
    if (ck_count > 0) out.ck_fit = LinearFit{ck.slope / ck_count, ck.intercept / ck_count};
    if (knn_count > 0) out.knn_fit = LinearFit{knn.slope / knn_count, knn.intercept / knn_count};
    return out;
}

std::vector<TopologyStudyCell> sotea_topology_study(const ProblemSpec& problem,
                                                    const TopologyStudyOptions& options) {
    std::vector<TopologyStudyCell> cells;
    for (std::size_t n : options.pop_sizes) {
        for (int k_max : options.k_max) {
            EngineConfig cfg;
            cfg.family = Family::sotea;
            cfg.label = "sotea_k" + std::to_string(k_max);
            cfg.pop_size = n;
            cfg.max_generations = options.generations;
            cfg.max_evals = n * (options.generations + 1);
            cfg.snapshot_every = options.snapshot_every;
            cfg.sotea = SoteaParams{k_max};

            std::vector<TopologyReport> reports;
            for (std::size_t run = 0; run < options.runs; ++run) {
                cfg.seed = options.seed + run;
                RunRecord rec = run_engine(cfg, problem);
                for (const auto& snap : rec.snapshots) reports.push_back(analyze_topology(snap.graph));
            }
            TopologyStudyCell cell;
            cell.pop_size = n;
            cell.k_max = k_max;
            cell.runs = options.runs;
            cell.snapshots = reports.size();
            cell.mean = average_reports(reports);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

void write_study_csv(std::ostream& out, std::span<const TopologyStudyCell> cells) {
    out << "pop_size,k_max,metric,value\n";
    auto row = [&](const TopologyStudyCell& c, const std::string& metric, double value) {
        out << c.pop_size << ',' << c.k_max << ',' << metric << ',' << value << '\n';
    };
    auto old_precision = out.precision(10);
    for (const auto& c : cells) {
        const auto& m = c.mean;
        row(c, "snapshots", static_cast<double>(c.snapshots));
        row(c, "L", m.path_length);
        row(c, "L_rand", m.path_length_rand);
        row(c, "k_ave", m.k_ave);
        row(c, "c_ave", m.c_ave);
        row(c, "c_rand", m.c_rand);
        if (m.ck_fit) {
            row(c, "ck_slope", m.ck_fit->slope);
            row(c, "ck_intercept", m.ck_fit->intercept);
        }
        if (m.knn_fit) {
            row(c, "v", m.knn_fit->slope);
            row(c, "knn_intercept", m.knn_fit->intercept);
        }
        row(c, "poisson_chi_square", m.poisson_chi_square);
        for (std::size_t k = 0; k < m.k_hist.size(); ++k) row(c, "k_hist_" + std::to_string(k), m.k_hist[k]);
    }
    out.precision(old_precision);
}

}  // namespace sotea
