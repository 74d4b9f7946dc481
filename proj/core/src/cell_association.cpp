#include "isacot/cell_association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "isacot/numeric.hpp"

namespace isacot {

namespace {
constexpr double kMassFloor = 1.0e-6;
constexpr double kScoreDistanceFloor = 0.1;  // meters; scoring-only guard
}  // namespace

double theorem1_score(double objective_density, double cell_mass, int K) {
    const double mass = std::max(cell_mass, kMassFloor);
    return -objective_density / mass + objective_density / (mass * K);
}

ScoreContext::ScoreContext(const Scenario& scn, const PowerAllocation& powers,
                           std::span<const int> entering_uav_cells)
    : scn_(&scn) {
    const int M = scn.num_stations();
    const int K = scn.num_coop();

    std::vector<int> counts(static_cast<std::size_t>(M), 0);
    for (int k = 0; k < K; ++k) counts[entering_uav_cells[k]] += 1;
    station_bandwidth_hz_.resize(M);
    for (int m = 0; m < M; ++m) {
        station_bandwidth_hz_[m] = scn.stations[m].bandwidth_hz / std::max(1, counts[m]);
    }

    uav_comm_power_.assign(static_cast<std::size_t>(K) + 1, 0.0);
    uav_sens_power_.assign(static_cast<std::size_t>(K) + 1, 0.0);
    for (int k = 0; k < K; ++k) uav_comm_power_[k] = powers.comm_w[k];
    for (int j = 0; j <= K; ++j) uav_sens_power_[j] = powers.sens_w[j];
}

int ScoreContext::nearest_uav(const Vec3& q) const {
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < scn_->uavs.size(); ++j) {
        const double d2 = dot(q - scn_->uavs[j].position, q - scn_->uavs[j].position);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = static_cast<int>(j);
        }
    }
    return best;
}

double ScoreContext::objective_density(const Vec3& q, int station) const {
    const auto& cfg = scn_->cfg;
    const int K = scn_->num_coop();
    const double lambda = cfg.wavelength();
    const double d = std::max(distance(q, scn_->stations[station].position), kScoreDistanceFloor);
    const double b = station_bandwidth_hz_[station];
    const double nt = static_cast<double>(scn_->stations[station].antenna_elements.size());

    const int neighbour = nearest_uav(q);
    const double p_comm = uav_comm_power_[neighbour];
    const double p_sens = uav_sens_power_[neighbour];

    double g = 0.0;
    if (p_comm > 0.0) {
        const double dist_term = cfg.distance_exponent == 1 ? d : d * d;
        const double snr = p_comm * lambda * lambda * nt /
                           (16.0 * std::numbers::pi * std::numbers::pi * cfg.noise_psd_w_hz * b *
                            dist_term);
        g += cfg.theta1 / K * b * std::log2(1.0 + snr);
    }
    if (p_sens > 0.0) {
        const auto& sp = cfg.sensing;
        const double gain2 = cfg.reference_gain * lambda * lambda /
                             (16.0 * std::numbers::pi * std::numbers::pi * d * d);
        const double rho = p_sens * gain2 * (sp.w1 * b / sp.beta1 + sp.w2 / sp.beta2);
        g += (1.0 - cfg.theta1) * scn_->theta2 * rho / (K + 1);
    }
    return g;
}

int ScoreContext::assign(const Vec3& q, std::span<const double> masses) const {
    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (int i = 0; i < scn_->num_stations(); ++i) {
        const double score =
            theorem1_score(objective_density(q, i), masses[i], scn_->num_coop());
        if (score < best_score) {
            best_score = score;
            best = i;
        }
    }
    return best;
}

void update_membership(std::vector<std::vector<double>>& membership_by_cell,
                       std::span<const int> labels, int t) {
    const double keep = 1.0 - 1.0 / static_cast<double>(t);
    for (std::size_t m = 0; m < membership_by_cell.size(); ++m) {
        auto& row = membership_by_cell[m];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (labels[i] == static_cast<int>(m)) {
                row[i] *= keep;
            } else {
                row[i] = 1.0 - keep * (1.0 - row[i]);
            }
        }
    }
}

std::vector<double> masses_from_membership(
    const SamplePointCloud& cloud, const std::vector<std::vector<double>>& membership_by_cell,
    int K) {
    std::vector<double> masses(membership_by_cell.size());
    for (std::size_t m = 0; m < membership_by_cell.size(); ++m) {
        KahanSum acc;
        const double w = cloud.point_weight();
        for (double r : membership_by_cell[m]) acc.add(w * (1.0 - r));
        masses[m] = K * acc.value();
    }
    return masses;
}

Partition run_alg1(const Scenario& scn, const PowerAllocation& powers,
                   std::span<const int> initial_labels, std::span<const int> initial_uav_cells,
                   int iterations, Alg1Observer* observer) {
    if (iterations < 1) throw ConfigError("run_alg1: iterations must be >= 1");
    const int M = scn.num_stations();
    const int K = scn.num_coop();
    const int n = scn.cloud.size();

    const ScoreContext ctx(scn, powers, initial_uav_cells);

    std::vector<int> labels(initial_labels.begin(), initial_labels.end());
    std::vector<int> uav_labels(initial_uav_cells.begin(), initial_uav_cells.end());
    std::vector<std::vector<double>> membership(
        static_cast<std::size_t>(M), std::vector<double>(static_cast<std::size_t>(n), 0.0));

    std::vector<double> masses;
    for (int t = 1; t <= iterations; ++t) {
        masses = masses_from_membership(scn.cloud, membership, K);
        for (int i = 0; i < n; ++i) labels[i] = ctx.assign(scn.cloud.points[i], masses);
        for (int j = 0; j <= K; ++j) uav_labels[j] = ctx.assign(scn.uavs[j].position, masses);
        update_membership(membership, labels, t);
        if (observer != nullptr) {
            const auto after = masses_from_membership(scn.cloud, membership, K);
            observer->on_iteration(t, masses, labels, after, ctx);
        }
    }

    Partition partition;
    partition.point_cell = std::move(labels);
    partition.mass = cell_masses(scn.cloud, partition.point_cell, K, M);
    partition.uav_cell = std::move(uav_labels);
    partition.membership = std::move(membership);

    int populated = 0;
    for (int m = 0; m < M; ++m) {
        if (partition.mass[m] > 0.0) ++populated;
    }
    if (populated <= 1 && M > 1) {
        partition.warnings.push_back("association collapsed to a single populated cell");
    } else if (populated < M) {
        partition.warnings.push_back("association left one or more cells empty");
    }
    return partition;
}

int weighted_voronoi_cell(const Vec3& q, std::span<const BaseStation> stations,
                          std::span<const double> weights) {
    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < stations.size(); ++m) {
        const Vec3 d = q - stations[m].position;
        const double score = dot(d, d) - weights[m];
        if (score < best_score) {
            best_score = score;
            best = static_cast<int>(m);
        }
    }
    return best;
}

Partition weighted_voronoi(const Scenario& scn, std::span<const double> weights) {
    const int M = scn.num_stations();
    const int K = scn.num_coop();
    const int n = scn.cloud.size();
    if (static_cast<int>(weights.size()) != M) {
        throw ConfigError("weighted_voronoi: one weight per station required");
    }

    Partition partition;
    partition.point_cell.resize(n);
    for (int i = 0; i < n; ++i) {
        partition.point_cell[i] = weighted_voronoi_cell(scn.cloud.points[i], scn.stations,
                                                        weights);
    }
    partition.uav_cell.resize(K + 1);
    for (int j = 0; j <= K; ++j) {
        partition.uav_cell[j] = weighted_voronoi_cell(scn.uavs[j].position, scn.stations,
                                                      weights);
    }
    partition.mass = cell_masses(scn.cloud, partition.point_cell, K, M);
    partition.membership.assign(static_cast<std::size_t>(M),
                                std::vector<double>(static_cast<std::size_t>(n), 1.0));
    for (int i = 0; i < n; ++i) partition.membership[partition.point_cell[i]][i] = 0.0;
    return partition;
}

Partition voronoi_partition(const Scenario& scn) {
    const std::vector<double> weights(static_cast<std::size_t>(scn.num_stations()), 0.0);
    return weighted_voronoi(scn, weights);
}

}  // namespace isacot
