#pragma once

#include <span>
#include <vector>

#include "isacot/objective.hpp"
#include "isacot/scenario.hpp"
#include "isacot/solution.hpp"

namespace isacot {

/// Assignment score of one candidate cell:
///   score_i(q) = -G_i(q)/U_i + G_i(q)/(U_i K)
/// where G_i(q) is the objective density at q when served by station i.
/// Empty cells are floored at U = 1e-6 so they can re-acquire points.
double theorem1_score(double objective_density, double cell_mass, int K);

/// Frozen operating point used to evaluate the objective density G_i(q)
/// during one association solve: per-station per-link bandwidth derived from
/// the entering association, and per-point powers taken from the nearest
/// UAV's current serving-link allocation.
class ScoreContext {
public:
    ScoreContext(const Scenario& scn, const PowerAllocation& powers,
                 std::span<const int> entering_uav_cells);

    /// Objective density at q when served by station i, with the powers of
    /// the UAV nearest to q. A cooperative neighbour contributes rate and
    /// QoS terms, the non-cooperative one only QoS.
    double objective_density(const Vec3& q, int station) const;

    /// Station minimizing theorem1_score at q; ties go to the lower index.
    int assign(const Vec3& q, std::span<const double> masses) const;

    const Scenario& scenario() const { return *scn_; }

private:
    int nearest_uav(const Vec3& q) const;

    const Scenario* scn_;
    std::vector<double> station_bandwidth_hz_;
    std::vector<double> uav_comm_power_;  // per UAV; zero for the non-cooperative one
    std::vector<double> uav_sens_power_;
};

/// Membership recursion of Algorithm 1, iteration counter t >= 1:
/// in-cell points contract towards 0, out-of-cell points towards 1.
void update_membership(std::vector<std::vector<double>>& membership_by_cell,
                       std::span<const int> labels, int t);

/// Masses from the membership history: U_m = K * mean(1 - R_m).
std::vector<double> masses_from_membership(
    const SamplePointCloud& cloud, const std::vector<std::vector<double>>& membership_by_cell,
    int K);

/// Per-iteration view for tests and diagnostics.
struct Alg1Observer {
    virtual ~Alg1Observer() = default;
    /// masses_for_scores: the U vector the relabeling used;
    /// masses_after: recomputed from the updated membership.
    virtual void on_iteration(int t, std::span<const double> masses_for_scores,
                              std::span<const int> labels,
                              std::span<const double> masses_after, const ScoreContext& ctx) = 0;
};

/// Algorithm 1: iterate (mass recomputation from membership, Theorem-1
/// relabeling, membership update) for a fixed number of rounds and return
/// the resulting partition. Powers stay fixed; membership starts at zero.
Partition run_alg1(const Scenario& scn, const PowerAllocation& powers,
                   std::span<const int> initial_labels, std::span<const int> initial_uav_cells,
                   int iterations, Alg1Observer* observer = nullptr);

/// Power-diagram baseline: q -> argmin_m ||q - B_m||^2 - w_m.
Partition weighted_voronoi(const Scenario& scn, std::span<const double> weights);

/// Plain-Voronoi (all weights zero) convenience wrapper.
Partition voronoi_partition(const Scenario& scn);

/// Nearest-station label of an arbitrary point under the power diagram.
int weighted_voronoi_cell(const Vec3& q, std::span<const BaseStation> stations,
                          std::span<const double> weights);

}  // namespace isacot
