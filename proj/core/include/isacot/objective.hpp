#pragma once

#include <span>
#include <string>
#include <vector>

#include "isacot/scenario.hpp"
#include "isacot/solution.hpp"

namespace isacot {

/// Association-derived quantities shared by the objective evaluation and all
/// power solvers: per-link SNR gains, bandwidths, rho coefficients and the
/// per-station budget pools. Rebuilt whenever the association changes.
struct EvalContext {
    int K = 0;
    int M = 0;
    double theta1 = 0.0;
    double theta2 = 1.0;

    std::vector<int> comm_station;        // per cooperative UAV
    std::vector<double> comm_gain;        // SNR per watt (g_k)
    std::vector<double> comm_bandwidth;   // b_{k,m}
    std::vector<double> comm_rate_weight; // Omega_k = theta1 * b_{k,m} / K

    std::vector<int> target_station;      // per target (K+1)
    std::vector<double> sens_gain2;       // |sigma_j|^2
    std::vector<double> sens_bandwidth;   // b_j
    std::vector<double> sens_rho_coeff;   // rho_j = coeff * p_s
    std::vector<double> sens_weight;      // mho_j = (w1 b_j/beta1 + w2/beta2)/(K+1)

    std::vector<double> station_bandwidth_hz;  // per-link bandwidth per station
    std::vector<double> comm_budget_w;         // per station
    std::vector<double> sens_budget_w;         // per station

    double rate(int k, double p_comm_w) const {
        return comm_bandwidth[k] * std::log2(1.0 + comm_gain[k] * p_comm_w);
    }
    double rho(int j, double p_sens_w) const { return sens_rho_coeff[j] * p_sens_w; }

    double sum_rate(std::span<const double> comm_w) const;
    double sum_rho(std::span<const double> sens_w) const;
    /// Objective value of Eq. P1:
    /// G = theta1 R_sum/K + (1-theta1) theta2 rho_sum/(K+1).
    double gtol(std::span<const double> comm_w, std::span<const double> sens_w) const;
};

EvalContext make_eval_context(const Scenario& scn, const Partition& partition);

struct ConstraintEntry {
    std::string name;
    bool pass = true;
    /// Signed slack; negative means violated by that amount.
    double margin = 0.0;
};

struct ConstraintReport {
    std::vector<ConstraintEntry> entries;
    bool all_pass = true;

    const ConstraintEntry& entry(const std::string& name) const;
};

struct TargetQos {
    int target = 0;
    int serving_station = 0;
    double sensing_power_w = 0.0;
    double rho = 0.0;
    double crb_distance = 0.0;
    double crb_angle = 0.0;
    double echo_delay_s = 0.0;
};

struct ObjectiveReport {
    double r_sum_bps = 0.0;
    double rho_sum = 0.0;
    double gtol = 0.0;
    std::vector<double> per_link_rate_bps;  // per cooperative UAV
    std::vector<TargetQos> targets;         // K+1 entries
    ConstraintReport constraints;
};

/// Full objective and QoS evaluation of a structurally complete solution.
ObjectiveReport evaluate_gtol(const Solution& solution, const Scenario& scn);

/// C1-C6 feasibility report; never throws.
ConstraintReport check_constraints(const Solution& solution, const Scenario& scn);

/// Clips raw powers to [lo_i, hi] and rescales the interior until the pool
/// sums to the budget; fixed point in at most size+2 passes. Throws
/// InfeasibleBudget when sum(lo) > budget or size*hi < budget.
std::vector<double> project_to_budget(std::vector<double> raw, double budget_w,
                                      std::span<const double> lo, double hi);

/// Convenience overload with a common lower bound.
std::vector<double> project_to_budget(std::vector<double> raw, double budget_w, double lo,
                                      double hi);

/// Projects every per-station pool of a power allocation onto C3 and C4.
PowerAllocation project_feasible(PowerAllocation raw, const Partition& partition,
                                 const Scenario& scn);

}  // namespace isacot
