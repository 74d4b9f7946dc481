#include "isacot/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isacot/channel.hpp"
#include "isacot/numeric.hpp"
#include "isacot/sensing.hpp"

namespace isacot {

namespace {

constexpr double kBudgetRelTol = 1.0e-9;

std::vector<int> coop_counts_per_station(const Scenario& scn, const Partition& partition) {
    std::vector<int> counts(static_cast<std::size_t>(scn.num_stations()), 0);
    for (int k = 0; k < scn.num_coop(); ++k) counts[partition.uav_cell[k]] += 1;
    return counts;
}

void require_complete(const Solution& solution, const Scenario& scn) {
    const auto& p = solution.partition;
    if (static_cast<int>(p.point_cell.size()) != scn.cloud.size() ||
        p.num_cells() != scn.num_stations() ||
        static_cast<int>(p.uav_cell.size()) != scn.num_targets()) {
        throw ConfigError("evaluate_gtol: partition does not match the scenario");
    }
    if (static_cast<int>(solution.powers.comm_w.size()) != scn.num_coop() ||
        static_cast<int>(solution.powers.sens_w.size()) != scn.num_targets()) {
        throw ConfigError("evaluate_gtol: power vectors do not match the scenario");
    }
}

}  // namespace

double EvalContext::sum_rate(std::span<const double> comm_w) const {
    KahanSum acc;
    for (int k = 0; k < K; ++k) acc.add(rate(k, comm_w[k]));
    return acc.value();
}

double EvalContext::sum_rho(std::span<const double> sens_w) const {
    KahanSum acc;
    for (int j = 0; j <= K; ++j) acc.add(rho(j, sens_w[j]));
    return acc.value();
}

double EvalContext::gtol(std::span<const double> comm_w, std::span<const double> sens_w) const {
    return theta1 * sum_rate(comm_w) / K + (1.0 - theta1) * theta2 * sum_rho(sens_w) / (K + 1);
}

EvalContext make_eval_context(const Scenario& scn, const Partition& partition) {
    const int K = scn.num_coop();
    const int M = scn.num_stations();
    const double lambda = scn.cfg.wavelength();

    EvalContext ctx;
    ctx.K = K;
    ctx.M = M;
    ctx.theta1 = scn.cfg.theta1;
    ctx.theta2 = scn.theta2;

    const auto counts = coop_counts_per_station(scn, partition);
    ctx.station_bandwidth_hz.resize(M);
    ctx.comm_budget_w.resize(M);
    ctx.sens_budget_w.resize(M);
    for (int m = 0; m < M; ++m) {
        ctx.station_bandwidth_hz[m] =
            scn.stations[m].bandwidth_hz / std::max(1, counts[m]);
        ctx.comm_budget_w[m] = scn.cfg.comm_budget_fraction * scn.stations[m].total_power_w;
        ctx.sens_budget_w[m] = (1.0 - scn.cfg.comm_budget_fraction) * scn.stations[m].total_power_w;
    }

    ctx.comm_station.resize(K);
    ctx.comm_gain.resize(K);
    ctx.comm_bandwidth.resize(K);
    ctx.comm_rate_weight.resize(K);
    for (int k = 0; k < K; ++k) {
        const int m = partition.uav_cell[k];
        const double b = ctx.station_bandwidth_hz[m];
        const CommLink link =
            make_comm_link(scn.stations[m], scn.uavs[k].position, scn.link_sensing_error(0, k, m),
                           scn.link_phase(0, k, m), b, lambda);
        ctx.comm_station[k] = m;
        ctx.comm_gain[k] =
            unit_power_snr_gain(link, scn.cfg.noise_psd_w_hz, lambda, scn.cfg.distance_exponent);
        ctx.comm_bandwidth[k] = b;
        ctx.comm_rate_weight[k] = ctx.theta1 * b / K;
    }

    const auto& sp = scn.cfg.sensing;
    ctx.target_station.resize(K + 1);
    ctx.sens_gain2.resize(K + 1);
    ctx.sens_bandwidth.resize(K + 1);
    ctx.sens_rho_coeff.resize(K + 1);
    ctx.sens_weight.resize(K + 1);
    for (int j = 0; j <= K; ++j) {
        const int m = partition.uav_cell[j];
        const double g = composite_gain(scn.stations[m].position, scn.uavs[j].position, lambda,
                                        scn.cfg.reference_gain);
        const double b = ctx.station_bandwidth_hz[m];
        ctx.target_station[j] = m;
        ctx.sens_gain2[j] = g * g;
        ctx.sens_bandwidth[j] = b;
        ctx.sens_rho_coeff[j] = g * g * (sp.w1 * b / sp.beta1 + sp.w2 / sp.beta2);
        ctx.sens_weight[j] = (sp.w1 * b / sp.beta1 + sp.w2 / sp.beta2) / (K + 1);
    }
    return ctx;
}

const ConstraintEntry& ConstraintReport::entry(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return e;
    }
    throw ConfigError("ConstraintReport: unknown constraint " + name);
}

ConstraintReport check_constraints(const Solution& solution, const Scenario& scn) {
    ConstraintReport report;
    const auto& partition = solution.partition;
    const auto& powers = solution.powers;
    const int K = scn.num_coop();
    const int M = scn.num_stations();

    // C1: the stored masses must equal K * integral of f over each cell.
    {
        double worst = 0.0;
        bool shape_ok = static_cast<int>(partition.point_cell.size()) == scn.cloud.size() &&
                        partition.num_cells() == M;
        if (shape_ok) {
            const auto recomputed = cell_masses(scn.cloud, partition.point_cell, K, M);
            for (int m = 0; m < M; ++m) {
                worst = std::max(worst, std::abs(recomputed[m] - partition.mass[m]));
            }
        }
        const bool pass = shape_ok && worst <= 1.0e-9 * std::max(1.0, double(K));
        report.entries.push_back({"C1", pass, -worst});
    }

    // C2: disjoint cover; with one label per point this reduces to label
    // validity over the whole cloud.
    {
        bool pass = static_cast<int>(partition.point_cell.size()) == scn.cloud.size();
        for (int label : partition.point_cell) {
            if (label < 0 || label >= M) {
                pass = false;
                break;
            }
        }
        report.entries.push_back({"C2", pass, pass ? 0.0 : -1.0});
    }

    // C3: box bounds on every active transmit power.
    {
        double slack = std::numeric_limits<double>::infinity();
        auto visit = [&](double p) {
            slack = std::min(slack, p - scn.cfg.p_min_w);
            slack = std::min(slack, scn.cfg.p_max_w - p);
        };
        for (double p : powers.comm_w) visit(p);
        for (double p : powers.sens_w) visit(p);
        const bool pass = slack >= -1.0e-12 * scn.cfg.p_max_w;
        report.entries.push_back({"C3", pass, slack});
    }

    // C4: per-station budget pools spent exactly (pools with no active link
    // are vacuous).
    {
        std::vector<double> comm_sum(M, 0.0), sens_sum(M, 0.0);
        std::vector<int> comm_links(M, 0), sens_links(M, 0);
        for (int k = 0; k < K; ++k) {
            comm_sum[partition.uav_cell[k]] += powers.comm_w[k];
            comm_links[partition.uav_cell[k]] += 1;
        }
        for (int j = 0; j <= K; ++j) {
            sens_sum[partition.uav_cell[j]] += powers.sens_w[j];
            sens_links[partition.uav_cell[j]] += 1;
        }
        double worst_rel = 0.0;
        for (int m = 0; m < M; ++m) {
            const double comm_budget =
                scn.cfg.comm_budget_fraction * scn.stations[m].total_power_w;
            const double sens_budget =
                (1.0 - scn.cfg.comm_budget_fraction) * scn.stations[m].total_power_w;
            if (comm_links[m] > 0) {
                worst_rel = std::max(worst_rel,
                                     std::abs(comm_sum[m] - comm_budget) / comm_budget);
            }
            if (sens_links[m] > 0) {
                worst_rel = std::max(worst_rel,
                                     std::abs(sens_sum[m] - sens_budget) / sens_budget);
            }
        }
        report.entries.push_back({"C4", worst_rel <= kBudgetRelTol, -worst_rel});
    }

    const EvalContext ctx = make_eval_context(scn, partition);

    // C5: localization QoS floor over cooperative targets (ceiling in
    // literal mode).
    {
        double slack = std::numeric_limits<double>::infinity();
        for (int k = 0; k < K; ++k) {
            const double rho = ctx.rho(k, powers.sens_w[k]);
            slack = std::min(slack, scn.cfg.literal_c5 ? scn.cfg.rho_min - rho
                                                       : rho - scn.cfg.rho_min);
        }
        report.entries.push_back({"C5", slack >= 0.0, slack});
    }

    // C6: per-UAV rate floor.
    {
        double slack = std::numeric_limits<double>::infinity();
        for (int k = 0; k < K; ++k) {
            slack = std::min(slack, ctx.rate(k, powers.comm_w[k]) - scn.cfg.r_min_bps);
        }
        const bool pass = slack >= -1.0e-9 * std::max(1.0, scn.cfg.r_min_bps);
        report.entries.push_back({"C6", pass, slack});
    }

    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const ConstraintEntry& e) { return e.pass; });
    return report;
}

ObjectiveReport evaluate_gtol(const Solution& solution, const Scenario& scn) {
    require_complete(solution, scn);
    const EvalContext ctx = make_eval_context(scn, solution.partition);
    const int K = ctx.K;

    ObjectiveReport report;
    report.per_link_rate_bps.resize(K);
    for (int k = 0; k < K; ++k) {
        report.per_link_rate_bps[k] = ctx.rate(k, solution.powers.comm_w[k]);
    }
    report.r_sum_bps = ctx.sum_rate(solution.powers.comm_w);
    report.rho_sum = ctx.sum_rho(solution.powers.sens_w);
    report.gtol = ctx.gtol(solution.powers.comm_w, solution.powers.sens_w);

    report.targets.resize(K + 1);
    for (int j = 0; j <= K; ++j) {
        const int m = ctx.target_station[j];
        SensingLink link{j, std::sqrt(ctx.sens_gain2[j]), solution.powers.sens_w[j],
                         ctx.sens_bandwidth[j]};
        const CrbEstimate c = crb(link, scn.cfg.sensing);
        report.targets[j] = {j,
                             m,
                             link.power_w,
                             localization_qos(link, scn.cfg.sensing),
                             c.crb_distance,
                             c.crb_angle,
                             echo_delay(scn.stations[m].position, scn.uavs[j].position)};
    }
    report.constraints = check_constraints(solution, scn);
    return report;
}

std::vector<double> project_to_budget(std::vector<double> raw, double budget_w,
                                      std::span<const double> lo, double hi) {
    const std::size_t n = raw.size();
    if (n == 0) {
        if (budget_w > 0.0) throw InfeasibleBudget("project_to_budget: no links to carry budget");
        return raw;
    }
    double lo_total = 0.0;
    for (double l : lo) lo_total += l;
    const double tol = kBudgetRelTol * std::max(1.0, budget_w);
    if (lo_total > budget_w + tol) {
        throw InfeasibleBudget("project_to_budget: sum of lower bounds exceeds the budget");
    }
    if (static_cast<double>(n) * hi < budget_w - tol) {
        throw InfeasibleBudget("project_to_budget: budget exceeds the box capacity");
    }

    const double fit_tol = 1.0e-12 * std::max(1.0, budget_w);
    for (std::size_t pass = 0; pass <= n + 1; ++pass) {
        for (std::size_t i = 0; i < n; ++i) raw[i] = std::clamp(raw[i], lo[i], hi);
        double sum = 0.0;
        for (double p : raw) sum += p;
        if (std::abs(sum - budget_w) <= fit_tol) return raw;

        if (sum < budget_w) {
            // Grow the part above the lower bounds; links already at the cap
            // get clipped on the next pass.
            double excess = 0.0;
            std::size_t open = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (raw[i] < hi) {
                    excess += raw[i] - lo[i];
                    ++open;
                }
            }
            if (open == 0) return raw;  // everything capped; budget unattainable within tol
            const double missing = budget_w - sum;
            if (excess > 0.0) {
                const double scale = (excess + missing) / excess;
                for (std::size_t i = 0; i < n; ++i) {
                    if (raw[i] < hi) raw[i] = lo[i] + (raw[i] - lo[i]) * scale;
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    if (raw[i] < hi) raw[i] += missing / static_cast<double>(open);
                }
            }
        } else {
            double excess = 0.0;
            for (std::size_t i = 0; i < n; ++i) excess += raw[i] - lo[i];
            const double target = budget_w - lo_total;
            if (excess <= 0.0) return raw;
            const double scale = std::max(0.0, target / excess);
            for (std::size_t i = 0; i < n; ++i) raw[i] = lo[i] + (raw[i] - lo[i]) * scale;
        }
    }
    return raw;
}

std::vector<double> project_to_budget(std::vector<double> raw, double budget_w, double lo,
                                      double hi) {
    const std::vector<double> lo_vec(raw.size(), lo);
    return project_to_budget(std::move(raw), budget_w, lo_vec, hi);
}

PowerAllocation project_feasible(PowerAllocation raw, const Partition& partition,
                                 const Scenario& scn) {
    const int K = scn.num_coop();
    const int M = scn.num_stations();
    for (int m = 0; m < M; ++m) {
        const double comm_budget = scn.cfg.comm_budget_fraction * scn.stations[m].total_power_w;
        const double sens_budget =
            (1.0 - scn.cfg.comm_budget_fraction) * scn.stations[m].total_power_w;

        std::vector<int> comm_ids, sens_ids;
        for (int k = 0; k < K; ++k) {
            if (partition.uav_cell[k] == m) comm_ids.push_back(k);
        }
        for (int j = 0; j <= K; ++j) {
            if (partition.uav_cell[j] == m) sens_ids.push_back(j);
        }

        if (!comm_ids.empty()) {
            std::vector<double> pool;
            for (int k : comm_ids) pool.push_back(raw.comm_w[k]);
            pool = project_to_budget(std::move(pool), comm_budget, scn.cfg.p_min_w,
                                     scn.cfg.p_max_w);
            for (std::size_t i = 0; i < comm_ids.size(); ++i) raw.comm_w[comm_ids[i]] = pool[i];
        }
        if (!sens_ids.empty()) {
            std::vector<double> pool;
            for (int j : sens_ids) pool.push_back(raw.sens_w[j]);
            pool = project_to_budget(std::move(pool), sens_budget, scn.cfg.p_min_w,
                                     scn.cfg.p_max_w);
            for (std::size_t i = 0; i < sens_ids.size(); ++i) raw.sens_w[sens_ids[i]] = pool[i];
        }
    }
    return raw;
}

}  // namespace isacot
