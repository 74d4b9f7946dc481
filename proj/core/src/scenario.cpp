#include "isacot/scenario.hpp"

#include <cmath>
#include <numbers>

#include "isacot/numeric.hpp"
#include "isacot/rng.hpp"

namespace isacot {

namespace {

// Mass of a 1D standard normal restricted to [a, b].
double normal_mass(double mean, double stddev, double a, double b) {
    const double inv = 1.0 / (stddev * std::numbers::sqrt2);
    return 0.5 * (std::erf((b - mean) * inv) - std::erf((a - mean) * inv));
}

double component_pdf(const GaussianComponent& c, const Box3& bounds, const Vec3& q) {
    const double s2 = c.stddev * c.stddev;
    const double d2 = dot(q - c.mean, q - c.mean);
    const double unnorm = std::exp(-0.5 * d2 / s2) /
                          std::pow(2.0 * std::numbers::pi * s2, 1.5);
    const double mass = normal_mass(c.mean.x, c.stddev, bounds.lo.x, bounds.hi.x) *
                        normal_mass(c.mean.y, c.stddev, bounds.lo.y, bounds.hi.y) *
                        normal_mass(c.mean.z, c.stddev, bounds.lo.z, bounds.hi.z);
    if (mass <= 0.0) {
        throw ConfigError("SpatialDensity: Gaussian component has no mass inside bounds");
    }
    return unnorm / mass;
}

Vec3 sample_uniform(const Box3& b, Rng& rng) {
    return {rng.uniform(b.lo.x, b.hi.x), rng.uniform(b.lo.y, b.hi.y),
            rng.uniform(b.lo.z, b.hi.z)};
}

}  // namespace

double density_pdf(const SpatialDensity& density, const Vec3& q) {
    if (!density.bounds.contains(q)) return 0.0;
    if (density.kind == DensityKind::Uniform) return 1.0 / density.bounds.volume();
    double pdf = 0.0;
    for (const auto& c : density.components) {
        pdf += c.weight * component_pdf(c, density.bounds, q);
    }
    return pdf;
}

SamplePointCloud sample_points(const SpatialDensity& density, int n, std::uint64_t seed) {
    if (n < 1) throw ConfigError("sample_points: n must be >= 1");
    SamplePointCloud cloud;
    cloud.seed = seed;
    cloud.points.reserve(static_cast<std::size_t>(n));
    Rng rng(seed);

    if (density.kind == DensityKind::Uniform) {
        for (int i = 0; i < n; ++i) cloud.points.push_back(sample_uniform(density.bounds, rng));
        return cloud;
    }

    if (density.components.empty()) {
        throw ConfigError("SpatialDensity: GaussianMixture needs at least one component");
    }
    std::vector<double> cumulative;
    double total = 0.0;
    for (const auto& c : density.components) {
        if (c.stddev <= 0.0) throw ConfigError("SpatialDensity: component stddev must be > 0");
        total += c.weight;
        cumulative.push_back(total);
    }

    constexpr int kMaxRejects = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform(0.0, total);
        std::size_t ci = 0;
        while (ci + 1 < cumulative.size() && u >= cumulative[ci]) ++ci;
        const auto& c = density.components[ci];

        Vec3 p;
        int tries = 0;
        do {
            p = {c.mean.x + c.stddev * rng.normal(), c.mean.y + c.stddev * rng.normal(),
                 c.mean.z + c.stddev * rng.normal()};
            if (++tries > kMaxRejects) {
                throw ConfigError(
                    "sample_points: component mass inside bounds too small for rejection "
                    "sampling");
            }
        } while (!density.bounds.contains(p));
        cloud.points.push_back(p);
    }
    return cloud;
}

double average_uav_count(const SamplePointCloud& cloud, std::span<const int> labels, int K,
                         int m) {
    if (labels.size() != cloud.points.size()) {
        throw ConfigError("average_uav_count: label count does not match cloud size");
    }
    const double w = cloud.point_weight();
    KahanSum mass;
    for (int label : labels) {
        if (label == m) mass.add(w);
    }
    return static_cast<double>(K) * mass.value();
}

double average_uav_count(const SamplePointCloud& cloud, std::span<const double> in_cell_weight,
                         int K) {
    if (in_cell_weight.size() != cloud.points.size()) {
        throw ConfigError("average_uav_count: weight count does not match cloud size");
    }
    const double w = cloud.point_weight();
    KahanSum mass;
    for (double r : in_cell_weight) mass.add(w * r);
    return static_cast<double>(K) * mass.value();
}

std::vector<double> cell_masses(const SamplePointCloud& cloud, std::span<const int> labels, int K,
                                int M) {
    if (labels.size() != cloud.points.size()) {
        throw ConfigError("cell_masses: label count does not match cloud size");
    }
    std::vector<KahanSum> acc(static_cast<std::size_t>(M));
    const double w = cloud.point_weight();
    for (int label : labels) acc[static_cast<std::size_t>(label)].add(w);
    std::vector<double> masses(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) masses[m] = K * acc[m].value();
    return masses;
}

std::vector<Vec3> planar_array(int nx, int ny, double spacing_wavelengths, double wavelength) {
    std::vector<Vec3> elements;
    elements.reserve(static_cast<std::size_t>(nx) * ny);
    const double s = spacing_wavelengths * wavelength;
    const double cx = 0.5 * (nx - 1);
    const double cy = 0.5 * (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            elements.push_back({(ix - cx) * s, (iy - cy) * s, 0.0});
        }
    }
    return elements;
}

Scenario make_scenario(ScenarioConfig cfg, std::vector<BaseStation> stations,
                       std::vector<UavNode> uavs, SpatialDensity density) {
    const int M = static_cast<int>(stations.size());
    if (M != cfg.num_stations) throw ConfigError("make_scenario: M does not match station list");
    if (static_cast<int>(uavs.size()) != cfg.num_coop_uavs + 1) {
        throw ConfigError("make_scenario: UAV list must hold K cooperative + 1 non-cooperative");
    }
    int noncoop = 0;
    for (std::size_t j = 0; j < uavs.size(); ++j) {
        if (uavs[j].kind == UavKind::NonCooperative) {
            ++noncoop;
            if (j + 1 != uavs.size()) {
                throw ConfigError("make_scenario: non-cooperative UAV must be listed last");
            }
        }
    }
    if (noncoop != 1) throw ConfigError("make_scenario: exactly one non-cooperative UAV required");
    if (cfg.p_min_w >= cfg.p_max_w) throw ConfigError("make_scenario: requires p_min < p_max");
    if (cfg.theta1 < 0.0 || cfg.theta1 > 1.0) throw ConfigError("make_scenario: theta1 in [0,1]");
    if (cfg.sample_count < 1) throw ConfigError("make_scenario: sample_count must be >= 1");
    if (cfg.wavelength() <= 0.0) throw ConfigError("make_scenario: wavelength must be > 0");
    if (cfg.distance_exponent != 1 && cfg.distance_exponent != 2) {
        throw ConfigError("make_scenario: distance_exponent must be 1 or 2");
    }
    if (cfg.comm_budget_fraction <= 0.0 || cfg.comm_budget_fraction >= 1.0) {
        throw ConfigError("make_scenario: comm_budget_fraction must lie strictly in (0,1)");
    }
    for (const auto& bs : stations) {
        if (bs.antenna_elements.empty()) {
            throw ConfigError("make_scenario: station antenna array is empty");
        }
        if (bs.total_power_w <= 0.0) throw ConfigError("make_scenario: station power must be > 0");
        if (bs.bandwidth_hz <= 0.0) throw ConfigError("make_scenario: bandwidth must be > 0");
    }

    Scenario scn;
    scn.cfg = cfg;
    scn.stations = std::move(stations);
    scn.uavs = std::move(uavs);
    scn.density = std::move(density);
    scn.cloud = sample_points(scn.density, cfg.sample_count, derive_seed(cfg.rng_seed, 0));
    scn.theta2 = cfg.theta2;

    const int K = scn.num_coop();
    const int N = cfg.num_slots;
    scn.sensing_error_m.assign(static_cast<std::size_t>(N) * K * M, 0.0);
    scn.phase_rad.assign(static_cast<std::size_t>(N) * K * M, 0.0);

    Rng err_rng(derive_seed(cfg.rng_seed, 1));
    Rng phase_rng(derive_seed(cfg.rng_seed, 2));
    constexpr double kMinEstimatedDistance = 0.1;  // meters
    for (int n = 0; n < N; ++n) {
        for (int k = 0; k < K; ++k) {
            for (int m = 0; m < M; ++m) {
                const double d = distance(scn.stations[m].position, scn.uavs[k].position);
                if (d <= kMinEstimatedDistance) {
                    throw ConfigError("make_scenario: UAV sits on top of a base station");
                }
                double dd = 0.0;
                if (cfg.sensing_error_std_m > 0.0) {
                    do {
                        dd = cfg.sensing_error_std_m * err_rng.normal();
                    } while (d - dd <= kMinEstimatedDistance);
                }
                const std::size_t idx = (static_cast<std::size_t>(n) * K + k) * M + m;
                scn.sensing_error_m[idx] = dd;
                scn.phase_rad[idx] = phase_rng.uniform(0.0, 2.0 * std::numbers::pi);
            }
        }
    }
    return scn;
}

}  // namespace isacot
