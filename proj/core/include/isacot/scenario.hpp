#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isacot/geometry.hpp"

namespace isacot {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct BaseStation {
    int id = 0;
    Vec3 position;
    /// Antenna element offsets relative to the station position (meters).
    std::vector<Vec3> antenna_elements;
    /// Total transmit power budget shared by the station's links (watts).
    double total_power_w = 0.0;
    /// Bandwidth pool of the station (Hz); divided equally among the
    /// cooperative UAVs currently associated with it.
    double bandwidth_hz = 0.0;
};

enum class UavKind { Cooperative, NonCooperative };

struct UavNode {
    int id = 0;
    Vec3 position;
    UavKind kind = UavKind::Cooperative;
};

enum class DensityKind { Uniform, GaussianMixture };

struct GaussianComponent {
    Vec3 mean;
    double stddev = 1.0;  // isotropic
    double weight = 1.0;
};

/// Spatial distribution f(q) of UAV presence over an axis-aligned box.
/// Gaussian mixtures are truncated to the bounds and renormalized per
/// component.
struct SpatialDensity {
    Box3 bounds;
    DensityKind kind = DensityKind::Uniform;
    std::vector<GaussianComponent> components;
};

/// Seeded i.i.d. draw from a SpatialDensity. Every spatial integral in the
/// toolkit is evaluated against one shared cloud so that alternation steps
/// see the same discretization. Each point carries weight 1/size().
struct SamplePointCloud {
    std::vector<Vec3> points;
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(points.size()); }
    double point_weight() const { return 1.0 / static_cast<double>(points.size()); }
};

struct SensingParams {
    double b_rms_hz = 1.0e6;   // effective bandwidth of the sensing receiver
    double w_nn_rad = 0.1;     // null-to-null beam width
    double beta1 = 1.0;        // distance-CRB scale factor
    double beta2 = 1.0;        // angle-CRB scale factor
    double w1 = 1.0;           // distance-term normalization weight
    double w2 = 1.0;           // angle-term normalization weight
};

struct ScenarioConfig {
    int num_stations = 6;         // M
    int num_coop_uavs = 18;       // K
    int num_slots = 1;            // N
    double slot_duration_s = 1.0;
    double carrier_frequency_hz = 30.0e9;
    double noise_psd_w_hz = 1.2589254117941662e-20;  // -169 dBm/Hz
    double p_min_w = 1.0e-3;                         // 0 dBm
    double p_max_w = 10.0;                           // 40 dBm
    double reference_gain = 1.0e-5;                  // -50 dBW, linear
    double theta1 = 0.5;
    /// Rate/QoS scale-mapping weight; non-positive means "resolve
    /// automatically from the initial solution".
    double theta2 = 0.0;
    double rho_min = 0.0;
    double r_min_bps = 0.0;
    std::uint64_t rng_seed = 1;
    int sample_count = 10000;
    double sensing_error_std_m = 0.0;
    /// Path-loss exponent inside the rate SNR; 2 matches the channel
    /// amplitude model, 1 reproduces the printed rate expression verbatim.
    int distance_exponent = 2;
    /// When set, the localization QoS constraint is checked as an upper
    /// bound instead of a floor.
    bool literal_c5 = false;
    /// Fraction of each station's power budget reserved for communication;
    /// the rest feeds the sensing links.
    double comm_budget_fraction = 0.5;
    SensingParams sensing;

    double wavelength() const { return kSpeedOfLight / carrier_frequency_hz; }
};

/// Fully assembled world: constants, actors, the shared sample cloud and the
/// per-link sensing error / phase draws. Immutable once built; safe to share
/// across threads.
struct Scenario {
    ScenarioConfig cfg;
    std::vector<BaseStation> stations;
    std::vector<UavNode> uavs;  // K cooperative first, the non-cooperative last
    SpatialDensity density;
    SamplePointCloud cloud;
    /// Location sensing errors delta_d for communication links, one value per
    /// (slot, cooperative UAV, station), resampled until d_hat > 0.1 m.
    std::vector<double> sensing_error_m;
    /// Phase shifts for communication links, same layout, uniform [0, 2pi).
    std::vector<double> phase_rad;
    /// Resolved rate/QoS mapping weight (theta_2 of the objective).
    double theta2 = 1.0;

    int num_stations() const { return static_cast<int>(stations.size()); }
    int num_coop() const { return static_cast<int>(uavs.size()) - 1; }
    int num_targets() const { return static_cast<int>(uavs.size()); }
    int noncoop_index() const { return num_coop(); }

    double link_sensing_error(int slot, int uav, int station) const {
        return sensing_error_m[(slot * num_coop() + uav) * num_stations() + station];
    }
    double link_phase(int slot, int uav, int station) const {
        return phase_rad[(slot * num_coop() + uav) * num_stations() + station];
    }
};

/// f(q) evaluated at a point (zero outside the bounds). Gaussian components
/// are renormalized over the bounds so the density integrates to one.
double density_pdf(const SpatialDensity& density, const Vec3& q);

/// Draws n i.i.d. points from the density. Identical (density, n, seed)
/// inputs produce bit-identical clouds.
SamplePointCloud sample_points(const SpatialDensity& density, int n, std::uint64_t seed);

/// Average UAV count U_m of one cell from hard per-point labels:
/// U_m = K * (fraction of cloud mass labeled m).
double average_uav_count(const SamplePointCloud& cloud, std::span<const int> labels, int K, int m);

/// Membership-weighted variant; in_cell_weight holds 1 - R_m(q) per point.
double average_uav_count(const SamplePointCloud& cloud, std::span<const double> in_cell_weight,
                         int K);

/// All cell masses at once; sums to K exactly up to rounding.
std::vector<double> cell_masses(const SamplePointCloud& cloud, std::span<const int> labels, int K,
                                int M);

/// Builds the world from explicit actors: draws the shared cloud and the
/// per-link sensing errors / phases. theta2 is copied from the config and
/// may still be unresolved (see resolve_theta2 in aibot.hpp).
Scenario make_scenario(ScenarioConfig cfg, std::vector<BaseStation> stations,
                       std::vector<UavNode> uavs, SpatialDensity density);

/// Uniform planar antenna array in the local x-y plane, nx*ny elements at
/// the given spacing (in wavelengths).
std::vector<Vec3> planar_array(int nx, int ny, double spacing_wavelengths, double wavelength);

}  // namespace isacot
