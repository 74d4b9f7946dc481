#pragma once

#include <span>

#include "isacot/scenario.hpp"

namespace isacot {

/// One sensing link between a target (cooperative or non-cooperative UAV)
/// and its serving station.
struct SensingLink {
    int target = 0;            // j in 0..K, K = non-cooperative
    double gain_mag = 0.0;     // |sigma_{j,m}|
    double power_w = 0.0;      // p_s
    double bandwidth_hz = 0.0; // b_j, the serving station's per-link bandwidth
};

/// Composite sensing channel gain magnitude
/// |sigma| = sqrt(beta0) * lambda / (4 pi d).
double composite_gain(const Vec3& bs, const Vec3& uav, double wavelength, double reference_gain);

struct CrbEstimate {
    double crb_distance = 0.0;  // m^2 proxy
    double crb_angle = 0.0;     // rad^2 proxy
};

/// CRB proxies with the proportionality constant fixed to one:
///   CRB(d)     = 1 / (p_s |sigma|^2 B_rms^2)
///   CRB(theta) = 1 / (p_s |sigma|^2 W_NN)
/// A zero sensing power yields infinite CRBs (target unobservable).
CrbEstimate crb(const SensingLink& link, const SensingParams& params);

/// Localization QoS, linear in the sensing power:
///   rho = w1 p |sigma|^2 b / beta1 + w2 p |sigma|^2 / beta2.
double localization_qos(const SensingLink& link, const SensingParams& params);

/// Sum of rho over all K+1 targets; every target must have a link.
double rho_sum(std::span<const SensingLink> links, const SensingParams& params,
               int expected_targets);

}  // namespace isacot
