#include "isacot/sensing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "isacot/errors.hpp"

namespace isacot {

double composite_gain(const Vec3& bs, const Vec3& uav, double wavelength, double reference_gain) {
    const double d = distance(bs, uav);
    if (d == 0.0) throw DegenerateGeometry("composite_gain: coincident points");
    return std::sqrt(reference_gain) * wavelength / (4.0 * std::numbers::pi * d);
}

CrbEstimate crb(const SensingLink& link, const SensingParams& params) {
    if (link.power_w <= 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    const double received = link.power_w * link.gain_mag * link.gain_mag;
    return {1.0 / (received * params.b_rms_hz * params.b_rms_hz),
            1.0 / (received * params.w_nn_rad)};
}

double localization_qos(const SensingLink& link, const SensingParams& params) {
    const double received = link.power_w * link.gain_mag * link.gain_mag;
    return params.w1 * received * link.bandwidth_hz / params.beta1 +
           params.w2 * received / params.beta2;
}

double rho_sum(std::span<const SensingLink> links, const SensingParams& params,
               int expected_targets) {
    if (static_cast<int>(links.size()) != expected_targets) {
        throw ConfigError("rho_sum: every target needs a sensing link to its serving station");
    }
    std::vector<bool> seen(static_cast<std::size_t>(expected_targets), false);
    double total = 0.0;
    for (const auto& link : links) {
        if (link.target < 0 || link.target >= expected_targets || seen[link.target]) {
            throw ConfigError("rho_sum: sensing links must cover each target exactly once");
        }
        seen[link.target] = true;
        total += localization_qos(link, params);
    }
    return total;
}

}  // namespace isacot
