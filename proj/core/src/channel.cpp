#include "isacot/channel.hpp"

#include <cmath>
#include <numbers>

namespace isacot {

namespace {
constexpr double kPi = std::numbers::pi;
}

AntennaResponse antenna_response(std::span<const Vec3> elements, double azimuth, double elevation,
                                 double wavelength) {
    const double se = std::sin(elevation);
    const Vec3 kappa = (2.0 * kPi / wavelength) *
                       Vec3{se * std::cos(azimuth), se * std::sin(azimuth), std::cos(elevation)};
    AntennaResponse response;
    response.v.reserve(elements.size());
    for (const Vec3& e : elements) {
        const double phase = dot(e, kappa);
        response.v.emplace_back(std::cos(phase), std::sin(phase));
    }
    return response;
}

double beamforming_gain(const AntennaResponse& response, const ComplexVector& beamformer) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < response.v.size(); ++i) {
        acc += std::conj(response.v[i]) * beamformer[i];
    }
    return std::norm(acc);
}

CommLink make_comm_link(const BaseStation& bs, const Vec3& uav_position, double sensing_error,
                        double phase, double bandwidth_hz, double wavelength) {
    const double d = distance(bs.position, uav_position);
    if (d <= 0.0) throw DegenerateGeometry("make_comm_link: zero-length link");
    const double d_hat = d - sensing_error;
    if (d_hat <= 0.0) throw DegenerateGeometry("make_comm_link: estimated distance must be > 0");

    CommLink link;
    const auto angles = departure_angles(bs.position, uav_position);
    link.geometry = {d, d_hat, sensing_error, angles.azimuth, angles.elevation, phase};
    link.response = antenna_response(bs.antenna_elements, angles.azimuth, angles.elevation,
                                     wavelength);
    const double inv_norm = 1.0 / std::sqrt(static_cast<double>(link.response.size()));
    link.beamformer.reserve(link.response.v.size());
    for (const auto& a : link.response.v) link.beamformer.push_back(inv_norm * a);
    link.bandwidth_hz = bandwidth_hz;
    return link;
}

ComplexVector estimated_channel(const CommLink& link, double wavelength) {
    const double d = link.geometry.estimated_distance + link.geometry.sensing_error;
    if (d <= 0.0) throw DegenerateGeometry("estimated_channel: nonpositive effective distance");
    const std::complex<double> factor =
        wavelength * std::polar(1.0, link.geometry.phase) / (4.0 * kPi * d);
    ComplexVector h;
    h.reserve(link.response.v.size());
    for (const auto& a : link.response.v) h.push_back(factor * a);
    return h;
}

std::optional<ComplexVector> channel_error(const CommLink& link, double wavelength) {
    const double dd = link.geometry.sensing_error;
    if (dd == 0.0) return std::nullopt;
    const std::complex<double> factor =
        wavelength * std::polar(1.0, link.geometry.phase) / (4.0 * kPi * dd);
    ComplexVector h;
    h.reserve(link.response.v.size());
    for (const auto& a : link.response.v) h.push_back(factor * a);
    return h;
}

double link_snr(const CommLink& link, double p_comm_w, double noise_psd_w_hz, double wavelength,
                int distance_exponent) {
    if (!link.associated || p_comm_w <= 0.0) return 0.0;
    return p_comm_w * unit_power_snr_gain(link, noise_psd_w_hz, wavelength, distance_exponent);
}

double unit_power_snr_gain(const CommLink& link, double noise_psd_w_hz, double wavelength,
                           int distance_exponent) {
    if (!link.associated) return 0.0;
    const double d = link.geometry.estimated_distance + link.geometry.sensing_error;
    const double dist_term = distance_exponent == 1 ? d : d * d;
    const double gain = beamforming_gain(link.response, link.beamformer);
    return wavelength * wavelength * gain /
           (16.0 * kPi * kPi * noise_psd_w_hz * link.bandwidth_hz * dist_term);
}

RateReport sum_rate(std::span<const CommLink> links, std::span<const double> powers_w,
                    double noise_psd_w_hz, double wavelength, int distance_exponent) {
    RateReport report;
    report.per_link_bps.reserve(links.size());
    for (std::size_t i = 0; i < links.size(); ++i) {
        const double snr =
            link_snr(links[i], powers_w[i], noise_psd_w_hz, wavelength, distance_exponent);
        const double rate = links[i].bandwidth_hz * std::log2(1.0 + snr);
        report.per_link_bps.push_back(rate);
        report.sum_bps += rate;
    }
    return report;
}

double echo_delay(const Vec3& bs, const Vec3& uav) {
    const double d = distance(bs, uav);
    if (d == 0.0) throw DegenerateGeometry("echo_delay: coincident points");
    return d / kSpeedOfLight;
}

}  // namespace isacot
