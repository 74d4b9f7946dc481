#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "isacot/scenario.hpp"

namespace isacot {

using ComplexVector = std::vector<std::complex<double>>;

/// Antenna response vector: one unit-magnitude phase term per element,
/// entry i = exp(j * elements[i] . kappa(az, el)) with the wave vector
/// kappa = (2pi/lambda)(sin el cos az, sin el sin az, cos el).
struct AntennaResponse {
    ComplexVector v;
    int size() const { return static_cast<int>(v.size()); }
};

AntennaResponse antenna_response(std::span<const Vec3> elements, double azimuth, double elevation,
                                 double wavelength);

/// |a^H w|^2 beamforming gain.
double beamforming_gain(const AntennaResponse& response, const ComplexVector& beamformer);

struct LinkGeometry {
    double true_distance = 0.0;       // d
    double estimated_distance = 0.0;  // d_hat = d - delta_d, > 0
    double sensing_error = 0.0;       // delta_d
    double azimuth = 0.0;
    double elevation = 0.0;
    double phase = 0.0;
};

struct CommLink {
    LinkGeometry geometry;
    AntennaResponse response;  // estimated response alpha_hat
    ComplexVector beamformer;  // unit norm
    double bandwidth_hz = 0.0;
    bool associated = true;
};

/// Assembles a communication link with the matched beamformer
/// w = alpha_hat / |alpha_hat|.
CommLink make_comm_link(const BaseStation& bs, const Vec3& uav_position, double sensing_error,
                        double phase, double bandwidth_hz, double wavelength);

/// Estimated channel h_hat = lambda e^{j phi} / (4 pi (d_hat + delta_d)) * alpha_hat.
/// Note d_hat + delta_d equals the true distance.
ComplexVector estimated_channel(const CommLink& link, double wavelength);

/// Channel error Delta h = lambda e^{j phi} alpha_hat / (4 pi delta_d).
/// Returns nullopt when delta_d == 0 (perfect sensing; the error channel
/// degenerates to zero and callers substitute the error-free channel).
std::optional<ComplexVector> channel_error(const CommLink& link, double wavelength);

/// SNR of one link:
///   a * p * lambda^2 |alpha_hat^H w|^2 / (16 pi^2 N0 b (d_hat+delta_d)^e)
/// with noise power N0*b and e the configured distance exponent.
double link_snr(const CommLink& link, double p_comm_w, double noise_psd_w_hz, double wavelength,
                int distance_exponent);

/// SNR per watt of transmit power (the water-filling gain g_k).
double unit_power_snr_gain(const CommLink& link, double noise_psd_w_hz, double wavelength,
                           int distance_exponent);

struct RateReport {
    std::vector<double> per_link_bps;
    double sum_bps = 0.0;
};

/// Shannon rates b*log2(1+snr) per link and their sum.
RateReport sum_rate(std::span<const CommLink> links, std::span<const double> powers_w,
                    double noise_psd_w_hz, double wavelength, int distance_exponent);

/// Round-trip-free echo delay ||B - U|| / c.
double echo_delay(const Vec3& bs, const Vec3& uav);

}  // namespace isacot
