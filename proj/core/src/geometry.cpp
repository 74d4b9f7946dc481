#include "isacot/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace isacot {

DepartureAngles departure_angles(const Vec3& bs, const Vec3& uav) {
    const Vec3 d = bs - uav;
    const double r = norm(d);
    if (r == 0.0) {
        throw DegenerateGeometry("departure_angles: base station and UAV coincide");
    }

    double azimuth = 0.0;
    if (d.x != 0.0 || d.y != 0.0) {
        azimuth = std::atan2(d.y, d.x);
        // atan2 may return -pi for points on the negative x axis; the
        // contract is (-pi, pi].
        if (azimuth <= -std::numbers::pi) azimuth += 2.0 * std::numbers::pi;
    }

    const double ratio = std::clamp(d.z / r, -1.0, 1.0);
    const double elevation = std::acos(ratio);
    return {azimuth, elevation};
}

}  // namespace isacot
