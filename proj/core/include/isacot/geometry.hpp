#pragma once

#include <cmath>

#include "isacot/errors.hpp"

namespace isacot {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

struct Box3 {
    Vec3 lo;
    Vec3 hi;

    bool contains(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }

    double volume() const { return (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z); }
};

struct DepartureAngles {
    double azimuth = 0.0;    // (-pi, pi]
    double elevation = 0.0;  // [0, pi]
};

/// Departure azimuth/elevation from a UAV towards a base station.
/// azimuth = atan2(dy, dx) with atan2(0, 0) pinned to 0,
/// elevation = arccos(dz / |d|). Throws DegenerateGeometry on coincident
/// points.
DepartureAngles departure_angles(const Vec3& bs, const Vec3& uav);

}  // namespace isacot
