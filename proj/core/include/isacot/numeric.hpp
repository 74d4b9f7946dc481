#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>

namespace isacot {

/// Kahan compensated accumulator. All reductions over the sample cloud go
/// through this so results are stable to ~1e-15 relative regardless of
/// evaluation order.
class KahanSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline double kahan_sum(std::span<const double> xs) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// dB conversions used by the configuration layer and tests.
inline double dbm_to_watts(double dbm) { return 1.0e-3 * std::pow(10.0, dbm / 10.0); }
inline double dbw_to_linear(double dbw) { return std::pow(10.0, dbw / 10.0); }

}  // namespace isacot
