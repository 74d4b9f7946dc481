#pragma once

#include <string>
#include <vector>

namespace isacot {

/// Discretized cell association: one station label per sample point, the
/// per-cell masses U_m, the per-UAV serving station (the label of the UAV's
/// own position) and the membership history R_m(q) of Algorithm 1.
struct Partition {
    std::vector<int> point_cell;                     // size n, values 0..M-1
    std::vector<double> mass;                        // size M, sums to K
    std::vector<int> uav_cell;                       // size K+1
    std::vector<std::vector<double>> membership;     // [M][n], values in [0,1]
    std::vector<std::string> warnings;

    int num_cells() const { return static_cast<int>(mass.size()); }
};

/// Transmit powers on the serving links. comm_w[k] is the communication
/// power of cooperative UAV k on its serving station; sens_w[j] the sensing
/// power spent on target j by its serving station. Off-serving (k,m) pairs
/// carry zero power by construction.
struct PowerAllocation {
    std::vector<double> comm_w;  // size K
    std::vector<double> sens_w;  // size K+1
};

struct Solution {
    Partition partition;
    PowerAllocation powers;
};

}  // namespace isacot
