#pragma once

#include <vector>

#include "bead/core_model.hpp"
#include "bead/kernel.hpp"

namespace bead {

// Exact integrals of the uniform interlaced measure. Every marginal is the
// volume of an order polytope, summed over linear extensions of the free
// coordinates. Exponential in p*q; meant for p*q up to about a dozen.
class JointOracle {
public:
    explicit JointOracle(HexagonSpec spec);

    double total_volume() const { return Z_; }

    // volume with the listed coordinates pinned; var index from var_index()
    double volume(const std::vector<std::pair<int, double>>& fixed) const;

    // n-point correlation density, by summing over particle labels
    double correlation(const std::vector<SpacePoint>& pts) const;

    int var_index(int t, int i) const;  // i is 1-based within line t
    int num_vars() const { return static_cast<int>(line_of_.size()); }

private:
    HexagonSpec spec_;
    std::vector<int> line_of_, first_;
    struct Less {
        int u, v;  // var index, or -1 for the constant 0, -2 for the constant 1
    };
    std::vector<Less> cons_;
    double Z_;
};

}  // namespace bead
