#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bead/core_model.hpp"

namespace bead {

// midpoint grid on (0,1), m points per line, weight 1/m each
inline double grid_point(int i, int m) { return (i + 0.5) / m; }
int snap_to_grid(double x, int m);

// Correlation kernel of the discretised line system, built from the block
// sums of the L-ensemble without forming L itself.
class DiscreteKernel {
public:
    DiscreteKernel(HexagonSpec spec, int m);

    // K_d between grid point iy on line s and ix on line t (0-based indices)
    double operator()(int s, int iy, int t, int ix) const;

    const Eigen::MatrixXd& M() const { return M_; }
    double weight() const { return 1.0 / m_; }
    int m() const { return m_; }
    double rcond() const { return rcond_; }

private:
    HexagonSpec spec_;
    int m_;
    std::vector<Eigen::MatrixXd> Wp_;   // powers of the weighted step matrix
    std::vector<Eigen::MatrixXd> BD_;   // p x m per line
    std::vector<Eigen::MatrixXd> DC_;   // m x p per line
    Eigen::MatrixXd M_, Minv_;
    double rcond_;
};

DiscreteKernel discrete_kernel(const HexagonSpec& spec, int m);

struct KernelProbe {
    int s;
    double y;
    int t;
    double x;
};

// max |m K_d - K| over probes snapped to the grid
double oracle_deviation(const HexagonSpec& spec, int m, const std::vector<KernelProbe>& probes);

}  // namespace bead
