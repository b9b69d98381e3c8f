#include "bead/l_ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bead/kernel.hpp"

namespace bead {

int snap_to_grid(double x, int m) {
    int i = static_cast<int>(std::floor(x * m));
    return std::clamp(i, 0, m - 1);
}

DiscreteKernel::DiscreteKernel(HexagonSpec spec, int m) : spec_(spec), m_(m) {
    if (m < 2) throw std::domain_error("discrete_kernel: m must be >= 2");
    const int p = spec.p, q = spec.q, L = spec.num_lines();
    const double w = 1.0 / m;

    // W(y,x) = w chi(x>y); the diagonal carries half weight (midpoint rule for the jump)
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        U(i, i) = 0.5 * w;
        for (int j = i + 1; j < m; ++j) U(i, j) = w;
    }
    Wp_.push_back(Eigen::MatrixXd::Identity(m, m));
    for (int k = 1; k < L; ++k) Wp_.push_back(Wp_.back() * U);

    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
    const Eigen::RowVectorXd ones_r = Eigen::RowVectorXd::Ones(m);

    for (int j = 1; j <= L; ++j) {
        Eigen::MatrixXd bd = Eigen::MatrixXd::Zero(p, m);
        for (int k = 1; k <= std::min(j, p); ++k) bd.row(k - 1) = ones_r * Wp_[j - k];
        BD_.push_back(bd);

        // F blocks sit on lines q .. p+q-1, line q+k feeding column p-k-1
        Eigen::MatrixXd dc = Eigen::MatrixXd::Zero(m, p);
        for (int k = 0; k < p; ++k) {
            int line = q + k;
            if (line >= j) dc.col(p - k - 1) = Wp_[line - j] * ones;
        }
        DC_.push_back(dc);
    }

    M_ = Eigen::MatrixXd::Zero(p, p);
    for (int k = 0; k < p; ++k) M_.col(p - k - 1) = BD_[q + k - 1] * ones;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M_);
    rcond_ = lu.rcond();
    if (!(rcond_ > 1e-14)) throw std::runtime_error("discrete_kernel: M is numerically singular");
    Minv_ = lu.inverse();
}

double DiscreteKernel::operator()(int s, int iy, int t, int ix) const {
    double v = DC_[s - 1].row(iy) * Minv_ * BD_[t - 1].col(ix);
    if (s < t) v -= Wp_[t - s](iy, ix);
    return v;
}

DiscreteKernel discrete_kernel(const HexagonSpec& spec, int m) { return DiscreteKernel(spec, m); }

double oracle_deviation(const HexagonSpec& spec, int m, const std::vector<KernelProbe>& probes) {
    DiscreteKernel Kd(spec, m);
    KernelContext ctx(spec);
    double dev = 0.0;
    for (const auto& pr : probes) {
        int iy = snap_to_grid(pr.y, m), ix = snap_to_grid(pr.x, m);
        // the continuum kernel jumps at y = x across lines; nothing to compare there
        if (pr.s != pr.t && iy == ix) continue;
        double exact = kernel_eval(ctx, pr.s, grid_point(iy, m), pr.t, grid_point(ix, m));
        dev = std::max(dev, std::abs(m * Kd(pr.s, iy, pr.t, ix) - exact));
    }
    return dev;
}

}  // namespace bead
