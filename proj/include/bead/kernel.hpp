#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bead/core_model.hpp"

namespace bead {

struct SpacePoint {
    int line;
    double position;
};

class KernelContext {
public:
    explicit KernelContext(HexagonSpec spec);

    const HexagonSpec& spec() const { return spec_; }
    double log_factorial(int n) const { return lfact_.at(n); }
    int quad_order() const { return quad_order_; }

private:
    HexagonSpec spec_;
    std::vector<double> lfact_;
    int quad_order_;
};

// K(s,y;t,x)
double kernel_eval(const KernelContext& ctx, int s, double y, int t, double x);

// a_s(y) b_t(x) sum_l (C^s/C^t) Q^s(y) Q^t(x) / N^t, without the chi(y<x) term
double kernel_closed_sum(const KernelContext& ctx, int s, double y, int t, double x);

// factorised pieces: sum_l psi_l^s(y) phi_l^t(x) is the smooth part for any s,t
double kernel_psi(const KernelContext& ctx, int s, int l, double y);
double kernel_phi(const KernelContext& ctx, int t, int l, double x);

// chi(y<x) (x-y)^{t-s-1}/(t-s-1)!  for s<t, else 0
double kernel_w(int s, double y, int t, double x);

Eigen::MatrixXd kernel_matrix(const KernelContext& ctx, const std::vector<SpacePoint>& pts);
double npoint_correlation(const KernelContext& ctx, const std::vector<SpacePoint>& pts);

double line_density(const KernelContext& ctx, int t, double x);
double expected_count(const KernelContext& ctx, int t, int nodes = 400);

}  // namespace bead
