#include "bead/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bead/orthopoly.hpp"

namespace bead {

KernelContext::KernelContext(HexagonSpec spec) : spec_(spec) {
    int top = spec_.p + spec_.q + 2;
    lfact_.resize(top + 1);
    for (int n = 0; n <= top; ++n) lfact_[n] = std::lgamma(n + 1.0);
    // exact for the polynomial integrands of the continued psi/phi
    quad_order_ = (spec_.p + spec_.q) / 2 + 2;
}

namespace {

void check_point(const KernelContext& ctx, int t, double x) {
    if (t < 1 || t > ctx.spec().num_lines())
        throw std::domain_error("kernel: line out of range: " + std::to_string(t));
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("kernel: position outside (0,1)");
}

// one entry of the per-line tables: log C_l^{(t)}, degree and parameters of Q_l^{(t)}
struct TableEntry {
    bool zero;
    double logC;
    int deg;
    double a, b;
};

TableEntry table(const KernelContext& ctx, int t, int l) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    TableEntry e{};
    if (t <= p) {
        e.deg = t - l;
        e.a = p - t;
        e.b = q - t;
        if (e.deg < 0) return {true, 0, 0, 0, 0};
        e.logC = ctx.log_factorial(t - l) - ctx.log_factorial(p - l);
    } else if (t <= q) {
        e.deg = p - l;
        e.a = t - p;
        e.b = q - t;
        e.logC = ctx.log_factorial(q - l) - ctx.log_factorial(p + q - t - l);
    } else {
        e.deg = p + q - t - l;
        e.a = t - p;
        e.b = t - q;
        if (e.deg < 0) return {true, 0, 0, 0, 0};
        e.logC = ctx.log_factorial(t - l) - ctx.log_factorial(p - l);
    }
    e.zero = false;
    return e;
}

// log|a_s(y)| and its sign
double log_a(const KernelContext& ctx, int s, double y, int& sign) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    sign = 1;
    if (s <= p) {
        if ((p - s) % 2) sign = -1;
        return (p - s) * std::log(y) + (q - s) * std::log1p(-y);
    }
    if (s <= q) return (q - s) * std::log1p(-y);
    return 0.0;
}

double log_b(const KernelContext& ctx, int t, double x, int& sign) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    sign = 1;
    if (t <= p) {
        if ((p - t) % 2) sign = -1;
        return 0.0;
    }
    if (t <= q) return (t - p) * std::log(x);
    return (t - p) * std::log(x) + (t - q) * std::log1p(-x);
}

double fact(const KernelContext& ctx, int n) { return std::exp(ctx.log_factorial(n)); }

}  // namespace

double kernel_w(int s, double y, int t, double x) {
    if (s >= t || !(y < x)) return 0.0;
    int k = t - s - 1;
    return std::pow(x - y, k) / std::tgamma(k + 1.0);
}

double kernel_closed_sum(const KernelContext& ctx, int s, double y, int t, double x) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    int sa, sb;
    double base = log_a(ctx, s, y, sa) + log_b(ctx, t, x, sb);
    int alpha = std::min({p + q - s, t, p});
    double sum = 0.0;
    for (int l = 1; l <= alpha; ++l) {
        TableEntry es = table(ctx, s, l), et = table(ctx, t, l);
        if (es.zero || et.zero) continue;
        double Qs = jacobi_shifted(es.deg, es.a, es.b, y);
        double Qt = jacobi_shifted(et.deg, et.a, et.b, x);
        if (Qs == 0.0 || Qt == 0.0) continue;
        double lg = base + es.logC - et.logC - log_jacobi_norm(et.deg, et.a, et.b) +
                    std::log(std::abs(Qs)) + std::log(std::abs(Qt));
        double sg = sa * sb * (Qs < 0 ? -1 : 1) * (Qt < 0 ? -1 : 1);
        sum += sg * std::exp(lg);
    }
    return sum;
}

double kernel_phi(const KernelContext& ctx, int t, int l, double x) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    if (t <= p) {
        if (l > t) return 0.0;
        double sg = ((p + t) % 2) ? -1.0 : 1.0;
        return sg * std::exp(ctx.log_factorial(p + q - t - l) - ctx.log_factorial(q - l)) *
               jacobi_shifted(t - l, p - t, q - t, x);
    }
    if (t <= q)
        return std::exp(ctx.log_factorial(p - l) - ctx.log_factorial(t - l)) * std::pow(x, t - p) *
               jacobi_shifted(p - l, t - p, q - t, x);
    // (t-q)-fold integral of phi^q from 0
    int k = t - q - 1;
    double kf = fact(ctx, k);
    return integrate([&](double z) { return std::pow(x - z, k) / kf * kernel_phi(ctx, q, l, z); }, 0.0,
                     x, ctx.quad_order());
}

double kernel_psi(const KernelContext& ctx, int s, int l, double y) {
    const int p = ctx.spec().p, q = ctx.spec().q;
    if (s > q) {
        int n = p + q - s - l;
        if (n < 0) return 0.0;
        return std::exp(ctx.log_factorial(q - l) - ctx.log_factorial(n) - log_jacobi_norm(n, s - p, s - q)) *
               jacobi_shifted(n, s - p, s - q, y);
    }
    if (s >= p)
        return std::exp(ctx.log_factorial(q - l) - ctx.log_factorial(q + p - s - l) -
                        log_jacobi_norm(p - l, q - p, 0)) *
               std::pow(1.0 - y, q - s) * jacobi_shifted(p - l, s - p, q - s, y);
    // (p-s)-fold integral of psi^p towards 1
    int k = p - s - 1;
    double kf = fact(ctx, k);
    return integrate([&](double z) { return std::pow(z - y, k) / kf * kernel_psi(ctx, p, l, z); }, y,
                     1.0, ctx.quad_order());
}

double kernel_eval(const KernelContext& ctx, int s, double y, int t, double x) {
    check_point(ctx, s, y);
    check_point(ctx, t, x);
    const int p = ctx.spec().p, q = ctx.spec().q;
    if (s >= t) return kernel_closed_sum(ctx, s, y, t, x);
    if (s >= p && t <= q) return kernel_closed_sum(ctx, s, y, t, x) - kernel_w(s, y, t, x);
    // lines straddling p or q: the closed tables are not the smooth part here
    double v = 0.0;
    for (int l = 1; l <= p; ++l) v += kernel_psi(ctx, s, l, y) * kernel_phi(ctx, t, l, x);
    return v - kernel_w(s, y, t, x);
}

Eigen::MatrixXd kernel_matrix(const KernelContext& ctx, const std::vector<SpacePoint>& pts) {
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd K(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K(i, j) = kernel_eval(ctx, pts[i].line, pts[i].position, pts[j].line, pts[j].position);
    return K;
}

double npoint_correlation(const KernelContext& ctx, const std::vector<SpacePoint>& pts) {
    if (pts.empty()) return 1.0;
    return kernel_matrix(ctx, pts).partialPivLu().determinant();
}

double line_density(const KernelContext& ctx, int t, double x) { return kernel_eval(ctx, t, x, t, x); }

double expected_count(const KernelContext& ctx, int t, int nodes) {
    return integrate([&](double x) { return line_density(ctx, t, x); }, 0.0, 1.0, nodes);
}

}  // namespace bead
