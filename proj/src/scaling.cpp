#include "bead/scaling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bead/core_model.hpp"
#include "bead/kernel.hpp"
#include "bead/orthopoly.hpp"

namespace bead {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

std::pair<double, double> support_interval(double k, double S) {
    if (k < 0 || S < 0 || S > 2 + k) throw std::domain_error("support_interval: need k >= 0, 0 <= S <= 2+k");
    double mid = S * k / ((k + 2) * (k + 2)) + 1.0 / (k + 2);
    double h = 2.0 * std::sqrt(std::max(0.0, S * (k + 1) * (k + 2 - S))) / ((k + 2) * (k + 2));
    return {mid - h, mid + h};
}

std::pair<double, double> region_parameters(double k, double S) {
    if (!(S > 0 && S < 2 + k)) throw std::domain_error("region_parameters: need 0 < S < 2+k");
    if (S <= 1) return {(1 - S) / S, (k + 1 - S) / S};
    if (S <= 1 + k) return {S - 1, k + 1 - S};
    return {(S - 1) / (2 + k - S), (S - k - 1) / (2 + k - S)};
}

double support_sum(double a, double b) {
    double s = 2 + a + b;
    return (s * s + a * a - b * b) / (s * s);
}

double support_spread(double a, double b) {
    double s = 2 + a + b;
    return 4.0 * std::sqrt((1 + a) * (1 + b) * (1 + a + b)) / (s * s);
}

double global_density(double k, double S, double y) {
    auto [c, d] = support_interval(k, S);
    auto [a, b] = region_parameters(k, S);
    if (!(y > c && y < d)) return 0.0;
    return (2 + a + b) / (2 * pi) * std::sqrt((y - c) * (d - y)) / (y * (1 - y));
}

double sine_kernel(double d) {
    if (d == 0) return 1.0;
    return std::sin(pi * d) / (pi * d);
}

ScalingContext scaling_context(double k, double S) {
    if (!(k > 0)) throw std::domain_error("scaling_context: k must be > 0 (nu is infinite at k = 0)");
    if (S < 1 || S > 1 + k) throw std::domain_error("scaling_context: need 1 <= S <= 1+k");
    ScalingContext c{};
    c.k = k;
    c.S = S;
    std::tie(c.c, c.d) = support_interval(k, S);
    c.X_S = 0.5 * (c.c + c.d);
    c.u_S = global_density(k, S, c.X_S);
    c.nu = (2 + k) / k * std::sqrt((1 + k) / (S * (2 + k - S)));
    c.A = std::exp(pi * c.nu);
    c.log_gauge = 2 * pi * ((S - 1) * (1 - c.X_S) + (1 + k - S) * c.X_S) / ((2 + k) * (c.d - c.c));
    double den = 4 + 8 * k + k * k * k * (1 + S) + k * k * (5 + 2 * S - S * S);
    c.B_printed = (2 + k) * (2 + k) * k * S * (2 - k - S) / den;
    c.B_alt = (2 + k) * (2 + k) * k * S * (2 + k - S) / den;
    return c;
}

namespace {

// int_1^inf e^{i w t} (al + i be t)^m dt, m <= -1, be != 0
cplx oscillatory_tail(double w, double al, double be, int m) {
    const cplx I(0, 1);
    auto g = [&](double t) { return std::pow(cplx(al, be * t), m); };
    if (w == 0.0) {
        if (m == -1) {
            // only the real part converges: al / (al^2 + be^2 t^2)
            double re = std::copysign(1.0, al) * (pi / 2 - std::atan(std::abs(be / al))) / std::abs(be);
            if (al == 0) re = 0;
            return {re, 0.0};
        }
        return -std::pow(cplx(al, be), m + 1) / ((m + 1.0) * I * be);
    }
    const double aw = std::abs(w);
    // far enough out that the asymptotic series in 1/(w t) is sharp
    const double T = std::max(2.0, 60.0 / aw);
    cplx s = 0;
    double t = 1.0;
    while (t < T) {
        double h = std::min({0.5 * t, pi / aw, T - t});
        s += cplx(integrate([&](double u) { return (std::exp(I * (w * u)) * g(u)).real(); }, t, t + h, 24),
                  integrate([&](double u) { return (std::exp(I * (w * u)) * g(u)).imag(); }, t, t + h, 24));
        t += h;
    }
    // tail: -e^{iwT} sum_k (-1)^k g^{(k)}(T) / (iw)^{k+1}
    cplx tail = 0, deriv = g(T), fac = 1.0 / (I * w);
    double last = INFINITY;
    for (int kk = 0; kk < 200; ++kk) {
        cplx term = (kk % 2 ? -1.0 : 1.0) * deriv * fac;
        if (std::abs(term) > last) break;  // asymptotic: stop at the smallest term
        last = std::abs(term);
        tail += term;
        if (last < 1e-17 * (1 + std::abs(tail))) break;
        deriv *= double(m - kk) * I * be / cplx(al, be * T);
        fac /= I * w;
    }
    return s - std::exp(I * (w * T)) * tail;
}

}  // namespace

double bulk_kernel(double nu, int s0, double Y, int t0, double X) {
    const int m = s0 - t0;
    const double w = pi * (X - Y);
    const cplx I(0, 1);
    if (m >= 0)
        return integrate([&](double t) { return (std::exp(I * (w * t)) * std::pow(cplx(1, t * nu), m)).real(); },
                         0.0, 1.0, 64 + m);
    return -oscillatory_tail(w, 1.0, nu, m).real();
}

double boutillier_kernel(double gamma, int s0, double Y, int t0, double X) {
    if (!(std::abs(gamma) < 1) || gamma == 0) throw std::domain_error("boutillier_kernel: need 0 < |gamma| < 1");
    const int m = s0 - t0;
    const double w = X - Y, be = std::sqrt(1 - gamma * gamma);
    const cplx I(0, 1);
    // the integrand at -t is the conjugate of that at t
    if (m >= 0)
        return integrate([&](double t) { return (std::exp(I * (w * t)) * std::pow(cplx(gamma, be * t), m)).real(); },
                         0.0, 1.0, 64 + m) / pi;
    return -oscillatory_tail(w, gamma, be, m).real() / pi;
}

double gamma_parameter(double k, double S, bool reflected) {
    double nu = scaling_context(k, S).nu;
    double g = 1.0 / std::sqrt(1 + nu * nu);
    return reflected ? -g : g;
}

BulkProbeResult bulk_convergence_probe(double k, double S, int p, const std::vector<BulkProbePoint>& pts, double B) {
    ScalingContext sc = scaling_context(k, S);
    double qd = p * (1 + k);
    if (std::abs(qd - std::round(qd)) > 1e-9) throw std::domain_error("bulk probe: p(1+k) must be an integer");
    BulkProbeResult res{};
    res.p = p;
    res.q = static_cast<int>(std::round(qd));
    res.line = static_cast<int>(std::lround(p * S));
    res.B_used = B;
    KernelContext ctx(HexagonSpec(p, res.q));
    const double scale = p * sc.u_S;  // r(pS) = p in this region
    for (const auto& pt : pts) {
        double x = sc.X_S + pt.X / scale, y = sc.X_S + pt.Y / scale;
        double kf = kernel_eval(ctx, res.line + pt.s0, y, res.line + pt.t0, x) / scale;
        double norm = std::exp(sc.log_gauge * (pt.X - pt.Y)) * std::pow(B * p, pt.s0 - pt.t0);
        BulkProbeRow row{pt, kf / norm, bulk_kernel(sc.nu, pt.s0, pt.Y, pt.t0, pt.X), 0};
        row.error = std::abs(row.scaled_finite - row.limit);
        res.sup_error = std::max(res.sup_error, row.error);
        if (pt.s0 == pt.t0)
            res.same_line_error = std::max(res.same_line_error, std::abs(row.scaled_finite - sine_kernel(pt.X - pt.Y)));
        res.rows.push_back(row);
    }
    return res;
}

}  // namespace bead
