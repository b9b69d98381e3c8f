#include "bead/orthopoly.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bead {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

double jacobi(int n, double A, double B, double z) {
    if (n < 0) return 0.0;
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 0.5 * (A - B) + 0.5 * (A + B + 2.0) * z;
    for (int k = 2; k <= n; ++k) {
        double s = 2.0 * k + A + B;
        double a1 = 2.0 * k * (k + A + B) * (s - 2.0);
        double a2 = (s - 1.0) * (A * A - B * B);
        double a3 = (s - 2.0) * (s - 1.0) * s;
        double a4 = 2.0 * (k + A - 1.0) * (k + B - 1.0) * s;
        double p2 = ((a2 + a3 * z) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_shifted(int n, double a, double b, double x) { return jacobi(n, a, b, 1.0 - 2.0 * x); }

double log_jacobi_norm(int n, double a, double b) {
    if (n < 0) throw std::domain_error("jacobi_norm: negative degree");
    return std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + 1.0) -
           std::lgamma(n + a + b + 1.0) - std::log(2.0 * n + a + b + 1.0);
}

double jacobi_norm(int n, double a, double b) { return std::exp(log_jacobi_norm(n, a, b)); }

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    if (n < 1) throw std::domain_error("gauss_legendre: order < 1");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto g = std::make_unique<GaussRule>();
        gsl_integration_glfixed_table* tab = gsl_integration_glfixed_table_alloc(n);
        g->x.resize(n);
        g->w.resize(n);
        for (int i = 0; i < n; ++i) gsl_integration_glfixed_point(0.0, 1.0, i, &g->x[i], &g->w[i], tab);
        gsl_integration_glfixed_table_free(tab);
        slot = std::move(g);
    }
    return *slot;
}

CIParams ci_params(double a, double b, double z) {
    if (!(z > -1.0 && z < 1.0)) throw std::domain_error("ci_params: z must lie in (-1,1)");
    double u = a * (z + 1.0) + b * (z - 1.0);
    CIParams c;
    c.delta = u * u - 4.0 * (a + b + 1.0) * (1.0 - z * z);
    double sq = c.delta < 0 ? std::sqrt(-c.delta) : 0.0;
    c.rho = std::arg(cplx(u, sq));
    c.theta = std::arg(cplx((a + b + 2.0) * z - (3.0 * a + b + 2.0), -sq) /
                       (2.0 * (z - 1.0) * (1.0 + a + b)));
    c.gamma = std::arg(cplx((a + b + 2.0) * z + (a + 3.0 * b + 2.0), -sq) /
                       (2.0 * (z + 1.0) * (1.0 + a + b)));
    return c;
}

double ci_envelope(int n, double alpha, double beta, double a, double b, double z) {
    CIParams c = ci_params(a, b, z);
    if (c.delta >= 0) throw std::domain_error("ci_asymptotic: delta >= 0 (non-oscillatory region)");
    double l = 0.5 * std::log(4.0 / (pi * n * std::sqrt(-c.delta)));
    l += (n * (a + 1.0) / 2 + alpha / 2 + 0.25) * std::log(2.0 * (a + 1.0) / ((1.0 - z) * (1.0 + a + b)));
    l += (n * (b + 1.0) / 2 + beta / 2 + 0.25) * std::log(2.0 * (b + 1.0) / ((1.0 + z) * (1.0 + a + b)));
    l += (n / 2.0 + 0.25) * std::log((1.0 - z * z) * (a + b + 1.0) / 4.0);
    return std::exp(l);
}

double ci_asymptotic(int n, double alpha, double beta, double a, double b, double z) {
    CIParams c = ci_params(a, b, z);
    double env = ci_envelope(n, alpha, beta, a, b, z);
    double ph = (n * (a + 1.0) + alpha + 0.5) * c.theta + (n * (b + 1.0) + beta + 0.5) * c.gamma -
                (n + 0.5) * c.rho + pi / 4;
    return env * std::cos(ph);
}

double szego_asymptotic(int n, double alpha, double beta, double phi) {
    double s = std::sin(phi / 2), c = std::cos(phi / 2);
    double N = n + (alpha + beta + 1.0) / 2;
    return std::pow(s, -alpha - 0.5) * std::pow(c, -beta - 0.5) *
           std::cos(N * phi - (alpha + 0.5) * pi / 2) / std::sqrt(pi * n);
}

namespace {
// r e^{i ang} raised to e, on the branch fixed by ang
cplx polar_pow(double r, double ang, double e) { return std::polar(std::pow(r, e), ang * e); }
}  // namespace

DarbouxData darboux_data(double a, double b, double z, double alpha, double beta) {
    CIParams c = ci_params(a, b, z);
    if (c.delta >= 0) throw std::domain_error("darboux_data: delta >= 0");
    double sq = std::sqrt(-c.delta);
    double r1 = std::sqrt(2.0 * (a + 1.0) / ((1.0 - z) * (1.0 + a + b)));
    double r2 = std::sqrt(2.0 * (b + 1.0) / ((1.0 + z) * (1.0 + a + b)));
    double u = b * (z - 1.0) + a * (z + 1.0);
    const cplx I(0.0, 1.0);

    DarbouxData d;
    for (int sg : {1, -1}) {
        cplx num = u + double(sg) * I * sq;
        cplx xi = num / (2.0 * (1.0 + a + b) * (1.0 - z));
        cplx eta = (z - 1.0) / (z + 1.0) * xi;
        double th = sg * c.theta, ga = sg * c.gamma;
        cplx t = num / ((1.0 + a + b) * (1.0 - z * z)) * polar_pow(r1, th, -1.0 - a) *
                 polar_pow(r2, ga, -1.0 - b);
        cplx A = double(sg) * I * sq / ((1.0 + z) * (1.0 + z) * polar_pow(r1, th, 2.0 + a) *
                                         polar_pow(r2, ga, 2.0 + b));
        cplx B = -double(sg) * polar_pow(r1, th, alpha + 1.0) * polar_pow(r2, ga, beta + 1.0) *
                 (z + 1.0) * std::sqrt(-A) / (I * sq);
        if (sg > 0) {
            d.xi_plus = xi; d.eta_plus = eta; d.t_plus = t; d.B_plus = B;
        } else {
            d.xi_minus = xi; d.eta_minus = eta; d.t_minus = t; d.B_minus = B;
        }
    }
    return d;
}

double darboux_coefficient(int n, const DarbouxData& d) {
    cplx s = d.B_plus * std::pow(d.t_plus, -n - 0.5) + d.B_minus * std::pow(d.t_minus, -n - 0.5);
    return s.real() / std::sqrt(pi * n);
}

}  // namespace bead
