#pragma once

#include <complex>
#include <vector>

namespace bead {

// P_n^{(A,B)}(z), three-term recurrence; 0 for n < 0
double jacobi(int n, double A, double B, double z);

// shifted: P~_n^{(a,b)}(x) = P_n^{(a,b)}(1-2x), orthogonal for x^a (1-x)^b on (0,1)
double jacobi_shifted(int n, double a, double b, double x);

double log_jacobi_norm(int n, double a, double b);
double jacobi_norm(int n, double a, double b);

// Gauss-Legendre rule mapped to (0,1); cached per order
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

// integral of f over (lo,hi) with an n-point rule
template <class F>
double integrate(F&& f, double lo, double hi, int n) {
    const GaussRule& g = gauss_legendre(n);
    double h = hi - lo, s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(lo + h * g.x[i]);
    return h * s;
}

struct CIParams {
    double delta, rho, theta, gamma;
};

CIParams ci_params(double a, double b, double z);

// envelope (amplitude) of the leading asymptotic; needs delta < 0
double ci_envelope(int n, double alpha, double beta, double a, double b, double z);

// leading large-n form of P_n^{(alpha + a n, beta + b n)}(z)
double ci_asymptotic(int n, double alpha, double beta, double a, double b, double z);

// classical a = b = 0 form at z = cos(phi)
double szego_asymptotic(int n, double alpha, double beta, double phi);

struct DarbouxData {
    std::complex<double> xi_plus, xi_minus, eta_plus, eta_minus;
    std::complex<double> t_plus, t_minus, B_plus, B_minus;
};

DarbouxData darboux_data(double a, double b, double z, double alpha, double beta);

// coefficient of t^n from the two singularities of the generating function
double darboux_coefficient(int n, const DarbouxData& d);

}  // namespace bead
