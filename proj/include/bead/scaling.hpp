#pragma once

#include <utility>
#include <vector>

namespace bead {

std::pair<double, double> support_interval(double k, double S);

// (a,b) exponent rates of the single-line Jacobi weight for the region of S
std::pair<double, double> region_parameters(double k, double S);

// endpoints from the exponent rates alone
double support_sum(double a, double b);
double support_spread(double a, double b);

double global_density(double k, double S, double y);

struct ScalingContext {
    double k, S;
    double c, d;      // support
    double X_S, u_S;  // midpoint and density there
    double nu;
    double A;         // printed form e^{pi nu}
    double log_gauge; // log of the exponential prefactor that actually matches finite p
    double B_printed; // with the factor (2-k-S)
    double B_alt;     // with the factor (2+k-S)
};

ScalingContext scaling_context(double k, double S);

// K*(s0,Y;t0,X)
double bulk_kernel(double nu, int s0, double Y, int t0, double X);

// J_gamma(s0,Y;t0,X)
double boutillier_kernel(double gamma, int s0, double Y, int t0, double X);

double gamma_parameter(double k, double S, bool reflected = false);

struct BulkProbePoint {
    int s0, t0;
    double X, Y;
};

struct BulkProbeRow {
    BulkProbePoint pt;
    double scaled_finite;  // prefactor-normalised finite kernel
    double limit;          // K*
    double error;
};

struct BulkProbeResult {
    int p, q, line;
    double B_used;
    double sup_error;
    double same_line_error;   // max over rows with s0 == t0, against the sine kernel
    std::vector<BulkProbeRow> rows;
};

// finite kernel at lines round(pS)+s0, round(pS)+t0, zoomed to unit spacing around X_S;
// divided by exp(log_gauge (X-Y)) (B p)^{s0-t0}
BulkProbeResult bulk_convergence_probe(double k, double S, int p, const std::vector<BulkProbePoint>& pts,
                                       double B);

double sine_kernel(double d);

}  // namespace bead
