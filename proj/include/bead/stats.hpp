#pragma once

#include <functional>
#include <vector>

#include "bead/core_model.hpp"

namespace bead {

// per-configuration density on uniform bins over (0,1)
struct Histogram {
    int line = 0;
    std::vector<double> density;  // mean count per configuration / bin width
    std::vector<double> stderr_;  // standard error of density
    std::size_t configs = 0;

    int bins() const { return static_cast<int>(density.size()); }
    double width() const { return 1.0 / bins(); }
    double center(int i) const { return (i + 0.5) * width(); }
};

// running sums; merge() is associative so workers can tally separately
class HistogramTally {
public:
    HistogramTally(int line, int bins);
    void add(const BeadConfiguration& c);
    void merge(const HistogramTally& o);
    Histogram finish() const;

private:
    int line_, bins_;
    std::size_t n_ = 0;
    std::vector<double> sum_, sumsq_;
    std::vector<int> scratch_;
};

Histogram empirical_line_density(const std::vector<BeadConfiguration>& configs, int t, int bins);

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// regularised incomplete beta I_x(p,q)
double beta_cdf(double p, double q, double x);

struct Cell {
    int line;
    double lo, hi;
};

struct Estimate {
    double mean = 0, stderr_ = 0;
};

// E[N_A N_B] minus the same-particle diagonal when A == B
Estimate pair_correlation_estimate(const std::vector<BeadConfiguration>& configs, const Cell& A, const Cell& B);

Estimate cell_count_estimate(const std::vector<BeadConfiguration>& configs, const Cell& A);

}  // namespace bead
