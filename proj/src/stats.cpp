#include "bead/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <stdexcept>

namespace bead {

HistogramTally::HistogramTally(int line, int bins)
    : line_(line), bins_(bins), sum_(bins, 0.0), sumsq_(bins, 0.0), scratch_(bins, 0) {
    if (bins < 1) throw std::domain_error("histogram: bins must be >= 1");
}

void HistogramTally::add(const BeadConfiguration& c) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (double x : c.lines.at(line_ - 1)) {
        int b = std::clamp(static_cast<int>(x * bins_), 0, bins_ - 1);
        ++scratch_[b];
    }
    for (int b = 0; b < bins_; ++b) {
        sum_[b] += scratch_[b];
        sumsq_[b] += double(scratch_[b]) * scratch_[b];
    }
    ++n_;
}

void HistogramTally::merge(const HistogramTally& o) {
    if (o.line_ != line_ || o.bins_ != bins_) throw std::invalid_argument("histogram merge: shape mismatch");
    for (int b = 0; b < bins_; ++b) {
        sum_[b] += o.sum_[b];
        sumsq_[b] += o.sumsq_[b];
    }
    n_ += o.n_;
}

Histogram HistogramTally::finish() const {
    if (n_ == 0) throw std::domain_error("histogram: no configurations");
    Histogram h;
    h.line = line_;
    h.configs = n_;
    h.density.resize(bins_);
    h.stderr_.resize(bins_);
    const double n = static_cast<double>(n_), inv_w = bins_;
    for (int b = 0; b < bins_; ++b) {
        double mean = sum_[b] / n;
        double var = n > 1 ? std::max(0.0, (sumsq_[b] - n * mean * mean) / (n - 1)) : 0.0;
        h.density[b] = mean * inv_w;
        h.stderr_[b] = std::sqrt(var / n) * inv_w;
    }
    return h;
}

Histogram empirical_line_density(const std::vector<BeadConfiguration>& configs, int t, int bins) {
    HistogramTally tally(t, bins);
    for (const auto& c : configs) tally.add(c);
    return tally.finish();
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::domain_error("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double F = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - F, F - i / n});
    }
    return d;
}

double beta_cdf(double p, double q, double x) {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    return boost::math::ibeta(p, q, x);
}

namespace {
int count_in(const std::vector<double>& xs, double lo, double hi) {
    int c = 0;
    for (double x : xs) c += (x >= lo && x < hi);
    return c;
}

Estimate mean_se(const std::vector<double>& v) {
    Estimate e;
    if (v.empty()) throw std::domain_error("estimate: no configurations");
    double n = static_cast<double>(v.size()), s = 0, ss = 0;
    for (double x : v) {
        s += x;
        ss += x * x;
    }
    e.mean = s / n;
    e.stderr_ = n > 1 ? std::sqrt(std::max(0.0, (ss - n * e.mean * e.mean) / (n - 1)) / n) : 0.0;
    return e;
}
}  // namespace

Estimate pair_correlation_estimate(const std::vector<BeadConfiguration>& configs, const Cell& A, const Cell& B) {
    bool same = A.line == B.line && A.lo == B.lo && A.hi == B.hi;
    if (!same && A.line == B.line && A.lo < B.hi && B.lo < A.hi)
        throw std::domain_error("pair_correlation_estimate: overlapping cells on one line");
    std::vector<double> v;
    v.reserve(configs.size());
    for (const auto& c : configs) {
        double na = count_in(c.lines.at(A.line - 1), A.lo, A.hi);
        double nb = same ? na - 1 : count_in(c.lines.at(B.line - 1), B.lo, B.hi);
        v.push_back(na * nb);
    }
    return mean_se(v);
}

Estimate cell_count_estimate(const std::vector<BeadConfiguration>& configs, const Cell& A) {
    std::vector<double> v;
    v.reserve(configs.size());
    for (const auto& c : configs) v.push_back(count_in(c.lines.at(A.line - 1), A.lo, A.hi));
    return mean_se(v);
}

}  // namespace bead
