#include "bead/core_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace bead {

HexagonSpec::HexagonSpec(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < p)
        throw std::domain_error("need 1 <= p <= q, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
}

int particles_per_line(const HexagonSpec& spec, int t) {
    if (t < 1 || t > spec.num_lines())
        throw std::domain_error("line index out of range: " + std::to_string(t));
    if (t <= spec.p) return t;
    if (t <= spec.q) return spec.p;
    return spec.p + spec.q - t;
}

double line_weight(const HexagonSpec& spec, int t, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("line_weight: x outside [0,1]");
    particles_per_line(spec, t);
    return std::pow(1.0 - x, std::abs(spec.q - t)) * std::pow(x, std::abs(spec.p - t));
}

bool interlaces(const HexagonSpec& spec, int t, const std::vector<double>& x,
                const std::vector<double>& y) {
    const std::size_t r = x.size();
    if (t < spec.p) {
        // y has one more: y_{i+1} < x_i < y_i
        for (std::size_t i = 0; i < r; ++i)
            if (!(y[i + 1] < x[i] && x[i] < y[i])) return false;
        return true;
    }
    if (t < spec.q) {
        // same count, virtual 0 below y
        for (std::size_t i = 0; i < r; ++i) {
            if (!(x[i] < y[i])) return false;
            if (i + 1 < r && !(y[i + 1] < x[i])) return false;
        }
        return true;
    }
    // y has one fewer, virtual 0 and 1 around it
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (!(x[i + 1] < y[i] && y[i] < x[i])) return false;
    return true;
}

bool interlace_indicator(const HexagonSpec& spec, const BeadConfiguration& config) {
    const int L = spec.num_lines();
    if (static_cast<int>(config.lines.size()) != L)
        throw structure_error("expected " + std::to_string(L) + " lines");
    for (int t = 1; t <= L; ++t)
        if (static_cast<int>(config.lines[t - 1].size()) != particles_per_line(spec, t))
            throw structure_error("line " + std::to_string(t) + " has wrong particle count");

    for (int t = 1; t <= L; ++t) {
        const auto& xs = config.lines[t - 1];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!(xs[i] > 0.0 && xs[i] < 1.0)) return false;
            if (i + 1 < xs.size() && !(xs[i + 1] < xs[i])) return false;
        }
    }
    for (int t = 1; t < L; ++t)
        if (!interlaces(spec, t, config.lines[t - 1], config.lines[t])) return false;
    return true;
}

double line_marginal_unnormalized(const HexagonSpec& spec, int t, const std::vector<double>& xs) {
    if (static_cast<int>(xs.size()) != particles_per_line(spec, t))
        throw structure_error("line_marginal_unnormalized: wrong particle count");
    double v = 1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0 && xs[i] < 1.0)) throw std::domain_error("position outside (0,1)");
        if (i + 1 < xs.size() && !(xs[i + 1] < xs[i]))
            throw std::domain_error("positions must be strictly decreasing");
        v *= line_weight(spec, t, xs[i]);
        for (std::size_t j = i + 1; j < xs.size(); ++j) v *= (xs[i] - xs[j]) * (xs[i] - xs[j]);
    }
    return v;
}

}  // namespace bead
