#pragma once

#include <stdexcept>
#include <vector>

namespace bead {

struct HexagonSpec {
    int p = 1;
    int q = 1;

    HexagonSpec() = default;
    HexagonSpec(int p_, int q_);

    int num_lines() const { return p + q - 1; }
};

// lines[t-1] holds line t, strictly decreasing
struct BeadConfiguration {
    std::vector<std::vector<double>> lines;
};

// wrong number of particles somewhere; distinct from an indicator of false
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int particles_per_line(const HexagonSpec& spec, int t);

// f_t(x) = (1-x)^|q-t| x^|p-t|
double line_weight(const HexagonSpec& spec, int t, double x);

// interlacing between lines t and t+1, virtual 0/1 implied by the cardinalities
bool interlaces(const HexagonSpec& spec, int t, const std::vector<double>& x,
                const std::vector<double>& y);

bool interlace_indicator(const HexagonSpec& spec, const BeadConfiguration& config);

// Vandermonde squared times prod f_t, no normalisation
double line_marginal_unnormalized(const HexagonSpec& spec, int t, const std::vector<double>& xs);

}  // namespace bead
