#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

namespace bead {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

struct DiscreteHexagon {
    int n = 1, p = 1, q = 1;

    DiscreteHexagon() = default;
    DiscreteHexagon(int n_, int p_, int q_);

    int num_lines() const { return p + q + 1; }  // t = 0 .. p+q
    int particles(int t) const;
};

// holes on lines 0..p+q, each strictly decreasing, step 2
struct LatticeConfiguration {
    std::vector<std::vector<int>> lines;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (a(t), b(t)): highest and lowest admissible position
std::pair<int, int> boundary_positions(const DiscreteHexagon& hex, int t);

std::vector<LatticeConfiguration> enumerate_configurations(const DiscreteHexagon& hex,
                                                           std::size_t budget = 2000000);

// every admissible tuple on line t (parity, bounds, decreasing), ignoring other lines
std::vector<std::vector<int>> line_tuples(const DiscreteHexagon& hex, int t);

// number of fillings of lines 1..t-1 given line t, t <= p
bigint left_count(const DiscreteHexagon& hex, int t, const std::vector<int>& xs);

rational left_count_constant(int t);  // 1 / (2^{t(t-1)/2} prod_{k<t} k!)
bigint vandermonde(const std::vector<int>& xs);

bigint hahn_weight(const DiscreteHexagon& hex, int t, int x);
bigint hahn_marginal_unnormalized(const DiscreteHexagon& hex, int t, const std::vector<int>& xs);

// configurations restricted to line t, counted per tuple
std::map<std::vector<int>, bigint> bruteforce_line_counts(const DiscreteHexagon& hex, int t);
bigint bruteforce_marginal(const DiscreteHexagon& hex, int t, const std::vector<int>& xs);

struct ProportionalityReport {
    bool holds = false;
    rational constant;  // count / weight, shared by every tuple when holds
    std::size_t tuples = 0;
};

// counts against Hahn weights over all admissible tuples of line t
ProportionalityReport hahn_proportionality(const DiscreteHexagon& hex, int t);

// left_count == c_t * Vandermonde over all admissible tuples of line t <= p
bool left_count_identity(const DiscreteHexagon& hex, int t);

}  // namespace bead
