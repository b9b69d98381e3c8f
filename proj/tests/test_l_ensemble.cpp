#include <doctest.h>

#include <cmath>

#include "bead/kernel.hpp"
#include "bead/l_ensemble.hpp"

using namespace bead;

TEST_CASE("grid") {
    CHECK(grid_point(0, 4) == doctest::Approx(0.125));
    CHECK(grid_point(3, 4) == doctest::Approx(0.875));
    CHECK(snap_to_grid(0.27, 10) == 2);
    CHECK(snap_to_grid(0.0, 10) == 0);
    CHECK(snap_to_grid(1.0, 10) == 9);
}

TEST_CASE("single particle: density times weight") {
    for (int m : {5, 40}) {
        DiscreteKernel K(HexagonSpec(1, 1), m);
        for (int i = 0; i < m; ++i) CHECK(K(1, i, 1, i) == doctest::Approx(1.0 / m));
    }
}

TEST_CASE("(1,2) diagonal near 0.25") {
    const int m = 100;
    DiscreteKernel K(HexagonSpec(1, 2), m);
    int i = snap_to_grid(0.25, m);
    CHECK(K(1, i, 1, i) == doctest::Approx(1.5 / m).epsilon(0.02));
}

TEST_CASE("M approaches inverse factorials") {
    HexagonSpec s(2, 3);
    double prev = 1e300;
    for (int m : {25, 50, 100}) {
        DiscreteKernel K(s, m);
        double err = 0;
        for (int j = 1; j <= s.p; ++j)
            for (int k = 1; k <= s.p; ++k)
                err = std::max(err, std::abs(K.M()(j - 1, k - 1) * K.weight() -
                                             1.0 / std::tgamma(s.p + s.q + 2.0 - j - k)));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("line sums of the discrete one-point function") {
    HexagonSpec s(2, 3);
    const int m = 120;
    DiscreteKernel K(s, m);
    CHECK(K.rcond() > 1e-14);
    for (int t = 1; t <= s.num_lines(); ++t) {
        double n = 0;
        for (int i = 0; i < m; ++i) n += K(t, i, t, i);
        CHECK(n == doctest::Approx(particles_per_line(s, t)).epsilon(0.01));
    }
}

namespace {
std::vector<KernelProbe> probes_all_regimes(const HexagonSpec& s) {
    std::vector<KernelProbe> v;
    for (int a = 1; a <= s.num_lines(); ++a)
        for (int b = 1; b <= s.num_lines(); ++b)
            for (auto [y, x] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {0.65, 0.35}, {0.5, 0.52}})
                v.push_back({a, y, b, x});
    return v;
}
}  // namespace

TEST_CASE("refinement: deviation from the continuum kernel shrinks") {
    HexagonSpec s(2, 3);
    auto pr = probes_all_regimes(s);
    double d50 = oracle_deviation(s, 50, pr), d100 = oracle_deviation(s, 100, pr),
           d200 = oracle_deviation(s, 200, pr);
    CHECK(d100 < d50);
    CHECK(d200 < d100);
    CHECK(d200 < 0.02);

    HexagonSpec c(1, 2);
    std::vector<KernelProbe> diag;
    for (double x : {0.1, 0.3, 0.6, 0.9})
        for (int t : {1, 2}) diag.push_back({t, x, t, x});
    CHECK(oracle_deviation(c, 200, diag) < 0.05);
}

TEST_CASE("bad grid") { CHECK_THROWS(DiscreteKernel(HexagonSpec(1, 2), 1)); }
