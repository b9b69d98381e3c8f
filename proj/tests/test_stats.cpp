#include <doctest.h>

#include <cmath>

#include "bead/sampler.hpp"
#include "bead/stats.hpp"

using namespace bead;

TEST_CASE("KS statistic, hand cases") {
    auto U = [](double x) { return x; };
    CHECK(ks_statistic({0.5}, U) == doctest::Approx(0.5));
    CHECK(ks_statistic({0.25, 0.75}, U) == doctest::Approx(0.25));
    CHECK(ks_statistic({0.75, 0.25}, U) == doctest::Approx(0.25));
}

TEST_CASE("incomplete beta") {
    CHECK(beta_cdf(1, 1, 0.3) == doctest::Approx(0.3));
    CHECK(beta_cdf(2, 1, 0.5) == doctest::Approx(0.25));
    CHECK(beta_cdf(4, 12, 0.0) == 0.0);
    CHECK(beta_cdf(4, 12, 1.0) == doctest::Approx(1.0));
    CHECK(beta_cdf(3, 5, 0.4) == doctest::Approx(1 - beta_cdf(5, 3, 0.6)));
}

TEST_CASE("histogram mass equals the line count") {
    HexagonSpec s(3, 5);
    auto cs = sample_many(s, 500, 3);
    for (int t = 1; t <= s.num_lines(); ++t) {
        Histogram h = empirical_line_density(cs, t, 16);
        double m = 0;
        for (double d : h.density) m += d * h.width();
        CHECK(m == doctest::Approx(particles_per_line(s, t)));
        CHECK(h.configs == 500);
    }
}

TEST_CASE("tallies merge") {
    HexagonSpec s(2, 3);
    auto cs = sample_many(s, 300, 8);
    HistogramTally all(2, 8), a(2, 8), b(2, 8);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        all.add(cs[i]);
        (i % 2 ? a : b).add(cs[i]);
    }
    a.merge(b);
    Histogram h1 = all.finish(), h2 = a.finish();
    for (int i = 0; i < 8; ++i) {
        CHECK(h1.density[i] == doctest::Approx(h2.density[i]));
        CHECK(h1.stderr_[i] == doctest::Approx(h2.stderr_[i]));
    }
}

TEST_CASE("pair counts over a whole line") {
    HexagonSpec s(3, 5);
    auto cs = sample_many(s, 200, 4);
    for (int t : {1, 2, 4}) {
        Cell line{t, 0.0, 1.0};
        int r = particles_per_line(s, t);
        Estimate e = pair_correlation_estimate(cs, line, line);
        CHECK(e.mean == doctest::Approx(r * (r - 1)));
        CHECK(e.stderr_ == doctest::Approx(0.0).scale(1));
        CHECK(cell_count_estimate(cs, line).mean == doctest::Approx(r));
    }
    // disjoint cells on the same line: no diagonal to remove
    Estimate d = pair_correlation_estimate(cs, {4, 0, 0.5}, {4, 0.5, 1});
    Estimate lo = cell_count_estimate(cs, {4, 0, 0.5});
    CHECK(d.mean >= 0);
    CHECK(d.mean <= 3 * lo.mean + 1e-12);
}
