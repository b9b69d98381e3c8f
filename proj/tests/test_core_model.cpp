#include <doctest.h>

#include <algorithm>
#include <random>

#include "bead/core_model.hpp"

using namespace bead;

TEST_CASE("particle counts follow the hexagon profile") {
    HexagonSpec s(2, 3);
    CHECK(s.num_lines() == 4);
    CHECK(particles_per_line(s, 1) == 1);
    CHECK(particles_per_line(s, 2) == 2);
    CHECK(particles_per_line(s, 3) == 2);
    CHECK(particles_per_line(s, 4) == 1);

    HexagonSpec w(4, 12);
    for (int t = 1; t <= w.num_lines(); ++t) {
        int r = particles_per_line(w, t);
        CHECK(r == particles_per_line(w, w.p + w.q - t));
        CHECK(r <= w.p);
    }
    CHECK_THROWS(HexagonSpec(0, 2));
    CHECK_THROWS(HexagonSpec(3, 2));
}

TEST_CASE("line weight") {
    HexagonSpec s(2, 3);
    CHECK(line_weight(s, 1, 0.5) == doctest::Approx(0.125));  // (1-x)^2 x
    CHECK(line_weight(s, 2, 0.3) == doctest::Approx(0.7));
    CHECK(line_weight(s, 4, 0.2) == doctest::Approx(0.8 * 0.04));
    HexagonSpec u(1, 1);
    CHECK(line_weight(u, 1, 0.77) == 1.0);
}

TEST_CASE("interlacing indicator, small examples") {
    HexagonSpec u(1, 1);
    CHECK(interlace_indicator(u, {{{0.4}}}));

    HexagonSpec s(2, 2);
    CHECK(interlace_indicator(s, {{{0.5}, {0.8, 0.2}, {0.6}}}));
    CHECK_FALSE(interlace_indicator(s, {{{0.5}, {0.4, 0.2}, {0.3}}}));
    CHECK_FALSE(interlace_indicator(s, {{{0.5}, {0.8, 0.2}, {0.9}}}));

    // p <= t < q: each particle moves up, below the next one's old place
    HexagonSpec r(1, 3);
    CHECK(interlace_indicator(r, {{{0.1}, {0.3}, {0.5}}}));
    CHECK_FALSE(interlace_indicator(r, {{{0.5}, {0.3}, {0.6}}}));
}

TEST_CASE("wrong cardinality is a structural error") {
    HexagonSpec s(2, 2);
    CHECK_THROWS_AS(interlace_indicator(s, {{{0.5}, {0.8}, {0.6}}}), structure_error);
    CHECK_THROWS_AS(interlace_indicator(s, {{{0.5}, {0.8, 0.2}}}), structure_error);
    CHECK_THROWS_AS(line_marginal_unnormalized(s, 2, {0.1}), structure_error);
}

TEST_CASE("line marginal") {
    HexagonSpec s(2, 3);
    // line 2: (x1 - x2)^2 (1-x1)(1-x2)
    CHECK(line_marginal_unnormalized(s, 2, {0.7, 0.2}) == doctest::Approx(0.25 * 0.3 * 0.8));
    // against the product written out, line 4 of (3,5) has weight x(1-x)
    std::mt19937 g(5);
    std::uniform_real_distribution<double> U(0, 1);
    HexagonSpec w(3, 5);
    for (int k = 0; k < 50; ++k) {
        std::vector<double> v{U(g), U(g), U(g)};
        std::sort(v.rbegin(), v.rend());
        double want = 1;
        for (int i = 0; i < 3; ++i) {
            want *= v[i] * (1 - v[i]);
            for (int j = i + 1; j < 3; ++j) want *= (v[i] - v[j]) * (v[i] - v[j]);
        }
        CHECK(line_marginal_unnormalized(w, 4, v) == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK_THROWS(line_marginal_unnormalized(w, 4, {0.2, 0.5, 0.1}));
}

TEST_CASE("reflection t -> p+q-t, x -> 1-x maps admissible to admissible") {
    HexagonSpec s(2, 3);
    std::mt19937 g(11);
    std::uniform_real_distribution<double> U(0, 1);
    int admissible = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        BeadConfiguration c;
        for (int t = 1; t <= s.num_lines(); ++t) {
            std::vector<double> v(particles_per_line(s, t));
            for (auto& x : v) x = U(g);
            std::sort(v.rbegin(), v.rend());
            c.lines.push_back(v);
        }
        BeadConfiguration r;
        for (int t = s.num_lines(); t >= 1; --t) {
            std::vector<double> v;
            for (double x : c.lines[t - 1]) v.push_back(1 - x);
            std::sort(v.rbegin(), v.rend());
            r.lines.push_back(v);
        }
        bool a = interlace_indicator(s, c);
        admissible += a;
        CHECK(a == interlace_indicator(s, r));
    }
    CHECK(admissible > 0);
}
