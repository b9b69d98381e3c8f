#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "bead/orthopoly.hpp"

using namespace bead;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

const double pi = std::acos(-1.0);

cpp_int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    cpp_int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// explicit sum form, integer a,b >= 0
cpp_rational shifted_exact(int n, int a, int b, const cpp_rational& x) {
    if (n < 0) return 0;
    cpp_rational s = 0;
    for (int k = 0; k <= n; ++k) {
        cpp_rational term = cpp_rational(binom(n + a, n - k) * binom(n + b, k));
        for (int i = 0; i < k; ++i) term *= -x;
        for (int i = 0; i < n - k; ++i) term *= (1 - x);
        s += term;
    }
    return s;
}

double angle_diff(double u, double v) { return std::remainder(u - v, 2 * pi); }

}  // namespace

TEST_CASE("jacobi_shifted small cases") {
    CHECK(jacobi_shifted(0, 1.3, 0.2, 0.77) == 1.0);
    CHECK(jacobi_shifted(1, 0, 0, 0.25) == doctest::Approx(0.5));
    CHECK(jacobi_shifted(-1, 1, 1, 0.4) == 0.0);
    CHECK(jacobi_shifted(-3, 0, 2, 0.9) == 0.0);
    CHECK(jacobi_shifted(2, 1, 3, 1 - 0.3) == doctest::Approx(jacobi_shifted(2, 3, 1, 0.3)));
}

TEST_CASE("jacobi_shifted frozen values") {
    CHECK(jacobi_shifted(2, 1, 3, 0.3) == doctest::Approx(-0.78).epsilon(1e-13));
    CHECK(jacobi_shifted(5, 0.5, 2.5, 0.71) == doctest::Approx(1.3739090012999994377).epsilon(1e-13));
    CHECK(jacobi_shifted(7, 3, 0, 0.12) == doctest::Approx(0.29476099670016093792).epsilon(1e-13));
    CHECK(jacobi_shifted(12, 4, 9, 0.55) == doctest::Approx(0.92428402153082340831).epsilon(1e-12));
}

TEST_CASE("recurrence agrees with the exact sum form") {
    for (int n = 0; n <= 10; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int num : {1, 3, 7}) {
                    cpp_rational x(num, 8);
                    double ex = static_cast<double>(shifted_exact(n, a, b, x));
                    double v = jacobi_shifted(n, a, b, num / 8.0);
                    CHECK(v == doctest::Approx(ex).epsilon(1e-12).scale(1.0));
                }
}

TEST_CASE("reflection, exact and floating") {
    for (int n = 0; n <= 9; ++n)
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                cpp_rational x(2, 7);
                cpp_rational lhs = shifted_exact(n, a, b, 1 - x);
                cpp_rational rhs = shifted_exact(n, b, a, x);
                if (n % 2) rhs = -rhs;
                CHECK(lhs == rhs);
                double xf = 0.37;
                double sgn = n % 2 ? -1.0 : 1.0;
                CHECK(jacobi_shifted(n, a, b, 1 - xf) ==
                      doctest::Approx(sgn * jacobi_shifted(n, b, a, xf)).epsilon(1e-12).scale(1.0));
            }
}

TEST_CASE("norms") {
    CHECK(jacobi_norm(0, 0, 0) == doctest::Approx(1.0));
    CHECK(jacobi_norm(1, 0, 0) == doctest::Approx(1.0 / 3));
    CHECK(jacobi_norm(0, 1, 1) == doctest::Approx(1.0 / 6));
    CHECK(std::exp(log_jacobi_norm(3, 2, 5)) == doctest::Approx(jacobi_norm(3, 2, 5)));
    // symmetric in (a,b)
    CHECK(jacobi_norm(4, 1.5, 3) == doctest::Approx(jacobi_norm(4, 3, 1.5)));
}

TEST_CASE("orthogonality on (0,1)") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int j = 0; j <= 8; ++j)
                for (int k = 0; k <= 8; ++k) {
                    double v = integrate(
                        [&](double x) {
                            return std::pow(x, a) * std::pow(1 - x, b) * jacobi_shifted(j, a, b, x) *
                                   jacobi_shifted(k, a, b, x);
                        },
                        0.0, 1.0, 16);
                    double want = j == k ? jacobi_norm(j, a, b) : 0.0;
                    CHECK(std::abs(v - want) < 1e-10);
                }
}

TEST_CASE("derivative identities") {
    const double h = 1e-5;
    for (int n = 0; n <= 6; ++n)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (double x : {0.15, 0.5, 0.83}) {
                    auto f = [&](double u) { return std::pow(u, a) * jacobi_shifted(n, a, b, u); };
                    double fd = (f(x + h) - f(x - h)) / (2 * h);
                    double id = (n + a) * std::pow(x, a - 1) * jacobi_shifted(n, a - 1, b + 1, x);
                    CHECK(std::abs(fd - id) < 1e-6 * std::max(1.0, std::abs(id)));

                    auto g = [&](double u) { return std::pow(1 - u, b) * jacobi_shifted(n, a, b, u); };
                    fd = (g(x + h) - g(x - h)) / (2 * h);
                    id = -(n + b) * std::pow(1 - x, b - 1) * jacobi_shifted(n, a + 1, b - 1, x);
                    CHECK(std::abs(fd - id) < 1e-6 * std::max(1.0, std::abs(id)));
                }
}

TEST_CASE("Chen-Ismail parameters") {
    CIParams c = ci_params(0, 0, 0);
    CHECK(c.delta == doctest::Approx(-4));
    CHECK(c.rho == doctest::Approx(pi / 2));
    CHECK(c.theta == doctest::Approx(pi / 4));
    CHECK(c.gamma == doctest::Approx(-pi / 4));

    for (double phi : {0.3, 1.1, 2.0, 2.9}) {
        CIParams d = ci_params(0, 0, std::cos(phi));
        CHECK(d.delta == doctest::Approx(-4 * std::sin(phi) * std::sin(phi)));
        CHECK(d.rho == doctest::Approx(pi / 2));
        CHECK(d.theta == doctest::Approx(pi / 2 - phi / 2));
        CHECK(d.gamma == doctest::Approx(-phi / 2));
    }

    // delta written out by hand
    double a = 1, b = 2, z = 0.1;
    double u = 1 * 1.1 + 2 * (-0.9);
    CHECK(ci_params(a, b, z).delta == doctest::Approx(u * u - 4 * 4 * (1 - 0.01)));

    CHECK_THROWS_AS(ci_params(0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ci_params(0, 0, -1.0), std::domain_error);
}

TEST_CASE("Chen-Ismail mapping (z,a,b) -> (-z,b,a)") {
    std::mt19937 g(3);
    std::uniform_real_distribution<double> A(0, 3), Z(-0.95, 0.95);
    int tested = 0;
    while (tested < 20) {
        double a = A(g), b = A(g), z = Z(g);
        CIParams c = ci_params(a, b, z);
        if (c.delta >= 0) continue;
        ++tested;
        CIParams m = ci_params(b, a, -z);
        CHECK(m.delta == doctest::Approx(c.delta));
        CHECK(angle_diff(m.rho, pi - c.rho) == doctest::Approx(0).scale(1));
        CHECK(angle_diff(m.theta, -c.gamma) == doctest::Approx(0).scale(1));
        CHECK(angle_diff(m.gamma, -c.theta) == doctest::Approx(0).scale(1));
        for (double ang : {c.rho, c.theta, c.gamma}) {
            CHECK(ang > -pi);
            CHECK(ang <= pi);
        }
    }
}

TEST_CASE("asymptotics: Szego reduction and decay") {
    for (double phi : {0.4, 1.2, 2.5})
        for (int n : {10, 40}) {
            double env = ci_envelope(n, 0.5, 1.0, 0, 0, std::cos(phi));
            CHECK(std::abs(ci_asymptotic(n, 0.5, 1.0, 0, 0, std::cos(phi)) -
                           szego_asymptotic(n, 0.5, 1.0, phi)) < 1e-10 * env);
        }

    double e50 = std::abs(ci_asymptotic(50, 0, 0, 0, 0, 0) - jacobi(50, 0, 0, 0)) / std::abs(jacobi(50, 0, 0, 0));
    double e100 =
        std::abs(ci_asymptotic(100, 0, 0, 0, 0, 0) - jacobi(100, 0, 0, 0)) / std::abs(jacobi(100, 0, 0, 0));
    CHECK(e50 <= 0.05);
    CHECK(e100 <= 0.6 * e50);

    CHECK_THROWS_AS(ci_asymptotic(10, 0, 0, 5, 0, 0.9), std::domain_error);
}

TEST_CASE("Darboux data") {
    DarbouxData d = darboux_data(0, 0, 0, 0, 0);
    CHECK(std::abs(d.xi_plus - std::complex<double>(0, 1)) < 1e-14);
    CHECK(std::abs(d.xi_minus - std::complex<double>(0, -1)) < 1e-14);
    CHECK(std::abs(d.eta_plus - std::complex<double>(0, -1)) < 1e-14);
    CHECK(std::abs(d.eta_minus - std::complex<double>(0, 1)) < 1e-14);
    CHECK(std::abs(d.t_plus - std::complex<double>(0, 1)) < 1e-14);
    CHECK(std::abs(d.t_minus - std::complex<double>(0, -1)) < 1e-14);

    double a = 1, b = 2, z = 0.3;
    DarbouxData e = darboux_data(a, b, z, 0.5, 0.5);
    CIParams c = ci_params(a, b, z);
    CHECK(std::norm(1.0 + e.xi_plus) == doctest::Approx(2 * (a + 1) / ((1 - z) * (1 + a + b))));
    CHECK(std::norm(1.0 + e.eta_plus) == doctest::Approx(2 * (b + 1) / ((1 + z) * (1 + a + b))));
    CHECK(std::arg(1.0 + e.xi_plus) == doctest::Approx(c.theta));
    CHECK(std::arg(1.0 + e.xi_minus) == doctest::Approx(-c.theta));
    CHECK(std::arg(1.0 + e.eta_plus) == doctest::Approx(c.gamma));
    CHECK(std::abs(e.eta_plus - (z - 1) / (z + 1) * e.xi_plus) < 1e-15);
    CHECK(std::abs(e.eta_minus - (z - 1) / (z + 1) * e.xi_minus) < 1e-15);

    DarbouxData f = darboux_data(0.5, 0.5, 0.2, 0, 0);
    double env = ci_envelope(30, 0, 0, 0.5, 0.5, 0.2);
    CHECK(std::abs(darboux_coefficient(30, f) - ci_asymptotic(30, 0, 0, 0.5, 0.5, 0.2)) < 1e-10 * env);
}
