#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsinfo/gauss_jacobi.hpp"
#include "hsinfo/special_functions.hpp"

using namespace hsinfo;

TEST_CASE("log_gamma anchors") {
    CHECK(log_gamma(11.0) == doctest::Approx(15.1044125730755152952).epsilon(1e-15));
    CHECK(log_gamma(0.5) == doctest::Approx(0.572364942924700087072).epsilon(1e-15));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("pochhammer tracks sign and zero") {
    const LogSigned a = pochhammer_logsigned(-3.0, 2);  // (-3)(-2) = 6
    CHECK(a.sign == 1);
    CHECK(a.value() == doctest::Approx(6.0).epsilon(1e-14));
    const LogSigned b = pochhammer_logsigned(-0.5, 1);
    CHECK(b.sign == -1);
    CHECK(b.value() == doctest::Approx(-0.5));
    CHECK(pochhammer_logsigned(-2.0, 3).is_zero());
    CHECK(pochhammer_logsigned(-2.0, 2).value() == doctest::Approx(2.0));
    CHECK(pochhammer_logsigned(5.0, 0).value() == 1.0);
    CHECK(pochhammer_logsigned(1.0, 10).log_magnitude == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
}

TEST_CASE("LogSigned arithmetic") {
    const LogSigned x = LogSigned::from_value(-4.0);
    const LogSigned y = LogSigned::from_value(0.5);
    CHECK((x * y).value() == doctest::Approx(-2.0));
    CHECK((x / y).value() == doctest::Approx(-8.0));
    CHECK(y.pow(3.0).value() == doctest::Approx(0.125));
    CHECK(x.inverse().value() == doctest::Approx(-0.25));
    CHECK(LogSigned::from_value(0.0).is_zero());
    CHECK_THROWS_AS(LogSigned::zero().inverse(), DomainError);
    CHECK(LogSigned::from_log(1000.0).value() == HUGE_VAL);
}

TEST_CASE("jacobi_norm") {
    CHECK(jacobi_norm(0, 0.0, 0.0).value() == doctest::Approx(std::sqrt(2.0)));
    CHECK(jacobi_norm(1, 0.0, 0.0).value() == doctest::Approx(std::sqrt(2.0 / 3.0)));
    // Chebyshev first kind, P_n^{(-1/2,-1/2)} = T_n * (2n)!/(2^{2n} n!^2): d_0^2 = pi
    CHECK(jacobi_norm(0, -0.5, -0.5).value() == doctest::Approx(std::sqrt(std::numbers::pi)));
    CHECK_THROWS(jacobi_norm(-1, 0.0, 0.0));
}

TEST_CASE("PolySpec validation") {
    CHECK_THROWS_AS(PolySpec(-1, 1.0), DomainError);
    CHECK_THROWS_AS(PolySpec(2, -0.5), DomainError);
    CHECK_NOTHROW(PolySpec(0, -0.25));
}

TEST_CASE("orthonormal Gegenbauer: Legendre case") {
    const PolySpec p(2, 0.5);
    const double x = 0.2;
    const double expected = std::sqrt(2.5) * (3 * x * x - 1) / 2;
    CHECK(gegenbauer_orthonormal(p, x) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(gegenbauer_orthonormal_derivative(p, x) == doctest::Approx(0.948683298050513852262).epsilon(1e-14));
    const PolyValue v = gegenbauer_orthonormal_with_derivative(p, x);
    CHECK(v.value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(v.derivative == doctest::Approx(0.948683298050513852262).epsilon(1e-14));
}

TEST_CASE("derivative matches finite differences") {
    for (double lambda : {0.0, 0.5, 1.5, 7.0}) {
        for (int n : {1, 3, 10, 40}) {
            const PolySpec p(n, lambda);
            for (double x : {-0.7, 0.05, 0.33, 0.91}) {
                const double h = 1e-6;
                const double fd = (gegenbauer_orthonormal(p, x + h) - gegenbauer_orthonormal(p, x - h)) / (2 * h);
                const double d = gegenbauer_orthonormal_derivative(p, x);
                CHECK(std::abs(d - fd) <= 1e-6 * std::max(1.0, std::abs(d)));
            }
        }
    }
}

TEST_CASE("orthonormality under the Gegenbauer weight") {
    for (double lambda : {0.0, 0.5, 1.0, 3.5, 40.5}) {
        const GaussJacobiRule& rule = gauss_jacobi(160, lambda - 0.5, lambda - 0.5);
        const double mass = std::exp(rule.log_mass);
        for (int n : {0, 1, 5, 30, 79}) {
            for (int k : {n, n + 1, n + 2}) {
                const PolySpec a(n, lambda), b(k, lambda);
                double s = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    s += rule.weights[i] * gegenbauer_orthonormal(a, rule.nodes[i]) *
                         gegenbauer_orthonormal(b, rule.nodes[i]);
                }
                CHECK(s * mass == doctest::Approx(n == k ? 1.0 : 0.0).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("high degree stays finite at the endpoints") {
    const PolySpec p(400, 0.5);
    // orthonormal Legendre at 1 is sqrt(n + 1/2)
    CHECK(gegenbauer_orthonormal(p, 1.0) == doctest::Approx(std::sqrt(400.5)).epsilon(1e-12));
    CHECK(std::isfinite(gegenbauer_orthonormal(PolySpec(300, 60.0), 0.999)));
}
