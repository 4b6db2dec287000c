#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsinfo/entropies.hpp"
#include "hsinfo/special_functions.hpp"

using namespace hsinfo;
constexpr double pi = std::numbers::pi;

TEST_CASE("Shannon anchors") {
    const ScalarResult s = shannon_entropy(HyperState(3, {1, 0}));
    CHECK(s.method == Method::quadrature);
    CHECK(s.converged);
    CHECK(std::abs(s.value - (std::log(4 * pi / 3) + 2.0 / 3.0)) < 1e-9);
    CHECK(s.value == doctest::Approx(2.09907862496784776825).epsilon(1e-12));
    // uniform densities
    CHECK(shannon_entropy(HyperState(3, {0, 0})).value == doctest::Approx(std::log(4 * pi)).epsilon(1e-13));
    CHECK(shannon_entropy(HyperState(2, {9})).value == doctest::Approx(std::log(2 * pi)).epsilon(1e-15));
    CHECK(shannon_entropy(HyperState(4, {0, 0, 0})).value == doctest::Approx(std::log(2 * pi * pi)).epsilon(1e-13));
}

TEST_CASE("quadrature moments against frozen references") {
    CHECK(entropic_moment_quadrature(HyperState(4, {2, 1, 1}), 2).value ==
          doctest::Approx(0.0911890652781039942995).epsilon(1e-10));
    CHECK(entropic_moment_quadrature(HyperState(3, {3, 3}), 2).value ==
          doctest::Approx(0.129846690168212977900).epsilon(1e-10));
    CHECK(entropic_moment_quadrature(HyperState(4, {1, 0, 0}), 2.5).value ==
          doctest::Approx(0.0353969769707425206949).epsilon(1e-10));
    CHECK(entropic_moment_quadrature(HyperState(5, {3, 2, 1, 1}), 0.5).value ==
          doctest::Approx(4.023968156004372381522558659).epsilon(1e-10));
    CHECK(entropic_moment_quadrature(HyperState(3, {80, 0}), 2).value ==
          doctest::Approx(0.340808385671796191119).epsilon(1e-10));
    CHECK(entropic_moment_quadrature(HyperState(3, {1, 1}), 2).value ==
          doctest::Approx(3.0 / (10 * pi)).epsilon(1e-12));
}

TEST_CASE("normalization by quadrature") {
    for (int D = 2; D <= 5; ++D) {
        for (const auto& s : enumerate_states(D, 5, false)) {
            CHECK(std::abs(entropic_moment_quadrature(s, 1.0).value - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("numeric Fisher information") {
    CHECK(fisher_numeric(HyperState(3, {1, 0})).value == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(fisher_numeric(HyperState(4, {2, 1, 0})).value == doctest::Approx(32.0).epsilon(1e-10));
    CHECK(fisher_numeric(HyperState(5, {3, 2, 0, 0})).value == doctest::Approx(72.0).epsilon(1e-10));
    CHECK(std::abs(fisher_numeric(HyperState(3, {0, 0})).value) < 1e-12);
    for (int l = 0; l <= 6; ++l) {
        for (int m = 0; m <= l; ++m) {
            CHECK(fisher_numeric(HyperState(3, {l, m})).value ==
                  doctest::Approx(4.0 * l * (l + 1) - 2.0 * m * (2 * l + 1)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(fisher_numeric(HyperState(2, {1})), DomainError);
}

TEST_CASE("non-convergence is flagged, not thrown") {
    const QuadratureSpec tight{8, 8, 1e-15};
    const ScalarResult r = entropic_moment_quadrature(HyperState(3, {60, 3}), 0.5, tight);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value));
    CHECK(r.abs_error > 0.0);
}

TEST_CASE("spec and argument validation") {
    CHECK_THROWS_AS(QuadratureSpec({4, 64, 1e-10}).validate(), DomainError);
    CHECK_THROWS_AS(QuadratureSpec({64, 32, 1e-10}).validate(), DomainError);
    CHECK_THROWS_AS(QuadratureSpec({64, 128, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS(entropic_moment_quadrature(HyperState(3, {1, 0}), 0.0), DomainError);
    CHECK_THROWS_AS(entropic_moment_quadrature(HyperState(3, {1, 0}), -2.0), DomainError);
    CHECK(to_string(Method::closed_form) == "closed-form");
}
