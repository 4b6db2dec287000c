#include <chrono>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsinfo/linearization.hpp"
#include "sd_enumeration.hpp"

using namespace hsinfo;
constexpr double pi = std::numbers::pi;

TEST_CASE("sd_coefficient frozen values") {
    CHECK(sd_coefficient({2, 1, 0, 0, 0, 0}).value() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(sd_coefficient({4, 2, 0.5, 0.5, 1.5, 1.5}).value() == doctest::Approx(625.0 / 4096.0).epsilon(1e-14));
    CHECK(sd_coefficient({1, 0, 0.3, 0.7, 1.1, 2.2}).value() == doctest::Approx(1.0));
}

TEST_CASE("collapse equals direct enumeration") {
    const double params[][4] = {{0, 0, 0, 0}, {0.5, 0.5, 1.5, 1.5}, {1, 1, 2.5, 2.5}, {-0.5, -0.5, 0.5, 0.5},
                                {0.5, 1.5, 2.0, 0.25}, {3, 3, 7, 7}};
    for (const auto& p : params) {
        for (int r = 1; r <= 4; ++r) {
            for (int n = 0; n <= 3; ++n) {
                const SdEnumeration direct = sd_enumerate(r, n, p[0], p[1], p[2], p[3]);
                const double got = sd_coefficient({r, n, p[0], p[1], p[2], p[3]}).value();
                CAPTURE(r);
                CAPTURE(n);
                CHECK(direct.error_of(got) <= 1e-12);
            }
        }
    }
}

TEST_CASE("sd_coefficient rejects bad arguments") {
    CHECK_THROWS(sd_coefficient({0, 1, 0, 0, 0, 0}));
    CHECK_THROWS(sd_coefficient({2, -1, 0, 0, 0, 0}));
}

TEST_CASE("error bound is tight at l = 80") {
    const SDResult r = sd_coefficient_detailed({4, 80, 0.0, 0.0, 0.5, 0.5});
    CHECK(r.rel_error < 1e-13);
    CHECK(r.precision_bits > 64);
    CHECK(r.value.sign == 1);
}

TEST_CASE("beta0") {
    CHECK(beta0(1, 2, HyperState(3, {1, 0})).value.value() == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(beta0(1, 2, HyperState(3, {2, 0})).value.value() == doctest::Approx(3.0 / 35.0).epsilon(1e-14));
    CHECK_THROWS(beta0(2, 2, HyperState(3, {2, 0})));
}

TEST_CASE("exact moments") {
    CHECK(entropic_moment_exact(HyperState(3, {1, 0}), 2).value.value() ==
          doctest::Approx(9.0 / (20 * pi)).epsilon(1e-14));
    CHECK(entropic_moment_exact(HyperState(3, {1, 1}), 2).value.value() ==
          doctest::Approx(3.0 / (10 * pi)).epsilon(1e-14));
    CHECK(entropic_moment_exact(HyperState(3, {0, 0}), 5).value.value() ==
          doctest::Approx(std::pow(4 * pi, -4.0)).epsilon(1e-14));
    CHECK(entropic_moment_exact(HyperState(2, {3}), 3).value.value() ==
          doctest::Approx(std::pow(2 * pi, -2.0)).epsilon(1e-14));
    CHECK(entropic_moment_exact(HyperState(3, {80, 0}), 2).value.value() ==
          doctest::Approx(0.340808385671796191119).epsilon(1e-12));
    CHECK(entropic_moment_exact(HyperState(3, {80, 40}), 2).value.value() ==
          doctest::Approx(0.177387821264867248584).epsilon(1e-12));
    // density depends on |m| only
    CHECK(entropic_moment_exact(HyperState(4, {5, 3, -2}), 3).value.value() ==
          doctest::Approx(entropic_moment_exact(HyperState(4, {5, 3, 2}), 3).value.value()).epsilon(1e-15));
}

TEST_CASE("normalization") {
    for (int D = 2; D <= 6; ++D) {
        for (const auto& s : enumerate_states(D, 4, false)) {
            const MomentValue one = entropic_moment_exact(s, 1);
            CHECK(one.value.log_magnitude == 0.0);
            CHECK(one.value.sign == 1);
            CHECK(entropic_moment_linearized(s, 1).value.value() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("unsupported orders") {
    const HyperState s(3, {2, 1});
    CHECK_THROWS_AS(entropic_moment_exact(s, 2.5), UnsupportedOrder);
    CHECK_THROWS_AS(entropic_moment_exact(s, 0.0), UnsupportedOrder);
    CHECK_THROWS_AS(entropic_moment_exact(s, 0), UnsupportedOrder);
    CHECK(entropic_moment_exact(s, 3.0).q == 3);
}

TEST_CASE("l = 80 W_2 budget") {
    const auto t0 = std::chrono::steady_clock::now();
    (void)entropic_moment_exact(HyperState(3, {80, 3}), 2);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms < 50.0);
}
