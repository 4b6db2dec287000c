#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsinfo/quantum_state.hpp"
#include "hsinfo/special_functions.hpp"

using namespace hsinfo;

TEST_CASE("valid chains") {
    CHECK_NOTHROW(HyperState(3, {2, -2}));
    CHECK_NOTHROW(HyperState(5, {4, 3, 3, -1}));
    CHECK_NOTHROW(HyperState(2, {-7}));
    const HyperState s(4, {3, 2, -1});
    CHECK(s.l() == 3);
    CHECK(s.m() == -1);
    CHECK(s.dimension() == 4);
}

TEST_CASE("chain violations name the index") {
    auto index_of = [](int D, std::vector<int> mu) {
        try {
            HyperState(D, std::move(mu));
        } catch (const ValidationError& e) {
            return e.index();
        }
        return -1;
    };
    CHECK(index_of(4, {1, 2, 0}) == 2);
    CHECK(index_of(3, {1, 2}) == 2);
    CHECK(index_of(3, {-1, 0}) == 1);
    CHECK(index_of(5, {3, 2, 3, 0}) == 3);
    CHECK(index_of(4, {3, 2, -3}) == 3);
    CHECK(index_of(1, {}) == 0);
    CHECK(index_of(3, {1}) == 0);
    CHECK_THROWS_AS(validate(4, {1, 2, 0}), ValidationError);
    CHECK(validate(3, {1, 0}) == HyperState(3, {1, 0}));
}

TEST_CASE("parse and to_string round trip") {
    for (const char* lit : {"3:2,1", "5:4,3,2,1", "2:-3", "4:0,0,0", "3:5,-5"}) {
        CHECK(HyperState::parse(lit).to_string() == lit);
    }
    CHECK(HyperState::parse(" 3 : 2 , 1 ") == HyperState(3, {2, 1}));
    CHECK_THROWS_AS(HyperState::parse("3-2,1"), ValidationError);
    CHECK_THROWS_AS(HyperState::parse("3:2,x"), ValidationError);
    CHECK_THROWS_AS(HyperState::parse("3:2,"), ValidationError);
    CHECK_THROWS_AS(HyperState::parse("4:1,2,0"), ValidationError);
}

TEST_CASE("factorize") {
    const auto f = factorize(HyperState(3, {2, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].index == 1);
    CHECK(f[0].degree == 1);
    CHECK(f[0].lambda == 1.5);
    CHECK(f[0].sin_power == 2);
    CHECK(f[0].alpha == 0.5);
    CHECK(f[0].weight_exponent() == 1.0);

    const auto g = factorize(HyperState(5, {4, 2, 2, -1}));
    REQUIRE(g.size() == 3);
    CHECK(g[0].degree == 2);
    CHECK(g[0].lambda == 1.5 + 2);
    CHECK(g[1].degree == 0);
    CHECK(g[1].lambda == 1.0 + 2);
    CHECK(g[2].degree == 1);
    CHECK(g[2].lambda == 0.5 + 1);
    CHECK(g[2].mu_next() == 1);
    CHECK(factorize(HyperState(2, {3})).empty());
}

TEST_CASE("enumerate_states") {
    CHECK(enumerate_states(3, 2).size() == 9);
    CHECK(enumerate_states(3, 2, false).size() == 6);
    CHECK(enumerate_states(2, 3).size() == 7);
    CHECK(enumerate_states(4, 1).size() == 1 + 1 + 3);
    CHECK(enumerate_states(3, -1).empty());
    for (const auto& s : enumerate_states(5, 3)) CHECK(s.l() <= 3);
}

TEST_CASE("density_eval") {
    const double pi = std::numbers::pi;
    // Y_{1,0}: rho = 3 cos^2(theta) / (4 pi)
    CHECK(density_eval(HyperState(3, {1, 0}), std::vector<double>{0.0, 1.0}) == doctest::Approx(3.0 / (4 * pi)));
    CHECK(density_eval(HyperState(3, {1, 0}), std::vector<double>{pi / 2, 1.0}) == doctest::Approx(0.0));
    // Y_{1,1}: rho = 3 sin^2(theta) / (8 pi)
    CHECK(density_eval(HyperState(3, {1, 1}), std::vector<double>{pi / 2, 0.3}) == doctest::Approx(3.0 / (8 * pi)));
    CHECK(density_eval(HyperState(2, {4}), std::vector<double>{1.0}) == doctest::Approx(1.0 / (2 * pi)));
    CHECK_THROWS(density_eval(HyperState(3, {1, 0}), std::vector<double>{0.0}));
    CHECK_THROWS(density_eval(HyperState(3, {1, 0}), std::vector<double>{4.0, 0.0}));

    // sphere normalization by a midpoint sum
    const HyperState s(3, {3, 1});
    const int n = 4000;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = pi * (i + 0.5) / n;
        total += density_eval(s, std::vector<double>{t, 0.0}) * std::sin(t);
    }
    CHECK(total * 2 * pi * pi / n == doctest::Approx(1.0).epsilon(1e-6));
}
