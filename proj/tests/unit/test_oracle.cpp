#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsinfo/linearization.hpp"
#include "hsinfo/oracle.hpp"
#include "json.hpp"

using namespace hsinfo;
constexpr double pi = std::numbers::pi;

namespace {
const ClosedFormCase& find_case(const std::string& id) {
    const auto& c = closed_form_catalog();
    const auto it = std::find_if(c.begin(), c.end(), [&](const ClosedFormCase& k) { return k.id == id; });
    REQUIRE(it != c.end());
    return *it;
}
}  // namespace

TEST_CASE("closed_form_Wq examples") {
    const double d3_33 = std::pow(2 * pi, -1.0) * std::pow(2.0, 13) * std::pow(720.0, 2) / (13 * 479001600.0) *
                         std::pow(7 * 720.0 / (128 * 36.0), 2);
    const auto w = closed_form_Wq(HyperState(3, {3, 3}), 2);
    REQUIRE(w);
    CHECK(w->method == Method::closed_form);
    CHECK(w->value == doctest::Approx(d3_33).epsilon(1e-14));
    CHECK(w->value == doctest::Approx(0.129846690168212977900).epsilon(1e-14));
    for (int l = 1; l <= 6; ++l) {
        for (double q : {1.5, 2.0, 3.0}) {
            CHECK(closed_form_Wq(HyperState(4, {l, l, l}), q)->value ==
                  doctest::Approx(std::pow(2 * pi * pi, 1 - q) * std::pow(l + 1.0, q) / (l * q + 1)).epsilon(1e-13));
        }
    }
    for (int D = 3; D <= 8; ++D) {
        CHECK(closed_form_Wq(HyperState(D, std::vector<int>(D - 1, 0)), 1.0)->value == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(closed_form_Wq(HyperState(2, {-4}), 3)->value == doctest::Approx(std::pow(2 * pi, -2.0)));
    CHECK_FALSE(closed_form_Wq(HyperState(3, {5, 2}), 2));
    CHECK_FALSE(closed_form_Wq(HyperState(5, {3, 2, 1, 0}), 2));
}

TEST_CASE("general all-zero formula agrees with the D=3 and D=4 cases") {
    const auto& gen = find_case("general_all_zero");
    const auto& d3 = find_case("d3_00");
    const auto& d4 = find_case("d4_000");
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
        const HyperState s3(3, {0, 0}), s4(4, {0, 0, 0});
        CHECK(gen.evaluate(s3, q).value() == doctest::Approx(d3.evaluate(s3, q).value()).epsilon(1e-12));
        CHECK(gen.evaluate(s4, q).value() == doctest::Approx(d4.evaluate(s4, q).value()).epsilon(1e-12));
        CHECK(d3.evaluate(s3, q).value() == doctest::Approx(std::pow(2.0, 2 - 2 * q) * std::pow(pi, 1 - q)).epsilon(1e-14));
    }
}

TEST_CASE("quarantine by normalization") {
    const auto& printed = find_case("d4_l_lm1_lm2_printed");
    const auto& fixed = find_case("d4_l_lm1_lm2");
    CHECK(printed.quarantined);
    CHECK_FALSE(fixed.quarantined);
    CHECK(fixed.replaces == printed.id);
    for (int l = 2; l <= 8; ++l) {
        const HyperState s(4, {l, l - 1, l - 2});
        const double l2 = static_cast<double>(l) * l;
        CHECK(printed.evaluate(s, 1.0).value() == doctest::Approx((l2 + 1) / (l2 - 1)).epsilon(1e-13));
        CHECK(fixed.evaluate(s, 1.0).value() == doctest::Approx(1.0).epsilon(1e-13));
        // lookups never answer with the quarantined formula
        CHECK(closed_form_Wq(s, 2)->value == doctest::Approx(fixed.evaluate(s, 2).value()).epsilon(1e-15));
    }
    for (const auto& k : closed_form_catalog()) {
        if (k.id != printed.id) CHECK_FALSE(k.quarantined);
    }
}

TEST_CASE("brute_force_Wq examples") {
    const OracleValue a = brute_force_Wq(HyperState(3, {1, 1}), 2);
    CHECK(a.value == doctest::Approx(3.0 / (10 * pi)).epsilon(1e-13));
    CHECK(a.abs_error < 1e-13);
    CHECK(brute_force_Wq(HyperState(3, {0, 0}), 5).value == doctest::Approx(std::pow(4 * pi, -4.0)).epsilon(1e-13));
    CHECK(brute_force_Wq(HyperState(4, {2, 1, 1}), 2).value ==
          doctest::Approx(0.0911890652781039942995).epsilon(1e-12));
    CHECK(brute_force_Wq(HyperState(5, {3, 2, 1, 1}), 0.5).value ==
          doctest::Approx(4.023968156004372381522558659).epsilon(1e-9));
    CHECK_THROWS_AS(brute_force_Wq(HyperState(3, {1, 0}), 2, 10), DomainError);
    CHECK_THROWS_AS(brute_force_Wq(HyperState(3, {1, 0}), 0.0), DomainError);
}

TEST_CASE("exact path reproduces every trusted case at integer q") {
    for (const auto& k : closed_form_catalog()) {
        if (k.quarantined) continue;
        for (const auto& s : k.grid(8)) {
            for (int q : {1, 2, 3}) {
                const double exact = entropic_moment_linearized(s, q).value.value();
                CAPTURE(k.id);
                CAPTURE(s.to_string());
                CAPTURE(q);
                CHECK(exact == doctest::Approx(k.evaluate(s, q).value()).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("audit_catalog") {
    const AuditReport r = audit_catalog(4, {1.0, 2.0, 3.0, 2.5});
    CHECK(r.passed());
    REQUIRE(r.quarantined.size() == 1);
    CHECK(r.quarantined[0] == "d4_l_lm1_lm2_printed");
    bool flagged = false;
    for (const auto& e : r.entries) {
        if (e.case_id == "d4_l_lm1_lm2_printed") {
            CHECK(e.verdict == "quarantined");
            flagged = flagged || e.suspected_typo;
        } else {
            CHECK(e.verdict == "pass");
        }
    }
    CHECK(flagged);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["passed"] == true);
    CHECK(j["entries"][0].contains("expected"));
    CHECK(j["entries"][0].contains("verdict"));
    CHECK(r.to_text().find("PASS") != std::string::npos);

    const AuditReport trivial = audit_catalog(0, {2.0});
    CHECK(trivial.passed());
    CHECK_THROWS_AS(audit_catalog(-1, {2.0}), DomainError);
}
