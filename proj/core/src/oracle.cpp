#include "hsinfo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include "json.hpp"

namespace hsinfo {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLnPi = std::log(kPi);
const double kLn2 = std::numbers::ln2;
const double kLn2Pi = std::log(2.0 * kPi);

bool all_equal(const HyperState& s, int v) {
    return std::all_of(s.mu().begin(), s.mu().end(), [v](int x) { return x == v; });
}

bool is_chain(const HyperState& s, int D, std::vector<int> mu) {
    return s.dimension() == D && std::equal(s.mu().begin(), s.mu().end(), mu.begin(), mu.end());
}

std::vector<HyperState> l_family(int l_min, int l_max, auto make) {
    std::vector<HyperState> out;
    for (int l = l_min; l <= l_max; ++l) out.push_back(make(l));
    return out;
}

double ln_d(int n, double a) { return jacobi_norm(n, a, a).log_magnitude; }

// W_q of the general-D all-zero and all-l families.
LogSigned general_all_l(int D, int l, double q) {
    double s = (1.0 - q) * kLn2Pi + 0.5 * (D - 1) * (D - 2) * (1.0 - q) * kLn2;
    s += q * pochhammer_logsigned(2.0 * l + 1.0, D - 2).log_magnitude;
    s -= pochhammer_logsigned(2.0 * q * l + 1.0, D - 2).log_magnitude;
    for (int j = 1; j <= D - 2; ++j) {
        const double h = 0.5 * (D - j);
        s += 2.0 * log_gamma(q * l + h) - log_gamma(2.0 * q * l + D - j - 1);
        s += q * (log_gamma(2.0 * l + D - j - 1) - 2.0 * log_gamma(l + h));
    }
    return LogSigned::from_log(s);
}

LogSigned general_all_zero(int D, double q) {
    double s = (1.0 - q) * kLn2Pi + 0.5 * (D - 1) * (D - 2) * (1.0 - q) * kLn2;
    s += (q - 1.0) * log_gamma(D - 1.0);
    for (int j = 1; j <= D - 2; ++j) {
        s += (2.0 - 2.0 * q) * log_gamma(0.5 * (D - j)) - (1.0 - q) * log_gamma(D - j - 1.0);
    }
    return LogSigned::from_log(s);
}

// The D=4 (l, l-1, l-2) family, with the cubic factor l(l^2 + sign).
LogSigned d4_l_lm1_lm2(int l, double q, int sign) {
    const double cubic = l * (static_cast<double>(l) * l + sign);
    return LogSigned::from_log((1.0 + q) * kLn2 + (1.0 - 2.0 * q) * kLnPi + q * std::log(cubic) +
                               2.0 * log_gamma(q + 0.5) + log_gamma(q * (l - 2) + 1.0) - log_gamma(l * q + 2.0));
}

std::vector<ClosedFormCase> build_catalog() {
    std::vector<ClosedFormCase> c;
    auto single = [](HyperState s) { return [s](int) { return std::vector<HyperState>{s}; }; };

    c.push_back({"d2", "D=2 (m)", [](const HyperState& s) { return s.dimension() == 2; },
                 [](const HyperState&, double q) { return LogSigned::from_log((1.0 - q) * kLn2Pi); },
                 [](int l_max) {
                     std::vector<HyperState> out;
                     for (int m = -l_max; m <= l_max; ++m) out.emplace_back(2, std::vector<int>{m});
                     return out;
                 }, ""});
    c.push_back({"d3_00", "D=3 (0,0)", [](const HyperState& s) { return is_chain(s, 3, {0, 0}); },
                 [](const HyperState&, double q) {
                     return LogSigned::from_log((2.0 - 2.0 * q) * kLn2 + (1.0 - q) * kLnPi);
                 },
                 single(HyperState(3, {0, 0})), ""});
    c.push_back({"d3_10", "D=3 (1,0)", [](const HyperState& s) { return is_chain(s, 3, {1, 0}); },
                 [](const HyperState&, double q) {
                     return LogSigned::from_log((2.0 - 2.0 * q) * kLn2 + q * std::log(3.0) + (1.0 - q) * kLnPi -
                                                std::log(2.0 * q + 1.0));
                 },
                 single(HyperState(3, {1, 0})), ""});
    c.push_back({"d3_ll", "D=3 (l,l)",
                 [](const HyperState& s) { return s.dimension() == 3 && s.l() >= 1 && std::abs(s.m()) == s.l(); },
                 [](const HyperState& s, double q) {
                     const double l = s.l();
                     double v = (1.0 - q) * kLn2Pi + (2.0 * q * l + 1.0) * kLn2 + 2.0 * log_gamma(q * l + 1.0) -
                                std::log(2.0 * q * l + 1.0) - log_gamma(2.0 * q * l + 1.0);
                     v += q * (std::log(2.0 * l + 1.0) + log_gamma(2.0 * l + 1.0) - (2.0 * l + 1.0) * kLn2 -
                               2.0 * log_gamma(l + 1.0));
                     return LogSigned::from_log(v);
                 },
                 [](int l_max) { return l_family(1, l_max, [](int l) { return HyperState(3, {l, l}); }); }, ""});
    c.push_back({"d3_l_lm1", "D=3 (l,l-1)",
                 [](const HyperState& s) {
                     return s.dimension() == 3 && s.l() >= 1 && std::abs(s.m()) == s.l() - 1;
                 },
                 [](const HyperState& s, double q) {
                     const double l = s.l();
                     double v = (1.0 - q) * kLn2Pi + 2.0 * q * std::log(l) + log_gamma(q + 0.5) +
                                log_gamma(q * (l - 1.0) + 1.5) - 0.5 * kLnPi - log_gamma(q * l + 1.5);
                     v += 2.0 * ln_d(0, q * (l - 1.0)) - 2.0 * q * ln_d(1, l - 1.0);
                     return LogSigned::from_log(v);
                 },
                 [](int l_max) { return l_family(1, l_max, [](int l) { return HyperState(3, {l, l - 1}); }); }, ""});
    c.push_back({"d4_000", "D=4 (0,0,0)", [](const HyperState& s) { return is_chain(s, 4, {0, 0, 0}); },
                 [](const HyperState&, double q) {
                     return LogSigned::from_log((1.0 - q) * kLn2 + (2.0 - 2.0 * q) * kLnPi);
                 },
                 single(HyperState(4, {0, 0, 0})), ""});
    c.push_back({"d4_100", "D=4 (1,0,0)", [](const HyperState& s) { return is_chain(s, 4, {1, 0, 0}); },
                 [](const HyperState&, double q) {
                     return LogSigned::from_log((1.0 + q) * kLn2 + (1.5 - 2.0 * q) * kLnPi + log_gamma(0.5 + q) -
                                                log_gamma(2.0 + q));
                 },
                 single(HyperState(4, {1, 0, 0})), ""});
    c.push_back({"d4_lll", "D=4 (l,l,l)",
                 [](const HyperState& s) {
                     return s.dimension() == 4 && s.l() >= 1 && s.mu()[1] == s.l() && std::abs(s.m()) == s.l();
                 },
                 [](const HyperState& s, double q) {
                     const double l = s.l();
                     return LogSigned::from_log((1.0 - q) * std::log(2.0 * kPi * kPi) + q * std::log(l + 1.0) -
                                                std::log(l * q + 1.0));
                 },
                 [](int l_max) { return l_family(1, l_max, [](int l) { return HyperState(4, {l, l, l}); }); }, ""});
    c.push_back({"d4_l_lm1_lm1", "D=4 (l,l-1,l-1)",
                 [](const HyperState& s) {
                     return s.dimension() == 4 && s.l() >= 1 && s.mu()[1] == s.l() - 1 &&
                            std::abs(s.m()) == s.l() - 1;
                 },
                 [](const HyperState& s, double q) {
                     const double l = s.l();
                     return LogSigned::from_log(kLn2 + (1.5 - 2.0 * q) * kLnPi + q * std::log(l * (l + 1.0)) +
                                                log_gamma(q + 0.5) + log_gamma(q * (l - 1.0) + 1.0) -
                                                log_gamma(l * q + 2.0));
                 },
                 [](int l_max) {
                     return l_family(1, l_max, [](int l) { return HyperState(4, {l, l - 1, l - 1}); });
                 }, ""});
    auto d4_lm2_applies = [](const HyperState& s) {
        return s.dimension() == 4 && s.l() >= 2 && s.mu()[1] == s.l() - 1 && std::abs(s.m()) == s.l() - 2;
    };
    auto d4_lm2_grid = [](int l_max) {
        return l_family(2, l_max, [](int l) { return HyperState(4, {l, l - 1, l - 2}); });
    };
    // As printed, with l(l^2 + 1); W_1 = (l^2+1)/(l^2-1).
    c.push_back({"d4_l_lm1_lm2_printed", "D=4 (l,l-1,l-2)", d4_lm2_applies,
                 [](const HyperState& s, double q) { return d4_l_lm1_lm2(s.l(), q, +1); }, d4_lm2_grid, ""});
    c.push_back({"d4_l_lm1_lm2", "D=4 (l,l-1,l-2)", d4_lm2_applies,
                 [](const HyperState& s, double q) { return d4_l_lm1_lm2(s.l(), q, -1); }, d4_lm2_grid,
                 "d4_l_lm1_lm2_printed"});
    c.push_back({"general_all_zero", "D>=3 (0,...,0)",
                 [](const HyperState& s) { return s.dimension() >= 3 && all_equal(s, 0); },
                 [](const HyperState& s, double q) { return general_all_zero(s.dimension(), q); },
                 [](int) {
                     std::vector<HyperState> out;
                     for (int D = 3; D <= 6; ++D) out.emplace_back(D, std::vector<int>(D - 1, 0));
                     return out;
                 }, ""});
    c.push_back({"general_all_l", "D>=3 (l,...,l)",
                 [](const HyperState& s) { return s.dimension() >= 3 && s.m() >= 0 && all_equal(s, s.l()); },
                 [](const HyperState& s, double q) { return general_all_l(s.dimension(), s.l(), q); },
                 [](int l_max) {
                     std::vector<HyperState> out;
                     for (int D = 3; D <= 6; ++D) {
                         for (int l = 0; l <= l_max; ++l) out.emplace_back(D, std::vector<int>(D - 1, l));
                     }
                     return out;
                 }, ""});

    for (auto& k : c) {
        for (const auto& s : k.grid(8)) {
            if (std::abs(k.evaluate(s, 1.0).value() - 1.0) > 1e-10) {
                k.quarantined = true;
                break;
            }
        }
    }
    return c;
}

// Sign changes of C(cos theta) on (0, pi), refined by bisection.
std::vector<double> theta_breaks(const PolySpec& poly) {
    std::vector<double> breaks{0.0};
    if (poly.degree() > 0) {
        const int grid = 16 * (poly.degree() + 1) + 32;
        auto f = [&](double t) { return gegenbauer_orthonormal(poly, std::cos(t)); };
        double t0 = 0.0, f0 = f(t0);
        for (int i = 1; i <= grid; ++i) {
            const double t1 = kPi * i / grid;
            const double f1 = f(t1);
            if (f0 == 0.0 && t0 > 0.0) {
                breaks.push_back(t0);
            } else if (f0 * f1 < 0.0) {
                double a = t0, b = t1, fa = f0;
                for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
                    const double m = 0.5 * (a + b);
                    const double fm = f(m);
                    if (fm == 0.0) {
                        a = b = m;
                        break;
                    }
                    if ((fm < 0.0) == (fa < 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                breaks.push_back(0.5 * (a + b));
            }
            t0 = t1;
            f0 = f1;
        }
    }
    breaks.push_back(kPi);
    return breaks;
}

// int_0^pi |C(cos t)|^{2q} sin(t)^{power} dt with `panels` Gauss-Legendre panels spread over the pieces.
double factor_integral(const PolySpec& poly, double q, double power, const std::vector<double>& breaks, int panels) {
    using Rule = boost::math::quadrature::gauss<double, 30>;
    auto f = [&](double t) {
        const double c = gegenbauer_orthonormal(poly, std::cos(t));
        return std::pow(std::abs(c), 2.0 * q) * std::pow(std::sin(t), power);
    };
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double a = breaks[k], b = breaks[k + 1];
        const int n = std::max(1, static_cast<int>(std::ceil(panels * (b - a) / kPi)));
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i) {
            total += Rule::integrate(f, a + i * h, i + 1 == n ? b : a + (i + 1) * h);
        }
    }
    return total;
}

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

const std::vector<ClosedFormCase>& closed_form_catalog() {
    static const std::vector<ClosedFormCase> catalog = build_catalog();
    return catalog;
}

std::optional<ScalarResult> closed_form_Wq(const HyperState& state, double q) {
    if (!(q > 0.0) || std::isinf(q)) {
        throw DomainError("entropic moments need a finite q > 0");
    }
    for (const auto& k : closed_form_catalog()) {
        if (!k.quarantined && k.applies(state)) {
            const double v = k.evaluate(state, q).value();
            return ScalarResult{v, std::abs(v) * 1e-14, Method::closed_form, true};
        }
    }
    return std::nullopt;
}

OracleValue brute_force_Wq(const HyperState& state, double q, int nodes) {
    if (!(q > 0.0) || std::isinf(q)) {
        throw DomainError("entropic moments need a finite q > 0");
    }
    if (nodes < 30) {
        throw DomainError("brute_force_Wq needs at least 30 nodes");
    }
    const int panels = (nodes + 29) / 30;
    double coarse = std::exp((1.0 - q) * kLn2Pi);
    double fine = coarse;
    for (const auto& f : factorize(state)) {
        const PolySpec poly(f.degree, f.lambda);
        const double power = q * f.sin_power + 2.0 * f.alpha;
        const auto breaks = theta_breaks(poly);
        coarse *= factor_integral(poly, q, power, breaks, panels);
        fine *= factor_integral(poly, q, power, breaks, 2 * panels);
    }
    return {fine, std::abs(fine - coarse)};
}

bool AuditReport::passed() const {
    return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.verdict == "fail"; });
}

std::string AuditReport::to_text() const {
    std::ostringstream out;
    int fails = 0;
    for (const auto& e : entries) {
        if (e.verdict == "pass") continue;
        fails += e.verdict == "fail";
        out << e.verdict << ' ' << e.case_id << ' ' << e.state << " q=" << format_g(e.q) << ' ' << e.check
            << " expected=" << format_g(e.expected) << " got=" << format_g(e.got)
            << " rel=" << format_g(e.rel_error) << (e.suspected_typo ? " suspected-typo" : "") << '\n';
    }
    for (const auto& id : quarantined) out << "quarantined case: " << id << '\n';
    out << entries.size() << " checks, " << fails << " failed, tolerance " << format_g(tolerance) << ": "
        << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string AuditReport::to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = passed();
    j["tolerance"] = tolerance;
    j["quarantined"] = quarantined;
    auto& arr = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        arr.push_back({{"case", e.case_id},
                       {"state", e.state},
                       {"q", e.q},
                       {"check", e.check},
                       {"expected", e.expected},
                       {"got", e.got},
                       {"rel_error", e.rel_error},
                       {"verdict", e.verdict},
                       {"suspected_typo", e.suspected_typo}});
    }
    return j.dump(2);
}

AuditReport audit_catalog(int l_max, const std::vector<double>& q_grid, double tolerance) {
    if (l_max < 0) {
        throw DomainError("audit l_max must be >= 0");
    }
    AuditReport report;
    report.tolerance = tolerance;
    for (const auto& k : closed_form_catalog()) {
        if (k.quarantined) report.quarantined.push_back(k.id);
        const bool typo = k.quarantined;
        for (const auto& s : k.grid(l_max)) {
            const double w1 = k.evaluate(s, 1.0).value();
            const double n_err = std::abs(w1 - 1.0);
            report.entries.push_back({k.id, s.to_string(), 1.0, w1, 1.0, n_err, "normalization",
                                      k.quarantined ? "quarantined" : (n_err <= 1e-10 ? "pass" : "fail"), typo});
            for (double q : q_grid) {
                const double expected = k.evaluate(s, q).value();
                const OracleValue got = brute_force_Wq(s, q);
                const double rel = std::abs(expected - got.value) / std::abs(got.value);
                report.entries.push_back({k.id, s.to_string(), q, expected, got.value, rel, "brute_force",
                                          k.quarantined ? "quarantined" : (rel <= tolerance ? "pass" : "fail"),
                                          typo && rel > tolerance});
            }
        }
    }
    return report;
}

}  // namespace hsinfo
