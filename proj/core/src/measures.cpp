#include "hsinfo/measures.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hsinfo/linearization.hpp"
#include "hsinfo/special_functions.hpp"

namespace hsinfo {
namespace {

const double kLogTwoPiE = std::log(2.0 * std::numbers::pi) + 1.0;

// W_q kept as a logarithm so large-l moments never overflow on the way to R_q.
struct MomentLog {
    double log_value;
    double rel_error;
    Method method;
    bool converged;
};

bool is_positive_integer(double q) {
    return q >= 1.0 && std::floor(q) == q && q < 1e6;
}

MomentLog moment_log(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    if (!(q > 0.0) || std::isinf(q)) {
        throw DomainError("entropic moments need a finite q > 0");
    }
    const bool exact = path == Path::exact || (path == Path::automatic && is_positive_integer(q));
    if (exact) {
        const MomentValue mv = entropic_moment_exact(state, q);
        return {mv.value.log_magnitude, mv.rel_error, Method::exact, true};
    }
    const ScalarResult r = entropic_moment_quadrature(state, q, spec);
    return {std::log(r.value), r.abs_error / r.value, Method::quadrature, r.converged};
}

void check_order(double q, const char* what) {
    if (!(q > 0.0) || std::isinf(q)) {
        throw DomainError(std::string(what) + " requires a finite q > 0");
    }
    if (q == 1.0) {
        throw DomainError(std::string(what) + " is undefined at q = 1; use shannon_entropy");
    }
}

ScalarResult renyi_from(const MomentLog& w, double q) {
    return {w.log_value / (1.0 - q), w.rel_error / std::abs(1.0 - q), w.method, w.converged};
}

ScalarResult tsallis_from(const MomentLog& w, double q) {
    const double value = std::exp(w.log_value);
    return {(1.0 - value) / (q - 1.0), value * w.rel_error / std::abs(q - 1.0), w.method, w.converged};
}

// exp((2/D) entropy) / (2 pi e), i.e. the power entropy of a Renyi or Shannon value.
ScalarResult power_entropy_from(const ScalarResult& entropy, int dimension) {
    const double k = 2.0 / dimension;
    const double value = std::exp(k * entropy.value - kLogTwoPiE);
    return {value, value * k * entropy.abs_error, entropy.method, entropy.converged};
}

ScalarResult times_fisher(const ScalarResult& fisher, const ScalarResult& power) {
    return {fisher.value * power.value, std::abs(fisher.value) * power.abs_error, power.method, power.converged};
}

ScalarResult lmc_from(const MomentLog& w2, const ScalarResult& shannon) {
    const double w = std::exp(w2.log_value);
    const double es = std::exp(shannon.value);
    return {w * es, es * w * w2.rel_error + w * es * shannon.abs_error, Method::quadrature,
            w2.converged && shannon.converged};
}

}  // namespace

ScalarResult entropic_moment(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    const MomentLog w = moment_log(state, q, path, spec);
    const double value = std::exp(w.log_value);
    return {value, value * w.rel_error, w.method, w.converged};
}

ScalarResult fisher_closed(const HyperState& state) {
    const int D = state.dimension();
    if (D == 2) {
        return {0.0, 0.0, Method::closed_form, true};
    }
    const double L = state.l() + 0.5 * (D - 3);
    const double m = std::abs(state.m());
    const double value = 4.0 * L * (L + 1.0) - 2.0 * m * (2.0 * L + 1.0) - static_cast<double>((D - 1) * (D - 3));
    return {value, 0.0, Method::closed_form, true};
}

ScalarResult renyi_entropy(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    check_order(q, "Renyi entropy");
    return renyi_from(moment_log(state, q, path, spec), q);
}

ScalarResult tsallis_entropy(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    check_order(q, "Tsallis entropy");
    return tsallis_from(moment_log(state, q, path, spec), q);
}

ScalarResult renyi_power_entropy(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    return power_entropy_from(renyi_entropy(state, q, path, spec), state.dimension());
}

ScalarResult complexity_fisher_renyi(const HyperState& state, double q, Path path, const QuadratureSpec& spec) {
    return times_fisher(fisher_closed(state), renyi_power_entropy(state, q, path, spec));
}

ScalarResult complexity_fisher_shannon(const HyperState& state, const QuadratureSpec& spec) {
    return times_fisher(fisher_closed(state), power_entropy_from(shannon_entropy(state, spec), state.dimension()));
}

ScalarResult complexity_lmc(const HyperState& state, const QuadratureSpec& spec) {
    return lmc_from(moment_log(state, 2.0, Path::exact, spec), shannon_entropy(state, spec));
}

bool MeasureReport::converged() const {
    auto ok = [](const std::map<double, ScalarResult>& m) {
        for (const auto& [q, r] : m) {
            if (!r.converged) return false;
        }
        return true;
    };
    return fisher.converged && shannon.converged && disequilibrium.converged && c_fs.converged && c_lmc.converged &&
           ok(renyi) && ok(tsallis) && ok(c_fr);
}

MeasureReport build_report(const HyperState& state, const std::vector<double>& orders, Path path,
                           const QuadratureSpec& spec) {
    const int D = state.dimension();
    const ScalarResult fisher = fisher_closed(state);
    const ScalarResult shannon = shannon_entropy(state, spec);
    const MomentLog w2 = moment_log(state, 2.0, path == Path::quadrature ? Path::quadrature : Path::exact, spec);
    const ScalarResult c_fs = times_fisher(fisher, power_entropy_from(shannon, D));

    MeasureReport report{state,
                         fisher,
                         shannon,
                         {},
                         {},
                         {std::exp(w2.log_value), std::exp(w2.log_value) * w2.rel_error, w2.method, w2.converged},
                         c_fs,
                         {},
                         lmc_from(w2, shannon)};
    for (double q : orders) {
        if (!(q > 0.0) || std::isinf(q)) {
            throw DomainError("report orders must be finite and positive");
        }
        if (q == 1.0) {
            report.renyi[q] = shannon;
            report.tsallis[q] = shannon;
            report.c_fr[q] = c_fs;
            continue;
        }
        const MomentLog w = (q == 2.0 && path != Path::quadrature) ? w2 : moment_log(state, q, path, spec);
        report.renyi[q] = renyi_from(w, q);
        report.tsallis[q] = tsallis_from(w, q);
        report.c_fr[q] = times_fisher(fisher, power_entropy_from(report.renyi[q], D));
    }
    return report;
}

}  // namespace hsinfo
