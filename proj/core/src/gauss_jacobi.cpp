#include "hsinfo/gauss_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "hsinfo/special_functions.hpp"

namespace hsinfo {
namespace {

constexpr double kRescale = 1e100;

// Recurrence coefficients of the polynomials orthonormal with respect to the
// probability measure proportional to (1-x)^a (1+x)^b:
//   x p_k = off[k+1] p_{k+1} + diag[k] p_k + off[k] p_{k-1}.
struct JacobiMatrix {
    std::vector<double> diag;
    std::vector<double> off;  // off[0] unused
};

JacobiMatrix jacobi_matrix(int n, double a, double b) {
    JacobiMatrix J;
    J.diag.resize(n);
    J.off.assign(n + 1, 0.0);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        if (k == 0) {
            J.diag[0] = (b - a) / (ab + 2.0);
        } else {
            J.diag[k] = (b * b - a * a) / (s * (s + 2.0));
        }
    }
    for (int k = 1; k <= n; ++k) {
        const double s = 2.0 * k + ab;
        double v;
        if (k == 1) {
            v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            v = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        J.off[k] = std::sqrt(v);
    }
    return J;
}

struct Evaluation {
    double value;       // p_n, scaled
    double derivative;  // p_n', same scale
    double log_christoffel;  // log sum_{k<n} p_k^2, unscaled
};

Evaluation evaluate(const JacobiMatrix& J, int n, double x) {
    double p_prev = 0.0, p = 1.0;
    double d_prev = 0.0, d = 0.0;
    double sum = 0.0;
    double log_scale = 0.0;  // true value = stored * exp(log_scale)
    for (int k = 0; k < n; ++k) {
        sum += p * p;
        const double p_next = ((x - J.diag[k]) * p - J.off[k] * p_prev) / J.off[k + 1];
        const double d_next = ((x - J.diag[k]) * d + p - J.off[k] * d_prev) / J.off[k + 1];
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        if (std::abs(p) > kRescale || std::abs(d) > kRescale) {
            p /= kRescale;
            p_prev /= kRescale;
            d /= kRescale;
            d_prev /= kRescale;
            sum /= kRescale * kRescale;
            log_scale += std::log(kRescale);
        }
    }
    return {p, d, std::log(sum) + 2.0 * log_scale};
}

struct Key {
    int n;
    double a;
    double b;
    auto operator<=>(const Key&) const = default;
};

}  // namespace

GaussJacobiRule compute_gauss_jacobi(int n, double a, double b) {
    if (n < 1) {
        throw DomainError("Gauss-Jacobi rule needs at least one node");
    }
    if (!(a > -1.0) || !(b > -1.0)) {
        throw DomainError("Gauss-Jacobi exponents must exceed -1");
    }
    const JacobiMatrix J = jacobi_matrix(n, a, b);

    GaussJacobiRule rule;
    rule.log_mass = (a + b + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(a + b + 2.0);
    rule.nodes.resize(n);
    rule.weights.resize(n);

    if (n == 1) {
        rule.nodes[0] = J.diag[0];
        rule.weights[0] = 1.0;
        return rule;
    }

    Eigen::VectorXd diag(n), sub(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = J.diag[k];
    for (int k = 0; k < n - 1; ++k) sub[k] = J.off[k + 1];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& eig = solver.eigenvalues();

    for (int i = 0; i < n; ++i) {
        double x = std::clamp(eig[i], -1.0, 1.0);
        const double lo = i > 0 ? eig[i - 1] : -1.0;
        const double hi = i + 1 < n ? eig[i + 1] : 1.0;
        const double max_step = 0.25 * std::min(x - lo, hi - x);
        for (int it = 0; it < 2; ++it) {
            const Evaluation e = evaluate(J, n, x);
            if (e.derivative == 0.0) break;
            const double step = e.value / e.derivative;
            if (!(std::abs(step) < max_step)) break;
            x -= step;
        }
        rule.nodes[i] = x;
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        rule.weights[i] = std::exp(-evaluate(J, n, rule.nodes[i]).log_christoffel);
        total += rule.weights[i];
    }
    // The Christoffel weights already sum to one up to rounding; renormalize the residue.
    for (double& w : rule.weights) w /= total;
    return rule;
}

const GaussJacobiRule& gauss_jacobi(int n, double a, double b) {
    static std::shared_mutex mutex;
    static std::map<Key, std::unique_ptr<const GaussJacobiRule>> cache;
    const Key key{n, a, b};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return *it->second;
        }
    }
    auto rule = std::make_unique<const GaussJacobiRule>(compute_gauss_jacobi(n, a, b));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(rule));
    return *it->second;
}

std::vector<double> gegenbauer_zeros(int n, double lambda) {
    if (n == 0) {
        return {};
    }
    const double a = lambda - 0.5;
    return gauss_jacobi(n, a, a).nodes;
}

}  // namespace hsinfo
