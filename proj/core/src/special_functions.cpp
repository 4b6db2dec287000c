#include "hsinfo/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

namespace hsinfo {
namespace {

constexpr double kRescaleThreshold = 1e150;
const double kLogRescale = std::log(kRescaleThreshold);

struct Scaled {
    double mantissa;
    double log_scale;
};

// P_n^{(a,a)}(x) as mantissa * exp(log_scale).
Scaled jacobi_symmetric_scaled(int n, double a, double x) {
    if (n == 0) {
        return {1.0, 0.0};
    }
    double prev = 1.0;
    double cur = (a + 1.0) * x;
    double log_scale = 0.0;
    for (int k = 2; k <= n; ++k) {
        const double kd = k;
        // k (k+2a) P_k = (k+a) [ (2k+2a-1) x P_{k-1} - (k+a-1) P_{k-2} ]
        const double next = (kd + a) * ((2.0 * kd + 2.0 * a - 1.0) * x * cur - (kd + a - 1.0) * prev) /
                            (kd * (kd + 2.0 * a));
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleThreshold) {
            cur /= kRescaleThreshold;
            prev /= kRescaleThreshold;
            log_scale += kLogRescale;
        }
    }
    return {cur, log_scale};
}

double finish(Scaled s, double log_factor) {
    if (s.mantissa == 0.0) {
        return 0.0;
    }
    return s.mantissa * std::exp(s.log_scale + log_factor);
}

void check_unit_interval(double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("orthonormal Gegenbauer polynomial requires |x| <= 1, got " + std::to_string(x));
    }
}

}  // namespace

PolySpec::PolySpec(int degree, double lambda) : degree_(degree), lambda_(lambda) {
    if (degree < 0) {
        throw DomainError("polynomial degree must be non-negative");
    }
    if (!(lambda > -0.5)) {
        throw DomainError("Gegenbauer parameter must satisfy lambda > -1/2, got " + std::to_string(lambda));
    }
}

LogSigned LogSigned::from_value(double value) noexcept {
    if (value == 0.0) {
        return zero();
    }
    return {std::log(std::abs(value)), value > 0.0 ? 1 : -1};
}

double LogSigned::value() const noexcept {
    if (sign == 0) {
        return 0.0;
    }
    return sign * std::exp(log_magnitude);
}

LogSigned LogSigned::pow(double exponent) const {
    if (sign == 0) {
        if (exponent <= 0.0) {
            throw DomainError("zero raised to a non-positive power");
        }
        return zero();
    }
    int s = 1;
    if (sign < 0) {
        const double rounded = std::round(exponent);
        if (rounded != exponent) {
            throw DomainError("negative value raised to a non-integer power");
        }
        s = (static_cast<long long>(rounded) % 2 == 0) ? 1 : -1;
    }
    return {log_magnitude * exponent, s};
}

LogSigned LogSigned::inverse() const {
    if (sign == 0) {
        throw DomainError("inverse of zero");
    }
    return {-log_magnitude, sign};
}

LogSigned operator*(LogSigned a, LogSigned b) noexcept {
    if (a.sign == 0 || b.sign == 0) {
        return LogSigned::zero();
    }
    return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

LogSigned operator/(LogSigned a, LogSigned b) {
    return a * b.inverse();
}

double log_gamma(double x) {
    if (!(x > 0.0) || std::isinf(x)) {
        throw DomainError("log_gamma requires a finite x > 0, got " + std::to_string(x));
    }
    return boost::math::lgamma(x);
}

LogSigned pochhammer_logsigned(double a, int k) {
    if (k < 0) {
        throw DomainError("Pochhammer symbol requires k >= 0");
    }
    if (k == 0) {
        return LogSigned::one();
    }
    if (a > 0.0) {
        return LogSigned::from_log(log_gamma(a + k) - log_gamma(a));
    }
    // Walk the non-positive leading factors explicitly; hand the positive tail to lgamma.
    LogSigned acc = LogSigned::one();
    int i = 0;
    for (; i < k && a + i <= 0.0; ++i) {
        const double factor = a + i;
        if (factor == 0.0) {
            return LogSigned::zero();
        }
        acc = acc * LogSigned::from_value(factor);
    }
    if (i < k) {
        const double base = a + i;
        acc = acc * LogSigned::from_log(log_gamma(base + (k - i)) - log_gamma(base));
    }
    return acc;
}

LogSigned jacobi_norm(int n, double alpha, double beta) {
    if (n < 0 || !(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("jacobi_norm requires n >= 0, alpha > -1, beta > -1");
    }
    const double ab = alpha + beta;
    double log_sq = (ab + 1.0) * std::numbers::ln2 + log_gamma(n + alpha + 1.0) + log_gamma(n + beta + 1.0) -
                    log_gamma(n + 1.0);
    if (n == 0) {
        // (ab+1) Gamma(ab+1) = Gamma(ab+2), which stays finite at ab = -1.
        log_sq -= log_gamma(ab + 2.0);
    } else {
        log_sq -= std::log(2.0 * n + ab + 1.0) + log_gamma(n + ab + 1.0);
    }
    return LogSigned::from_log(0.5 * log_sq);
}

double gegenbauer_orthonormal(const PolySpec& spec, double x) {
    check_unit_interval(x);
    const double a = spec.lambda() - 0.5;
    const int n = spec.degree();
    return finish(jacobi_symmetric_scaled(n, a, x), -jacobi_norm(n, a, a).log_magnitude);
}

double gegenbauer_orthonormal_derivative(const PolySpec& spec, double x) {
    return gegenbauer_orthonormal_with_derivative(spec, x).derivative;
}

PolyValue gegenbauer_orthonormal_with_derivative(const PolySpec& spec, double x) {
    check_unit_interval(x);
    const double a = spec.lambda() - 0.5;
    const int n = spec.degree();
    const double log_norm = jacobi_norm(n, a, a).log_magnitude;
    const double value = finish(jacobi_symmetric_scaled(n, a, x), -log_norm);
    if (n == 0) {
        return {value, 0.0};
    }
    // d/dx P_n^{(a,a)} = (n+2a+1)/2 P_{n-1}^{(a+1,a+1)}
    const double log_factor = std::log(0.5 * (n + 2.0 * a + 1.0)) - log_norm;
    return {value, finish(jacobi_symmetric_scaled(n - 1, a + 1.0, x), log_factor)};
}

}  // namespace hsinfo
