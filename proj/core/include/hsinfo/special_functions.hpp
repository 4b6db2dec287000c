#ifndef HSINFO_SPECIAL_FUNCTIONS_HPP
#define HSINFO_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>
#include <string>

namespace hsinfo {

/// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Degree and parameter of an orthonormal Gegenbauer polynomial.
/// Construction rejects degree < 0 and lambda <= -1/2.
class PolySpec {
public:
    PolySpec(int degree, double lambda);

    int degree() const noexcept { return degree_; }
    double lambda() const noexcept { return lambda_; }

private:
    int degree_;
    double lambda_;
};

/// A real number stored as sign and natural log of its magnitude, so that
/// products and powers of large gamma ratios never overflow.
struct LogSigned {
    double log_magnitude = 0.0;
    int sign = 1;

    static LogSigned zero() noexcept { return {0.0, 0}; }
    static LogSigned one() noexcept { return {0.0, 1}; }
    static LogSigned from_log(double log_magnitude) noexcept { return {log_magnitude, 1}; }
    static LogSigned from_value(double value) noexcept;

    bool is_zero() const noexcept { return sign == 0; }

    /// Linear-space value; may be +-inf or 0 when out of double range.
    double value() const noexcept;

    LogSigned pow(double exponent) const;
    LogSigned inverse() const;

    friend LogSigned operator*(LogSigned a, LogSigned b) noexcept;
    friend LogSigned operator/(LogSigned a, LogSigned b);
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1) with sign tracking.
/// The result has sign 0 exactly when the product passes through zero.
LogSigned pochhammer_logsigned(double a, int k);

/// Normalization constant d_n^{(alpha,beta)} of the Jacobi polynomials, i.e.
/// the square root of int_{-1}^{1} [P_n^{(alpha,beta)}]^2 (1-x)^alpha (1+x)^beta dx.
LogSigned jacobi_norm(int n, double alpha, double beta);

/// Orthonormal Gegenbauer polynomial with respect to (1-x^2)^{lambda-1/2} on [-1, 1].
///
/// Evaluated through the symmetric Jacobi polynomial P_n^{(a,a)}, a = lambda - 1/2,
/// using its three-term recurrence; the running value is rescaled whenever it
/// grows large so that the division by d_n^{(a,a)} happens in log space.
double gegenbauer_orthonormal(const PolySpec& spec, double x);

/// First derivative of gegenbauer_orthonormal.
double gegenbauer_orthonormal_derivative(const PolySpec& spec, double x);

/// Value and derivative of the orthonormal polynomial at one point.
struct PolyValue {
    double value;
    double derivative;
};
PolyValue gegenbauer_orthonormal_with_derivative(const PolySpec& spec, double x);

}  // namespace hsinfo

#endif  // HSINFO_SPECIAL_FUNCTIONS_HPP
