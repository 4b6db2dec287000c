#ifndef HSINFO_ENTROPIES_HPP
#define HSINFO_ENTROPIES_HPP

#include <string_view>

#include "hsinfo/quantum_state.hpp"

namespace hsinfo {

/// Node counts and tolerance for every numeric integral. Counts are per
/// subinterval: integrals are split at the zeros of the Gegenbauer factor and
/// each piece is refined by doubling until the summed refinement differences
/// fall below rel_tol relative to the result.
struct QuadratureSpec {
    int initial_nodes = 16;
    int max_nodes = 4096;
    double rel_tol = 1e-11;

    /// Throws DomainError when initial_nodes < 8, max_nodes < initial_nodes or rel_tol <= 0.
    void validate() const;
};

enum class Method { exact, quadrature, closed_form };

std::string_view to_string(Method method) noexcept;

/// A computed measure with its provenance. `converged` is false when a quadrature
/// hit max_nodes before meeting rel_tol; the value then carries the achieved estimate.
struct ScalarResult {
    double value = 0.0;
    double abs_error = 0.0;
    Method method = Method::quadrature;
    bool converged = true;
};

/// W_q = int rho^q dOmega for any real q > 0, factor by factor:
///   W_q = (2 pi)^{1-q} prod_j int_{-1}^{1} |C_{n_j}^{lambda_j}(x)|^{2q} (1-x^2)^{q mu'_{j+1} + alpha_j - 1/2} dx.
ScalarResult entropic_moment_quadrature(const HyperState& state, double q, const QuadratureSpec& spec = {});

/// S = -int rho log rho dOmega = log(2 pi) + sum_j S_j, with S_j the Shannon
/// integral of the j-th one-dimensional factor density.
ScalarResult shannon_entropy(const HyperState& state, const QuadratureSpec& spec = {});

/// Fisher information int |grad rho|^2 / rho dOmega with the intrinsic gradient of
/// the unit hypersphere, evaluated numerically as an independent check on the
/// closed form. Requires D >= 3.
ScalarResult fisher_numeric(const HyperState& state, const QuadratureSpec& spec = {});

}  // namespace hsinfo

#endif  // HSINFO_ENTROPIES_HPP
