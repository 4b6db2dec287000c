#ifndef HSINFO_LINEARIZATION_HPP
#define HSINFO_LINEARIZATION_HPP

#include <stdexcept>

#include "hsinfo/quantum_state.hpp"
#include "hsinfo/special_functions.hpp"

namespace hsinfo {

/// Raised when the exact path is asked for an order it cannot serve (q not a positive integer).
class UnsupportedOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arguments of the Srivastava-Daoust linearization coefficient c(r, n, alpha, beta, gamma, delta).
/// (alpha, beta) are the Jacobi parameters of the polynomial being powered; (gamma, delta)
/// those of the weight it is integrated against.
struct SDParams {
    int r = 1;
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

struct SDResult {
    LogSigned value;
    double rel_error = 0.0;  // a-priori bound on the rounding error of the collapsed sum
    long precision_bits = 0;
};

/// c(r, n, alpha, beta, gamma, delta) = binom(n+alpha, n)^r
///   * sum_{j_1..j_r = 0}^{n} (gamma+1)_J / (gamma+delta+2)_J * prod_i t_{j_i},   J = j_1 + ... + j_r,
/// with t_j = (-n)_j (alpha+beta+n+1)_j / ((alpha+1)_j j!).
///
/// The r-fold sum is collapsed: the summand depends on the indices only through the
/// individual t_{j_i} and their total J, so it equals sum_K [P^r]_K (gamma+1)_K/(gamma+delta+2)_K
/// with P(z) = sum_j t_j z^j. The t_j alternate in sign and the convolution cancels
/// heavily for large n, so it is carried out in MPFR with a working precision sized
/// from sum_j |t_j|.
SDResult sd_coefficient_detailed(const SDParams& params);
LogSigned sd_coefficient(const SDParams& params);

/// beta^{(0)}_{j,q,D}: the constant-term linearization coefficient of the j-th density factor
/// raised to the power 2q, against the weight (1-x^2)^{alpha_j + q mu'_{j+1} - 1/2}.
SDResult beta0(int j, int q, const HyperState& state);

struct MomentValue {
    LogSigned value;
    double rel_error = 0.0;
    int q = 1;
    HyperState state;
};

/// W_q for integer q >= 1 by linearization. q = 1 returns exactly 1.
MomentValue entropic_moment_exact(const HyperState& state, int q);

/// Overload that rejects non-integer or sub-unit orders with UnsupportedOrder.
MomentValue entropic_moment_exact(const HyperState& state, double q);

/// Same product formula as entropic_moment_exact but evaluated in full even for q = 1;
/// used to check the normalization of the linearized expression itself.
MomentValue entropic_moment_linearized(const HyperState& state, int q);

}  // namespace hsinfo

#endif  // HSINFO_LINEARIZATION_HPP
