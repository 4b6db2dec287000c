#ifndef HSINFO_GAUSS_JACOBI_HPP
#define HSINFO_GAUSS_JACOBI_HPP

#include <vector>

namespace hsinfo {

/// Gauss rule for the weight (1-x)^a (1+x)^b on [-1, 1].
///
/// Weights are normalized to sum to one; the total mass of the weight,
/// 2^{a+b+1} B(a+1, b+1), is kept separately as log_mass so that rules with
/// large exponents neither underflow nor overflow.
struct GaussJacobiRule {
    std::vector<double> nodes;  // ascending
    std::vector<double> weights;
    double log_mass = 0.0;
};

/// Builds an n-point rule: Golub-Welsch eigenvalues of the Jacobi matrix, one or two
/// Newton steps on the orthonormal recurrence, weights from the Christoffel function.
GaussJacobiRule compute_gauss_jacobi(int n, double a, double b);

/// Cached variant. Rules are built once per (n, a, b) and never mutated afterwards;
/// the returned reference stays valid for the lifetime of the program.
const GaussJacobiRule& gauss_jacobi(int n, double a, double b);

/// The n real zeros of the Gegenbauer polynomial C_n^lambda, ascending.
std::vector<double> gegenbauer_zeros(int n, double lambda);

}  // namespace hsinfo

#endif  // HSINFO_GAUSS_JACOBI_HPP
