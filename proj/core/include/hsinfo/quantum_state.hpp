#ifndef HSINFO_QUANTUM_STATE_HPP
#define HSINFO_QUANTUM_STATE_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsinfo {

/// Raised when a hyperquantum-number chain is not admissible.
/// index() is the 1-based position in (mu_1, ..., mu_{D-1}) that breaks the chain,
/// or 0 when the problem is with D or the list length.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// An eigenstate of the D-dimensional rigid rotator, labelled by the chain
/// mu_1 = l >= mu_2 >= ... >= mu_{D-2} >= |mu_{D-1}| = |m| >= 0.
/// For D = 2 the single entry m is an arbitrary integer.
class HyperState {
public:
    /// Throws ValidationError if the chain is not admissible.
    HyperState(int dimension, std::vector<int> mu);

    /// Parses "D:mu_1,...,mu_{D-1}", e.g. "3:2,1" or "5:4,3,2,1".
    static HyperState parse(std::string_view literal);

    int dimension() const noexcept { return dimension_; }
    std::span<const int> mu() const noexcept { return mu_; }
    int l() const noexcept { return mu_.front(); }
    int m() const noexcept { return mu_.back(); }

    /// Inverse of parse().
    std::string to_string() const;

    friend bool operator==(const HyperState&, const HyperState&) = default;

private:
    int dimension_;
    std::vector<int> mu_;
};

/// Returns the state if admissible; throws ValidationError naming the offending index otherwise.
HyperState validate(int dimension, std::vector<int> mu);

/// Every admissible state with l <= l_max (for D = 2, |m| <= l_max), in lexicographic
/// order of the chain. Negative m is included only when `signed_m` is set.
std::vector<HyperState> enumerate_states(int dimension, int l_max, bool signed_m = true);

/// One-dimensional factor j of the Rakhmanov density. With mu'_{j+1} = mu_{j+1}
/// (or |mu_{D-1}| at the last level) the factor is
///   g_j(theta) = [C^{lambda}_{degree}(cos theta)]^2 (sin theta)^{sin_power},
/// and p_j(theta) = g_j(theta) (sin theta)^{2 alpha} is a probability density on [0, pi].
struct DensityFactor {
    int index;        // j, 1-based
    int degree;       // mu_j - mu'_{j+1}
    double lambda;    // alpha_j + mu'_{j+1}
    int sin_power;    // 2 mu'_{j+1}
    double alpha;     // (D - j - 1) / 2

    int mu_next() const noexcept { return sin_power / 2; }
    /// Exponent of (1 - x^2) in p_j after x = cos theta: lambda - 1/2.
    double weight_exponent() const noexcept { return lambda - 0.5; }
};

/// D - 2 factors; empty for D = 2.
std::vector<DensityFactor> factorize(const HyperState& state);

/// Angular coordinates (theta_1, ..., theta_{D-1}), theta_j in [0, pi] for
/// j <= D-2 and theta_{D-1} in [0, 2 pi).
using AngleVector = std::vector<double>;

/// rho(Omega) = |Y|^2 without the solid-angle weight.
double density_eval(const HyperState& state, std::span<const double> angles);

}  // namespace hsinfo

#endif  // HSINFO_QUANTUM_STATE_HPP
