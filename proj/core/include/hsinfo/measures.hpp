#ifndef HSINFO_MEASURES_HPP
#define HSINFO_MEASURES_HPP

#include <map>
#include <vector>

#include "hsinfo/entropies.hpp"
#include "hsinfo/quantum_state.hpp"

namespace hsinfo {

/// Which route computes W_q. `automatic` picks exact linearization for integer q
/// and quadrature otherwise.
enum class Path { automatic, exact, quadrature };

/// W_q through the requested path, as a ScalarResult tagged with the route taken.
ScalarResult entropic_moment(const HyperState& state, double q, Path path = Path::automatic,
                             const QuadratureSpec& spec = {});

/// F = 4L(L+1) - 2|m|(2L+1) - (D-1)(D-3), L = l + (D-3)/2.
ScalarResult fisher_closed(const HyperState& state);

/// R_q = log(W_q) / (1 - q). q = 1 is rejected: use shannon_entropy.
ScalarResult renyi_entropy(const HyperState& state, double q, Path path = Path::automatic,
                           const QuadratureSpec& spec = {});

/// T_q = (1 - W_q) / (q - 1). q = 1 is rejected.
ScalarResult tsallis_entropy(const HyperState& state, double q, Path path = Path::automatic,
                             const QuadratureSpec& spec = {});

/// J_q = exp((2/D) R_q) / (2 pi e).
ScalarResult renyi_power_entropy(const HyperState& state, double q, Path path = Path::automatic,
                                 const QuadratureSpec& spec = {});

/// C_FR^{(q)} = F J_q.
ScalarResult complexity_fisher_renyi(const HyperState& state, double q, Path path = Path::automatic,
                                     const QuadratureSpec& spec = {});

/// C_FS = F exp((2/D) S) / (2 pi e).
ScalarResult complexity_fisher_shannon(const HyperState& state, const QuadratureSpec& spec = {});

/// C_LMC = W_2 exp(S), exact W_2 and quadrature S.
ScalarResult complexity_lmc(const HyperState& state, const QuadratureSpec& spec = {});

/// Every measure of one state at a list of orders.
struct MeasureReport {
    HyperState state;
    ScalarResult fisher;
    ScalarResult shannon;
    std::map<double, ScalarResult> renyi;
    std::map<double, ScalarResult> tsallis;
    ScalarResult disequilibrium;
    ScalarResult c_fs;
    std::map<double, ScalarResult> c_fr;
    ScalarResult c_lmc;

    /// True when every contained quadrature met its tolerance.
    bool converged() const;
};

/// Builds a MeasureReport. Orders equal to 1 are served by the Shannon limit
/// (R_1 = S, T_1 = S, C_FR^{(1)} = C_FS) and must be requested deliberately by the caller.
MeasureReport build_report(const HyperState& state, const std::vector<double>& orders, Path path = Path::automatic,
                           const QuadratureSpec& spec = {});

}  // namespace hsinfo

#endif  // HSINFO_MEASURES_HPP
