#ifndef HSINFO_ORACLE_HPP
#define HSINFO_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsinfo/entropies.hpp"
#include "hsinfo/quantum_state.hpp"
#include "hsinfo/special_functions.hpp"

namespace hsinfo {

/// One closed-form entropic moment from the published catalog.
///
/// A case whose formula does not give W_1 = 1 over its grid is quarantined: it is
/// still listed and audited, but closed_form_Wq never answers with it.
struct ClosedFormCase {
    std::string id;
    std::string family;  // human-readable state family, e.g. "D=3 (l,l)"
    std::function<bool(const HyperState&)> applies;
    std::function<LogSigned(const HyperState&, double q)> evaluate;
    std::function<std::vector<HyperState>(int l_max)> grid;
    std::string replaces;  // id of the printed case this one corrects, if any
    bool quarantined = false;
};

/// All catalog cases in lookup order; quarantine flags are decided once, by
/// evaluating every case at q = 1 over l <= 8.
const std::vector<ClosedFormCase>& closed_form_catalog();

/// W_q from the first applicable non-quarantined case, or nullopt.
std::optional<ScalarResult> closed_form_Wq(const HyperState& state, double q);

struct OracleValue {
    double value = 0.0;
    double abs_error = 0.0;  // |fine - coarse| of a panel-doubling pair
};

/// Independent reference for W_q: composite 30-point Gauss-Legendre panels in each
/// polar angle (split at the sign changes of the polynomial), no Jacobi weights,
/// nothing shared with the production quadrature. `nodes` is the approximate
/// number of points per angle on the coarse pass.
OracleValue brute_force_Wq(const HyperState& state, double q, int nodes = 1200);

struct AuditEntry {
    std::string case_id;
    std::string state;
    double q = 0.0;
    double expected = 0.0;  // closed form
    double got = 0.0;       // brute force (or 1 for the normalization row)
    double rel_error = 0.0;
    std::string check;    // "normalization" or "brute_force"
    std::string verdict;  // "pass", "fail" or "quarantined"
    bool suspected_typo = false;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    std::vector<std::string> quarantined;
    double tolerance = 1e-7;

    /// True when no non-quarantined entry failed.
    bool passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

/// Checks every case at q = 1 and against brute_force_Wq for l <= l_max and each q.
AuditReport audit_catalog(int l_max, const std::vector<double>& q_grid, double tolerance = 1e-7);

}  // namespace hsinfo

#endif  // HSINFO_ORACLE_HPP
