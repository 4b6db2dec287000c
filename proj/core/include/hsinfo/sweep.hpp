#ifndef HSINFO_SWEEP_HPP
#define HSINFO_SWEEP_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hsinfo/measures.hpp"

namespace hsinfo {

/// Figure grids (D = 3 unless overridden) plus a free-form mode over explicit states.
///   *_vs_m: m = 0..l for each l in l_list
///   *_vs_l: l = m..l_max for each m in m_list
///   *_diag: m = l - a, l = a..l_max for each a in a_list
enum class SweepMode { fs_vs_m, fs_vs_l, fs_diag, fr_vs_m, fr_vs_l, fr_diag, lmc_vs_m, lmc_vs_l, lmc_diag, custom };

std::optional<SweepMode> parse_sweep_mode(std::string_view name);
std::string_view to_string(SweepMode mode) noexcept;

struct SweepSpec {
    SweepMode mode = SweepMode::custom;
    int dimension = 3;
    std::vector<int> l_list;
    std::vector<int> m_list;
    std::vector<int> a_list;
    std::vector<double> q_list;
    int l_max = 0;
    std::vector<HyperState> states;  // custom mode only
    Path path = Path::automatic;
    QuadratureSpec quadrature;

    /// Throws DomainError on empty ranges or an unusable combination.
    void validate() const;
};

/// Spec pre-filled with the figure's grid: l in {10,20,50,80} (C_FS, C_LMC) or {10,20,50} (C_FR);
/// m in {0,1,2,5}; a in {0,1,2}; l_max 80, except 60 for fr_vs_l, fr_diag and lmc_diag; q = 2 for C_FR.
SweepSpec default_sweep_spec(SweepMode mode);

struct SweepRow {
    int dimension = 0;
    int l = 0;
    int m = 0;
    std::optional<double> q;  // empty for q-independent measures
    std::string measure;
    ScalarResult result;
    std::string state;
};

/// States of the grid in emission order.
std::vector<HyperState> sweep_states(const SweepSpec& spec);

/// Evaluates the grid, points in parallel on up to `threads` workers (0: hardware
/// concurrency); rows come back in grid order whatever the completion order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Shortest round-trip decimal, or 15 significant digits when that is shorter. Locale independent.
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader = "D,l,m,q,measure,value,err,method";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace hsinfo

#endif  // HSINFO_SWEEP_HPP
