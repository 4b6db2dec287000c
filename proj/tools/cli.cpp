#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsinfo/entropies.hpp"
#include "hsinfo/linearization.hpp"
#include "hsinfo/measures.hpp"
#include "hsinfo/oracle.hpp"
#include "hsinfo/quantum_state.hpp"
#include "hsinfo/sweep.hpp"

namespace hsinfo::cli {
namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out_path;
    std::string format;
    std::optional<double> rel_tol;
    std::optional<int> max_nodes;
    std::string force_path;

    QuadratureSpec quadrature() const {
        QuadratureSpec spec;
        if (rel_tol) spec.rel_tol = *rel_tol;
        if (max_nodes) spec.max_nodes = *max_nodes;
        spec.validate();
        return spec;
    }

    Path path() const {
        if (force_path == "exact") return Path::exact;
        if (force_path == "quadrature") return Path::quadrature;
        return Path::automatic;
    }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
    cmd->add_option("--out", c.out_path, "Write results to this file instead of stdout");
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--rel-tol", c.rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--max-nodes", c.max_nodes, "Quadrature node cap per subinterval");
    cmd->add_option("--force-path", c.force_path, "Route for W_q (default: exact for integer q)")
        ->check(CLI::IsMember({"exact", "quadrature"}));
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + c.out_path + "' for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing '" + c.out_path + "'");
}

json result_json(const ScalarResult& r) {
    return {{"value", r.value}, {"error", r.abs_error}, {"method", std::string(to_string(r.method))},
            {"converged", r.converged}};
}

json q_map_json(const std::map<double, ScalarResult>& m) {
    json j = json::object();
    for (const auto& [q, r] : m) j[format_number(q)] = result_json(r);
    return j;
}

json report_json(const MeasureReport& r) {
    return {{"state", r.state.to_string()},
            {"fisher", result_json(r.fisher)},
            {"shannon", result_json(r.shannon)},
            {"renyi", q_map_json(r.renyi)},
            {"tsallis", q_map_json(r.tsallis)},
            {"disequilibrium", result_json(r.disequilibrium)},
            {"c_fs", result_json(r.c_fs)},
            {"c_fr", q_map_json(r.c_fr)},
            {"c_lmc", result_json(r.c_lmc)}};
}

int cmd_report(const std::string& literal, const std::vector<double>& orders, const Common& c, std::ostream& out,
               std::ostream& err) {
    const HyperState state = HyperState::parse(literal);
    if (c.format == "csv") {
        SweepSpec spec;
        spec.mode = SweepMode::custom;
        spec.states = {state};
        spec.q_list = orders;
        spec.path = c.path();
        spec.quadrature = c.quadrature();
        const auto rows = run_sweep(spec, 1);
        std::ostringstream text;
        write_csv(text, rows);
        emit(c, text.str(), out);
        return ok;
    }
    const MeasureReport report = build_report(state, orders, c.path(), c.quadrature());
    if (!report.converged()) {
        err << "warning: some quadratures of " << state.to_string() << " did not reach the tolerance\n";
    }
    emit(c, report_json(report).dump(2) + "\n", out);
    return ok;
}

struct SweepArgs {
    std::string mode;
    std::vector<int> l, m, a;
    std::optional<int> l_max;
    std::optional<int> dim;
    std::vector<double> q;
    std::vector<std::string> states;
    unsigned threads = 0;
};

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    const auto mode = parse_sweep_mode(a.mode);
    if (!mode) throw DomainError("unknown sweep mode '" + a.mode + "'");
    SweepSpec spec = default_sweep_spec(*mode);
    if (!a.l.empty()) spec.l_list = a.l;
    if (!a.m.empty()) spec.m_list = a.m;
    if (!a.a.empty()) spec.a_list = a.a;
    if (a.l_max) spec.l_max = *a.l_max;
    if (a.dim) spec.dimension = *a.dim;
    if (!a.q.empty()) spec.q_list = a.q;
    for (const auto& s : a.states) spec.states.push_back(HyperState::parse(s));
    spec.path = c.path();
    spec.quadrature = c.quadrature();

    const auto rows = run_sweep(spec, a.threads);
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.result.converged; });
    if (bad > 0) err << "warning: " << bad << " rows did not reach the quadrature tolerance\n";
    std::ostringstream text;
    if (c.format == "json") {
        write_json(text, rows);
    } else {
        write_csv(text, rows);
    }
    emit(c, text.str(), out);
    return ok;
}

struct Check {
    std::string kind;
    std::string state;
    double q;
    double reference;
    double value;
    double rel_error;
    double tolerance;
    bool passed() const { return rel_error <= tolerance; }
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

int cmd_validate(int l_max, const std::vector<int>& dims, const std::vector<double>& orders, const Common& c,
                 std::ostream& out, std::ostream& err) {
    if (l_max < 0) throw DomainError("--l-max must be >= 0");
    for (double q : orders) {
        if (!(q > 0.0) || std::isinf(q)) throw DomainError("validate q values must be finite and positive");
    }
    const QuadratureSpec quad = c.quadrature();
    const AuditReport audit = audit_catalog(l_max, orders);

    std::vector<Check> checks;
    for (int D : dims) {
        for (const auto& s : enumerate_states(D, l_max)) {
            const std::string id = s.to_string();
            for (double q : orders) {
                const ScalarResult quadv = entropic_moment_quadrature(s, q, quad);
                if (q == 1.0) {
                    const MomentValue ex = entropic_moment_exact(s, 1);
                    const bool exact_one = ex.value.sign == 1 && ex.value.log_magnitude == 0.0;
                    checks.push_back({"normalization_exact", id, q, 1.0, ex.value.value(), exact_one ? 0.0 : 1.0, 0.0});
                    checks.push_back({"normalization_quadrature", id, q, 1.0, quadv.value, std::abs(quadv.value - 1.0),
                                      1e-10});
                } else if (std::floor(q) == q) {
                    const MomentValue ex = entropic_moment_exact(s, static_cast<int>(q));
                    const double v = ex.value.value();
                    checks.push_back({"exact_vs_quadrature", id, q, v, quadv.value, rel_diff(quadv.value, v), 1e-8});
                } else {
                    const OracleValue bf = brute_force_Wq(s, q);
                    checks.push_back(
                        {"quadrature_vs_brute_force", id, q, bf.value, quadv.value, rel_diff(quadv.value, bf.value), 1e-7});
                }
            }
            if (D >= 3) {
                const double closed = fisher_closed(s).value;
                const double numeric = fisher_numeric(s, quad).value;
                checks.push_back({"fisher_closed_vs_numeric", id, 0.0, closed, numeric,
                                  std::abs(numeric - closed) / std::max(1.0, std::abs(closed)), 1e-6});
            }
        }
    }

    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& k) { return !k.passed(); });
    const bool passed = audit.passed() && failed == 0;

    json j;
    j["passed"] = passed;
    j["l_max"] = l_max;
    j["dimensions"] = dims;
    j["q"] = orders;
    j["catalog"] = json::parse(audit.to_json());
    j["cross_checks"]["count"] = checks.size();
    j["cross_checks"]["failed"] = failed;
    auto& failures = j["cross_checks"]["failures"] = json::array();
    for (const auto& k : checks) {
        if (k.passed()) continue;
        failures.push_back({{"check", k.kind}, {"state", k.state}, {"q", k.q}, {"reference", k.reference},
                            {"value", k.value}, {"rel_error", k.rel_error}, {"tolerance", k.tolerance}});
        err << "FAIL " << k.kind << ' ' << k.state << " q=" << format_number(k.q) << " rel=" << k.rel_error << '\n';
    }
    err << audit.to_text();
    err << checks.size() << " cross-checks, " << failed << " failed\n";
    emit(c, j.dump(2) + "\n", out);
    return passed ? ok : validation_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropy and complexity measures of hyperspherical harmonics", "hsinfo"};
    app.require_subcommand(1);

    Common report_common, sweep_common, validate_common;

    std::string state;
    std::vector<double> report_q{2.0};
    auto* report = app.add_subcommand("report", "All measures of one state");
    report->add_option("--state", state, "State literal D:mu_1,...,mu_{D-1}")->required();
    report->add_option("--q", report_q, "Entropic order (repeatable)")->take_all();
    add_common(report, report_common, "json", {"json", "csv"});

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Figure grids as CSV or JSON rows");
    sweep->add_option("--mode", sweep_args.mode, "fs_vs_m|fs_vs_l|fs_diag|fr_*|lmc_*|custom")->required();
    sweep->add_option("--l", sweep_args.l, "l values (vs_m modes)")->take_all();
    sweep->add_option("--m", sweep_args.m, "m values (vs_l modes)")->take_all();
    sweep->add_option("--a", sweep_args.a, "offsets a, m = l - a (diag modes)")->take_all();
    sweep->add_option("--l-max", sweep_args.l_max, "Largest l for vs_l and diag modes");
    sweep->add_option("--dim", sweep_args.dim, "Dimension D (default 3)");
    sweep->add_option("--q", sweep_args.q, "Entropic order (repeatable)")->take_all();
    sweep->add_option("--state", sweep_args.states, "States for custom mode (repeatable)")->take_all();
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: all cores)");
    add_common(sweep, sweep_common, "csv", {"csv", "json"});

    int l_max = 6;
    std::vector<int> dims{3, 4, 5};
    std::vector<double> validate_q{1.0, 2.0, 3.0};
    auto* validate = app.add_subcommand("validate", "Catalog audit and cross-path checks");
    validate->add_option("--l-max", l_max, "Largest l checked");
    validate->add_option("--dim", dims, "Dimensions checked (repeatable)")->take_all();
    validate->add_option("--q", validate_q, "Orders checked (repeatable)")->take_all();
    add_common(validate, validate_common, "json", {"json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*report) return cmd_report(state, report_q, report_common, out, err);
        if (*sweep) return cmd_sweep(sweep_args, sweep_common, out, err);
        return cmd_validate(l_max, dims, validate_q, validate_common, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const ValidationError& e) {
        err << "error: invalid state: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

}  // namespace hsinfo::cli
