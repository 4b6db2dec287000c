#include "hsinfo/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hsinfo/special_functions.hpp"

namespace hsinfo {
namespace {

constexpr std::array<std::pair<SweepMode, std::string_view>, 10> kModes{{
    {SweepMode::fs_vs_m, "fs_vs_m"},
    {SweepMode::fs_vs_l, "fs_vs_l"},
    {SweepMode::fs_diag, "fs_diag"},
    {SweepMode::fr_vs_m, "fr_vs_m"},
    {SweepMode::fr_vs_l, "fr_vs_l"},
    {SweepMode::fr_diag, "fr_diag"},
    {SweepMode::lmc_vs_m, "lmc_vs_m"},
    {SweepMode::lmc_vs_l, "lmc_vs_l"},
    {SweepMode::lmc_diag, "lmc_diag"},
    {SweepMode::custom, "custom"},
}};

enum class Family { fs, fr, lmc, custom };
enum class Axis { vs_m, vs_l, diag, custom };

Family family_of(SweepMode m) {
    switch (m) {
        case SweepMode::fs_vs_m: case SweepMode::fs_vs_l: case SweepMode::fs_diag: return Family::fs;
        case SweepMode::fr_vs_m: case SweepMode::fr_vs_l: case SweepMode::fr_diag: return Family::fr;
        case SweepMode::lmc_vs_m: case SweepMode::lmc_vs_l: case SweepMode::lmc_diag: return Family::lmc;
        case SweepMode::custom: break;
    }
    return Family::custom;
}

Axis axis_of(SweepMode m) {
    switch (m) {
        case SweepMode::fs_vs_m: case SweepMode::fr_vs_m: case SweepMode::lmc_vs_m: return Axis::vs_m;
        case SweepMode::fs_vs_l: case SweepMode::fr_vs_l: case SweepMode::lmc_vs_l: return Axis::vs_l;
        case SweepMode::fs_diag: case SweepMode::fr_diag: case SweepMode::lmc_diag: return Axis::diag;
        case SweepMode::custom: break;
    }
    return Axis::custom;
}

// (l, m) states of the chosen dimension with every intermediate quantum number equal to l.
HyperState lm_state(int D, int l, int m) {
    if (D == 2) return HyperState(2, {m});
    std::vector<int> mu(D - 1, l);
    mu.back() = m;
    return HyperState(D, std::move(mu));
}

void add_row(std::vector<SweepRow>& rows, const HyperState& s, std::optional<double> q, std::string measure,
             const ScalarResult& r) {
    rows.push_back({s.dimension(), s.l(), s.m(), q, std::move(measure), r, s.to_string()});
}

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, const HyperState& s) {
    std::vector<SweepRow> rows;
    switch (family_of(spec.mode)) {
        case Family::fs:
            add_row(rows, s, std::nullopt, "c_fs", complexity_fisher_shannon(s, spec.quadrature));
            break;
        case Family::fr:
            for (double q : spec.q_list) {
                add_row(rows, s, q, "c_fr", complexity_fisher_renyi(s, q, spec.path, spec.quadrature));
            }
            break;
        case Family::lmc:
            add_row(rows, s, std::nullopt, "c_lmc", complexity_lmc(s, spec.quadrature));
            break;
        case Family::custom: {
            const MeasureReport r = build_report(s, spec.q_list, spec.path, spec.quadrature);
            add_row(rows, s, std::nullopt, "fisher", r.fisher);
            add_row(rows, s, std::nullopt, "shannon", r.shannon);
            add_row(rows, s, std::nullopt, "disequilibrium", r.disequilibrium);
            add_row(rows, s, std::nullopt, "c_fs", r.c_fs);
            add_row(rows, s, std::nullopt, "c_lmc", r.c_lmc);
            for (double q : spec.q_list) {
                add_row(rows, s, q, "renyi", r.renyi.at(q));
                add_row(rows, s, q, "tsallis", r.tsallis.at(q));
                add_row(rows, s, q, "c_fr", r.c_fr.at(q));
            }
            break;
        }
    }
    return rows;
}

}  // namespace

std::optional<SweepMode> parse_sweep_mode(std::string_view name) {
    for (const auto& [mode, text] : kModes) {
        if (text == name) return mode;
    }
    return std::nullopt;
}

std::string_view to_string(SweepMode mode) noexcept {
    for (const auto& [m, text] : kModes) {
        if (m == mode) return text;
    }
    return "unknown";
}

SweepSpec default_sweep_spec(SweepMode mode) {
    SweepSpec spec;
    spec.mode = mode;
    const Family f = family_of(mode);
    spec.l_list = f == Family::fr ? std::vector<int>{10, 20, 50} : std::vector<int>{10, 20, 50, 80};
    spec.m_list = {0, 1, 2, 5};
    spec.a_list = {0, 1, 2};
    spec.l_max = 80;
    if (mode == SweepMode::fr_vs_l || mode == SweepMode::fr_diag || mode == SweepMode::lmc_diag) {
        spec.l_max = 60;
    }
    if (f == Family::fr || f == Family::custom) spec.q_list = {2.0};
    return spec;
}

void SweepSpec::validate() const {
    quadrature.validate();
    const Axis axis = axis_of(mode);
    if (axis == Axis::custom) {
        if (states.empty()) throw DomainError("custom sweep needs at least one state");
    } else {
        if (dimension < 2) throw DomainError("sweep dimension must be >= 2");
        const auto& list = axis == Axis::vs_m ? l_list : axis == Axis::vs_l ? m_list : a_list;
        if (list.empty()) throw DomainError("sweep range is empty");
        if (std::any_of(list.begin(), list.end(), [](int v) { return v < 0; })) {
            throw DomainError("sweep l, m and a values must be non-negative");
        }
        if (axis != Axis::vs_m && l_max < 0) throw DomainError("sweep l_max must be >= 0");
    }
    if ((family_of(mode) == Family::fr || family_of(mode) == Family::custom) && q_list.empty()) {
        throw DomainError("sweep needs at least one q");
    }
    for (double q : q_list) {
        if (!(q > 0.0) || std::isinf(q)) throw DomainError("sweep q values must be finite and positive");
        if (q == 1.0 && family_of(mode) == Family::fr) {
            throw DomainError("C_FR at q = 1 is C_FS; use an fs mode");
        }
    }
}

std::vector<HyperState> sweep_states(const SweepSpec& spec) {
    spec.validate();
    std::vector<HyperState> out;
    const int D = spec.dimension;
    switch (axis_of(spec.mode)) {
        case Axis::vs_m:
            for (int l : spec.l_list) {
                for (int m = 0; m <= l; ++m) out.push_back(lm_state(D, l, m));
            }
            break;
        case Axis::vs_l:
            for (int m : spec.m_list) {
                for (int l = m; l <= spec.l_max; ++l) out.push_back(lm_state(D, l, m));
            }
            break;
        case Axis::diag:
            for (int a : spec.a_list) {
                for (int l = a; l <= spec.l_max; ++l) out.push_back(lm_state(D, l, l - a));
            }
            break;
        case Axis::custom:
            out = spec.states;
            break;
    }
    if (out.empty()) throw DomainError("sweep grid is empty");
    return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    const std::vector<HyperState> states = sweep_states(spec);
    std::vector<std::vector<SweepRow>> results(states.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(states.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < states.size(); i = next++) {
            try {
                results[i] = evaluate_point(spec, states[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = states.size();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRow> rows;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
    return rows;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    std::string shortest(buf.data(), res.ptr);
    int digits = 0;
    for (char c : shortest) {
        if (c == 'e') break;
        digits += c >= '0' && c <= '9';
    }
    // leading zeros of a fixed-notation fraction are not significant
    const auto first = shortest.find_first_of("123456789");
    const auto dot = shortest.find('.');
    if (first != std::string::npos && dot != std::string::npos && dot < first) digits -= static_cast<int>(first - 1);
    if (digits <= 15) return shortest;
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 15);
    return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.dimension << ',' << r.l << ',' << r.m << ',' << (r.q ? format_number(*r.q) : "") << ','
            << r.measure << ',' << format_number(r.result.value) << ',' << format_number(r.result.abs_error) << ','
            << to_string(r.result.method) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "  {\"D\": " << r.dimension << ", \"l\": " << r.l << ", \"m\": " << r.m
            << ", \"state\": \"" << r.state << "\", \"q\": " << (r.q ? format_number(*r.q) : "null")
            << ", \"measure\": \"" << r.measure << "\", \"value\": " << format_number(r.result.value)
            << ", \"err\": " << format_number(r.result.abs_error) << ", \"method\": \""
            << to_string(r.result.method) << "\", \"converged\": " << (r.result.converged ? "true" : "false")
            << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

}  // namespace hsinfo
