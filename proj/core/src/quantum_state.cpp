#include "hsinfo/quantum_state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hsinfo/special_functions.hpp"

namespace hsinfo {
namespace {

int parse_int(std::string_view text, std::string_view literal) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("malformed state literal '" + std::string(literal) + "'", 0);
    }
    return value;
}

}  // namespace

HyperState::HyperState(int dimension, std::vector<int> mu) : dimension_(dimension), mu_(std::move(mu)) {
    if (dimension_ < 2) {
        throw ValidationError("dimension must be at least 2, got " + std::to_string(dimension_), 0);
    }
    if (static_cast<int>(mu_.size()) != dimension_ - 1) {
        throw ValidationError("dimension " + std::to_string(dimension_) + " needs " +
                                  std::to_string(dimension_ - 1) + " hyperquantum numbers, got " +
                                  std::to_string(mu_.size()),
                              0);
    }
    if (dimension_ == 2) {
        return;
    }
    if (mu_.front() < 0) {
        throw ValidationError("l = mu_1 must be non-negative", 1);
    }
    const int last = dimension_ - 2;  // 0-based position of m
    for (int i = 1; i < last; ++i) {
        if (mu_[i] < 0 || mu_[i] > mu_[i - 1]) {
            throw ValidationError("hyperquantum chain violated at index " + std::to_string(i + 1) + ": mu_" +
                                      std::to_string(i) + " = " + std::to_string(mu_[i - 1]) + ", mu_" +
                                      std::to_string(i + 1) + " = " + std::to_string(mu_[i]),
                                  i + 1);
        }
    }
    if (std::abs(mu_[last]) > mu_[last - 1]) {
        throw ValidationError("hyperquantum chain violated at index " + std::to_string(last + 1) + ": |m| = " +
                                  std::to_string(std::abs(mu_[last])) + " exceeds mu_" + std::to_string(last) +
                                  " = " + std::to_string(mu_[last - 1]),
                              last + 1);
    }
}

HyperState HyperState::parse(std::string_view literal) {
    const auto colon = literal.find(':');
    if (colon == std::string_view::npos) {
        throw ValidationError("state literal must look like 'D:mu_1,...,mu_{D-1}', got '" + std::string(literal) +
                                  "'",
                              0);
    }
    const int dimension = parse_int(literal.substr(0, colon), literal);
    std::vector<int> mu;
    std::string_view rest = literal.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        mu.push_back(parse_int(rest.substr(0, comma), literal));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return HyperState(dimension, std::move(mu));
}

std::string HyperState::to_string() const {
    std::string out = std::to_string(dimension_) + ":";
    for (std::size_t i = 0; i < mu_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mu_[i]);
    }
    return out;
}

HyperState validate(int dimension, std::vector<int> mu) {
    return HyperState(dimension, std::move(mu));
}

std::vector<DensityFactor> factorize(const HyperState& state) {
    const int D = state.dimension();
    const auto mu = state.mu();
    std::vector<DensityFactor> factors;
    factors.reserve(D > 2 ? D - 2 : 0);
    for (int j = 1; j <= D - 2; ++j) {
        const int next = (j == D - 2) ? std::abs(mu[j]) : mu[j];
        const double alpha = 0.5 * (D - j - 1);
        factors.push_back({j, mu[j - 1] - next, alpha + next, 2 * next, alpha});
    }
    return factors;
}

std::vector<HyperState> enumerate_states(int dimension, int l_max, bool signed_m) {
    if (dimension < 2) {
        throw ValidationError("dimension must be at least 2, got " + std::to_string(dimension), 0);
    }
    std::vector<HyperState> out;
    if (l_max < 0) return out;
    std::vector<int> mu(dimension - 1, 0);
    // depth-first over mu_1 >= mu_2 >= ... >= |mu_{D-1}|
    auto fill = [&](auto&& self, int pos, int bound) -> void {
        if (pos == dimension - 2) {
            for (int m = signed_m ? -bound : 0; m <= bound; ++m) {
                mu[pos] = m;
                out.emplace_back(dimension, mu);
            }
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            mu[pos] = v;
            self(self, pos + 1, v);
        }
    };
    fill(fill, 0, l_max);
    return out;
}

double density_eval(const HyperState& state, std::span<const double> angles) {
    const int D = state.dimension();
    if (static_cast<int>(angles.size()) != D - 1) {
        throw DomainError("density_eval needs " + std::to_string(D - 1) + " angles");
    }
    for (int j = 0; j < D - 2; ++j) {
        if (!(angles[j] >= 0.0 && angles[j] <= std::numbers::pi)) {
            throw DomainError("theta_" + std::to_string(j + 1) + " must lie in [0, pi]");
        }
    }
    if (!(angles[D - 2] >= 0.0 && angles[D - 2] < 2.0 * std::numbers::pi)) {
        throw DomainError("theta_" + std::to_string(D - 1) + " must lie in [0, 2 pi)");
    }
    double rho = 0.5 / std::numbers::pi;
    for (const auto& f : factorize(state)) {
        const double theta = angles[f.index - 1];
        const double c = gegenbauer_orthonormal(PolySpec(f.degree, f.lambda), std::clamp(std::cos(theta), -1.0, 1.0));
        rho *= c * c * std::pow(std::sin(theta), f.sin_power);
    }
    return rho;
}

}  // namespace hsinfo
