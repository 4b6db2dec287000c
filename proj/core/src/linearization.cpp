#include "hsinfo/linearization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "mpfr_scalar.hpp"

namespace hsinfo {
namespace {

using detail::BigFloat;

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Target bound on the relative rounding error of the collapsed sum, as a power of two.
constexpr long kTargetBits = 62;

double log_sum_exp(const std::vector<double>& logs) {
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - top);
    return top + std::log(acc);
}

// sum_K [P^r]_K (gamma+1)_K / (gamma+delta+2)_K at the given working precision.
BigFloat collapse(const SDParams& p, long prec) {
    const int n = p.n;
    const mpfr_prec_t mp = static_cast<mpfr_prec_t>(prec);

    BigFloat ab(mp, p.alpha);
    mpfr_add_d(ab.get(), ab.get(), p.beta, MPFR_RNDN);
    BigFloat num(mp), den(mp), tmp(mp);

    std::vector<BigFloat> t;
    t.reserve(n + 1);
    t.emplace_back(mp, 1.0);
    for (int j = 1; j <= n; ++j) {
        // t_j = t_{j-1} (j-1-n) (alpha+beta+n+j) / ((alpha+j) j)
        mpfr_add_si(num.get(), ab.get(), n + j, MPFR_RNDN);
        mpfr_mul_si(num.get(), num.get(), j - 1 - n, MPFR_RNDN);
        mpfr_set_d(den.get(), p.alpha, MPFR_RNDN);
        mpfr_add_si(den.get(), den.get(), j, MPFR_RNDN);
        mpfr_mul_si(den.get(), den.get(), j, MPFR_RNDN);
        BigFloat tj(mp);
        mpfr_mul(tj.get(), t.back().get(), num.get(), MPFR_RNDN);
        mpfr_div(tj.get(), tj.get(), den.get(), MPFR_RNDN);
        t.push_back(std::move(tj));
    }

    std::vector<BigFloat> power;
    power.reserve(static_cast<std::size_t>(p.r) * n + 1);
    for (const auto& c : t) {
        BigFloat copy(mp);
        mpfr_set(copy.get(), c.get(), MPFR_RNDN);
        power.push_back(std::move(copy));
    }
    for (int step = 1; step < p.r; ++step) {
        std::vector<BigFloat> next;
        const std::size_t size = power.size() + n;
        next.reserve(size);
        for (std::size_t k = 0; k < size; ++k) next.emplace_back(mp);
        for (std::size_t a = 0; a < power.size(); ++a) {
            for (int b = 0; b <= n; ++b) {
                mpfr_fma(next[a + b].get(), power[a].get(), t[b].get(), next[a + b].get(), MPFR_RNDN);
            }
        }
        power = std::move(next);
    }

    BigFloat ratio(mp, 1.0);
    BigFloat sum(mp);
    for (std::size_t k = 0; k < power.size(); ++k) {
        if (k > 0) {
            // ratio_k = ratio_{k-1} (gamma+k) / (gamma+delta+1+k)
            mpfr_set_d(num.get(), p.gamma, MPFR_RNDN);
            mpfr_add_si(num.get(), num.get(), static_cast<long>(k), MPFR_RNDN);
            mpfr_set_d(den.get(), p.gamma, MPFR_RNDN);
            mpfr_add_d(den.get(), den.get(), p.delta, MPFR_RNDN);
            mpfr_add_si(den.get(), den.get(), static_cast<long>(k) + 1, MPFR_RNDN);
            mpfr_mul(ratio.get(), ratio.get(), num.get(), MPFR_RNDN);
            mpfr_div(ratio.get(), ratio.get(), den.get(), MPFR_RNDN);
        }
        mpfr_fma(sum.get(), power[k].get(), ratio.get(), sum.get(), MPFR_RNDN);
    }
    return sum;
}

void check_params(const SDParams& p) {
    if (p.r < 1 || p.n < 0) {
        throw DomainError("sd_coefficient requires r >= 1 and n >= 0");
    }
    if (!(p.alpha > -1.0) || !(p.beta > -1.0) || !(p.gamma > -1.0) || !(p.delta > -1.0)) {
        throw DomainError("sd_coefficient requires alpha, beta, gamma, delta > -1");
    }
}

MomentValue moment_product(const HyperState& state, int q) {
    const double log_two_pi = std::log(2.0 * std::numbers::pi);
    LogSigned value = LogSigned::from_log((1.0 - q) * log_two_pi);
    double rel_error = 0.0;
    for (const auto& f : factorize(state)) {
        const double a = f.weight_exponent();
        const double g = f.alpha + q * f.mu_next() - 0.5;
        const SDResult b = beta0(f.index, q, state);
        const LogSigned d0 = jacobi_norm(0, g, g);
        const LogSigned dn = jacobi_norm(f.degree, a, a);
        value = value * b.value * d0.pow(2.0) / dn.pow(2.0 * q);
        rel_error += b.rel_error + 8.0 * kEps * (1.0 + std::abs(d0.log_magnitude) + 2.0 * q * std::abs(dn.log_magnitude));
    }
    rel_error += 4.0 * kEps * (1.0 + std::abs(value.log_magnitude));
    return {value, rel_error, q, state};
}

}  // namespace

SDResult sd_coefficient_detailed(const SDParams& p) {
    check_params(p);
    if (p.n == 0) {
        return {LogSigned::one(), 0.0, 0};
    }
    const int n = p.n;

    // log|t_j| in double to size the working precision.
    std::vector<double> log_abs_t(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) {
        log_abs_t[j] = log_abs_t[j - 1] + std::log(static_cast<double>(n - j + 1)) +
                       std::log(p.alpha + p.beta + n + j) - std::log(p.alpha + j) - std::log(static_cast<double>(j));
    }
    const double log2_sum_abs = log_sum_exp(log_abs_t) / std::numbers::ln2;
    const double magnitude_bits = p.r * std::max(0.0, log2_sum_abs);
    const double log2_ops = std::log2(8.0 * p.r * (static_cast<double>(p.r) * n + 1.0));

    long prec = 64 + static_cast<long>(std::ceil(magnitude_bits + log2_ops)) + kTargetBits;
    for (int attempt = 0;; ++attempt) {
        BigFloat sum = collapse(p, prec);
        if (mpfr_zero_p(sum.get())) {
            if (attempt >= 3) {
                return {LogSigned::zero(), std::numeric_limits<double>::infinity(), prec};
            }
            prec *= 2;
            continue;
        }
        BigFloat abs_log(static_cast<mpfr_prec_t>(prec));
        mpfr_abs(abs_log.get(), sum.get(), MPFR_RNDN);
        mpfr_log2(abs_log.get(), abs_log.get(), MPFR_RNDN);
        const double log2_sum = mpfr_get_d(abs_log.get(), MPFR_RNDN);
        const double rel_log2 = log2_ops + magnitude_bits - static_cast<double>(prec) - log2_sum;
        if (rel_log2 > -static_cast<double>(kTargetBits) && attempt < 4) {
            prec += static_cast<long>(std::ceil(rel_log2)) + kTargetBits + 32;
            continue;
        }
        const double log_binom = log_gamma(n + p.alpha + 1.0) - log_gamma(n + 1.0) - log_gamma(p.alpha + 1.0);
        LogSigned value{log2_sum * std::numbers::ln2 + p.r * log_binom, mpfr_sgn(sum.get()) > 0 ? 1 : -1};
        const double rel = std::exp2(rel_log2) + 4.0 * kEps * (1.0 + std::abs(value.log_magnitude));
        return {value, rel, prec};
    }
}

LogSigned sd_coefficient(const SDParams& params) {
    return sd_coefficient_detailed(params).value;
}

SDResult beta0(int j, int q, const HyperState& state) {
    const int D = state.dimension();
    if (j < 1 || j > D - 2) {
        throw DomainError("beta0 factor index " + std::to_string(j) + " out of range 1.." + std::to_string(D - 2));
    }
    if (q < 1) {
        throw UnsupportedOrder("beta0 requires an integer order q >= 1");
    }
    const DensityFactor f = factorize(state)[j - 1];
    const double a = f.weight_exponent();
    const double g = f.alpha + q * f.mu_next() - 0.5;
    return sd_coefficient_detailed({2 * q, f.degree, a, a, g, g});
}

MomentValue entropic_moment_exact(const HyperState& state, int q) {
    if (q < 1) {
        throw UnsupportedOrder("exact entropic moments need an integer q >= 1; use the quadrature path");
    }
    if (q == 1) {
        return {LogSigned::one(), 0.0, 1, state};
    }
    return moment_product(state, q);
}

MomentValue entropic_moment_exact(const HyperState& state, double q) {
    if (!(q >= 1.0) || std::floor(q) != q || q > std::numeric_limits<int>::max()) {
        throw UnsupportedOrder("exact entropic moments need an integer q >= 1; use the quadrature path");
    }
    return entropic_moment_exact(state, static_cast<int>(q));
}

MomentValue entropic_moment_linearized(const HyperState& state, int q) {
    if (q < 1) {
        throw UnsupportedOrder("exact entropic moments need an integer q >= 1");
    }
    return moment_product(state, q);
}

}  // namespace hsinfo
