#ifndef HSINFO_TESTS_SD_ENUMERATION_HPP
#define HSINFO_TESTS_SD_ENUMERATION_HPP

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

struct SdEnumeration {
    double value;
    double abs_sum;  // binom^r * sum of |terms|: the scale the cancellation starts from

    // Relative agreement, floored at 1e-20 of the term scale so identically-zero
    // coefficients (odd r with symmetric parameters) compare on an absolute footing.
    double error_of(double got) const {
        return std::abs(got - value) / std::max(std::abs(value), 1e-20 * abs_sum);
    }
};

// Literal r-fold sum for c(r, n, alpha, beta, gamma, delta), no collapse, in 50-digit
// floating point. Only meant for the small r and n where (n+1)^r terms are affordable.
inline SdEnumeration sd_enumerate(int r, int n, double alpha, double beta, double gamma, double delta) {
    using F = boost::multiprecision::cpp_bin_float_50;
    auto rising = [](F a, int k) {
        F p = 1;
        for (int i = 0; i < k; ++i) p *= a + i;
        return p;
    };
    std::vector<F> t(n + 1);
    for (int j = 0; j <= n; ++j) {
        t[j] = rising(F(-n), j) * rising(F(alpha) + beta + n + 1, j) / (rising(F(alpha) + 1, j) * rising(F(1), j));
    }
    const F binom = rising(F(alpha) + 1, n) / rising(F(1), n);  // binom(n+alpha, n)
    std::vector<int> idx(r, 0);
    F sum = 0, abs_sum = 0;
    while (true) {
        int J = 0;
        F prod = 1;
        for (int i = 0; i < r; ++i) {
            J += idx[i];
            prod *= t[idx[i]];
        }
        const F term = rising(F(gamma) + 1, J) / rising(F(gamma) + delta + 2, J) * prod;
        sum += term;
        abs_sum += abs(term);
        int pos = 0;
        while (pos < r && ++idx[pos] > n) idx[pos++] = 0;
        if (pos == r) break;
    }
    const F scale = pow(binom, r);
    return {static_cast<double>(scale * sum), static_cast<double>(scale * abs_sum)};
}

#endif
