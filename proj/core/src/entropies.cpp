#include "hsinfo/entropies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hsinfo/gauss_jacobi.hpp"
#include "hsinfo/special_functions.hpp"

namespace hsinfo {
namespace {

// One integration piece [left, right]. The Gauss-Jacobi rule absorbs
// (x - left)^left_exp (right - x)^right_exp; the integrand callback returns the rest.
// A "boundary" end is -1 or +1; otherwise the end is a polynomial zero.
struct Piece {
    double left;
    double right;
    double left_exp;
    double right_exp;
    bool left_boundary;
    bool right_boundary;
};

// Node location with accurate distances to both ends of its piece.
struct Point {
    double x;
    double to_left;
    double to_right;

    double one_plus(const Piece& p) const { return p.left_boundary ? to_left : 1.0 + x; }
    double one_minus(const Piece& p) const { return p.right_boundary ? to_right : 1.0 - x; }
};

struct Integral {
    double value = 0.0;
    double abs_error = 0.0;
    bool converged = true;
};

template <class F>
double integrate_piece(const Piece& piece, int nodes, F& f) {
    const GaussJacobiRule& rule = gauss_jacobi(nodes, piece.right_exp, piece.left_exp);
    const double h = 0.5 * (piece.right - piece.left);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        const double dl = h * (1.0 + t);
        const double dr = h * (1.0 - t);
        const double x = std::clamp(piece.left + dl, -1.0, 1.0);
        sum += rule.weights[i] * f(piece, Point{x, dl, dr});
    }
    return sum * std::exp(rule.log_mass + (piece.left_exp + piece.right_exp + 1.0) * std::log(h));
}

// Greedy refinement: every piece starts with two levels; the piece whose levels disagree
// most is doubled until the summed disagreement meets the tolerance or max_nodes is hit.
template <class F>
Integral integrate_pieces(const std::vector<Piece>& pieces, F&& f, const QuadratureSpec& spec) {
    struct State {
        int nodes;
        double coarse;
        double fine;
    };
    const int first_fine = std::min(2 * spec.initial_nodes, spec.max_nodes);
    std::vector<State> states;
    states.reserve(pieces.size());
    for (const auto& p : pieces) {
        const int coarse_nodes = std::max(1, first_fine / 2);
        states.push_back({first_fine, integrate_piece(p, coarse_nodes, f), integrate_piece(p, first_fine, f)});
    }
    while (true) {
        double total = 0.0, scale = 0.0, err = 0.0;
        std::size_t worst = pieces.size();
        double worst_diff = -1.0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            total += states[i].fine;
            scale += std::abs(states[i].fine);
            const double diff = std::abs(states[i].fine - states[i].coarse);
            err += diff;
            if (diff > worst_diff && 2 * states[i].nodes <= spec.max_nodes) {
                worst_diff = diff;
                worst = i;
            }
        }
        const double target = spec.rel_tol * std::max(std::abs(total), scale);
        if (err <= target) {
            return {total, err, true};
        }
        if (worst == pieces.size() || worst_diff <= 0.0) {
            return {total, err, false};
        }
        State& s = states[worst];
        s.nodes *= 2;
        s.coarse = s.fine;
        s.fine = integrate_piece(pieces[worst], s.nodes, f);
    }
}

// Pieces of [-1, 1] split at the zeros of the factor's Gegenbauer polynomial.
std::vector<Piece> split_at_zeros(const DensityFactor& f, double boundary_exp, double zero_exp) {
    const std::vector<double> zeros = gegenbauer_zeros(f.degree, f.lambda);
    std::vector<Piece> pieces;
    pieces.reserve(zeros.size() + 1);
    double left = -1.0;
    bool left_boundary = true;
    for (std::size_t i = 0; i <= zeros.size(); ++i) {
        const bool right_boundary = i == zeros.size();
        const double right = right_boundary ? 1.0 : zeros[i];
        pieces.push_back({left, right, left_boundary ? boundary_exp : zero_exp,
                          right_boundary ? boundary_exp : zero_exp, left_boundary, right_boundary});
        left = right;
        left_boundary = false;
    }
    return pieces;
}

// int_{-1}^{1} |C(x)|^{2q} (1-x^2)^{q mu' + alpha - 1/2} dx
Integral factor_moment(const DensityFactor& factor, double q, const QuadratureSpec& spec) {
    const PolySpec poly(factor.degree, factor.lambda);
    const double weight_exp = q * factor.mu_next() + factor.alpha - 0.5;
    auto integrand = [&](const Piece& p, const Point& pt) {
        double ratio = gegenbauer_orthonormal(poly, pt.x);
        if (!p.left_boundary) ratio /= pt.to_left;
        if (!p.right_boundary) ratio /= pt.to_right;
        double v = std::pow(std::abs(ratio), 2.0 * q);
        if (weight_exp != 0.0) {
            if (!p.left_boundary) v *= std::pow(pt.one_plus(p), weight_exp);
            if (!p.right_boundary) v *= std::pow(pt.one_minus(p), weight_exp);
        }
        return v;
    };
    return integrate_pieces(split_at_zeros(factor, weight_exp, 2.0 * q), integrand, spec);
}

// -int p_j log g_j, with p_j = C^2 (1-x^2)^{lambda-1/2} and g_j = C^2 (1-x^2)^{mu'}.
Integral factor_shannon(const DensityFactor& factor, const QuadratureSpec& spec) {
    const PolySpec poly(factor.degree, factor.lambda);
    const double weight_exp = factor.weight_exponent();
    const double mu = factor.mu_next();
    auto integrand = [&](const Piece& p, const Point& pt) {
        const double c = gegenbauer_orthonormal(poly, pt.x);
        if (c == 0.0) return 0.0;
        const double one_plus = pt.one_plus(p);
        const double one_minus = pt.one_minus(p);
        double log_g = 2.0 * std::log(std::abs(c));
        if (mu != 0.0) log_g += mu * (std::log(one_plus) + std::log(one_minus));
        double v = c * c;
        if (weight_exp != 0.0) {
            if (!p.left_boundary) v *= std::pow(one_plus, weight_exp);
            if (!p.right_boundary) v *= std::pow(one_minus, weight_exp);
        }
        return -v * log_g;
    };
    return integrate_pieces(split_at_zeros(factor, weight_exp, 0.0), integrand, spec);
}

ScalarResult make_result(Integral in) {
    return {in.value, in.abs_error, Method::quadrature, in.converged};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (initial_nodes < 8) {
        throw DomainError("QuadratureSpec.initial_nodes must be at least 8");
    }
    if (max_nodes < initial_nodes) {
        throw DomainError("QuadratureSpec.max_nodes must be >= initial_nodes");
    }
    if (!(rel_tol > 0.0)) {
        throw DomainError("QuadratureSpec.rel_tol must be positive");
    }
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::exact: return "exact";
        case Method::quadrature: return "quadrature";
        case Method::closed_form: return "closed-form";
    }
    return "unknown";
}

ScalarResult entropic_moment_quadrature(const HyperState& state, double q, const QuadratureSpec& spec) {
    spec.validate();
    if (!(q > 0.0) || std::isinf(q)) {
        throw DomainError("entropic moments need a finite q > 0");
    }
    double log_value = (1.0 - q) * std::log(2.0 * std::numbers::pi);
    double rel_error = 0.0;
    bool converged = true;
    for (const auto& f : factorize(state)) {
        const Integral in = factor_moment(f, q, spec);
        log_value += std::log(in.value);
        rel_error += in.abs_error / in.value;
        converged = converged && in.converged;
    }
    const double value = std::exp(log_value);
    return {value, value * rel_error, Method::quadrature, converged};
}

ScalarResult shannon_entropy(const HyperState& state, const QuadratureSpec& spec) {
    spec.validate();
    Integral total{std::log(2.0 * std::numbers::pi), 0.0, true};
    for (const auto& f : factorize(state)) {
        const Integral in = factor_shannon(f, spec);
        total.value += in.value;
        total.abs_error += in.abs_error;
        total.converged = total.converged && in.converged;
    }
    return make_result(total);
}

ScalarResult fisher_numeric(const HyperState& state, const QuadratureSpec& spec) {
    spec.validate();
    if (state.dimension() < 3) {
        throw DomainError("fisher_numeric requires D >= 3");
    }
    // F = sum_j A_j prod_{k<j} B_k, where
    //   A_j = int p_j (d_theta log g_j)^2 dtheta,   B_k = int p_k / sin^2(theta) dtheta.
    const auto factors = factorize(state);
    Integral result{0.0, 0.0, true};
    double prefix = 1.0;
    double prefix_rel = 0.0;
    for (const auto& f : factors) {
        const PolySpec poly(f.degree, f.lambda);
        const double mu = f.mu_next();
        // With x = cos(theta): (d_theta g / g)^2 g (sin theta)^{2 alpha} dtheta
        //   = 4 (1-x^2)^{lambda-3/2} [ (1-x^2) C' - mu x C ]^2 dx.
        // For mu = 0 one factor (1-x^2) is moved out of the weight to keep it integrable.
        const double exp_a = mu > 0 ? f.lambda - 1.5 : f.lambda - 0.5;
        auto a_integrand = [&](const Piece&, const Point& pt) {
            const PolyValue c = gegenbauer_orthonormal_with_derivative(poly, pt.x);
            const double one_minus_sq = pt.to_left * pt.to_right;
            if (mu > 0) {
                const double t = one_minus_sq * c.derivative - mu * pt.x * c.value;
                return 4.0 * t * t;
            }
            return 4.0 * one_minus_sq * c.derivative * c.derivative;
        };
        const std::vector<Piece> whole{{-1.0, 1.0, exp_a, exp_a, true, true}};
        const Integral a = integrate_pieces(whole, a_integrand, spec);
        result.value += prefix * a.value;
        result.abs_error += prefix * a.abs_error + std::abs(a.value) * prefix * prefix_rel;
        result.converged = result.converged && a.converged;

        if (f.index < static_cast<int>(factors.size())) {
            const double exp_b = f.lambda - 1.5;
            auto b_integrand = [&](const Piece&, const Point& pt) {
                const double c = gegenbauer_orthonormal(poly, pt.x);
                return c * c;
            };
            const std::vector<Piece> whole_b{{-1.0, 1.0, exp_b, exp_b, true, true}};
            const Integral b = integrate_pieces(whole_b, b_integrand, spec);
            prefix *= b.value;
            prefix_rel += b.abs_error / b.value;
            result.converged = result.converged && b.converged;
        }
    }
    return make_result(result);
}

}  // namespace hsinfo
