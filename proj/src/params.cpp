#include "gsm/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gsm {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

void require_nonnegative(double value, const char* name) {
    if (!(value >= 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
    }
}

}  // namespace

void DimensionalParams::validate() const {
    require_positive(c_g_star, "c_g_star");
    require_positive(c_ox_star, "c_ox_star");
    require_positive(d_g, "d_g");
    require_positive(d_ox, "d_ox");
    require_positive(d_a, "d_a");
    require_positive(k_g, "k_g");
    require_positive(k_ox, "k_ox");
    require_positive(v_max, "v_max");
    require_positive(half_thickness, "half_thickness");
}

void DimensionlessParams::validate() const {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_nonnegative(gamma_e1, "gamma_e1");
    require_nonnegative(gamma_s1, "gamma_s1");
    require_positive(eta, "eta");
    require_positive(mu, "mu");
}

DimensionlessParams nondimensionalize(const DimensionalParams& p) {
    p.validate();
    const double l2_vmax = p.half_thickness * p.half_thickness * p.v_max;
    return DimensionlessParams{
        .alpha = p.c_g_star / p.k_g,
        .beta = p.c_ox_star / p.k_ox,
        .gamma_e1 = l2_vmax / (p.d_g * p.c_g_star),
        .gamma_s1 = l2_vmax / (p.d_g * p.c_ox_star),
        .eta = p.d_ox / p.d_g,
        .mu = p.d_a / p.d_g,
    };
}

double reaction_rate_dimensional(double c_g, double c_ox, const DimensionalParams& p) {
    // Only the kinetics constants matter here; K = 0 is allowed so the
    // saturation limit R -> V_max can be probed directly.
    require_nonnegative(p.k_g, "k_g");
    require_nonnegative(p.k_ox, "k_ox");
    require_nonnegative(p.v_max, "v_max");
    if (c_g < 0.0) throw std::invalid_argument("c_g must be nonnegative");
    if (c_ox < 0.0) throw std::invalid_argument("c_ox must be nonnegative");
    const double den = c_ox * (p.k_g + c_g) + c_g * p.k_ox;
    if (den <= 0.0) return 0.0;
    return p.v_max * c_g * c_ox / den;
}

double reaction_term(double u, double v, double alpha, double beta) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    if (u < 0.0) throw std::invalid_argument("u must be nonnegative");
    if (v < 0.0) throw std::invalid_argument("v must be nonnegative");
    return detail::reaction_term_total(u, v, alpha, beta);
}

ReactionDerivatives reaction_term_derivatives(double u, double v, double alpha, double beta) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    if (u < 0.0) throw std::invalid_argument("u must be nonnegative");
    if (v < 0.0) throw std::invalid_argument("v must be nonnegative");
    return detail::reaction_term_derivatives_total(u, v, alpha, beta);
}

InitialValues initial_profile(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("x must lie in [0, 1]");
    }
    const double ratio = std::cosh(x) / std::cosh(1.0);
    return InitialValues{ratio, ratio, 1.0 - ratio};
}

namespace detail {

double reaction_term_total(double u, double v, double alpha, double beta) noexcept {
    const double den = u * v + v / alpha + u / beta;
    if (den <= 0.0) return 0.0;
    return u * v / den;
}

ReactionDerivatives reaction_term_derivatives_total(double u, double v, double alpha,
                                                    double beta) noexcept {
    const double den = u * v + v / alpha + u / beta;
    if (den <= 0.0) return ReactionDerivatives{0.0, 0.0};
    const double den2 = den * den;
    return ReactionDerivatives{v * v / (alpha * den2), u * u / (beta * den2)};
}

}  // namespace detail

}  // namespace gsm
