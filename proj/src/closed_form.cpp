#include "gsm/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsm/errors.hpp"

namespace gsm {

namespace {

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("x must lie in [0, 1]");
    }
}

void check_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

double oxygen_profile(double shape, double a_v) { return a_v * shape - (a_v - 1.0); }

}  // namespace

double thiele_k(double gamma_e1, double alpha, double beta) {
    check_alpha_beta(alpha, beta);
    if (!(gamma_e1 >= 0.0)) throw std::invalid_argument("gamma_e1 must be nonnegative");
    return gamma_e1 / (1.0 + 1.0 / alpha + 1.0 / beta);
}

double agm_m(double gamma_e1, double alpha, double beta, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const double k = thiele_k(gamma_e1, alpha, beta);
    if (k == 0.0) return 0.0;  // no reaction, flat profile

    // F(m) = m^2 - k is monotone in m >= 0; keep Newton inside [lo, hi].
    double lo = 0.0;
    double hi = std::sqrt(gamma_e1) + 1.0;
    double m = 0.5 * hi;
    std::vector<double> trace;
    constexpr int max_iters = 100;
    for (int it = 0; it < max_iters; ++it) {
        const double f = m * m - k;
        trace.push_back(std::abs(f));
        if (std::abs(f) < tol) return m;
        if (f > 0.0) {
            hi = m;
        } else {
            lo = m;
        }
        double next = (m > 0.0) ? m - f / (2.0 * m) : lo + 0.5 * (hi - lo);
        if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);  // bisection fallback
        m = next;
    }
    throw NumericError("agm_m: root iteration did not converge", trace, m);
}

ClosedFormCoefficients closed_form_coefficients(const DimensionlessParams& p, double root_tol) {
    p.validate();
    const double k = thiele_k(p.gamma_e1, p.alpha, p.beta);
    const double m = agm_m(p.gamma_e1, p.alpha, p.beta, root_tol);
    const bool reacting = p.gamma_e1 > 0.0;
    return ClosedFormCoefficients{
        .k = k,
        .sqrt_k = std::sqrt(k),
        .m = m,
        .a_v = reacting ? p.gamma_s1 / (2.0 * p.eta * p.gamma_e1) : 0.0,
        .b_w = reacting ? p.gamma_s1 / (p.mu * p.gamma_e1) : 0.0,
    };
}

double profile_shape(double x, double m) {
    check_x(x);
    return std::cosh(m * x) / std::cosh(m);
}

double steady_u(double x, const ClosedFormCoefficients& c) { return profile_shape(x, c.sqrt_k); }

double steady_v(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c) {
    if (!(p.gamma_e1 > 0.0)) {
        throw std::invalid_argument("gamma_e1 must be positive: oxygen amplitude undefined");
    }
    return oxygen_profile(profile_shape(x, c.sqrt_k), c.a_v);
}

double steady_w(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c) {
    if (!(p.gamma_e1 > 0.0)) {
        throw std::invalid_argument("gamma_e1 must be positive: gluconic amplitude undefined");
    }
    return c.b_w * (1.0 - profile_shape(x, c.sqrt_k));
}

double agm_u(double x, const ClosedFormCoefficients& c) { return profile_shape(x, c.m); }

double agm_v(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c) {
    if (!(p.gamma_e1 > 0.0)) {
        throw std::invalid_argument("gamma_e1 must be positive: oxygen amplitude undefined");
    }
    return oxygen_profile(profile_shape(x, c.m), c.a_v);
}

double agm_w(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c) {
    if (!(p.gamma_e1 > 0.0)) {
        throw std::invalid_argument("gamma_e1 must be positive: gluconic amplitude undefined");
    }
    return c.b_w * (1.0 - profile_shape(x, c.m));
}

namespace {

// Correction kernel shared by the transient expressions:
// gamma alpha beta cosh(X) / (alpha beta cosh(X) + (alpha + beta) cosh(1)).
double vim_fraction(double x, double gamma, double alpha, double beta) {
    const double c = std::cosh(x);
    return alpha * beta * gamma * c / (alpha * beta * c + (alpha + beta) * std::cosh(1.0));
}

void check_vim_args(double x, double tau, const DimensionlessParams& p) {
    check_x(x);
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
    p.validate();
}

}  // namespace

double vim_u(double x, double tau, const DimensionlessParams& p) {
    check_vim_args(x, tau, p);
    const double ratio = std::cosh(x) / std::cosh(1.0);
    return ratio * (1.0 + tau) - vim_fraction(x, p.gamma_e1, p.alpha, p.beta) * tau;
}

double vim_v(double x, double tau, const DimensionlessParams& p) {
    check_vim_args(x, tau, p);
    const double ratio = std::cosh(x) / std::cosh(1.0);
    return ratio * (1.0 + p.eta * tau) - 0.5 * vim_fraction(x, p.gamma_s1, p.alpha, p.beta) * tau;
}

double vim_w(double x, double tau, const DimensionlessParams& p) {
    check_vim_args(x, tau, p);
    const double ratio = std::cosh(x) / std::cosh(1.0);
    return 1.0 - ratio * (1.0 + p.mu * tau) + vim_fraction(x, p.gamma_s1, p.alpha, p.beta) * tau;
}

}  // namespace gsm
