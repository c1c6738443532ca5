#ifndef GSM_CLOSED_FORM_HPP
#define GSM_CLOSED_FORM_HPP

/**
 * @file closed_form.hpp
 * @brief Analytic approximations for the membrane concentration profiles.
 *
 * Two families are provided:
 *
 *  - Short-time transient expressions (vim_*), built from the initial
 *    cosh profile plus a first-order correction linear in tau. They honor
 *    the X = 1 boundary only at tau = 0 and are meant for small times.
 *
 *  - Steady-state profiles (steady_*), cosh-shaped with argument sqrt(k),
 *    where k is the reaction/diffusion group obtained by linearizing the
 *    rate law around the bath state. The trial-solution route (agm_*)
 *    determines the same shape constant m by a root solve of the
 *    collocation constraint at X = 1; analytically m = sqrt(k), so the two
 *    routes coincide up to the root tolerance.
 *
 * The gluconic profile is implemented as w = B_w (1 - cosh(mX)/cosh(m)),
 * which vanishes at X = 1 as the boundary conditions require.
 */

#include "gsm/params.hpp"

namespace gsm {

/// Coefficients shared by the steady closed-form profiles.
struct ClosedFormCoefficients {
    double k;       ///< linearized Thiele group
    double sqrt_k;  ///< cosh-profile argument
    double m;       ///< trial-solution constant from the X = 1 constraint
    double a_v;     ///< oxygen amplitude, gamma_s1 / (2 eta gamma_e1)
    double b_w;     ///< gluconic amplitude, gamma_s1 / (mu gamma_e1)
};

/// k = gamma_e1 / (1 + 1/alpha + 1/beta). Throws for non-positive alpha/beta
/// or negative gamma_e1.
double thiele_k(double gamma_e1, double alpha, double beta);

/// Nonnegative root of F(m) = m^2 - gamma_e1 g(1, 1), the trial-solution
/// constraint collocated at X = 1, solved by a bracketed Newton iteration to
/// |F(m)| < tol. Analytically equal to sqrt(thiele_k).
/// Throws NumericError (with the residual trace and last iterate) if the
/// iteration cap is hit.
double agm_m(double gamma_e1, double alpha, double beta, double tol = 1e-12);

/// Builds all coefficients for p. The amplitudes a_v/b_w are set to 0 when
/// gamma_e1 = 0; the profile functions below reject that case themselves.
ClosedFormCoefficients closed_form_coefficients(const DimensionlessParams& p,
                                                double root_tol = 1e-12);

/// cosh(m X)/cosh(m), the profile shape shared by both steady routes.
double profile_shape(double x, double m);

/// Steady glucose profile cosh(sqrt(k) X)/cosh(sqrt(k)).
double steady_u(double x, const ClosedFormCoefficients& c);

/// Steady oxygen profile A_v cosh(sqrt(k) X)/cosh(sqrt(k)) - (A_v - 1).
/// Throws if gamma_e1 = 0 (amplitude undefined). May return negative values
/// at large A_v; callers flag that, nothing is clamped here.
double steady_v(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c);

/// Steady gluconic acid profile B_w (1 - cosh(sqrt(k) X)/cosh(sqrt(k))).
/// Exactly 0 at X = 1. Throws if gamma_e1 = 0. May exceed 1 (it is scaled by
/// the oxygen bath concentration, not bounded by it).
double steady_w(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c);

/// Steady profiles evaluated with the trial-solution constant m instead of
/// sqrt(k). Identical to steady_* up to the root tolerance.
double agm_u(double x, const ClosedFormCoefficients& c);
double agm_v(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c);
double agm_w(double x, const DimensionlessParams& p, const ClosedFormCoefficients& c);

/// Short-time transient profiles. Valid for small tau; the X = 1 boundary
/// value drifts linearly in tau.
double vim_u(double x, double tau, const DimensionlessParams& p);
double vim_v(double x, double tau, const DimensionlessParams& p);
double vim_w(double x, double tau, const DimensionlessParams& p);

}  // namespace gsm

#endif  // GSM_CLOSED_FORM_HPP
