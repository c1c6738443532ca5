#ifndef GSM_PARAMS_HPP
#define GSM_PARAMS_HPP

/**
 * @file params.hpp
 * @brief Physical and reduced parameters of the glucose-sensitive membrane
 *        model, plus the enzymatic reaction kinetics.
 *
 * The membrane hosts a glucose-oxidase reaction consuming glucose and oxygen
 * and producing gluconic acid. Transport across the half-thickness l is
 * diffusion plus a two-substrate saturating rate law
 *
 *   R = V_max C_g C_ox / (C_ox (K_g + C_g) + C_g K_ox)
 *
 * All solving happens in reduced variables: concentrations are scaled by the
 * external bath values, distance by l, and time by l^2/D_g. Six dimensionless
 * groups survive the scaling and drive every solver in this library.
 */

#include <cstddef>

namespace gsm {

/// Physical constants of the membrane system (CGS units).
struct DimensionalParams {
    double c_g_star;   ///< glucose concentration in the external solution [mol/cm^3]
    double c_ox_star;  ///< oxygen concentration in the external solution [mol/cm^3]
    double d_g;        ///< glucose diffusion coefficient [cm^2/s]
    double d_ox;       ///< oxygen diffusion coefficient [cm^2/s]
    double d_a;        ///< gluconic acid diffusion coefficient [cm^2/s]
    double k_g;        ///< glucose Michaelis-Menten constant [mol/cm^3]
    double k_ox;       ///< oxygen Michaelis-Menten constant [mol/cm^3]
    double v_max;      ///< maximal reaction rate [mol/(s cm^3)]
    double half_thickness;  ///< membrane half-thickness l [cm]

    /// Throws std::invalid_argument naming the first non-positive field.
    void validate() const;
};

/// Stoichiometric constants of the glucose oxidation reaction.
struct Stoichiometry {
    static constexpr double nu_g = -1.0;
    static constexpr double nu_ox = -0.5;
    static constexpr double nu_a = 1.0;
};

/// The six reduced parameters driving all solvers.
struct DimensionlessParams {
    double alpha;     ///< C_g*/K_g
    double beta;      ///< C_ox*/K_ox
    double gamma_e1;  ///< glucose Thiele parameter, l^2 V_max/(D_g C_g*)
    double gamma_s1;  ///< oxygen/acid Thiele parameter, l^2 V_max/(D_g C_ox*)
    double eta;       ///< D_ox/D_g
    double mu;        ///< D_a/D_g

    /// Throws std::invalid_argument naming the offending field
    /// (alpha, beta, eta, mu must be positive; the Thiele parameters
    /// must be nonnegative).
    void validate() const;
};

/// Reduces the physical constants to the six dimensionless groups.
DimensionlessParams nondimensionalize(const DimensionalParams& p);

/// Two-substrate saturating rate law in physical units [mol/(s cm^3)].
/// Returns 0 at c_g = c_ox = 0 (the limit along any interior ray).
double reaction_rate_dimensional(double c_g, double c_ox, const DimensionalParams& p);

/// Reduced reaction term g(u, v) = u v / (u v + v/alpha + u/beta).
/// Defined as 0 at u = v = 0. Throws std::invalid_argument for negative
/// concentrations or non-positive alpha/beta.
double reaction_term(double u, double v, double alpha, double beta);

struct ReactionDerivatives {
    double dg_du;
    double dg_dv;
};

/// Closed-form partials of the reduced reaction term,
/// dg/du = v^2/(alpha D^2) and dg/dv = u^2/(beta D^2) with
/// D = u v + v/alpha + u/beta. Both are 0 at u = v = 0.
ReactionDerivatives reaction_term_derivatives(double u, double v, double alpha, double beta);

struct InitialValues {
    double u;
    double v;
    double w;
};

/// Initial reduced concentrations at position X in [0, 1]:
/// u = v = cosh(X)/cosh(1), w = 1 - cosh(X)/cosh(1).
InitialValues initial_profile(double x);

namespace detail {

/// Total extension of reaction_term used inside Newton iterations, where
/// trial states may leave the physical domain. Returns 0 whenever the
/// denominator is not positive.
double reaction_term_total(double u, double v, double alpha, double beta) noexcept;

/// Matching total extension of the partials.
ReactionDerivatives reaction_term_derivatives_total(double u, double v, double alpha,
                                                    double beta) noexcept;

}  // namespace detail

}  // namespace gsm

#endif  // GSM_PARAMS_HPP
