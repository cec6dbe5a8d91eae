#ifndef QPD_SPHERICAL_HARMONICS_HPP
#define QPD_SPHERICAL_HARMONICS_HPP

#include <complex>

namespace qpd {

/// Orthonormal spherical harmonic Y_lm(theta, phi) with the Condon-Shortley
/// phase, evaluated by stable normalized-Legendre recurrence.
/// Requires |m| <= l and theta in [0, pi]; throws DomainError otherwise.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Polar factor of Y_lm: Theta_lm(theta) with Y_lm = Theta_lm e^{i m phi}.
/// Real; carries the Condon-Shortley sign for m > 0 and satisfies
/// Theta_{l,-m} = (-1)^m Theta_{l,m}.
double spherical_harmonic_theta(int l, int m, double theta);

/// d Theta_lm / d theta. Supported for l <= 2 (closed forms); the central
/// wave models only need those orders.
double spherical_harmonic_theta_deriv(int l, int m, double theta);

/// d^2 Theta_lm / d theta^2 via the associated Legendre equation:
/// Theta'' = -cot(theta) Theta' + (m^2/sin^2(theta) - l(l+1)) Theta.
double spherical_harmonic_theta_deriv2(int l, int m, double theta);

} // namespace qpd

#endif
