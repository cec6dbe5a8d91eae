#include "qpd/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpd/errors.hpp"

namespace qpd {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void check_domain(int l, int m, double theta) {
    if (l < 0 || std::abs(m) > l)
        throw DomainError("spherical_harmonic: require 0 <= |m| <= l, got l=" +
                          std::to_string(l) + " m=" + std::to_string(m));
    if (!(theta >= -1e-12 && theta <= std::numbers::pi + 1e-12))
        throw DomainError("spherical_harmonic: theta outside [0, pi]");
}

// Fully normalized P~_l^m(cos theta) such that Y_lm = P~_l^m e^{i m phi}
// integrates to 1 in |.|^2 over the sphere. Upward recurrence in l at fixed
// m >= 0; stable for the moderate orders used here.
double normalized_plm(int l, int m, double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    double pmm = std::sqrt(1.0 / kFourPi);
    for (int k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * st;
    if (l == m) return pmm;
    double pm1 = std::sqrt(2.0 * m + 3.0) * ct * pmm;
    if (l == m + 1) return pm1;
    double plm = 0.0;
    for (int k = m + 2; k <= l; ++k) {
        const double a = std::sqrt((4.0 * k * k - 1.0) / (double(k) * k - double(m) * m));
        const double b = std::sqrt(((k - 1.0) * (k - 1.0) - double(m) * m) /
                                   (4.0 * (k - 1.0) * (k - 1.0) - 1.0));
        plm = a * (ct * pm1 - b * pmm);
        pmm = pm1;
        pm1 = plm;
    }
    return plm;
}

} // namespace

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    check_domain(l, m, theta);
    const int ma = std::abs(m);
    double plm = normalized_plm(l, ma, theta);
    if (m < 0 && (ma % 2 != 0)) plm = -plm; // Y_{l,-m} = (-1)^m conj(Y_lm)
    return std::polar(1.0, m * phi) * plm;
}

double spherical_harmonic_theta(int l, int m, double theta) {
    check_domain(l, m, theta);
    const int ma = std::abs(m);
    double v = normalized_plm(l, ma, theta);
    if (m < 0 && (ma % 2 != 0)) v = -v;
    return v;
}

double spherical_harmonic_theta_deriv(int l, int m, double theta) {
    check_domain(l, m, theta);
    const int ma = std::abs(m);
    const double st = std::sin(theta), ct = std::cos(theta);
    double d = 0.0;
    // Closed forms for the catalog orders (l <= 2).
    if (l == 0) {
        d = 0.0;
    } else if (l == 1 && ma == 0) {
        d = -std::sqrt(3.0 / kFourPi) * st;
    } else if (l == 1 && ma == 1) {
        d = -std::sqrt(3.0 / (2.0 * kFourPi)) * ct;
    } else if (l == 2 && ma == 0) {
        d = std::sqrt(5.0 / (4.0 * kFourPi)) * (-6.0 * ct * st);
    } else if (l == 2 && ma == 1) {
        d = -std::sqrt(15.0 / (2.0 * kFourPi)) * (ct * ct - st * st);
    } else if (l == 2 && ma == 2) {
        d = std::sqrt(15.0 / (8.0 * kFourPi)) * 2.0 * st * ct;
    } else {
        throw DomainError("spherical_harmonic_theta_deriv: only l <= 2 supported");
    }
    if (m < 0 && (ma % 2 != 0)) d = -d;
    return d;
}

double spherical_harmonic_theta_deriv2(int l, int m, double theta) {
    const double st = std::sin(theta);
    const double v = spherical_harmonic_theta(l, m, theta);
    const double d = spherical_harmonic_theta_deriv(l, m, theta);
    if (std::abs(st) < 1e-14) {
        // Polar limit. For m = 0 the Legendre equation gives
        // Theta''(pole) = -l(l+1) Theta(pole)/2; for m != 0 the axis is a
        // node line and the second derivative is not needed there.
        if (m == 0) return -0.5 * double(l) * (l + 1) * v;
        throw NodeError("spherical_harmonic_theta_deriv2: polar axis with m != 0");
    }
    const double cot = std::cos(theta) / st;
    const double mm = double(m) * m;
    return -cot * d + (mm / (st * st) - double(l) * (l + 1)) * v;
}

} // namespace qpd
