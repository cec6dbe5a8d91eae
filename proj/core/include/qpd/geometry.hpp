#ifndef QPD_GEOMETRY_HPP
#define QPD_GEOMETRY_HPP

#include <algorithm>
#include <cmath>

namespace qpd {

/// Cartesian 3-vector. One-dimensional models use the x component and keep
/// y = z = 0.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator*(const Vec3& a, double s) { return s * a; }
    friend Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& b) { x += b.x; y += b.y; z += b.z; return *this; }
    bool operator==(const Vec3&) const = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Spherical coordinates with z = r cos(theta), polar angle theta in [0, pi].
struct Spherical {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

inline Spherical to_spherical(const Vec3& p) {
    Spherical s;
    s.r = norm(p);
    s.theta = s.r > 0.0 ? std::acos(std::clamp(p.z / s.r, -1.0, 1.0)) : 0.0;
    s.phi = std::atan2(p.y, p.x);
    return s;
}

inline Vec3 from_spherical(const Spherical& s) {
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    return {s.r * st * std::cos(s.phi), s.r * st * std::sin(s.phi), s.r * ct};
}

/// Unit vectors of the spherical frame at angles (theta, phi).
struct SphericalFrame {
    Vec3 er, etheta, ephi;
};

inline SphericalFrame spherical_frame(double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {{st * cp, st * sp, ct}, {ct * cp, ct * sp, -st}, {-sp, cp, 0.0}};
}

/// Assemble a Cartesian vector from physical spherical components
/// (v_r, v_theta, v_phi) at angles (theta, phi).
inline Vec3 from_spherical_components(double vr, double vtheta, double vphi,
                                      double theta, double phi) {
    const SphericalFrame f = spherical_frame(theta, phi);
    return vr * f.er + vtheta * f.etheta + vphi * f.ephi;
}

} // namespace qpd

#endif
