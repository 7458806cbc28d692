#pragma once

/**
 * @file quaternion.hpp
 * @brief Unit quaternions, purely imaginary 3-vectors, the adjoint action
 *        on the imaginary part, and spherical distance.
 */

#include <array>
#include <cmath>

#include "knotrep/errors.hpp"
#include "knotrep/rational_angle.hpp"

namespace knotrep {

struct ImVector {
    double x = 0, y = 0, z = 0;

    constexpr ImVector operator+(const ImVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr ImVector operator-(const ImVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr ImVector operator-() const { return {-x, -y, -z}; }
    constexpr ImVector operator*(double s) const { return {x * s, y * s, z * s}; }
    friend constexpr ImVector operator*(double s, const ImVector& v) { return v * s; }

    constexpr double dot(const ImVector& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr ImVector cross(const ImVector& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    ImVector normalized() const {
        double n = norm();
        return {x / n, y / n, z / n};
    }
    constexpr bool operator==(const ImVector&) const = default;
};

inline constexpr ImVector axis_i{1, 0, 0};
inline constexpr ImVector axis_j{0, 1, 0};
inline constexpr ImVector axis_k{0, 0, 1};

struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;

    static constexpr Quaternion identity() { return {1, 0, 0, 0}; }
    static constexpr Quaternion from_imaginary(const ImVector& v) { return {0, v.x, v.y, v.z}; }

    constexpr ImVector im() const { return {x, y, z}; }
    constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr bool operator==(const Quaternion&) const = default;
};

// Hamilton product. For purely imaginary v, w this is
// -<v,w> + v x w, the cross-product formula.
inline constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return qmul(a, b);
}

inline Quaternion qpow(Quaternion q, long long e) {
    if (e < 0) {
        q = q.conjugate(); // unit quaternions only
        e = -e;
    }
    Quaternion r = Quaternion::identity();
    while (e > 0) {
        if (e & 1)
            r = r * q;
        q = q * q;
        e >>= 1;
    }
    return r;
}

// exp(axis * angle) = cos(angle) + axis * sin(angle)
inline Quaternion exp_im(const ImVector& axis, const RationalAngle& angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw NonUnitAxis("exp_im requires a unit axis");
    const double c = angle.cos(), s = angle.sin();
    return {c, axis.x * s, axis.y * s, axis.z * s};
}

inline Quaternion exp_im(const ImVector& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw NonUnitAxis("exp_im requires a unit axis");
    const double c = std::cos(angle), s = std::sin(angle);
    return {c, axis.x * s, axis.y * s, axis.z * s};
}

struct Mat3 {
    std::array<double, 9> a{}; // row-major

    static constexpr Mat3 zero() { return {}; }
    static constexpr Mat3 identity() {
        Mat3 m;
        m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }

    constexpr double& operator()(int r, int c) { return a[3 * r + c]; }
    constexpr double operator()(int r, int c) const { return a[3 * r + c]; }

    constexpr Mat3 operator+(const Mat3& o) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i)
            m.a[i] = a[i] + o.a[i];
        return m;
    }
    constexpr Mat3 operator-(const Mat3& o) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i)
            m.a[i] = a[i] - o.a[i];
        return m;
    }
    constexpr Mat3 operator*(double s) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i)
            m.a[i] = a[i] * s;
        return m;
    }
    constexpr Mat3 operator*(const Mat3& o) const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                double s = 0;
                for (int k = 0; k < 3; ++k)
                    s += (*this)(r, k) * o(k, c);
                m(r, c) = s;
            }
        return m;
    }
    constexpr ImVector operator*(const ImVector& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }
    constexpr Mat3 transposed() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m(r, c) = (*this)(c, r);
        return m;
    }
    double max_abs() const {
        double m = 0;
        for (double v : a)
            m = std::max(m, std::abs(v));
        return m;
    }
};

// Rotation matrix R with R*v = Im(q v q^-1); orthogonal with det 1.
inline Mat3 adjoint_matrix(const Quaternion& q) {
    if (std::abs(q.norm() - 1.0) > 1e-9)
        throw NonUnitQuaternion("adjoint_matrix requires a unit quaternion");
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    Mat3 m;
    m.a = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
           2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
    return m;
}

inline double sphere_distance(const ImVector& u, const ImVector& v) {
    if (std::abs(u.norm() - 1.0) > 1e-9 || std::abs(v.norm() - 1.0) > 1e-9)
        throw NonUnitInput("sphere_distance requires unit vectors");
    double c = u.dot(v);
    c = std::max(-1.0, std::min(1.0, c));
    return std::acos(c);
}

} // namespace knotrep
