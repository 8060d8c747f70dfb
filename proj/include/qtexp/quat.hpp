#pragma once

#include <array>

namespace qtexp {

/// Real quaternion w + x i + y j + z k. Stored as four independent reals and
/// never normalised behind the caller's back.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion pure(double x, double y, double z) { return {0.0, x, y, z}; }
    static constexpr Quaternion pure(const std::array<double, 3>& v) { return {0.0, v[0], v[1], v[2]}; }

    /// Coefficient over the basis {1, i, j, k}.
    constexpr double operator[](int idx) const
    {
        switch (idx) {
        case 0: return w;
        case 1: return x;
        case 2: return y;
        default: return z;
        }
    }

    constexpr std::array<double, 3> vec() const { return {x, y, z}; }
    constexpr Quaternion pure_part() const { return {0.0, x, y, z}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(double s, const Quaternion& q);
Quaternion operator*(const Quaternion& q, double s);

/// Hamilton product.
Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion operator*(const Quaternion& a, const Quaternion& b);

Quaternion conj(const Quaternion& q);
double norm(const Quaternion& q);
double pure_norm(const Quaternion& q);

/// e^{a + p} = e^a (cos|p| + sin|p|/|p| p).
Quaternion quat_exp(const Quaternion& q);

/// sin(t)/t, series near the removable singularity.
double sinc(double t);

/// (1 - cos t)/t^2, series near zero.
double cosc(double t);

} // namespace qtexp
