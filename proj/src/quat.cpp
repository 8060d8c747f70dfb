#include "qtexp/quat.hpp"

#include <cmath>

namespace qtexp {

namespace {

constexpr double kSeriesCutoff = 1e-4;

} // namespace

Quaternion operator+(const Quaternion& a, const Quaternion& b)
{
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b)
{
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }

Quaternion operator*(const Quaternion& q, double s) { return s * q; }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b)
{
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

double norm(const Quaternion& q) { return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z); }

double pure_norm(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

double sinc(double t)
{
    if (std::abs(t) < kSeriesCutoff) {
        // 1 - t^2/3! + t^4/5! - t^6/7! + t^8/9! - t^10/11!
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0 * (1.0 - t2 / 110.0))));
    }
    return std::sin(t) / t;
}

double cosc(double t)
{
    if (std::abs(t) < kSeriesCutoff) {
        // 1/2! - t^2/4! + t^4/6! - t^6/8! + t^8/10! - t^10/12!
        const double t2 = t * t;
        return 0.5 * (1.0 - t2 / 12.0 * (1.0 - t2 / 30.0 * (1.0 - t2 / 56.0 * (1.0 - t2 / 90.0 * (1.0 - t2 / 132.0)))));
    }
    return (1.0 - std::cos(t)) / (t * t);
}

Quaternion quat_exp(const Quaternion& q)
{
    const double theta = pure_norm(q);
    const double scale = std::exp(q.w);
    const double s = scale * sinc(theta);
    return {scale * std::cos(theta), s * q.x, s * q.y, s * q.z};
}

} // namespace qtexp
