#include "qtexp/smalllin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace qtexp {

namespace {

constexpr double kPhiSeriesCutoff = 1e-8;

// sqrt(r) e^{i theta/2} with theta taken in [0, 2 pi).
cplx branch_sqrt(cplx x)
{
    double theta = std::arg(x);
    if (theta < 0.0) {
        theta += 2.0 * std::numbers::pi;
    }
    return std::polar(std::sqrt(std::abs(x)), theta / 2.0);
}

template <typename T>
T phi_c_series(T x)
{
    return T(1) - x / 2.0 * (T(1) - x / 12.0 * (T(1) - x / 30.0));
}

template <typename T>
T phi_s_series(T x)
{
    return T(1) - x / 6.0 * (T(1) - x / 20.0 * (T(1) - x / 42.0));
}

template <typename T>
SquareMatrix<T, 2> expm2_impl(const SquareMatrix<T, 2>& a)
{
    const T half_trace = a.trace() / 2.0;
    SquareMatrix<T, 2> a0 = a;
    a0(0, 0) -= half_trace;
    a0(1, 1) -= half_trace;
    const T det = a0(0, 0) * a0(1, 1) - a0(0, 1) * a0(1, 0);
    SquareMatrix<T, 2> out = phi_s(det) * a0;
    const T c = phi_c(det);
    out(0, 0) += c;
    out(1, 1) += c;
    return std::exp(half_trace) * out;
}

Vec3 scaled(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 normalized(const Vec3& v) { return scaled(v, 1.0 / length(v)); }

Vec3 subtract(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 mat_vec(const Mat3& m, const Vec3& v)
{
    Vec3 out{};
    for (std::size_t r = 0; r < 3; ++r) {
        out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
    }
    return out;
}

double quadratic_form(const Mat3& s, const Vec3& v) { return dot(v, mat_vec(s, v)); }

void set_column(Mat3& m, std::size_t c, const Vec3& v)
{
    for (std::size_t r = 0; r < 3; ++r) {
        m(r, c) = v[r];
    }
}

// Eigenvector of s for an eigenvalue known to be simple, or nullopt when
// S - lambda I vanishes to working precision.
std::optional<Vec3> null_vector(const Mat3& s, double lambda)
{
    Mat3 shifted = s;
    for (std::size_t i = 0; i < 3; ++i) {
        shifted(i, i) -= lambda;
    }
    const Vec3 r0{shifted(0, 0), shifted(0, 1), shifted(0, 2)};
    const Vec3 r1{shifted(1, 0), shifted(1, 1), shifted(1, 2)};
    const Vec3 r2{shifted(2, 0), shifted(2, 1), shifted(2, 2)};
    const std::array<Vec3, 3> candidates{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
    const auto best = std::max_element(candidates.begin(), candidates.end(),
        [](const Vec3& a, const Vec3& b) { return dot(a, a) < dot(b, b); });
    const double len = length(*best);
    if (!(len > 0.0) || !std::isfinite(len)) {
        return std::nullopt;
    }
    return scaled(*best, 1.0 / len);
}

} // namespace

double phi_c(double x)
{
    if (std::abs(x) < kPhiSeriesCutoff) {
        return phi_c_series(x);
    }
    return x > 0.0 ? std::cos(std::sqrt(x)) : std::cosh(std::sqrt(-x));
}

double phi_s(double x)
{
    if (std::abs(x) < kPhiSeriesCutoff) {
        return phi_s_series(x);
    }
    if (x > 0.0) {
        const double r = std::sqrt(x);
        return std::sin(r) / r;
    }
    const double r = std::sqrt(-x);
    return std::sinh(r) / r;
}

cplx phi_c(cplx x)
{
    if (std::abs(x) < kPhiSeriesCutoff) {
        return phi_c_series(x);
    }
    return std::cos(branch_sqrt(x));
}

cplx phi_s(cplx x)
{
    if (std::abs(x) < kPhiSeriesCutoff) {
        return phi_s_series(x);
    }
    const cplx r = branch_sqrt(x);
    return std::sin(r) / r;
}

Mat2 expm2(const Mat2& a) { return expm2_impl(a); }
Mat2C expm2(const Mat2C& a) { return expm2_impl(a); }

SymEig2 sym_eig2(const Mat2& s)
{
    const double a = s(0, 0);
    const double b = 0.5 * (s(0, 1) + s(1, 0));
    const double d = s(1, 1);
    const double theta = 0.5 * std::atan2(2.0 * b, a - d);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    SymEig2 out;
    out.vectors = Mat2::from_rows({c, -sn, sn, c});
    out.values[0] = a * c * c + 2.0 * b * c * sn + d * sn * sn;
    out.values[1] = a * sn * sn - 2.0 * b * c * sn + d * c * c;
    if (out.values[0] < out.values[1]) {
        std::swap(out.values[0], out.values[1]);
        out.vectors = Mat2::from_rows({-sn, c, c, sn});
    }
    return out;
}

SymEig3 sym_eig3(const Mat3& input)
{
    const double scale = input.frobenius_norm();
    if ((input - input.transpose()).frobenius_norm() > 1e-12 * scale) {
        throw std::invalid_argument("sym_eig3: input is not symmetric");
    }
    const Mat3 s = 0.5 * (input + input.transpose());

    SymEig3 out;
    out.vectors = Mat3::identity();
    const double mean = s.trace() / 3.0;
    const double off = s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2);
    Mat3 centered = s;
    for (std::size_t i = 0; i < 3; ++i) {
        centered(i, i) -= mean;
    }
    const double spread2 = centered(0, 0) * centered(0, 0) + centered(1, 1) * centered(1, 1)
        + centered(2, 2) * centered(2, 2) + 2.0 * off;
    if (off == 0.0 || spread2 <= 1e-30 * scale * scale) {
        // Already diagonal, or a multiple of the identity to working precision.
        std::array<std::size_t, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return s(x, x) > s(y, y); });
        out.vectors = Mat3::zero();
        for (std::size_t c = 0; c < 3; ++c) {
            out.values[c] = s(order[c], order[c]);
            out.vectors(order[c], c) = 1.0;
        }
        return out;
    }

    const double p = std::sqrt(spread2 / 6.0);
    const Mat3 b = (1.0 / p) * centered;
    const double det_b = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1))
        - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0))
        + b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(det_b / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double l1 = mean + 2.0 * p * std::cos(phi);
    const double l3 = mean + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double l2 = 3.0 * mean - l1 - l3;

    // The eigenvalue farthest from the middle one is simple and well separated.
    const bool top_isolated = (l1 - l2) >= (l2 - l3);
    const double isolated = top_isolated ? l1 : l3;
    Vec3 v1 = null_vector(s, isolated).value_or(Vec3{1.0, 0.0, 0.0});
    const auto [e, f] = orthonormal_complement(v1);

    // Restriction of S to span{e, f}.
    const Vec3 se = mat_vec(s, e);
    const Vec3 sf = mat_vec(s, f);
    const SymEig2 rest = sym_eig2(Mat2::from_rows({dot(e, se), dot(e, sf), dot(f, se), dot(f, sf)}));
    std::array<Vec3, 3> vecs{v1, Vec3{}, Vec3{}};
    for (std::size_t c = 0; c < 2; ++c) {
        const double x = rest.vectors(0, c);
        const double y = rest.vectors(1, c);
        vecs[c + 1] = normalized({x * e[0] + y * f[0], x * e[1] + y * f[1], x * e[2] + y * f[2]});
    }

    std::array<double, 3> vals{};
    for (std::size_t c = 0; c < 3; ++c) {
        vals[c] = quadratic_form(s, vecs[c]);
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return vals[x] > vals[y]; });
    for (std::size_t c = 0; c < 3; ++c) {
        out.values[c] = vals[order[c]];
        set_column(out.vectors, c, vecs[order[c]]);
    }
    return out;
}

Svd3 svd3(const Mat3& m)
{
    const SymEig3 gram = sym_eig3(m.transpose() * m);
    Svd3 out;
    out.v = gram.vectors;
    out.u = Mat3::identity();
    out.sigma = {0.0, 0.0, 0.0};

    std::array<Vec3, 3> v{column(gram.vectors, 0), column(gram.vectors, 1), column(gram.vectors, 2)};
    std::array<Vec3, 3> u{};
    const double top = std::sqrt(std::max(gram.values[0], 0.0));
    if (top == 0.0 || m.frobenius_norm() == 0.0) {
        out.v = Mat3::identity();
        return out;
    }

    // Left vectors from M v_i while sigma_i is resolvable, Gram-Schmidt against
    // the previous ones; the remainder is completed.
    std::size_t resolved = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        const double sigma = std::sqrt(std::max(gram.values[i], 0.0));
        if (sigma <= 1e-12 * top) {
            break;
        }
        Vec3 w = mat_vec(m, v[i]);
        for (std::size_t j = 0; j < i; ++j) {
            w = subtract(w, scaled(u[j], dot(u[j], w)));
        }
        const double len = length(w);
        if (len <= 1e-12 * top) {
            break;
        }
        u[i] = scaled(w, 1.0 / len);
        ++resolved;
    }
    if (resolved == 0) {
        u[0] = normalized(mat_vec(m, v[0]));
        resolved = 1;
    }
    if (resolved == 1) {
        u[1] = orthonormal_complement(u[0])[0];
    }
    u[2] = cross(u[0], u[1]);

    std::array<double, 3> sig{};
    for (std::size_t i = 0; i < 3; ++i) {
        sig[i] = dot(u[i], mat_vec(m, v[i]));
        if (sig[i] < 0.0) {
            sig[i] = -sig[i];
            u[i] = scaled(u[i], -1.0);
        }
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sig[x] > sig[y]; });
    for (std::size_t c = 0; c < 3; ++c) {
        out.sigma[c] = sig[order[c]];
        set_column(out.u, c, u[order[c]]);
        set_column(out.v, c, v[order[c]]);
    }
    return out;
}

Vec3 column(const Mat3& m, std::size_t c) { return {m(0, c), m(1, c), m(2, c)}; }

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

std::array<Vec3, 2> orthonormal_complement(const Vec3& v)
{
    std::size_t axis = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (std::abs(v[i]) < std::abs(v[axis])) {
            axis = i;
        }
    }
    Vec3 unit{};
    unit[axis] = 1.0;
    const Vec3 e = normalized(cross(v, unit));
    return {e, cross(v, e)};
}

} // namespace qtexp
