#include "generators.hpp"

#include "qtexp/oracle.hpp"
#include "qtexp/smalllin.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace qtexp;
using namespace qtexp::testing;

namespace {

Mat3 random_symmetric3(Rng& rng)
{
    const Mat3 m = random_matrix<Mat3>(rng, 2.0);
    return (m + m.transpose()) * 0.5;
}

Mat3 outer(const Vec3& a, const Vec3& b)
{
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m(r, c) = a[r] * b[c];
        }
    }
    return m;
}

Vec3 random_vec3(Rng& rng)
{
    return {uniform(rng), uniform(rng), uniform(rng)};
}

Mat3 eig_reconstruct(const SymEig3& e)
{
    Mat3 out;
    for (std::size_t n = 0; n < 3; ++n) {
        const Vec3 v = column(e.vectors, n);
        out = out + outer(v, v) * e.values[n];
    }
    return out;
}

Mat3 svd_reconstruct(const Svd3& s)
{
    Mat3 out;
    for (std::size_t n = 0; n < 3; ++n) {
        out = out + outer(column(s.u, n), column(s.v, n)) * s.sigma[n];
    }
    return out;
}

double orthogonality_error(const Mat3& q)
{
    return (q.transpose() * q - Mat3::identity()).frobenius_norm();
}

// Roots of the characteristic cubic from the companion matrix, descending.
std::array<double, 3> companion_roots(const Mat3& s)
{
    const double c2 = -s.trace();
    const double c1 = s(0, 0) * s(1, 1) + s(0, 0) * s(2, 2) + s(1, 1) * s(2, 2) - s(0, 1) * s(1, 0)
        - s(0, 2) * s(2, 0) - s(1, 2) * s(2, 1);
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            m(r, c) = s(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    const double c0 = -m.determinant();
    Eigen::Matrix3d companion;
    companion << 0, 0, -c0, 1, 0, -c1, 0, 1, -c2;
    const Eigen::Vector3cd roots = companion.eigenvalues();
    std::array<double, 3> out{roots(0).real(), roots(1).real(), roots(2).real()};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace

TEST_CASE("phi functions")
{
    CHECK(phi_c(0.0) == 1.0);
    CHECK(phi_s(0.0) == 1.0);
    CHECK(phi_c(std::numbers::pi * std::numbers::pi) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(phi_c(-1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(phi_s(-4.0) == doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-15));
    CHECK(phi_s(4.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
    for (double x : {1e-12, -1e-12, 5e-9, -5e-9}) {
        CHECK(phi_c(x) == doctest::Approx(1.0 - x / 2.0).epsilon(1e-15));
        CHECK(phi_s(x) == doctest::Approx(1.0 - x / 6.0).epsilon(1e-15));
    }
    // Complex branch agrees with the real one on the real axis.
    for (double x : {-3.0, -0.5, 0.0, 0.7, 9.0}) {
        CHECK(std::abs(phi_c(cplx(x, 0.0)) - phi_c(x)) <= 1e-14);
        CHECK(std::abs(phi_s(cplx(x, 0.0)) - phi_s(x)) <= 1e-14);
    }
    // Either square root gives the same value.
    const cplx z(-2.0, 3.0);
    const cplx r = std::sqrt(z);
    CHECK(std::abs(phi_c(z) - std::cos(r)) <= 1e-13);
    CHECK(std::abs(phi_s(z) - std::sin(r) / r) <= 1e-13);
}

TEST_CASE("expm2 examples")
{
    CHECK(expm2(Mat2::zero()) == Mat2::identity());
    const double th = std::numbers::pi / 3;
    const Mat2 e = expm2(Mat2::from_rows({0, th, -th, 0}));
    const Mat2 want = Mat2::from_rows({0.5, std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 0.5});
    CHECK((e - want).frobenius_norm() <= 1e-15);
}

TEST_CASE("expm2 matches the series oracle")
{
    Rng rng(31);
    for (int n = 0; n < 1000; ++n) {
        Mat2 a = random_matrix<Mat2>(rng);
        a = a * (uniform(rng, 0.0, 5.0) / a.frobenius_norm());
        CHECK(rel_error(expm2(a), expm_series(a)) <= 1e-13);

        Mat2C c = random_matrix<Mat2C>(rng);
        c = c * cplx(uniform(rng, 0.0, 5.0) / c.frobenius_norm());
        CHECK(rel_error(expm2(c), expm_series(c)) <= 1e-13);
    }
    // Traceless with determinant 0: nilpotent, e^A = I + A.
    const Mat2 nil = Mat2::from_rows({1, -1, 1, -1});
    CHECK((expm2(nil) - (Mat2::identity() + nil)).frobenius_norm() <= 1e-15);
}

TEST_CASE("sym_eig2")
{
    const SymEig2 e = sym_eig2(Mat2::from_rows({2, 1, 1, 2}));
    CHECK(e.values[0] == doctest::Approx(3.0));
    CHECK(e.values[1] == doctest::Approx(1.0));
    Rng rng(32);
    for (int n = 0; n < 200; ++n) {
        Mat2 s = random_matrix<Mat2>(rng);
        s = (s + s.transpose()) * 0.5;
        const SymEig2 f = sym_eig2(s);
        Mat2 back;
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    back(r, c) += f.values[k] * f.vectors(r, k) * f.vectors(c, k);
                }
            }
        }
        CHECK((back - s).frobenius_norm() <= 1e-14);
        CHECK(f.values[0] >= f.values[1]);
    }
}

TEST_CASE("sym_eig3 examples")
{
    const SymEig3 id = sym_eig3(Mat3::identity());
    CHECK(id.values == std::array<double, 3>{1.0, 1.0, 1.0});
    CHECK(id.vectors == Mat3::identity());

    Mat3 d;
    d(0, 0) = 1.0;
    d(1, 1) = 3.0;
    d(2, 2) = 2.0;
    const SymEig3 de = sym_eig3(d);
    CHECK(de.values == std::array<double, 3>{3.0, 2.0, 1.0});
    CHECK(orthogonality_error(de.vectors) <= 1e-15);

    // 40-digit reference eigenvalues.
    const SymEig3 e = sym_eig3(Mat3::from_rows({4, 1, -2, 1, 3, 0.5, -2, 0.5, 1}));
    CHECK(e.values[0] == doctest::Approx(5.2179557751445681).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(3.034654141519039).epsilon(1e-14));
    CHECK(e.values[2] == doctest::Approx(-0.25260991666360703).epsilon(1e-14));

    CHECK_THROWS_AS(sym_eig3(Mat3::from_rows({1, 2, 0, 0, 1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("sym_eig3 against companion roots and reconstruction")
{
    Rng rng(33);
    for (int n = 0; n < 500; ++n) {
        const Mat3 s = random_symmetric3(rng);
        const SymEig3 e = sym_eig3(s);
        const auto roots = companion_roots(s);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(std::abs(e.values[k] - roots[k]) <= 1e-10);
        }
        CHECK((eig_reconstruct(e) - s).frobenius_norm() <= 1e-11 * (1.0 + s.frobenius_norm()));
        CHECK(orthogonality_error(e.vectors) <= 1e-12);
    }
}

TEST_CASE("sym_eig3 with repeated eigenvalues")
{
    Rng rng(34);
    for (int n = 0; n < 200; ++n) {
        const Vec3 v = random_vec3(rng);
        const double len = length(v);
        const Vec3 u{v[0] / len, v[1] / len, v[2] / len};
        // lambda I + mu u u^T has a double eigenvalue lambda.
        const Mat3 s = Mat3::identity() * uniform(rng) + outer(u, u) * uniform(rng);
        const SymEig3 e = sym_eig3(s);
        CHECK((eig_reconstruct(e) - s).frobenius_norm() <= 1e-11);
        CHECK(orthogonality_error(e.vectors) <= 1e-11);
    }
}

TEST_CASE("svd3 examples")
{
    const Svd3 z = svd3(Mat3::zero());
    CHECK(z.sigma == std::array<double, 3>{0.0, 0.0, 0.0});
    CHECK(orthogonality_error(z.u) <= 1e-15);
    CHECK(orthogonality_error(z.v) <= 1e-15);

    Mat3 d;
    d(0, 0) = 2.0;
    d(1, 1) = -3.0;
    d(2, 2) = 1.0;
    const Svd3 ds = svd3(d);
    CHECK(ds.sigma[0] == doctest::Approx(3.0));
    CHECK(ds.sigma[1] == doctest::Approx(2.0));
    CHECK(ds.sigma[2] == doctest::Approx(1.0));
    CHECK((svd_reconstruct(ds) - d).frobenius_norm() <= 1e-14);

    // 40-digit reference singular values.
    const Svd3 g = svd3(Mat3::from_rows({1, 2, 0, -1, 0.5, 3, 2, 1, -1}));
    CHECK(g.sigma[0] == doctest::Approx(3.7017522637921768).epsilon(1e-14));
    CHECK(g.sigma[1] == doctest::Approx(2.667132610080838).epsilon(1e-14));
    CHECK(g.sigma[2] == doctest::Approx(0.658356907575876).epsilon(1e-13));
}

TEST_CASE("svd3 rank one")
{
    Rng rng(35);
    for (int n = 0; n < 200; ++n) {
        const Vec3 s = random_vec3(rng);
        const Vec3 t = random_vec3(rng);
        const Svd3 f = svd3(outer(s, t));
        CHECK(f.sigma[0] == doctest::Approx(length(s) * length(t)).epsilon(1e-12));
        CHECK(std::abs(f.sigma[1]) <= 1e-12);
        CHECK(std::abs(f.sigma[2]) <= 1e-12);
        CHECK(std::abs(std::abs(dot(column(f.u, 0), s)) - length(s)) <= 1e-12);
        CHECK(std::abs(std::abs(dot(column(f.v, 0), t)) - length(t)) <= 1e-12);
        CHECK((svd_reconstruct(f) - outer(s, t)).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("svd3 random, rank two and orthogonal factors")
{
    Rng rng(36);
    for (int n = 0; n < 500; ++n) {
        const Mat3 m = n % 2 == 0 ? random_matrix<Mat3>(rng, 2.0)
                                  : outer(random_vec3(rng), random_vec3(rng)) + outer(random_vec3(rng), random_vec3(rng));
        const Svd3 f = svd3(m);
        CHECK((svd_reconstruct(f) - m).frobenius_norm() <= 1e-11 * (1.0 + m.frobenius_norm()));
        CHECK(orthogonality_error(f.u) <= 1e-11);
        CHECK(orthogonality_error(f.v) <= 1e-11);
        CHECK(f.sigma[0] >= f.sigma[1]);
        CHECK(f.sigma[1] >= f.sigma[2]);
        CHECK(f.sigma[2] >= 0.0);
    }
}
