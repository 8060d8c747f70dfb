#include "generators.hpp"

#include "qtexp/hxh.hpp"

#include <Eigen/Dense>
#include <doctest.h>

using namespace qtexp;
using namespace qtexp::testing;

namespace {

double max_abs_diff(const Mat4& a, const Mat4& b)
{
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

HxHElement random_element(Rng& rng)
{
    return from_matrix(random_mat4(rng));
}

} // namespace

TEST_CASE("named basis matrices")
{
    CHECK(basis_matrix(Unit::one, Unit::one) == Mat4::identity());
    CHECK(basis_matrix(Unit::j, Unit::i) == exchange_matrix<4>());
    CHECK(basis_matrix(Unit::one, Unit::j) == symplectic_unit());
}

TEST_CASE("basis matrices are signed permutations, mutually orthogonal")
{
    for (Unit a : kUnits) {
        for (Unit b : kUnits) {
            const Mat4& m = basis_matrix(a, b);
            CHECK((m * m.transpose()) == Mat4::identity());
            for (Unit c : kUnits) {
                for (Unit d : kUnits) {
                    const double ip = (basis_matrix(c, d).transpose() * m).trace();
                    CHECK(ip == ((a == c && b == d) ? 4.0 : 0.0));
                }
            }
        }
    }
}

TEST_CASE("to_matrix of i (x) 1 is left multiplication by i")
{
    // Columns are i * e for e in {1, i, j, k}.
    const Mat4 want = Mat4::from_rows({
        0, -1, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, -1,
        0, 0, 1, 0,
    });
    CHECK(to_matrix(HxHElement::basis(Unit::i, Unit::one)) == want);
    CHECK(to_matrix(HxHElement::unit()) == Mat4::identity());
}

TEST_CASE("from_matrix on named matrices")
{
    const HxHElement id = from_matrix(Mat4::identity());
    const HxHElement r4 = from_matrix(exchange_matrix<4>());
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(id.at(a, b) == (a == 0 && b == 0 ? 1.0 : 0.0));
            CHECK(r4.at(a, b) == (a == 2 && b == 1 ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("from_matrix agrees with a 16x16 linear solve")
{
    Eigen::Matrix<double, 16, 16> system;
    int col = 0;
    for (Unit a : kUnits) {
        for (Unit b : kUnits) {
            const Mat4& m = basis_matrix(a, b);
            for (int n = 0; n < 16; ++n) {
                system(n, col) = m(static_cast<std::size_t>(n / 4), static_cast<std::size_t>(n % 4));
            }
            ++col;
        }
    }
    const auto lu = system.fullPivLu();
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat4 a = random_mat4(rng, 3.0);
        Eigen::Matrix<double, 16, 1> rhs;
        for (int n = 0; n < 16; ++n) {
            rhs(n) = a(static_cast<std::size_t>(n / 4), static_cast<std::size_t>(n % 4));
        }
        const Eigen::Matrix<double, 16, 1> coeffs = lu.solve(rhs);
        const HxHElement u = from_matrix(a);
        for (int n = 0; n < 16; ++n) {
            CHECK(std::abs(u.at(n / 4, n % 4) - coeffs(n)) <= 1e-14);
        }
    }
}

TEST_CASE("round trip and homomorphism law")
{
    Rng rng(22);
    for (int n = 0; n < 1000; ++n) {
        const Mat4 a = random_mat4(rng);
        CHECK(max_abs_diff(to_matrix(from_matrix(a)), a) <= 1e-14);

        const HxHElement u = random_element(rng);
        const HxHElement v = random_element(rng);
        const Mat4 lhs = to_matrix(u * v);
        const Mat4 rhs = to_matrix(u) * to_matrix(v);
        CHECK((lhs - rhs).frobenius_norm() <= 1e-12 * (1.0 + u.norm() * v.norm()));
    }
}

TEST_CASE("products of named elements")
{
    const HxHElement r4 = HxHElement::basis(Unit::j, Unit::i);
    const HxHElement j4 = HxHElement::basis(Unit::one, Unit::j);
    const HxHElement one = HxHElement::unit();
    CHECK((r4 * r4).table() == one.table());
    CHECK((j4 * j4).table() == (one * -1.0).table());

    Rng rng(23);
    const Quaternion p = random_pure(rng);
    const Quaternion q = random_pure(rng);
    const HxHElement lhs = HxHElement::tensor(p, Quaternion::one()) * HxHElement::tensor(Quaternion::one(), q);
    CHECK((lhs - HxHElement::tensor(p, q)).norm() <= 1e-16);
}

TEST_CASE("scalar_square")
{
    CHECK(scalar_square(HxHElement::basis(Unit::j, Unit::i)) == 1.0);
    CHECK(scalar_square(HxHElement::basis(Unit::i, Unit::one)) == -1.0);

    // b/2 (i (x) j) + b (k (x) j) with b = 2 squares to 5/4 b^2.
    const double b = 2.0;
    const HxHElement zw = HxHElement::basis(Unit::i, Unit::j, b / 2) + HxHElement::basis(Unit::k, Unit::j, b);
    const auto mu = scalar_square(zw);
    REQUIRE(mu);
    CHECK(*mu == doctest::Approx(5.0));

    // i (x) 1 + 1 (x) i squares to -2 + 2 (i (x) i), not a scalar.
    const HxHElement mixed = HxHElement::basis(Unit::i, Unit::one) + HxHElement::basis(Unit::one, Unit::i);
    CHECK_FALSE(scalar_square(mixed));

    const HxHElementC c = complexify(HxHElement::basis(Unit::k, Unit::one)) * cplx(0.0, 2.0);
    const auto mu_c = scalar_square(c);
    REQUIRE(mu_c);
    CHECK(std::abs(*mu_c - cplx(4.0, 0.0)) <= 1e-15);
}

TEST_CASE("complex round trip")
{
    Rng rng(24);
    for (int n = 0; n < 100; ++n) {
        const Mat4C a = random_matrix<Mat4C>(rng);
        CHECK((to_matrix(from_matrix(a)) - a).frobenius_norm() <= 1e-14);
    }
}
