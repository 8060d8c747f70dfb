#include "generators.hpp"

#include "qtexp/covering.hpp"
#include "qtexp/expm_structured.hpp"
#include "qtexp/oracle.hpp"
#include "qtexp/smalllin.hpp"

#include <doctest.h>

#include <cmath>

using namespace qtexp;
using namespace qtexp::testing;

namespace {

const cplx kI{0.0, 1.0};

Mat2C random_factor(Rng& rng, bool compact)
{
    const double a = uniform(rng);
    const double b = uniform(rng);
    const double c = uniform(rng);
    if (compact) {
        return Mat2C::from_rows({kI * a, kI * b + c, kI * b - c, -kI * a});
    }
    return Mat2C::from_rows({a, b, c, -a});
}

Mat3 hat(const Vec3& w)
{
    return Mat3::from_rows({0, -w[2], w[1], w[2], 0, -w[0], -w[1], w[0], 0});
}

Mat3 rodrigues(const Vec3& w)
{
    const Mat3 x = hat(w);
    const double c = length(w);
    return Mat3::identity() + x * sinc(c) + x * x * cosc(c);
}

template <std::size_t N>
double form_error(const SquareMatrix<double, N>& g, const SquareMatrix<double, N>& m)
{
    return (g.transpose() * m * g - m).frobenius_norm() / (1.0 + g.frobenius_norm() * g.frobenius_norm());
}

} // namespace

TEST_CASE("Gram matrices of the declared bases")
{
    CHECK(covering_gram3(CoveringAlgebra::SO3) == Mat3::identity() * 2.0);
    CHECK(covering_gram4(CoveringAlgebra::SO4) == Mat4::identity() * 2.0);
    CHECK(covering_gram4(CoveringAlgebra::P4R) == exchange_matrix<4>());
    CHECK(covering_gram4(CoveringAlgebra::SO22R) == signature_matrix<4>(2) * 2.0);
    CHECK((covering_gram3(CoveringAlgebra::P3R) - exchange_matrix<3>()).frobenius_norm() <= 1e-15);
    CHECK(covering_gram3(CoveringAlgebra::SO21R) == signature_matrix<3>(2) * 2.0);
}

TEST_CASE("names and lookup")
{
    for (CoveringAlgebra alg : covering_algebras()) {
        CHECK(parse_covering(covering_info(alg).name) == alg);
    }
    CHECK_FALSE(parse_covering("SO5"));
}

TEST_CASE("psi is a Lie algebra homomorphism")
{
    Rng rng(71);
    for (CoveringAlgebra alg : covering_algebras()) {
        const CoveringInfo& info = covering_info(alg);
        CAPTURE(info.name);
        for (int n = 0; n < 100; ++n) {
            const Mat2C g1 = random_factor(rng, info.compact);
            const Mat2C g2 = random_factor(rng, info.compact);
            if (info.two_factor) {
                const Mat2C h1 = random_factor(rng, info.compact);
                const Mat2C h2 = random_factor(rng, info.compact);
                const Mat4 lhs = psi4(alg, commutator(g1, g2), commutator(h1, h2));
                const Mat4 rhs = commutator(psi4(alg, g1, h1), psi4(alg, g2, h2));
                CHECK((lhs - rhs).frobenius_norm() <= 1e-12);
            } else {
                const Mat3 lhs = psi3(alg, commutator(g1, g2));
                const Mat3 rhs = commutator(psi3(alg, g1), psi3(alg, g2));
                CHECK((lhs - rhs).frobenius_norm() <= 1e-12);
            }
        }
    }
}

TEST_CASE("zero maps to zero and identity")
{
    for (CoveringAlgebra alg : covering_algebras()) {
        if (covering_info(alg).dimension == 4) {
            const CoveringPair pre = psi_inverse(alg, Mat4::zero());
            CHECK(pre.g.frobenius_norm() == 0.0);
            REQUIRE(pre.h);
            CHECK(pre.h->frobenius_norm() == 0.0);
            CHECK((exp_via_covering(alg, Mat4::zero()) - Mat4::identity()).frobenius_norm() <= 1e-15);
        } else {
            const CoveringPair pre = psi_inverse(alg, Mat3::zero());
            CHECK(pre.g.frobenius_norm() == 0.0);
            CHECK_FALSE(pre.h);
            CHECK((exp_via_covering(alg, Mat3::zero()) - Mat3::identity()).frobenius_norm() <= 1e-15);
        }
    }
}

TEST_CASE("so(3): preimage of a z rotation and the Rodrigues formula")
{
    const double th = 0.9;
    const Mat3 a = hat({0, 0, th});
    const CoveringPair pre = psi_inverse(CoveringAlgebra::SO3, a);
    CHECK((psi3(CoveringAlgebra::SO3, pre.g) - a).frobenius_norm() <= 1e-12);
    // With the basis {sigma_x, sigma_y, sigma_z} the preimage is a multiple of i sigma_z.
    CHECK(std::abs(pre.g(0, 1)) <= 1e-15);
    CHECK(std::abs(pre.g(0, 0) - cplx(0.0, -th / 2.0)) <= 1e-14);
    CHECK((exp_via_covering(CoveringAlgebra::SO3, a) - rodrigues({0, 0, th})).frobenius_norm() <= 1e-12);

    Rng rng(72);
    for (int n = 0; n < 200; ++n) {
        const Vec3 w{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
        CHECK((exp_via_covering(CoveringAlgebra::SO3, hat(w)) - rodrigues(w)).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("p(4,R): pair preimage and agreement with the perskew closed form")
{
    Rng rng(73);
    for (int n = 0; n < 200; ++n) {
        const StructureClass cls = random_instance(rng, "Perskewsymmetric");
        const Mat4 a = reconstruct(cls);
        const CoveringPair pre = psi_inverse(CoveringAlgebra::P4R, a);
        REQUIRE(pre.h);
        CHECK((psi4(CoveringAlgebra::P4R, pre.g, *pre.h) - a).frobenius_norm() <= 1e-12);
        CHECK(std::abs(pre.g.trace()) <= 1e-15);
        CHECK(std::abs(pre.h->trace()) <= 1e-15);
        CHECK(rel_error(exp_via_covering(CoveringAlgebra::P4R, a), exp_perskewsymmetric(std::get<Perskewsymmetric>(cls)))
            <= 1e-10);
    }
}

TEST_CASE("oracle agreement, form preservation and the homomorphism property")
{
    Rng rng(74);
    for (CoveringAlgebra alg : covering_algebras()) {
        const CoveringInfo& info = covering_info(alg);
        CAPTURE(info.name);
        for (int n = 0; n < 100; ++n) {
            const double scale = uniform(rng, 0.1, 3.0);
            if (info.dimension == 4) {
                const Mat4 a = random_in_algebra4(rng, alg, scale);
                const Mat4 g = exp_via_covering(alg, a);
                CHECK(rel_error(g, expm_series(a)) <= 1e-10);
                CHECK(form_error(g, covering_gram4(alg)) <= 1e-11);

                const CoveringPair pre = psi_inverse(alg, a);
                const Mat4 b = psi4(alg, pre.g * cplx(-0.7), *pre.h * cplx(1.3));
                REQUIRE(commutator(a, b).frobenius_norm() <= 1e-12);
                CHECK(rel_error(exp_via_covering(alg, Mat4(a + b)), g * exp_via_covering(alg, b)) <= 1e-10);
            } else {
                const Mat3 a = random_in_algebra3(rng, alg, scale);
                const Mat3 g = exp_via_covering(alg, a);
                CHECK(rel_error(g, expm_series(a)) <= 1e-10);
                CHECK(form_error(g, covering_gram3(alg)) <= 1e-11);

                const Mat3 b = a * -0.4;
                CHECK(rel_error(exp_via_covering(alg, Mat3(a + b)), g * exp_via_covering(alg, b)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("the two-to-one lift: phi(-G, -H) = phi(G, H)")
{
    Rng rng(75);
    for (CoveringAlgebra alg : covering_algebras()) {
        const CoveringInfo& info = covering_info(alg);
        const Mat2C g = expm2(random_factor(rng, info.compact));
        const Mat2C h = expm2(random_factor(rng, info.compact));
        if (info.dimension == 4) {
            CHECK((phi_action4(alg, g * cplx(-1.0), h * cplx(-1.0)) - phi_action4(alg, g, h)).frobenius_norm() <= 1e-14);
        } else {
            CHECK((phi_action3(alg, g * cplx(-1.0)) - phi_action3(alg, g)).frobenius_norm() <= 1e-14);
        }
    }
}

TEST_CASE("errors")
{
    Rng rng(76);
    const Mat4 dense = random_mat4(rng);
    CHECK_THROWS_AS(psi_inverse(CoveringAlgebra::P4R, dense), NotInAlgebra);
    CHECK_THROWS_AS(exp_via_covering(CoveringAlgebra::SO4, dense), NotInAlgebra);
    try {
        exp_via_covering(CoveringAlgebra::SO22R, dense);
    } catch (const NotInAlgebra& e) {
        CHECK(e.residual() > 0.1);
    }
    CHECK_THROWS_AS(exp_via_covering(CoveringAlgebra::SO3, dense), std::invalid_argument);
    CHECK_THROWS_AS(exp_via_covering(CoveringAlgebra::SO4, Mat3::zero()), std::invalid_argument);

    // Traceful 2x2 factors are not in the algebra: a p(4,R) matrix is not in so(4).
    const Mat4 p4 = random_in_algebra4(rng, CoveringAlgebra::P4R);
    CHECK(defining_residual(CoveringAlgebra::P4R, p4) <= 1e-15);
    CHECK(defining_residual(CoveringAlgebra::SO4, p4) > 0.1);
}
