#include "qtexp/covering.hpp"

#include "qtexp/smalllin.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <map>

namespace qtexp {

namespace {

const cplx I{0.0, 1.0};

Mat2C m2(cplx a, cplx b, cplx c, cplx d)
{
    return Mat2C::from_rows({a, b, c, d});
}

const Mat2C kId = m2(1, 0, 0, 1);
const Mat2C kSx = m2(0, 1, 1, 0);
const Mat2C kSy = m2(0, -I, I, 0);
const Mat2C kSz = m2(1, 0, 0, -1);
const Mat2C kE11 = m2(1, 0, 0, 0);
const Mat2C kE12 = m2(0, 1, 0, 0);
const Mat2C kE21 = m2(0, 0, 1, 0);
const Mat2C kE22 = m2(0, 0, 0, 1);

std::vector<CoveringInfo> build_infos()
{
    const double r2 = std::sqrt(2.0);
    return {
        {CoveringAlgebra::SO3, "SO3", 3, false, true, InvariantForm::trace, {kSx, kSy, kSz}},
        {CoveringAlgebra::SO4, "SO4", 4, true, true, InvariantForm::determinant, {kId, I * kSx, I * kSy, I * kSz}},
        {CoveringAlgebra::P4R, "P4R", 4, true, false, InvariantForm::determinant, {kE11, kE12, -1.0 * kE21, kE22}},
        {CoveringAlgebra::SO22R, "SO22R", 4, true, false, InvariantForm::determinant, {kId, kE12 - kE21, kSx, kSz}},
        {CoveringAlgebra::P3R, "P3R", 3, false, false, InvariantForm::trace, {kE12, (1.0 / r2) * kSz, kE21}},
        {CoveringAlgebra::SO21R, "SO21R", 3, false, false, InvariantForm::trace, {kSx, kSz, kE12 - kE21}},
    };
}

const std::vector<CoveringInfo>& infos()
{
    static const std::vector<CoveringInfo> table = build_infos();
    return table;
}

cplx det2(const Mat2C& x)
{
    return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
}

Mat2C inverse2(const Mat2C& x)
{
    const cplx d = det2(x);
    return m2(x(1, 1) / d, -x(0, 1) / d, -x(1, 0) / d, x(0, 0) / d);
}

double form_value(InvariantForm form, const Mat2C& x, const Mat2C& y)
{
    const cplx v = form == InvariantForm::trace ? (x * y).trace() : det2(x + y) - det2(x) - det2(y);
    return v.real();
}

// Real 8-vector (re, im of the four entries) of a 2x2 complex matrix.
Eigen::Matrix<double, 8, 1> flatten(const Mat2C& x)
{
    Eigen::Matrix<double, 8, 1> v;
    for (std::size_t n = 0; n < 4; ++n) {
        v(static_cast<Eigen::Index>(2 * n)) = x.data()[n].real();
        v(static_cast<Eigen::Index>(2 * n + 1)) = x.data()[n].imag();
    }
    return v;
}

// Left inverse of the flattened basis: coordinates of X in the declared basis.
const Eigen::MatrixXd& coordinate_map(CoveringAlgebra alg)
{
    static const auto maps = [] {
        std::map<CoveringAlgebra, Eigen::MatrixXd> out;
        for (const auto& info : infos()) {
            Eigen::MatrixXd b(8, info.dimension);
            for (int c = 0; c < info.dimension; ++c) {
                b.col(c) = flatten(info.basis[static_cast<std::size_t>(c)]);
            }
            out[info.algebra] = (b.transpose() * b).inverse() * b.transpose();
        }
        return out;
    }();
    return maps.at(alg);
}

// Basis of su(2) or sl(2,R), the Lie algebra of each factor.
std::array<Mat2C, 3> factor_basis(bool compact)
{
    if (compact) {
        return {I * kSx, I * kSy, I * kSz};
    }
    return {kSz, kE12, kE21};
}

// Matrix of a linear map on V given by its action on 2x2 matrices.
template <typename F>
Eigen::MatrixXd action_matrix(CoveringAlgebra alg, F&& map)
{
    const CoveringInfo& info = covering_info(alg);
    const Eigen::MatrixXd& coords = coordinate_map(alg);
    Eigen::MatrixXd out(info.dimension, info.dimension);
    for (int c = 0; c < info.dimension; ++c) {
        out.col(c) = coords * flatten(map(info.basis[static_cast<std::size_t>(c)]));
    }
    return out;
}

Eigen::MatrixXd psi_matrix(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h)
{
    return action_matrix(alg, [&](const Mat2C& x) { return g * x - x * h; });
}

Eigen::MatrixXd phi_matrix(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h)
{
    const Mat2C h_inv = inverse2(h);
    return action_matrix(alg, [&](const Mat2C& x) { return g * x * h_inv; });
}

template <std::size_t N>
SquareMatrix<double, N> to_fixed(const Eigen::MatrixXd& m)
{
    SquareMatrix<double, N> out;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            out(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

template <std::size_t N>
Eigen::MatrixXd to_dynamic(const SquareMatrix<double, N>& m)
{
    Eigen::MatrixXd out(N, N);
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

Eigen::MatrixXd gram(CoveringAlgebra alg)
{
    const CoveringInfo& info = covering_info(alg);
    Eigen::MatrixXd out(info.dimension, info.dimension);
    for (int r = 0; r < info.dimension; ++r) {
        for (int c = 0; c < info.dimension; ++c) {
            out(r, c) = form_value(info.form, info.basis[static_cast<std::size_t>(r)],
                info.basis[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

void check_dimension(CoveringAlgebra alg, std::size_t n)
{
    const CoveringInfo& info = covering_info(alg);
    if (static_cast<std::size_t>(info.dimension) != n) {
        throw std::invalid_argument(info.name + " acts on dimension " + std::to_string(info.dimension)
            + ", got a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
}

double defining_residual_dynamic(CoveringAlgebra alg, const Eigen::MatrixXd& a)
{
    const double scale = a.norm();
    if (scale == 0.0) {
        return 0.0;
    }
    const Eigen::MatrixXd m = gram(alg);
    return (a.transpose() * m + m * a).norm() / (scale * m.norm() / std::sqrt(double(m.rows())));
}

CoveringPair solve_preimage(CoveringAlgebra alg, const Eigen::MatrixXd& a, double tol)
{
    const CoveringInfo& info = covering_info(alg);
    const double relation = defining_residual_dynamic(alg, a);
    if (relation > tol) {
        throw NotInAlgebra(info.name, relation);
    }
    const auto basis = factor_basis(info.compact);
    const int unknowns = info.two_factor ? 6 : 3;
    const int n = info.dimension;
    Eigen::MatrixXd system(n * n, unknowns);
    const Mat2C zero = Mat2C::zero();
    for (int u = 0; u < unknowns; ++u) {
        Eigen::MatrixXd col;
        if (!info.two_factor) {
            const Mat2C& g = basis[static_cast<std::size_t>(u)];
            col = psi_matrix(alg, g, g);
        } else if (u < 3) {
            col = psi_matrix(alg, basis[static_cast<std::size_t>(u)], zero);
        } else {
            col = psi_matrix(alg, zero, basis[static_cast<std::size_t>(u - 3)]);
        }
        system.col(u) = col.reshaped();
    }
    const Eigen::VectorXd rhs = a.reshaped();
    const Eigen::VectorXd x = system.colPivHouseholderQr().solve(rhs);

    CoveringPair out{Mat2C::zero(), std::nullopt};
    for (int u = 0; u < 3; ++u) {
        out.g = out.g + x(u) * basis[static_cast<std::size_t>(u)];
    }
    if (info.two_factor) {
        Mat2C h = Mat2C::zero();
        for (int u = 0; u < 3; ++u) {
            h = h + x(u + 3) * basis[static_cast<std::size_t>(u)];
        }
        out.h = h;
    }
    const double scale = std::max(a.norm(), 1.0);
    const double fit = (system * x - rhs).norm() / scale;
    if (fit > std::max(tol, 1e-12) * 10.0) {
        throw NotInAlgebra(info.name, fit);
    }
    return out;
}

template <std::size_t N>
SquareMatrix<double, N> exp_covering_impl(CoveringAlgebra alg, const SquareMatrix<double, N>& a, double tol)
{
    check_dimension(alg, N);
    const CoveringPair pre = solve_preimage(alg, to_dynamic(a), tol);
    const Mat2C g = expm2(pre.g);
    const Mat2C h = pre.h ? expm2(*pre.h) : g;
    return to_fixed<N>(phi_matrix(alg, g, h));
}

} // namespace

const CoveringInfo& covering_info(CoveringAlgebra alg)
{
    return infos()[static_cast<std::size_t>(alg)];
}

const std::vector<CoveringAlgebra>& covering_algebras()
{
    static const std::vector<CoveringAlgebra> all{CoveringAlgebra::SO3, CoveringAlgebra::SO4, CoveringAlgebra::P4R,
        CoveringAlgebra::SO22R, CoveringAlgebra::P3R, CoveringAlgebra::SO21R};
    return all;
}

std::optional<CoveringAlgebra> parse_covering(std::string_view name)
{
    for (const auto& info : infos()) {
        if (info.name == name) {
            return info.algebra;
        }
    }
    return std::nullopt;
}

Mat4 covering_gram4(CoveringAlgebra alg)
{
    const Eigen::MatrixXd m = gram(alg);
    Mat4 out = Mat4::zero();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
        }
    }
    return out;
}

Mat3 covering_gram3(CoveringAlgebra alg)
{
    check_dimension(alg, 3);
    return to_fixed<3>(gram(alg));
}

NotInAlgebra::NotInAlgebra(std::string algebra, double residual)
    : std::runtime_error("matrix is not in the Lie algebra of " + algebra + " (defining-relation residual "
          + std::to_string(residual) + ")")
    , residual_(residual)
{
}

double defining_residual(CoveringAlgebra alg, const Mat3& a)
{
    check_dimension(alg, 3);
    return defining_residual_dynamic(alg, to_dynamic(a));
}

double defining_residual(CoveringAlgebra alg, const Mat4& a)
{
    check_dimension(alg, 4);
    return defining_residual_dynamic(alg, to_dynamic(a));
}

Mat3 psi3(CoveringAlgebra alg, const Mat2C& g)
{
    check_dimension(alg, 3);
    return to_fixed<3>(psi_matrix(alg, g, g));
}

Mat4 psi4(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h)
{
    check_dimension(alg, 4);
    return to_fixed<4>(psi_matrix(alg, g, h));
}

Mat3 phi_action3(CoveringAlgebra alg, const Mat2C& g)
{
    check_dimension(alg, 3);
    return to_fixed<3>(phi_matrix(alg, g, g));
}

Mat4 phi_action4(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h)
{
    check_dimension(alg, 4);
    return to_fixed<4>(phi_matrix(alg, g, h));
}

CoveringPair psi_inverse(CoveringAlgebra alg, const Mat3& a, double tol)
{
    check_dimension(alg, 3);
    return solve_preimage(alg, to_dynamic(a), tol);
}

CoveringPair psi_inverse(CoveringAlgebra alg, const Mat4& a, double tol)
{
    check_dimension(alg, 4);
    return solve_preimage(alg, to_dynamic(a), tol);
}

Mat3 exp_via_covering(CoveringAlgebra alg, const Mat3& a, double tol)
{
    return exp_covering_impl(alg, a, tol);
}

Mat4 exp_via_covering(CoveringAlgebra alg, const Mat4& a, double tol)
{
    return exp_covering_impl(alg, a, tol);
}

} // namespace qtexp
