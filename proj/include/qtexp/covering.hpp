#pragma once

#include "qtexp/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtexp {

/// Small Lie algebras exponentiated through a covering group of 2x2 matrices.
///   SO3   su(2) acting on Hermitian traceless matrices by X -> G X G^-1
///   SO4   su(2) x su(2) acting on span{I, i sigma_k} by X -> G X H^-1
///   P4R   sl(2,R) x sl(2,R) on gl(2,R), basis {E11, E12, -E21, E22}
///   SO22R sl(2,R) x sl(2,R) on gl(2,R), basis {I, E12 - E21, sigma_x, sigma_z}
///   P3R   sl(2,R) adjoint, basis {E12, sigma_z / sqrt 2, E21}
///   SO21R sl(2,R) adjoint, basis {sigma_x, sigma_z, E12 - E21}
enum class CoveringAlgebra { SO3, SO4, P4R, SO22R, P3R, SO21R };

enum class InvariantForm { trace, determinant };

struct CoveringInfo {
    CoveringAlgebra algebra;
    std::string name;
    int dimension;
    bool two_factor;       // pair (g, h) rather than a single g
    bool compact;          // su(2) rather than sl(2,R)
    InvariantForm form;    // Tr(XY), or det(X+Y) - det X - det Y
    std::vector<Mat2C> basis;
};

const CoveringInfo& covering_info(CoveringAlgebra alg);
const std::vector<CoveringAlgebra>& covering_algebras();
std::optional<CoveringAlgebra> parse_covering(std::string_view name);

/// Gram matrix of the invariant form in the declared basis. Zero-padded to 4x4
/// for the three-dimensional algebras.
Mat4 covering_gram4(CoveringAlgebra alg);
Mat3 covering_gram3(CoveringAlgebra alg);

class NotInAlgebra : public std::runtime_error {
public:
    NotInAlgebra(std::string algebra, double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

/// |A^T M + M A|_F / |A|_F for the Gram matrix M (0 for A = 0).
double defining_residual(CoveringAlgebra alg, const Mat3& a);
double defining_residual(CoveringAlgebra alg, const Mat4& a);

struct CoveringPair {
    Mat2C g;
    std::optional<Mat2C> h;  // absent for the adjoint algebras
};

/// Matrix of X -> gX - Xh (or gX - Xg) in the declared basis.
Mat3 psi3(CoveringAlgebra alg, const Mat2C& g);
Mat4 psi4(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h);

/// Matrix of X -> G X H^-1 (or G X G^-1) in the declared basis.
Mat3 phi_action3(CoveringAlgebra alg, const Mat2C& g);
Mat4 phi_action4(CoveringAlgebra alg, const Mat2C& g, const Mat2C& h);

/// Traceless preimage under psi. Throws std::invalid_argument when the
/// dimension does not fit the algebra and NotInAlgebra when the defining
/// relation fails by more than tol.
CoveringPair psi_inverse(CoveringAlgebra alg, const Mat3& a, double tol = 1e-10);
CoveringPair psi_inverse(CoveringAlgebra alg, const Mat4& a, double tol = 1e-10);

/// e^A as phi of the 2x2 exponentials of the preimage.
Mat3 exp_via_covering(CoveringAlgebra alg, const Mat3& a, double tol = 1e-10);
Mat4 exp_via_covering(CoveringAlgebra alg, const Mat4& a, double tol = 1e-10);

} // namespace qtexp
