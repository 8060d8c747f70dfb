#pragma once

#include "qtexp/matrix.hpp"

#include <array>

namespace qtexp {

using Vec3 = std::array<double, 3>;

/// cos(sqrt(x)) as an entire function of x; cosh(sqrt(-x)) for x < 0.
double phi_c(double x);
cplx phi_c(cplx x);

/// sin(sqrt(x))/sqrt(x); sinh(sqrt(-x))/sqrt(-x) for x < 0; 1 at x = 0.
double phi_s(double x);
cplx phi_s(cplx x);

/// Closed-form exponential of a 2x2 matrix via its traceless part A0,
/// which satisfies A0^2 = -det(A0) I.
Mat2 expm2(const Mat2& a);
Mat2C expm2(const Mat2C& a);

struct SymEig2 {
    std::array<double, 2> values;  // descending
    Mat2 vectors;                   // columns
};

/// Jacobi-angle solution of a real symmetric 2x2 eigenproblem.
SymEig2 sym_eig2(const Mat2& s);

struct SymEig3 {
    std::array<double, 3> values;  // descending
    Mat3 vectors;                   // orthonormal columns
};

/// Closed-form eigendecomposition of a real symmetric 3x3 matrix: eigenvalues
/// from the trigonometric solution of the characteristic cubic, the most
/// isolated eigenvector from cross products of rows of S - lambda I, the rest
/// from the 2x2 problem on its orthogonal complement.
///
/// Throws std::invalid_argument if |S - S^T| > 1e-12 |S|.
SymEig3 sym_eig3(const Mat3& s);

struct Svd3 {
    Mat3 u;
    std::array<double, 3> sigma;  // descending, non-negative
    Mat3 v;
};

/// M = U diag(sigma) V^T. V and sigma^2 come from sym_eig3(M^T M); columns of
/// U are M v_i / sigma_i where sigma_i is resolvable, otherwise completed to an
/// orthonormal triple. Signs are pushed into U so that sigma >= 0.
Svd3 svd3(const Mat3& m);

Vec3 column(const Mat3& m, std::size_t c);
Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double length(const Vec3& a);

/// Unit vectors (e, f) with (v, e, f) orthonormal; v must be unit length.
std::array<Vec3, 2> orthonormal_complement(const Vec3& v);

} // namespace qtexp
