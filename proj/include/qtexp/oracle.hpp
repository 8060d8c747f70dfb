#pragma once

#include "qtexp/matrix.hpp"

namespace qtexp {

struct OracleConfig {
    double target_tol = 1e-13;
    int max_squarings = 40;
};

/// Scaling-and-squaring exponential with a degree-18 Taylor kernel. This is the
/// reference every closed form is checked against; it deliberately uses none of
/// the H (x) H or closed-form machinery (not even SquareMatrix arithmetic).
///
/// Throws std::overflow_error when the required squaring count exceeds
/// cfg.max_squarings or the result is not finite.
template <typename T, std::size_t N>
SquareMatrix<T, N> expm_series(const SquareMatrix<T, N>& a, const OracleConfig& cfg = {});

/// |A - B|_F / (1 + |B|_F).
template <typename T, std::size_t N>
double rel_error(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b)
{
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) {
        diff += std::norm(a.data()[i] - b.data()[i]);
        ref += std::norm(b.data()[i]);
    }
    return std::sqrt(diff) / (1.0 + std::sqrt(ref));
}

extern template Mat2 expm_series(const Mat2&, const OracleConfig&);
extern template Mat3 expm_series(const Mat3&, const OracleConfig&);
extern template Mat4 expm_series(const Mat4&, const OracleConfig&);
extern template Mat2C expm_series(const Mat2C&, const OracleConfig&);
extern template Mat3C expm_series(const Mat3C&, const OracleConfig&);
extern template Mat4C expm_series(const Mat4C&, const OracleConfig&);

} // namespace qtexp
