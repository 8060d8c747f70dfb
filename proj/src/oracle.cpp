#include "qtexp/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qtexp {

namespace {

constexpr int kTaylorDegree = 18;

template <typename T, std::size_t N>
using Block = std::array<T, N * N>;

template <typename T, std::size_t N>
Block<T, N> multiply(const Block<T, N>& a, const Block<T, N>& b)
{
    Block<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const T aik = a[i * N + k];
            for (std::size_t j = 0; j < N; ++j) {
                out[i * N + j] += aik * b[k * N + j];
            }
        }
    }
    return out;
}

template <typename T, std::size_t N>
double one_norm(const Block<T, N>& a)
{
    double best = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            col += std::abs(a[i * N + j]);
        }
        best = std::max(best, col);
    }
    return best;
}

} // namespace

template <typename T, std::size_t N>
SquareMatrix<T, N> expm_series(const SquareMatrix<T, N>& a, const OracleConfig& cfg)
{
    if (!(cfg.target_tol > 0.0)) {
        throw std::invalid_argument("expm_series: target_tol must be positive");
    }
    Block<T, N> x = a.data();
    const double norm1 = one_norm<T, N>(x);
    if (!std::isfinite(norm1)) {
        throw std::overflow_error("expm_series: non-finite input");
    }
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    if (squarings > cfg.max_squarings) {
        throw std::overflow_error("expm_series: norm too large for the configured squaring budget");
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& v : x) {
        v *= scale;
    }

    // Horner: I + X/1 (I + X/2 (I + ... (I + X/18))).
    Block<T, N> poly{};
    for (std::size_t i = 0; i < N; ++i) {
        poly[i * N + i] = T(1);
    }
    for (int k = kTaylorDegree; k >= 1; --k) {
        Block<T, N> next = multiply<T, N>(x, poly);
        for (auto& v : next) {
            v /= static_cast<double>(k);
        }
        for (std::size_t i = 0; i < N; ++i) {
            next[i * N + i] += T(1);
        }
        poly = next;
    }
    for (int s = 0; s < squarings; ++s) {
        poly = multiply<T, N>(poly, poly);
    }
    for (const auto& v : poly) {
        if (!std::isfinite(std::abs(v))) {
            throw std::overflow_error("expm_series: result overflowed");
        }
    }
    return SquareMatrix<T, N>::from_rows(poly);
}

template Mat2 expm_series(const Mat2&, const OracleConfig&);
template Mat3 expm_series(const Mat3&, const OracleConfig&);
template Mat4 expm_series(const Mat4&, const OracleConfig&);
template Mat2C expm_series(const Mat2C&, const OracleConfig&);
template Mat3C expm_series(const Mat3C&, const OracleConfig&);
template Mat4C expm_series(const Mat4C&, const OracleConfig&);

} // namespace qtexp
