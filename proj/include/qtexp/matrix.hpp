#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace qtexp {

using cplx = std::complex<double>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Dense N x N matrix with row-major storage. Only the handful of operations
/// the closed-form routines need; sizes are 2, 3 and 4.
template <typename T, std::size_t N>
class SquareMatrix {
public:
    using value_type = T;
    static constexpr std::size_t size = N;

    constexpr SquareMatrix() = default;

    static constexpr SquareMatrix zero() { return SquareMatrix{}; }

    static constexpr SquareMatrix identity()
    {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    static SquareMatrix from_rows(const std::array<T, N * N>& row_major)
    {
        SquareMatrix m;
        m.data_ = row_major;
        return m;
    }

    constexpr T& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
    constexpr const T& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

    const std::array<T, N * N>& data() const { return data_; }

    SquareMatrix& operator+=(const SquareMatrix& o)
    {
        for (std::size_t i = 0; i < N * N; ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }

    SquareMatrix& operator-=(const SquareMatrix& o)
    {
        for (std::size_t i = 0; i < N * N; ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }

    SquareMatrix& operator*=(T s)
    {
        for (auto& v : data_) {
            v *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, T s) { return a *= s; }
    friend SquareMatrix operator*(T s, SquareMatrix a) { return a *= s; }
    friend SquareMatrix operator-(SquareMatrix a) { return a *= T(-1); }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b)
    {
        SquareMatrix out;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    SquareMatrix transpose() const
    {
        SquareMatrix out;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    T trace() const
    {
        T t{};
        for (std::size_t i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    double frobenius_norm() const
    {
        double s = 0.0;
        for (const auto& v : data_) {
            s += std::norm(v);
        }
        return std::sqrt(s);
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::array<T, N * N> data_{};
};

using Mat2 = SquareMatrix<double, 2>;
using Mat3 = SquareMatrix<double, 3>;
using Mat4 = SquareMatrix<double, 4>;
using Mat2C = SquareMatrix<cplx, 2>;
using Mat3C = SquareMatrix<cplx, 3>;
using Mat4C = SquareMatrix<cplx, 4>;

template <std::size_t N>
SquareMatrix<cplx, N> complexify(const SquareMatrix<double, N>& m)
{
    SquareMatrix<cplx, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<double, N> real_part(const SquareMatrix<cplx, N>& m)
{
    SquareMatrix<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = m(i, j).real();
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<double, N> imag_part(const SquareMatrix<cplx, N>& m)
{
    SquareMatrix<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = m(i, j).imag();
        }
    }
    return out;
}

/// Anti-diagonal ones.
template <std::size_t N>
SquareMatrix<double, N> exchange_matrix()
{
    SquareMatrix<double, N> m;
    for (std::size_t i = 0; i < N; ++i) {
        m(i, N - 1 - i) = 1.0;
    }
    return m;
}

/// diag(I_p, -I_q).
template <std::size_t N>
SquareMatrix<double, N> signature_matrix(std::size_t p)
{
    SquareMatrix<double, N> m;
    for (std::size_t i = 0; i < N; ++i) {
        m(i, i) = i < p ? 1.0 : -1.0;
    }
    return m;
}

/// [[0, I2], [-I2, 0]].
inline Mat4 symplectic_unit()
{
    Mat4 m;
    m(0, 2) = 1.0;
    m(1, 3) = 1.0;
    m(2, 0) = -1.0;
    m(3, 1) = -1.0;
    return m;
}

template <typename T, std::size_t N>
SquareMatrix<T, N> commutator(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b)
{
    return a * b - b * a;
}

} // namespace qtexp
