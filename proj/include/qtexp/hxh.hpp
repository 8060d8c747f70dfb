#pragma once

#include "qtexp/matrix.hpp"
#include "qtexp/quat.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qtexp {

/// Quaternion basis unit {1, i, j, k}.
enum class Unit : std::uint8_t { one = 0, i = 1, j = 2, k = 3 };

inline constexpr std::array<Unit, 4> kUnits{Unit::one, Unit::i, Unit::j, Unit::k};
inline constexpr std::array<Unit, 3> kPureUnits{Unit::i, Unit::j, Unit::k};

constexpr int index_of(Unit u) { return static_cast<int>(u); }
std::string_view label(Unit u);

/// Element of H (x) H with scalar type T (double or std::complex<double>).
///
/// c(a, b) is the coefficient of e_a (x) e_b. The element acts on R^4 = H by
/// x -> sum c(a, b) e_a x conj(e_b), which identifies H (x) H with gl(4).
template <typename T>
class BasicHxH {
public:
    using scalar_type = T;
    using Table = std::array<std::array<T, 4>, 4>;

    BasicHxH() = default;
    explicit BasicHxH(const Table& c) : c_(c) {}

    static BasicHxH unit() { return basis(Unit::one, Unit::one); }

    static BasicHxH basis(Unit a, Unit b, T coefficient = T(1))
    {
        BasicHxH u;
        u(a, b) = coefficient;
        return u;
    }

    /// p (x) q for real quaternions, expanded by bilinearity.
    static BasicHxH tensor(const Quaternion& p, const Quaternion& q)
    {
        BasicHxH u;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                u.c_[a][b] = T(p[a] * q[b]);
            }
        }
        return u;
    }

    T& operator()(Unit a, Unit b) { return c_[index_of(a)][index_of(b)]; }
    const T& operator()(Unit a, Unit b) const { return c_[index_of(a)][index_of(b)]; }
    T& at(int a, int b) { return c_[a][b]; }
    const T& at(int a, int b) const { return c_[a][b]; }

    const Table& table() const { return c_; }

    /// Euclidean norm of the 16 coefficients (half the Frobenius norm of the matrix).
    double norm() const
    {
        double s = 0.0;
        for (const auto& row : c_) {
            for (const auto& v : row) {
                s += std::norm(v);
            }
        }
        return std::sqrt(s);
    }

    BasicHxH& operator+=(const BasicHxH& o)
    {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                c_[a][b] += o.c_[a][b];
            }
        }
        return *this;
    }

    BasicHxH& operator-=(const BasicHxH& o)
    {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                c_[a][b] -= o.c_[a][b];
            }
        }
        return *this;
    }

    BasicHxH& operator*=(T s)
    {
        for (auto& row : c_) {
            for (auto& v : row) {
                v *= s;
            }
        }
        return *this;
    }

    friend BasicHxH operator+(BasicHxH a, const BasicHxH& b) { return a += b; }
    friend BasicHxH operator-(BasicHxH a, const BasicHxH& b) { return a -= b; }
    friend BasicHxH operator*(BasicHxH a, T s) { return a *= s; }
    friend BasicHxH operator*(T s, BasicHxH a) { return a *= s; }

private:
    Table c_{};
};

using HxHElement = BasicHxH<double>;
using HxHElementC = BasicHxH<cplx>;

/// Matrix of x -> e_a x conj(e_b) on the basis {1, i, j, k}.
const Mat4& basis_matrix(Unit a, Unit b);

/// Coefficients by Frobenius projection; the 16 basis matrices are
/// orthogonal with squared norm 4.
HxHElement from_matrix(const Mat4& m);
HxHElementC from_matrix(const Mat4C& m);

Mat4 to_matrix(const HxHElement& u);
Mat4C to_matrix(const HxHElementC& u);

/// (p (x) q)(r (x) s) = pr (x) qs, extended bilinearly.
template <typename T>
BasicHxH<T> hxh_mul(const BasicHxH<T>& u, const BasicHxH<T>& v);

template <typename T>
BasicHxH<T> operator*(const BasicHxH<T>& u, const BasicHxH<T>& v)
{
    return hxh_mul(u, v);
}

/// Off-scalar residual allowed by scalar_square, relative to 1 + |u|^2.
inline constexpr double kScalarSquareTol = 1e-10;

/// mu such that u*u = mu (1 (x) 1), or nullopt if u does not square to a scalar.
template <typename T>
std::optional<T> scalar_square(const BasicHxH<T>& u);

HxHElementC complexify(const HxHElement& u);

extern template BasicHxH<double> hxh_mul(const BasicHxH<double>&, const BasicHxH<double>&);
extern template BasicHxH<cplx> hxh_mul(const BasicHxH<cplx>&, const BasicHxH<cplx>&);
extern template std::optional<double> scalar_square(const BasicHxH<double>&);
extern template std::optional<cplx> scalar_square(const BasicHxH<cplx>&);

} // namespace qtexp
