#include "qtexp/hxh.hpp"

namespace qtexp {

namespace {

struct UnitProduct {
    int index;
    double sign;
};

// e_a * e_b for a, b in {1, i, j, k}.
constexpr std::array<std::array<UnitProduct, 4>, 4> kUnitTable{{
    {{{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}}},
    {{{1, 1.0}, {0, -1.0}, {3, 1.0}, {2, -1.0}}},
    {{{2, 1.0}, {3, -1.0}, {0, -1.0}, {1, 1.0}}},
    {{{3, 1.0}, {2, 1.0}, {1, -1.0}, {0, -1.0}}},
}};

Quaternion unit_quaternion(int a)
{
    Quaternion q;
    switch (a) {
    case 0: q.w = 1.0; break;
    case 1: q.x = 1.0; break;
    case 2: q.y = 1.0; break;
    default: q.z = 1.0; break;
    }
    return q;
}

using BasisTable = std::array<std::array<Mat4, 4>, 4>;

BasisTable build_basis()
{
    BasisTable table;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Quaternion left = unit_quaternion(a);
            const Quaternion right = conj(unit_quaternion(b));
            Mat4& m = table[a][b];
            for (int col = 0; col < 4; ++col) {
                const Quaternion image = left * unit_quaternion(col) * right;
                for (int row = 0; row < 4; ++row) {
                    m(row, col) = image[row];
                }
            }
        }
    }
    return table;
}

const BasisTable& basis_table()
{
    static const BasisTable table = build_basis();
    return table;
}

template <typename T>
BasicHxH<T> project(const SquareMatrix<T, 4>& m)
{
    BasicHxH<T> u;
    const auto& table = basis_table();
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Mat4& e = table[a][b];
            T s{};
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) {
                    if (e(r, c) != 0.0) {
                        s += e(r, c) * m(r, c);
                    }
                }
            }
            u.at(a, b) = s / 4.0;
        }
    }
    return u;
}

template <typename T>
SquareMatrix<T, 4> assemble(const BasicHxH<T>& u)
{
    SquareMatrix<T, 4> m;
    const auto& table = basis_table();
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const T coefficient = u.at(a, b);
            if (coefficient == T(0)) {
                continue;
            }
            const Mat4& e = table[a][b];
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) {
                    if (e(r, c) != 0.0) {
                        m(r, c) += e(r, c) * coefficient;
                    }
                }
            }
        }
    }
    return m;
}

} // namespace

std::string_view label(Unit u)
{
    switch (u) {
    case Unit::one: return "1";
    case Unit::i: return "i";
    case Unit::j: return "j";
    case Unit::k: return "k";
    }
    return "?";
}

const Mat4& basis_matrix(Unit a, Unit b) { return basis_table()[index_of(a)][index_of(b)]; }

HxHElement from_matrix(const Mat4& m) { return project(m); }
HxHElementC from_matrix(const Mat4C& m) { return project(m); }

Mat4 to_matrix(const HxHElement& u) { return assemble(u); }
Mat4C to_matrix(const HxHElementC& u) { return assemble(u); }

template <typename T>
BasicHxH<T> hxh_mul(const BasicHxH<T>& u, const BasicHxH<T>& v)
{
    BasicHxH<T> out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const T uab = u.at(a, b);
            if (uab == T(0)) {
                continue;
            }
            for (int c = 0; c < 4; ++c) {
                const UnitProduct left = kUnitTable[a][c];
                for (int d = 0; d < 4; ++d) {
                    const T vcd = v.at(c, d);
                    if (vcd == T(0)) {
                        continue;
                    }
                    const UnitProduct right = kUnitTable[b][d];
                    out.at(left.index, right.index) += (left.sign * right.sign) * uab * vcd;
                }
            }
        }
    }
    return out;
}

template <typename T>
std::optional<T> scalar_square(const BasicHxH<T>& u)
{
    const BasicHxH<T> sq = hxh_mul(u, u);
    double off = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a != 0 || b != 0) {
                off += std::norm(sq.at(a, b));
            }
        }
    }
    const double scale = u.norm();
    if (std::sqrt(off) > kScalarSquareTol * (1.0 + scale * scale)) {
        return std::nullopt;
    }
    return sq.at(0, 0);
}

HxHElementC complexify(const HxHElement& u)
{
    HxHElementC out;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            out.at(a, b) = u.at(a, b);
        }
    }
    return out;
}

template BasicHxH<double> hxh_mul(const BasicHxH<double>&, const BasicHxH<double>&);
template BasicHxH<cplx> hxh_mul(const BasicHxH<cplx>&, const BasicHxH<cplx>&);
template std::optional<double> scalar_square(const BasicHxH<double>&);
template std::optional<cplx> scalar_square(const BasicHxH<cplx>&);

} // namespace qtexp
