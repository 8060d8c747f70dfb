#pragma once

#include "qtexp/hxh.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qtexp {

/// p (x) 1 + 1 (x) q, p and q pure.
struct SkewSymmetric {
    Quaternion p;
    Quaternion q;
};

/// p (x) i + alpha (j (x) 1) + j (x) q + beta (1 (x) i), p in span{i,k}, q in span{j,k}.
struct Perskewsymmetric {
    Quaternion p;
    double alpha = 0.0;
    Quaternion q;
    double beta = 0.0;
};

/// b (1 (x) 1) + p (x) j + 1 (x) (c i + d k).
struct SkewHamiltonian {
    double b = 0.0;
    Quaternion p;
    double c = 0.0;
    double d = 0.0;
};

/// One of the five Jordan algebras, a (1 (x) 1) + (vector term) + (two-slot term):
///   k=1: p (x) k + 1 (x) (b i + c j)     k=2: p (x) i + 1 (x) (b j + c k)
///   k=3: i (x) q + (b j + c k) (x) 1     k=4: j (x) q + (b i + c k) (x) 1
///   k=5: k (x) q + (b i + c j) (x) 1
/// `v` holds p or q.
struct JordanClass {
    int k = 1;
    double a = 0.0;
    Quaternion v;
    double b = 0.0;
    double c = 0.0;
};

/// One of the eight Lie algebras, written p (x) e + x (e' (x) 1) + e'' (x) q + y (1 (x) e''')
/// with p, q confined to two-dimensional spans; k=1 is so(2,2,R). Whether `a`
/// or `b` multiplies the (e' (x) 1) term depends on k (see lie_layout).
struct LieClass {
    int k = 1;
    Quaternion p;
    double a = 0.0;
    Quaternion q;
    double b = 0.0;
};

/// beta (j (x) i) + gamma (i (x) k) + delta (k (x) k).
struct HamSymPersym {
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

/// Tridiagonal Toeplitz with diagonal a and off-diagonal b:
/// a (1 (x) 1) + b/2 (j (x) i) + b/2 (i (x) j) + b (k (x) j).
struct SymToeplitzTridiag {
    double a = 0.0;
    double b = 0.0;
};

/// Symmetric Toeplitz with first row (a, b, 0, c).
struct SymToeplitzS13Zero {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Normal matrix a (1 (x) 1) + sym_left (x) t_hat + s (x) 1 + 1 (x) t with
/// |s| != |t|. sym_left equals s whenever s != 0; for s = 0 it carries the
/// left factor of the symmetric part and t_hat is parallel to t.
struct SpecialNormal {
    double a = 0.0;
    Quaternion s;
    Quaternion t_hat;
    Quaternion t;
    Quaternion sym_left;
};

/// R4 S with S = a (1 (x) 1) + epsilon (j (x) i) + (alpha i + beta k) (x) (gamma j + delta k).
struct BisymmetricRS {
    double a = 0.0;
    double epsilon = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

/// a (1 (x) 1) + p (x) i + q (x) j + r (x) k.
struct SymmetricGeneral {
    double a = 0.0;
    Quaternion p;
    Quaternion q;
    Quaternion r;
};

/// (alpha1 i + beta1 j + gamma1 k) (x) 1 + 1 (x) (alpha2 i + beta2 j + gamma2 k), complex coefficients.
struct ComplexSO4 {
    std::array<cplx, 3> left{};
    std::array<cplx, 3> right{};
};

/// Complex p(4): p (x) i + alpha (j (x) 1) + j (x) q + beta (1 (x) i) with p over
/// {i, k} and q over {j, k}.
struct ComplexPerskew {
    std::array<cplx, 2> p{};
    cplx alpha{};
    std::array<cplx, 2> q{};
    cplx beta{};
};

using StructureClass = std::variant<SkewSymmetric, SkewHamiltonian, Perskewsymmetric, LieClass, JordanClass,
    HamSymPersym, SymToeplitzTridiag, SymToeplitzS13Zero, SpecialNormal, BisymmetricRS, SymmetricGeneral,
    ComplexSO4, ComplexPerskew>;

/// Class names in dispatch priority order (most specific first).
const std::vector<std::string>& class_names();

std::string class_name(const StructureClass& cls);

/// Position of `name` in class_names(), or -1.
int class_priority(std::string_view name);

bool is_complex_class(const StructureClass& cls);

/// Layout of the two anticommuting groups of a Lie-type class:
///   first  = sum_n p[n] (p_span[n] (x) p_right) + x (x_left (x) 1)
///   second = sum_n q[n] (q_left (x) q_span[n]) + y (1 (x) y_right)
struct PairedLayout {
    Unit p_right;
    std::array<Unit, 2> p_span;
    Unit x_left;
    Unit q_left;
    std::array<Unit, 2> q_span;
    Unit y_right;
    bool a_is_x;  // LieClass: a multiplies the (x_left (x) 1) term
};

/// k in 1..8.
const PairedLayout& lie_layout(int k);
const PairedLayout& perskew_layout();

/// a + (v (x) fixed or fixed (x) v) + (b slots[0] + c slots[1]) on the other side.
struct JordanLayout {
    bool vector_left;  // v (x) fixed when true, fixed (x) v otherwise
    Unit fixed;
    bool slots_right;  // 1 (x) (...) when true, (...) (x) 1 otherwise
    std::array<Unit, 2> slots;
};

/// k in 1..5.
const JordanLayout& jordan_layout(int k);
const JordanLayout& skew_hamiltonian_layout();

template <typename T>
std::pair<BasicHxH<T>, BasicHxH<T>> paired_groups(const PairedLayout& layout, const std::array<T, 2>& p, T x,
    const std::array<T, 2>& q, T y);

/// Non-scalar part of a Jordan-type element.
HxHElement jordan_part(const JordanLayout& layout, const Quaternion& v, double b, double c);

std::pair<HxHElement, HxHElement> groups(const Perskewsymmetric& cls);
std::pair<HxHElement, HxHElement> groups(const LieClass& cls);
std::pair<HxHElementC, HxHElementC> groups(const ComplexPerskew& cls);

/// The H (x) H element a class instance stands for.
HxHElement representation(const SkewSymmetric& cls);
HxHElement representation(const Perskewsymmetric& cls);
HxHElement representation(const SkewHamiltonian& cls);
HxHElement representation(const JordanClass& cls);
HxHElement representation(const LieClass& cls);
HxHElement representation(const HamSymPersym& cls);
HxHElement representation(const SymToeplitzTridiag& cls);
HxHElement representation(const SymToeplitzS13Zero& cls);
HxHElement representation(const SpecialNormal& cls);
HxHElement representation(const BisymmetricRS& cls);
HxHElement representation(const SymmetricGeneral& cls);
HxHElementC representation(const ComplexSO4& cls);
HxHElementC representation(const ComplexPerskew& cls);

/// Symmetric factor S of a BisymmetricRS instance (the matrix is R4 S).
HxHElement symmetric_factor(const BisymmetricRS& cls);

/// Matrix of a class instance; complex classes go through reconstruct_complex.
Mat4 reconstruct(const StructureClass& cls);
Mat4C reconstruct_complex(const StructureClass& cls);

} // namespace qtexp
