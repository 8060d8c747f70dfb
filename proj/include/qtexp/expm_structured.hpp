#pragma once

#include "qtexp/classify.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtexp {

/// e^u for an element whose square is a scalar mu (1 (x) 1):
/// phi_c(-mu) (1 (x) 1) + phi_s(-mu) u. Throws std::logic_error when u does
/// not square to a scalar, which means the caller split the element wrongly.
template <typename T>
BasicHxH<T> exp_group(const BasicHxH<T>& u);

Mat4 exp_skew_symmetric(const Quaternion& p, const Quaternion& q);
Mat4 exp_perskewsymmetric(const Perskewsymmetric& cls);
Mat4 exp_skew_hamiltonian(const SkewHamiltonian& cls);
Mat4 exp_jordan(const JordanClass& cls);
Mat4 exp_lie(const LieClass& cls);
Mat4 exp_ham_sym_persym(const HamSymPersym& cls);
Mat4 exp_sym_toeplitz_tridiag(const SymToeplitzTridiag& cls);
Mat4 exp_sym_toeplitz_s13(const SymToeplitzS13Zero& cls);
Mat4 exp_special_normal(const SpecialNormal& cls);

/// e^{R4 S} = e^{a R4} (cosh S~ + R4 sinh S~), S~ = X + Y with X = epsilon (j (x) i),
/// Y = (alpha i + beta k) (x) (gamma j + delta k).
Mat4 exp_bisymmetric_rs(const BisymmetricRS& cls);

/// e^a prod_i (cosh sigma_i + sinh sigma_i (u_i (x) v_i)) from the SVD of [p|q|r].
Mat4 exp_symmetric_general(const SymmetricGeneral& cls);

/// Bisymmetric a (1 (x) 1) + b (j (x) i) + p (x) j + q (x) k with p, q in
/// span{i, k}; only the 2x2 SVD of [p|q] is needed.
Mat4 exp_bisymmetric_reduced(double a, double b, const Quaternion& p, const Quaternion& q);

Mat4C exp_so4_complex(const ComplexSO4& cls);
Mat4C exp_p4_complex(const ComplexPerskew& cls);

/// Closed form for any real class instance.
Mat4 exp_closed_form(const StructureClass& cls);
/// Closed form for any class instance, complex result.
Mat4C exp_closed_form_complex(const StructureClass& cls);

struct SkewMinimalPoly {
    /// T^4 + 2(|s|^2 + |t|^2) T^2 + (|s|^2 - |t|^2)^2 I, highest degree first.
    std::array<double, 5> quartic{};
    /// Degree of the minimal polynomial of T (1 when T = 0).
    int degree = 4;
    /// Minimal polynomial coefficients, highest degree first.
    std::vector<double> minimal;
};

/// Annihilating quartic of T = M_{s (x) 1} + M_{1 (x) t}. The degree drops to 2
/// when exactly one of s, t vanishes and to 3 when |s| = |t| != 0; equality is
/// judged to within tol (|s| + |t|).
SkewMinimalPoly minimal_poly_skewT(const Quaternion& s, const Quaternion& t, double tol = 1e-12);

class ForcedClassMismatch : public std::runtime_error {
public:
    ForcedClassMismatch(std::string class_name, double residual);
    const std::string& class_name() const { return class_name_; }
    double residual() const { return residual_; }

private:
    std::string class_name_;
    double residual_;
};

struct ExpMethod {
    enum class Kind { automatic, forced, oracle };
    Kind kind = Kind::automatic;
    std::string class_name;

    /// "auto", "oracle", or a class name from class_names().
    static ExpMethod parse(std::string_view text);
};

template <typename M>
struct BasicExpResult {
    M value;
    /// Class name of the closed form used, or "oracle".
    std::string route;
    /// rel_error against expm_series, when requested.
    std::optional<double> residual;
};

using ExpResult = BasicExpResult<Mat4>;
using ExpResultC = BasicExpResult<Mat4C>;

/// Identify A in H (x) H, exponentiate there, map back. With method=auto the
/// highest-priority matching class is used and the oracle is the fallback.
/// Throws ForcedClassMismatch when a forced class does not match.
ExpResult expm_auto(const Mat4& a, const ExpMethod& method = {}, bool verify = false,
    double tol = kDefaultClassifyTol);
ExpResultC expm_auto(const Mat4C& a, const ExpMethod& method = {}, bool verify = false,
    double tol = kDefaultClassifyTol);

extern template HxHElement exp_group(const HxHElement&);
extern template HxHElementC exp_group(const HxHElementC&);

} // namespace qtexp
