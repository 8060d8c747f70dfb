#pragma once

#include "qtexp/structure.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qtexp {

/// Relative to |A|_F.
inline constexpr double kDefaultClassifyTol = 1e-9;

struct MatchResult {
    std::optional<StructureClass> match;
    /// |A - reconstruct(params)|_F / |A|_F for the extracted parameters (0 for A = 0).
    double residual = 0.0;
};

/// Every family A belongs to, in dispatch priority order. Membership means the
/// parameters extracted from the H (x) H coefficients rebuild A to within
/// tol |A|_F (plus the family's side conditions). Complex input is tested
/// against the complex families only.
std::vector<StructureClass> classify(const Mat4& a, double tol = kDefaultClassifyTol);
std::vector<StructureClass> classify(const Mat4C& a, double tol = kDefaultClassifyTol);

/// Test a single family by name (see class_names()).
MatchResult match_class(const Mat4& a, std::string_view name, double tol = kDefaultClassifyTol);
MatchResult match_class(const Mat4C& a, std::string_view name, double tol = kDefaultClassifyTol);

/// a (1 (x) 1) + p (x) i + q (x) j + r (x) k with a = tr(A)/4.
/// Throws std::invalid_argument when |A - A^T|_F > tol |A|_F.
SymmetricGeneral extract_symmetric_rep(const Mat4& a, double tol = kDefaultClassifyTol);

/// Special-normal parameters, or nullopt when A is not normal, |s| = |t| to
/// within tol, or the symmetric part is not a + (s-parallel) (x) t_hat.
std::optional<SpecialNormal> extract_special_normal(const Mat4& a, double tol = kDefaultClassifyTol);

} // namespace qtexp
