#pragma once

#include "qtexp/covering.hpp"
#include "qtexp/structure.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qtexp::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx uniform_c(Rng& rng)
{
    return {uniform(rng), uniform(rng)};
}

inline Quaternion random_quat(Rng& rng)
{
    return {uniform(rng), uniform(rng), uniform(rng), uniform(rng)};
}

inline Quaternion random_pure(Rng& rng)
{
    return Quaternion::pure(uniform(rng), uniform(rng), uniform(rng));
}

inline Quaternion random_in_span(Rng& rng, Unit u0, Unit u1)
{
    std::array<double, 4> c{};
    c[static_cast<std::size_t>(index_of(u0))] = uniform(rng);
    c[static_cast<std::size_t>(index_of(u1))] = uniform(rng);
    return {0.0, c[1], c[2], c[3]};
}

template <typename M>
M random_matrix(Rng& rng, double scale = 1.0)
{
    M m;
    const std::size_t n = M::size;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if constexpr (is_complex_v<typename M::value_type>) {
                m(r, c) = scale * uniform_c(rng);
            } else {
                m(r, c) = scale * uniform(rng);
            }
        }
    }
    return m;
}

inline Mat4 random_mat4(Rng& rng, double scale = 1.0)
{
    return random_matrix<Mat4>(rng, scale);
}

/// Scale all real parameters so their Euclidean norm is at most `bound`.
/// Applied to the reconstructed matrix's H (x) H coefficients this keeps the
/// parameter norm of every family <= bound.
inline double shrink_factor(Rng& rng, double norm, double bound)
{
    if (norm == 0.0) {
        return 1.0;
    }
    return uniform(rng, 0.05, 1.0) * bound / norm;
}

/// Random instance of a real family by class name, parameter norm <= bound.
StructureClass random_instance(Rng& rng, const std::string& name, double bound = 3.0);

/// Every parameter multiplied by f, so the instance stands for f times the matrix.
StructureClass scaled(StructureClass cls, double f);

/// Random A in the Lie algebra of a covering group, |A|_F about `scale`.
Mat4 random_in_algebra4(Rng& rng, CoveringAlgebra alg, double scale = 1.0);
Mat3 random_in_algebra3(Rng& rng, CoveringAlgebra alg, double scale = 1.0);

/// Names of the real families (everything except the complex ones).
std::vector<std::string> real_class_names();

} // namespace qtexp::testing
