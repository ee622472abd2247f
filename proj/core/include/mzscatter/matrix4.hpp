#pragma once

#include <Eigen/Dense>

#include "mzscatter/physics.hpp"

namespace mzscatter {

using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

struct Inverse4 {
  Matrix4 inverse;
  double condition = 0.0;     // infinity-norm condition number estimate
  bool used_fallback = false;  // partial-pivot LU instead of cofactors
};

inline constexpr double kConditionWarning = 1e12;

// Cofactor-expansion inverse; switches to partial-pivot LU when the
// determinant is small relative to the entry scale. Throws
// Error(kDegenerateBasis) for an exactly singular input.
Inverse4 invert4(const Matrix4& m);

double infinity_norm(const Matrix4& m);

}  // namespace mzscatter
