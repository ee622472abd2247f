#include "mzscatter/matrix4.hpp"

#include <algorithm>
#include <cmath>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

// Relative determinant size below which cofactors lose too many digits.
constexpr double kCofactorFloor = 1e-8;

Complex det3(const Matrix4& m, int skip_row, int skip_col) {
  int rows[3];
  int cols[3];
  for (int i = 0, r = 0, c = 0; i < 4; ++i) {
    if (i != skip_row) rows[r++] = i;
    if (i != skip_col) cols[c++] = i;
  }
  const auto a = [&](int i, int j) { return m(rows[i], cols[j]); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

double infinity_norm(const Matrix4& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

Inverse4 invert4(const Matrix4& m) {
  Matrix4 cofactor;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      cofactor(i, j) = sign * det3(m, i, j);
    }
  }
  Complex det = 0.0;
  for (int j = 0; j < 4; ++j) det += m(0, j) * cofactor(0, j);

  // Scale reference: product of row norms bounds |det| (Hadamard).
  double hadamard = 1.0;
  for (int i = 0; i < 4; ++i) hadamard *= m.row(i).norm();

  Inverse4 out;
  if (hadamard == 0.0 || det == Complex(0.0)) {
    throw Error(ErrorKind::kDegenerateBasis, "4x4 matrix is singular");
  }
  if (std::abs(det) >= kCofactorFloor * hadamard) {
    out.inverse = cofactor.transpose() / det;
  } else {
    Eigen::PartialPivLU<Matrix4> lu(m);
    out.inverse = lu.inverse();
    out.used_fallback = true;
  }
  if (!out.inverse.allFinite()) {
    throw Error(ErrorKind::kDegenerateBasis, "4x4 inverse is not finite");
  }
  out.condition = infinity_norm(m) * infinity_norm(out.inverse);
  return out;
}

}  // namespace mzscatter
