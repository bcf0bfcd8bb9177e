#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace dipolariton {

using cplx = std::complex<double>;
using Vector3c = std::array<cplx, 3>;
using Matrix3c = std::array<Vector3c, 3>;

namespace linalg {

inline double frobenius_norm(const Matrix3c& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

inline double norm(const Vector3c& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

/// Hermitian inner product <a|b> (conjugates `a`).
inline cplx inner(const Vector3c& a, const Vector3c& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

/// Bilinear cross product: the result is annihilated by both a and b
/// under the unconjugated dot product.
inline Vector3c cross(const Vector3c& a, const Vector3c& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vector3c conj(const Vector3c& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

inline Vector3c apply(const Matrix3c& m, const Vector3c& v) {
  Vector3c r{};
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

inline cplx trace(const Matrix3c& m) { return m[0][0] + m[1][1] + m[2][2]; }

inline cplx determinant(const Matrix3c& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Matrix3c conjugate_transpose(const Matrix3c& m) {
  Matrix3c r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = std::conj(m[j][i]);
  return r;
}

/// Exact (bitwise) Hermiticity test.
inline bool is_exactly_hermitian(const Matrix3c& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      if (m[i][j] != std::conj(m[j][i])) return false;
  return true;
}

}  // namespace linalg
}  // namespace dipolariton
