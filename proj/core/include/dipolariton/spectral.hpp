#pragma once

#include "dipolariton/linalg.hpp"
#include "dipolariton/model.hpp"

#include <array>
#include <string_view>

namespace dipolariton {

/// Relative residual bound certified by eig3: ||H v - lambda v|| <= tol * ||H||_F.
inline constexpr double kResidualTolerance = 1e-10;
/// Eigenvector pairs overlapping more than this flag a near-exceptional point.
inline constexpr double kExceptionalOverlap = 0.999;

/// Right eigenpair with unit-norm vector. The largest-magnitude component of
/// `vector` is real and non-negative. `residual` is ||H v - value v||_2.
struct EigenPair {
  cplx value;
  Vector3c vector{};
  double residual = 0.0;
};

struct EigenDecomposition {
  /// Sorted by (Re, Im) ascending.
  std::array<EigenPair, 3> pairs;
  double frobenius_norm = 0.0;
  bool hermitian = false;
  /// Largest |<v_i|v_j>| over distinct pairs.
  double max_overlap = 0.0;
  bool near_exceptional = false;
};

/// Eigendecomposition of a general complex 3x3 matrix.
///
/// The matrix is shifted by its mean diagonal, the characteristic cubic is
/// solved in closed form and Newton-polished, and eigenvectors are obtained as
/// cross products of rows of (A - lambda I), falling back to inverse iteration
/// when the residual certificate is not met. Exactly Hermitian input takes a
/// path that returns an orthonormal basis and Rayleigh-quotient eigenvalues.
///
/// Throws InvalidParameter on non-finite input and NumericalFailure when the
/// residual bound cannot be reached.
EigenDecomposition eig3(const Matrix3c& h);
EigenDecomposition eig3(const RungMatrix& h);

enum class Branch { LP = 0, MP = 1, UP = 2 };

inline constexpr std::array<Branch, 3> kBranches{Branch::LP, Branch::MP, Branch::UP};

std::string_view branch_name(Branch b);

struct BranchSet {
  std::array<EigenPair, 3> branches;
  /// Sum of |<prev|current>| over the chosen assignment (3 for a zero step).
  double total_overlap = 3.0;
  double min_overlap = 1.0;

  const EigenPair& operator[](Branch b) const { return branches[static_cast<int>(b)]; }
};

/// LP/MP/UP by ascending real energy.
BranchSet energy_ordered(const EigenDecomposition& eig);

/// Relabels `current` so that each label follows the eigenvector it had at the
/// previous sweep point. The assignment maximizes the total overlap over all
/// six permutations; ties keep the earlier permutation (identity first).
BranchSet track_branches(const BranchSet& prev, const std::array<EigenPair, 3>& current);

}  // namespace dipolariton
