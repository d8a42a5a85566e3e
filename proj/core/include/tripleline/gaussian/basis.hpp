#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tripleline::gaussian {

enum class Family : std::uint8_t { A = 0, B = 1 };

inline char family_letter(Family f) { return f == Family::A ? 'A' : 'B'; }

/// Matrix size N and number of Greek components d; both at least 1.
struct Dims {
  int N = 1;
  int d = 1;

  /// Throws ValidationError unless N >= 1 and d >= 1.
  static Dims make(int N, int d);

  /// Real coordinates per family slot: d * N^2.
  int coords_per_family() const { return d * N * N; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class BasisKind : std::uint8_t { Diagonal, OffDiagReal, OffDiagImag };

/// One element of the orthogonal system of Hermitian N x N matrices, placed in
/// Greek component mu of family slot `family`. Indices are 1-based; k <= l, and
/// k < l for the off-diagonal kinds.
struct BasisElement {
  Family family = Family::A;
  int mu = 1;
  BasisKind kind = BasisKind::Diagonal;
  int k = 1;
  int l = 1;

  /// Dense Hermitian matrix: 1 at (k,k) for Diagonal; 1/2 at (k,l),(l,k) for
  /// OffDiagReal; +i/2 at (k,l), -i/2 at (l,k) for OffDiagImag. The last one
  /// satisfies Tr(X e) = Im X^{kl} for Hermitian X.
  Eigen::MatrixXcd matrix(int N) const;

  /// Trace inner product of the element with itself: 1 or 1/2.
  double self_inner() const { return kind == BasisKind::Diagonal ? 1.0 : 0.5; }

  /// Weight of the coordinate in Tr(X Y) = sum_c w_c x_c y_c: 1 or 2.
  int trace_weight() const { return kind == BasisKind::Diagonal ? 1 : 2; }

  std::string to_string() const;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Orthogonal system for both family slots: d*N^2 elements for A, followed by
/// the same layout for B. Within a slot the order is mu-major, then diagonal
/// and real off-diagonal entries in row order, then imaginary off-diagonals.
std::vector<BasisElement> cos_basis(Dims dims);

/// Position of `e` in cos_basis(dims).
std::size_t basis_index(const BasisElement& e, Dims dims);

/// Re Tr(X Y).
double trace_inner(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y);

}  // namespace tripleline::gaussian
