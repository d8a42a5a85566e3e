#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tripleline/gaussian/basis.hpp"
#include "tripleline/gaussian/propagator.hpp"
#include "tripleline/gaussian/transforms.hpp"

namespace tripleline::gaussian {

/// Regularized Gaussian in the 2dN^2 real coordinates of cos_basis:
///   density exp(-1/2 x^T Q x),  Q = eps W - i (M (x) W),
/// where W holds the trace weights (1 diagonal, 2 off-diagonal) and M is the
/// action's 2x2 family coupling. Q is complex symmetric with positive
/// definite real part for eps > 0, so every moment is an absolutely
/// convergent integral; they are evaluated exactly via Q^{-1} (no sampling).
class OracleCovariance {
 public:
  /// Throws ValidationError for eps <= 0, std::runtime_error if Q cannot be
  /// inverted to a residual below 1e-10.
  OracleCovariance(Dims dims, double epsilon, ActionSpec action = ActionSpec::Standard);

  Dims dims() const { return dims_; }
  double epsilon() const { return epsilon_; }
  ActionSpec action() const { return action_; }
  const Eigen::MatrixXcd& coupling() const { return coupling_; }
  const Eigen::MatrixXcd& inverse() const { return inverse_; }
  /// max |Q Q^{-1} - I|.
  double residual() const { return residual_; }

  /// Coefficients of an entry as a complex linear form in the coordinates.
  Eigen::VectorXcd entry_form(const EntrySymbol& e) const;
  /// <x y> = l_x^T Q^{-1} l_y.
  std::complex<double> entry_covariance(const EntrySymbol& x, const EntrySymbol& y) const;
  /// Normalized moment by the Isserlis recursion over entry covariances.
  std::complex<double> moment(std::span<const EntrySymbol> entries) const;
  /// Integral of the density over R^{2dN^2}: (2 pi)^{n/2} prod_j lambda_j^{-1/2}
  /// over the eigenvalues of Q (all in the right half plane).
  std::complex<double> normalization() const;
  /// Unnormalized T-transform: normalization() * exp(-1/2 l^T Q^{-1} l) with
  /// l the coordinate form of (F, G).
  std::complex<double> characteristic(const MatrixPair& fg) const;

 private:
  Dims dims_;
  double epsilon_;
  ActionSpec action_;
  std::vector<BasisElement> basis_;
  Eigen::VectorXd weights_;
  Eigen::MatrixXcd coupling_;
  Eigen::MatrixXcd inverse_;
  double residual_ = 0.0;
};

/// One-shot oracle moment at a fixed epsilon.
std::complex<double> gaussian_oracle_moment(std::span<const EntrySymbol> entries, Dims dims, double epsilon,
                                            ActionSpec action = ActionSpec::Standard);

struct ExtrapolationOptions {
  double first = 0.1;   ///< first epsilon of the geometric sequence
  double ratio = 0.1;   ///< eps_{j+1} = ratio * eps_j
  int min_points = 3;
  int max_points = 6;
  double tolerance = 1e-9;
  bool relative = false;  ///< compare successive estimates relative to max(1, |estimate|)
};

struct Extrapolation {
  std::complex<double> value;
  bool converged = false;
  double last_delta = 0.0;
  std::vector<double> epsilons;
  std::vector<std::complex<double>> samples;
};

/// Polynomial (Richardson/Neville) extrapolation of f(eps) to eps = 0 along a
/// geometric sequence. Points are added until two successive diagonal
/// estimates agree within tolerance, or max_points is reached.
Extrapolation extrapolate_to_zero(const std::function<std::complex<double>(double)>& f,
                                  const ExtrapolationOptions& options = {});

/// Oracle covariances for every epsilon of the extrapolation sequence, built
/// once and shared by many moment extrapolations.
class OracleLadder {
 public:
  OracleLadder(Dims dims, ActionSpec action = ActionSpec::Standard, const ExtrapolationOptions& options = {});

  const ExtrapolationOptions& options() const { return options_; }
  const std::vector<OracleCovariance>& rungs() const { return rungs_; }

  Extrapolation moment(std::span<const EntrySymbol> entries) const;
  /// Extrapolated normalization(), compared relative to its size.
  Extrapolation normalization() const;

 private:
  Extrapolation run(const std::function<std::complex<double>(const OracleCovariance&)>& f,
                    bool relative) const;

  ExtrapolationOptions options_;
  std::vector<OracleCovariance> rungs_;
};

/// Serializable record of one oracle evaluation.
struct OracleRecord {
  std::string op;
  std::string inputs;
  double epsilon = 0.0;  ///< 0 denotes an extrapolated value
  std::complex<double> value;
};

}  // namespace tripleline::gaussian
