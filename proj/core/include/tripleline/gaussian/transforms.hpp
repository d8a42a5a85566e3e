#pragma once

#include <complex>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tripleline/gaussian/basis.hpp"

namespace tripleline::gaussian {

/// Pair (F, G) of d-vectors of Hermitian N x N matrices; the argument of the
/// T-transform.
struct MatrixPair {
  Dims dims;
  std::vector<Eigen::MatrixXcd> F;
  std::vector<Eigen::MatrixXcd> G;

  static MatrixPair zero(Dims dims);
  /// Entries of each Hermitian component drawn uniformly from [-scale, scale].
  static MatrixPair random(Dims dims, std::mt19937_64& rng, double scale = 1.0);

  /// Throws ValidationError on shape mismatch or a non-Hermitian component.
  void validate(double tol = 1e-12) const;

  /// sum_mu Tr(F_mu F_mu) + Tr(G_mu G_mu).
  double norm_sq() const;
  /// sum_mu Tr(F_mu G_mu) (real for Hermitian inputs).
  double cross_trace() const;
};

/// The regularization parameter of the quadratic form; epsilon > 0.
class RegKernel {
 public:
  explicit RegKernel(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

/// Closed-form T-transform of the regularized density:
///   2^{dN} (pi / sqrt(eps^2+1))^{dN^2}
///     * exp(-(eps Tr(FF + GG) + 2i Tr(FG)) / (2 (eps^2 + 1))).
std::complex<double> t_transform_reg(const MatrixPair& fg, const RegKernel& kernel);

/// eps -> 0 limit: 2^{dN} pi^{dN^2} exp(-i Tr(F G)).
std::complex<double> t_transform_limit(const MatrixPair& fg);

/// Z(N, d, 0) = 2^{dN} pi^{dN^2}.
double free_partition(Dims dims);

/// ln Z(N, d, 0) = ln2_coeff * ln 2 + lnpi_coeff * ln pi, with the
/// coefficients as monomials in N and d: dN and dN^2.
struct FreeLogConstant {
  long ln2_coeff;
  long lnpi_coeff;
};
FreeLogConstant free_partition_log(Dims dims);

/// T-transform divided by its value at zero, evaluated at z * (F, G) for
/// complex z: exp(-z^2 (eps Tr(FF+GG) + 2i Tr(FG)) / (2 (eps^2+1))).
std::complex<double> normalized_t_transform_scaled(const MatrixPair& fg, const RegKernel& kernel,
                                                   std::complex<double> z);

/// Checks |normalized T(z FG)| * inflate <= exp(2 |z|^2 |FG|^2) on every
/// sample. Requires eps <= 0.5. `inflate` exists for negative controls.
bool u_bound_check(const MatrixPair& fg, std::span<const std::complex<double>> z_samples,
                   const RegKernel& kernel, double inflate = 1.0);

}  // namespace tripleline::gaussian
