#include "tripleline/gaussian/transforms.hpp"

#include <cmath>
#include <numbers>

#include "tripleline/errors.hpp"

namespace tripleline::gaussian {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd random_hermitian(int N, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::MatrixXcd m(N, N);
  for (int r = 0; r < N; ++r) {
    m(r, r) = dist(rng);
    for (int c = r + 1; c < N; ++c) {
      const cd z(dist(rng), dist(rng));
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  return m;
}

double log_free_partition(Dims dims) {
  return dims.d * dims.N * std::numbers::ln2 + dims.d * dims.N * dims.N * std::log(std::numbers::pi);
}

}  // namespace

MatrixPair MatrixPair::zero(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  MatrixPair p{dims, {}, {}};
  p.F.assign(static_cast<std::size_t>(dims.d), Eigen::MatrixXcd::Zero(dims.N, dims.N));
  p.G = p.F;
  return p;
}

MatrixPair MatrixPair::random(Dims dims, std::mt19937_64& rng, double scale) {
  dims = Dims::make(dims.N, dims.d);
  MatrixPair p{dims, {}, {}};
  for (int mu = 0; mu < dims.d; ++mu) p.F.push_back(random_hermitian(dims.N, rng, scale));
  for (int mu = 0; mu < dims.d; ++mu) p.G.push_back(random_hermitian(dims.N, rng, scale));
  return p;
}

void MatrixPair::validate(double tol) const {
  Dims::make(dims.N, dims.d);
  const auto d = static_cast<std::size_t>(dims.d);
  if (F.size() != d || G.size() != d) throw ValidationError("MatrixPair: expected d components in F and G");
  for (const auto* family : {&F, &G}) {
    for (const auto& m : *family) {
      if (m.rows() != dims.N || m.cols() != dims.N) throw ValidationError("MatrixPair: component is not N x N");
      if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("MatrixPair: component is not Hermitian");
      }
    }
  }
}

double MatrixPair::norm_sq() const {
  double s = 0.0;
  for (std::size_t mu = 0; mu < F.size(); ++mu) s += trace_inner(F[mu], F[mu]) + trace_inner(G[mu], G[mu]);
  return s;
}

double MatrixPair::cross_trace() const {
  double s = 0.0;
  for (std::size_t mu = 0; mu < F.size(); ++mu) s += trace_inner(F[mu], G[mu]);
  return s;
}

RegKernel::RegKernel(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("RegKernel: epsilon must be > 0");
}

std::complex<double> t_transform_reg(const MatrixPair& fg, const RegKernel& kernel) {
  fg.validate();
  const double eps = kernel.epsilon();
  const double denom = eps * eps + 1.0;
  const double n2 = static_cast<double>(fg.dims.d) * fg.dims.N * fg.dims.N;
  const double log_prefactor = log_free_partition(fg.dims) - 0.5 * n2 * std::log(denom);
  const cd exponent = -cd(eps * fg.norm_sq(), 2.0 * fg.cross_trace()) / (2.0 * denom);
  return std::exp(log_prefactor + exponent);
}

std::complex<double> t_transform_limit(const MatrixPair& fg) {
  fg.validate();
  return std::exp(cd(log_free_partition(fg.dims), -fg.cross_trace()));
}

double free_partition(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  return std::exp(log_free_partition(dims));
}

FreeLogConstant free_partition_log(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  return {static_cast<long>(dims.d) * dims.N, static_cast<long>(dims.d) * dims.N * dims.N};
}

std::complex<double> normalized_t_transform_scaled(const MatrixPair& fg, const RegKernel& kernel,
                                                   std::complex<double> z) {
  fg.validate();
  const double eps = kernel.epsilon();
  return std::exp(-z * z * cd(eps * fg.norm_sq(), 2.0 * fg.cross_trace()) / (2.0 * (eps * eps + 1.0)));
}

bool u_bound_check(const MatrixPair& fg, std::span<const std::complex<double>> z_samples,
                   const RegKernel& kernel, double inflate) {
  if (kernel.epsilon() > 0.5) throw ValidationError("u_bound_check: requires epsilon <= 0.5");
  const double norm_sq = fg.norm_sq();
  for (const cd z : z_samples) {
    const double lhs = inflate * std::abs(normalized_t_transform_scaled(fg, kernel, z));
    const double rhs = std::exp(2.0 * std::norm(z) * norm_sq);
    // Relative slack only absorbs rounding at z = 0, where both sides are 1.
    if (lhs > rhs * (1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace tripleline::gaussian
