#include "tripleline/gaussian/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "tripleline/errors.hpp"

namespace tripleline::gaussian {

namespace {

using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);

}  // namespace

OracleCovariance::OracleCovariance(Dims dims, double epsilon, ActionSpec action)
    : dims_(Dims::make(dims.N, dims.d)), epsilon_(RegKernel(epsilon).epsilon()), action_(action),
      basis_(cos_basis(dims_)) {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  const Eigen::Index half = n / 2;
  weights_.resize(n);
  for (Eigen::Index c = 0; c < n; ++c) weights_(c) = basis_[static_cast<std::size_t>(c)].trace_weight();

  const auto m = quadratic_coupling(action_);
  coupling_ = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < half; ++c) {
    const double w = weights_(c);
    for (int fx = 0; fx < 2; ++fx) {
      for (int fy = 0; fy < 2; ++fy) {
        coupling_(c + fx * half, c + fy * half) += -kI * m[fx][fy].get_d() * w;
      }
    }
  }
  for (Eigen::Index c = 0; c < n; ++c) coupling_(c, c) += epsilon_ * weights_(c);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(coupling_);
  inverse_ = lu.inverse();
  residual_ = (coupling_ * inverse_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!std::isfinite(residual_) || residual_ >= 1e-10) {
    throw std::runtime_error("OracleCovariance: coupling matrix is singular (residual " +
                             std::to_string(residual_) + ")");
  }
}

Eigen::VectorXcd OracleCovariance::entry_form(const EntrySymbol& e) const {
  e.validate(dims_);
  Eigen::VectorXcd form = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_.size()));
  auto at = [&](BasisKind kind, int k, int l) {
    return static_cast<Eigen::Index>(basis_index({e.family, e.mu, kind, k, l}, dims_));
  };
  if (e.row == e.col) {
    form(at(BasisKind::Diagonal, e.row, e.row)) = 1.0;
  } else {
    const int k = std::min(e.row, e.col);
    const int l = std::max(e.row, e.col);
    // X^{kl} = Re + i Im for k < l; the transposed entry is the conjugate.
    form(at(BasisKind::OffDiagReal, k, l)) = 1.0;
    form(at(BasisKind::OffDiagImag, k, l)) = e.row < e.col ? kI : -kI;
  }
  return form;
}

std::complex<double> OracleCovariance::entry_covariance(const EntrySymbol& x, const EntrySymbol& y) const {
  return (entry_form(x).transpose() * inverse_ * entry_form(y))(0, 0);
}

std::complex<double> OracleCovariance::moment(std::span<const EntrySymbol> entries) const {
  const std::size_t n = entries.size();
  if (n % 2 != 0) return 0.0;
  if (n > 20) throw ResourceLimitError("oracle moment: at most 20 entries");
  std::vector<Eigen::VectorXcd> forms;
  forms.reserve(n);
  for (const auto& e : entries) forms.push_back(entry_form(e));
  std::vector<cd> cov(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Eigen::RowVectorXcd row = forms[a].transpose() * inverse_;
    for (std::size_t b = 0; b < n; ++b) cov[a * n + b] = (row * forms[b])(0, 0);
  }
  // E[x_S] = sum_{j in S, j != first(S)} C(first, j) E[x_{S \ {first, j}}],
  // memoized over subsets.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<cd> memo(full + 1, cd(0.0));
  std::vector<bool> done(full + 1, false);
  memo[0] = 1.0;
  done[0] = true;
  std::function<cd(std::size_t)> eval = [&](std::size_t mask) -> cd {
    if (done[mask]) return memo[mask];
    std::size_t first = 0;
    while (((mask >> first) & 1U) == 0) ++first;
    const std::size_t rest = mask & ~(std::size_t{1} << first);
    cd sum = 0.0;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (((rest >> j) & 1U) == 0) continue;
      sum += cov[first * n + j] * eval(rest & ~(std::size_t{1} << j));
    }
    done[mask] = true;
    return memo[mask] = sum;
  };
  return eval(full);
}

std::complex<double> OracleCovariance::normalization() const {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(coupling_, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("OracleCovariance: eigen solver failed");
  const auto n = static_cast<double>(coupling_.rows());
  cd log_value = 0.5 * n * std::log(2.0 * std::numbers::pi);
  for (const cd lambda : solver.eigenvalues()) log_value -= 0.5 * std::log(lambda);
  return std::exp(log_value);
}

std::complex<double> OracleCovariance::characteristic(const MatrixPair& fg) const {
  fg.validate();
  if (!(fg.dims == dims_)) throw ValidationError("characteristic: MatrixPair dims differ from oracle dims");
  const auto n = static_cast<Eigen::Index>(basis_.size());
  Eigen::VectorXcd ell(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const BasisElement& e = basis_[static_cast<std::size_t>(c)];
    const Eigen::MatrixXcd& m =
        (e.family == Family::A ? fg.F : fg.G)[static_cast<std::size_t>(e.mu - 1)];
    const cd entry = m(e.k - 1, e.l - 1);
    const double coord = e.kind == BasisKind::OffDiagImag ? entry.imag() : entry.real();
    ell(c) = weights_(c) * coord;
  }
  const cd quad = (ell.transpose() * inverse_ * ell)(0, 0);
  return normalization() * std::exp(-0.5 * quad);
}

std::complex<double> gaussian_oracle_moment(std::span<const EntrySymbol> entries, Dims dims, double epsilon,
                                            ActionSpec action) {
  return OracleCovariance(dims, epsilon, action).moment(entries);
}

Extrapolation extrapolate_to_zero(const std::function<std::complex<double>(double)>& f,
                                  const ExtrapolationOptions& options) {
  if (options.min_points < 2 || options.max_points < options.min_points) {
    throw ValidationError("extrapolate_to_zero: need 2 <= min_points <= max_points");
  }
  if (!(options.first > 0.0) || !(options.ratio > 0.0 && options.ratio < 1.0)) {
    throw ValidationError("extrapolate_to_zero: need first > 0 and 0 < ratio < 1");
  }
  Extrapolation out;
  // `row` is the Neville row ending at the latest point; diag[j] is the
  // estimate that uses points 0..j.
  std::vector<cd> row;
  std::vector<cd> diag;
  double eps = options.first;
  for (int j = 0; j < options.max_points; ++j, eps *= options.ratio) {
    out.epsilons.push_back(eps);
    out.samples.push_back(f(eps));
    std::vector<cd> next(static_cast<std::size_t>(j) + 1);
    next[0] = out.samples.back();
    for (int m = 1; m <= j; ++m) {
      const double x_new = out.epsilons[static_cast<std::size_t>(j)];
      const double x_old = out.epsilons[static_cast<std::size_t>(j - m)];
      next[static_cast<std::size_t>(m)] =
          (x_old * next[static_cast<std::size_t>(m - 1)] - x_new * row[static_cast<std::size_t>(m - 1)]) /
          (x_old - x_new);
    }
    row = std::move(next);
    diag.push_back(row.back());
    out.value = diag.back();
    if (j >= 1) {
      const double scale = options.relative ? std::max(1.0, std::abs(out.value)) : 1.0;
      out.last_delta = std::abs(diag[diag.size() - 1] - diag[diag.size() - 2]) / scale;
      if (j + 1 >= options.min_points && out.last_delta < options.tolerance) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

OracleLadder::OracleLadder(Dims dims, ActionSpec action, const ExtrapolationOptions& options) : options_(options) {
  // Validate the sequence the same way the extrapolation does.
  extrapolate_to_zero([](double) { return cd{}; }, options_);
  double eps = options_.first;
  rungs_.reserve(static_cast<std::size_t>(options_.max_points));
  for (int j = 0; j < options_.max_points; ++j, eps *= options_.ratio) rungs_.emplace_back(dims, eps, action);
}

Extrapolation OracleLadder::run(const std::function<cd(const OracleCovariance&)>& f, bool relative) const {
  ExtrapolationOptions opts = options_;
  opts.relative = relative;
  std::size_t next = 0;
  // extrapolate_to_zero requests the epsilons in sequence order.
  return extrapolate_to_zero([&](double) { return f(rungs_[next++]); }, opts);
}

Extrapolation OracleLadder::moment(std::span<const EntrySymbol> entries) const {
  return run([entries](const OracleCovariance& c) { return c.moment(entries); }, options_.relative);
}

Extrapolation OracleLadder::normalization() const {
  return run([](const OracleCovariance& c) { return c.normalization(); }, true);
}

}  // namespace tripleline::gaussian
