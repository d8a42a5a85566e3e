#include "tripleline/gaussian/basis.hpp"

#include <complex>
#include <sstream>

#include "tripleline/errors.hpp"

namespace tripleline::gaussian {

Dims Dims::make(int N, int d) {
  if (N < 1 || d < 1) {
    throw ValidationError("dimensions must satisfy N >= 1 and d >= 1 (got N=" + std::to_string(N) +
                          ", d=" + std::to_string(d) + ")");
  }
  return Dims{N, d};
}

Eigen::MatrixXcd BasisElement::matrix(int N) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
  const int r = k - 1;
  const int c = l - 1;
  switch (kind) {
    case BasisKind::Diagonal:
      m(r, r) = 1.0;
      break;
    case BasisKind::OffDiagReal:
      m(r, c) = 0.5;
      m(c, r) = 0.5;
      break;
    case BasisKind::OffDiagImag:
      m(r, c) = std::complex<double>(0.0, 0.5);
      m(c, r) = std::complex<double>(0.0, -0.5);
      break;
  }
  return m;
}

std::string BasisElement::to_string() const {
  std::ostringstream os;
  os << family_letter(family) << '[' << mu << "]:";
  switch (kind) {
    case BasisKind::Diagonal: os << "e" << k << l; break;
    case BasisKind::OffDiagReal: os << "e" << k << l; break;
    case BasisKind::OffDiagImag: os << "iJe" << k << l; break;
  }
  return os.str();
}

std::vector<BasisElement> cos_basis(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  std::vector<BasisElement> out;
  out.reserve(static_cast<std::size_t>(2 * dims.coords_per_family()));
  for (Family fam : {Family::A, Family::B}) {
    for (int mu = 1; mu <= dims.d; ++mu) {
      for (int k = 1; k <= dims.N; ++k) {
        for (int l = k; l <= dims.N; ++l) {
          out.push_back({fam, mu, k == l ? BasisKind::Diagonal : BasisKind::OffDiagReal, k, l});
        }
      }
      for (int k = 1; k <= dims.N; ++k) {
        for (int l = k + 1; l <= dims.N; ++l) {
          out.push_back({fam, mu, BasisKind::OffDiagImag, k, l});
        }
      }
    }
  }
  return out;
}

std::size_t basis_index(const BasisElement& e, Dims dims) {
  const int N = dims.N;
  const int per_mu = N * N;
  const int upper = N * (N + 1) / 2;
  // Rows k' < k contribute N - k' + 1 upper-triangle entries (diagonal included).
  auto row_offset = [N](int k, bool with_diag) {
    int off = 0;
    for (int r = 1; r < k; ++r) off += N - r + (with_diag ? 1 : 0);
    return off;
  };
  int within = 0;
  if (e.kind == BasisKind::OffDiagImag) {
    within = upper + row_offset(e.k, false) + (e.l - e.k - 1);
  } else {
    within = row_offset(e.k, true) + (e.l - e.k);
  }
  const int family_base = e.family == Family::A ? 0 : dims.coords_per_family();
  return static_cast<std::size_t>(family_base + (e.mu - 1) * per_mu + within);
}

double trace_inner(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) { return (x * y).trace().real(); }

}  // namespace tripleline::gaussian
