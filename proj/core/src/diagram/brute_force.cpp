#include "tripleline/diagram/brute_force.hpp"

#include <utility>
#include <vector>

#include "tripleline/errors.hpp"

namespace tripleline::diagram {

namespace {

struct IndexNames {
  int row = 0;
  int col = 0;
  int greek = 0;
};

// Index variables of every leg, read off the written vertex functions.
std::vector<IndexNames> name_indices(const VertexLayout& layout, int& latin_vars, int& greek_vars) {
  std::vector<IndexNames> legs(static_cast<std::size_t>(layout.leg_count()));
  latin_vars = 0;
  greek_vars = 0;
  for (int v = 0; v < layout.vertex_count(); ++v) {
    const int base = layout.first_leg(v);
    if (layout.kind_of(v) == VertexKind::Quartic) {
      const int j = latin_vars++, l = latin_vars++, m = latin_vars++, n = latin_vars++;
      const int mu = greek_vars++, nu = greek_vars++;
      legs[static_cast<std::size_t>(base + 0)] = {j, l, mu};  // A_mu^{jl}
      legs[static_cast<std::size_t>(base + 1)] = {l, m, nu};  // B_nu^{lm}
      legs[static_cast<std::size_t>(base + 2)] = {m, n, mu};  // A_mu^{mn}
      legs[static_cast<std::size_t>(base + 3)] = {n, j, nu};  // B_nu^{nj}
    } else {
      const int j = latin_vars++, n = latin_vars++;
      const int mu = greek_vars++;
      legs[static_cast<std::size_t>(base + 0)] = {j, n, mu};  // A_mu^{jn}
      legs[static_cast<std::size_t>(base + 1)] = {n, j, mu};  // B_mu^{nj}
    }
  }
  return legs;
}

// Number of assignments of vars 0..n-1 to 1..range satisfying all equalities.
mpz_class count_assignments(int n, int range, const std::vector<std::pair<int, int>>& equalities) {
  // earlier[i] lists the lower-numbered variables that must equal variable i.
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
  for (auto [a, b] : equalities) {
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    earlier[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<int> value(static_cast<std::size_t>(n), 0);
  mpz_class count = 0;
  auto assign = [&](auto& self, int i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    const auto& eq = earlier[static_cast<std::size_t>(i)];
    if (!eq.empty()) {
      const int forced = value[static_cast<std::size_t>(eq.front())];
      for (const int j : eq) {
        if (value[static_cast<std::size_t>(j)] != forced) return;
      }
      value[static_cast<std::size_t>(i)] = forced;
      self(self, i + 1);
      return;
    }
    for (int x = 1; x <= range; ++x) {
      value[static_cast<std::size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  assign(assign, 0);
  return count;
}

}  // namespace

GaussRational brute_force_index_sum(const VertexLayout& layout, const Pairing& p, gaussian::Dims dims,
                                    const gaussian::PropagatorMatrix& props, const BruteForceLimits& limits) {
  dims = gaussian::Dims::make(dims.N, dims.d);
  if (layout.leg_count() != p.leg_count()) throw ValidationError("pairing and layout disagree on leg count");
  if (dims.N > limits.max_N || dims.d > limits.max_d || layout.vertex_count() > limits.max_vertices) {
    throw ResourceLimitError("brute_force_index_sum: N <= " + std::to_string(limits.max_N) + ", d <= " +
                             std::to_string(limits.max_d) + ", vertices <= " +
                             std::to_string(limits.max_vertices) + " required");
  }
  int latin_vars = 0;
  int greek_vars = 0;
  const auto names = name_indices(layout, latin_vars, greek_vars);

  GaussRational amp(1);
  std::vector<std::pair<int, int>> latin_eq;
  std::vector<std::pair<int, int>> greek_eq;
  for (const auto& [x, y] : p.pairs()) {
    amp *= props.block(layout.family_of(x), layout.family_of(y));
    const IndexNames& a = names[static_cast<std::size_t>(x)];
    const IndexNames& b = names[static_cast<std::size_t>(y)];
    // <X^{kl} Y^{mn}> carries delta^{kn} delta^{lm}.
    latin_eq.emplace_back(a.row, b.col);
    latin_eq.emplace_back(a.col, b.row);
    greek_eq.emplace_back(a.greek, b.greek);
  }
  if (amp.is_zero()) return 0;
  const mpz_class latin = count_assignments(latin_vars, dims.N, latin_eq);
  const mpz_class greek = count_assignments(greek_vars, dims.d, greek_eq);
  return amp * GaussRational(mpq_class(latin * greek));
}

GaussRational brute_force_index_sum(const Pairing& p, gaussian::Dims dims, const gaussian::PropagatorMatrix& props,
                                    const BruteForceLimits& limits) {
  if (p.leg_count() % 4 != 0) throw ValidationError("pairing does not live on quartic vertices");
  return brute_force_index_sum(VertexLayout::quartic(p.k()), p, dims, props, limits);
}

}  // namespace tripleline::diagram
