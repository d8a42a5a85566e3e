#include "tripleline/gaussian/propagator.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "tripleline/errors.hpp"

namespace tripleline::gaussian {

void EntrySymbol::validate(Dims dims) const {
  if (mu < 1 || mu > dims.d || row < 1 || row > dims.N || col < 1 || col > dims.N) {
    throw ValidationError("entry " + to_string() + " is out of range for N=" + std::to_string(dims.N) +
                          ", d=" + std::to_string(dims.d));
  }
}

std::string EntrySymbol::to_string() const {
  std::ostringstream os;
  os << family_letter(family) << '_' << mu << "^{" << row;
  if (row > 9 || col > 9) os << ',';
  os << col << '}';
  return os.str();
}

std::string_view to_string(ActionSpec a) { return a == ActionSpec::Standard ? "standard" : "symmetric"; }

ActionSpec parse_action_spec(std::string_view name) {
  if (name == "standard") return ActionSpec::Standard;
  if (name == "symmetric") return ActionSpec::Symmetric;
  throw ValidationError("unknown action '" + std::string(name) + "'");
}

std::array<std::array<mpq_class, 2>, 2> quadratic_coupling(ActionSpec action) {
  if (action == ActionSpec::Standard) return {{{0, 1}, {1, 0}}};
  return {{{2, 1}, {1, 2}}};
}

PropagatorMatrix general_propagators(ActionSpec action) {
  const auto m = quadratic_coupling(action);
  const mpq_class det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (sgn(det) == 0) throw std::domain_error("quadratic coupling is singular");
  // i * M^{-1}, M^{-1} = adj(M) / det.
  const GaussRational i = GaussRational::i();
  return {i * GaussRational(mpq_class(m[1][1] / det)), i * GaussRational(mpq_class(-m[0][1] / det)),
          i * GaussRational(mpq_class(m[0][0] / det))};
}

GaussRational propagator(const EntrySymbol& x, const EntrySymbol& y, Dims dims, const PropagatorMatrix& props) {
  x.validate(dims);
  y.validate(dims);
  if (x.mu != y.mu || x.row != y.col || x.col != y.row) return 0;
  return props.block(x.family, y.family);
}

std::uint64_t pairing_count(unsigned length) {
  if (length % 2 != 0) return 0;
  std::uint64_t c = 1;
  for (unsigned j = length; j > 1; j -= 2) c *= j - 1;
  return c;
}

namespace {

// Recursively pairs the lowest unpaired slot; `table` holds all pairwise
// propagators. Every pairing is visited (and counted) even when its product
// has already vanished.
void sum_pairings(const std::vector<GaussRational>& table, std::size_t n, std::vector<bool>& used,
                  const GaussRational& partial, GaussRational& total, std::uint64_t& leaves) {
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    ++leaves;
    total += partial;
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    const GaussRational& p = table[first * n + j];
    sum_pairings(table, n, used, partial.is_zero() || p.is_zero() ? GaussRational(0) : partial * p, total,
                 leaves);
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace

WickMomentDetail wick_moment_detailed(std::span<const EntrySymbol> entries, Dims dims,
                                      const PropagatorMatrix& props) {
  dims = Dims::make(dims.N, dims.d);
  for (const auto& e : entries) e.validate(dims);
  const std::size_t n = entries.size();
  WickMomentDetail out{0, 0};
  if (n % 2 != 0) return out;
  std::vector<GaussRational> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) table[a * n + b] = propagator(entries[a], entries[b], dims, props);
  }
  std::vector<bool> used(n, false);
  sum_pairings(table, n, used, GaussRational(1), out.value, out.pairings);
  return out;
}

GaussRational wick_moment(std::span<const EntrySymbol> entries, Dims dims, const PropagatorMatrix& props) {
  return wick_moment_detailed(entries, dims, props).value;
}

}  // namespace tripleline::gaussian
