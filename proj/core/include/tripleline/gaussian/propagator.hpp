#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tripleline/exact.hpp"
#include "tripleline/gaussian/basis.hpp"

namespace tripleline::gaussian {

/// Matrix entry X_mu^{row col} of family X in {A, B}; all indices 1-based.
struct EntrySymbol {
  Family family = Family::A;
  int mu = 1;
  int row = 1;
  int col = 1;

  /// Throws ValidationError when an index lies outside dims.
  void validate(Dims dims) const;
  /// "A_1^{12}"; multi-digit indices are comma separated: "B_2^{10,3}".
  std::string to_string() const;
  friend bool operator==(const EntrySymbol&, const EntrySymbol&) = default;
  friend auto operator<=>(const EntrySymbol&, const EntrySymbol&) = default;
};

/// Quadratic part of the action.
///   Standard:  Tr(A_mu B_mu)
///   Symmetric: Tr(A_mu A_mu) + Tr(B_mu B_mu) + Tr(A_mu B_mu)
enum class ActionSpec : std::uint8_t { Standard, Symmetric };

std::string_view to_string(ActionSpec a);
/// Throws ValidationError on unknown names.
ActionSpec parse_action_spec(std::string_view name);

/// 2x2 coupling M such that the quadratic exponent per scalar pair is
/// (i/2) (a, b) M (a, b)^T.
std::array<std::array<mpq_class, 2>, 2> quadratic_coupling(ActionSpec action);

/// Family-block propagator with the fixed row<->col index pattern:
///   <X_mu^{kl} Y_nu^{mn}> = block(X, Y) delta_{mu nu} delta^{kn} delta^{lm}.
class PropagatorMatrix {
 public:
  PropagatorMatrix() = default;
  PropagatorMatrix(GaussRational aa, GaussRational ab, GaussRational bb)
      : blocks_{std::move(aa), ab, ab, std::move(bb)} {}

  static PropagatorMatrix standard() { return {0, GaussRational::i(), 0}; }

  const GaussRational& block(Family x, Family y) const {
    return blocks_[static_cast<std::size_t>(x) * 2 + static_cast<std::size_t>(y)];
  }
  bool is_family_symmetric() const { return blocks_[1] == blocks_[2]; }
  friend bool operator==(const PropagatorMatrix&, const PropagatorMatrix&) = default;

 private:
  std::array<GaussRational, 4> blocks_{};
};

/// i * M^{-1} for the action's coupling M. Throws std::domain_error if M is
/// singular.
PropagatorMatrix general_propagators(ActionSpec action);

/// Exact second moment of two entries. Throws ValidationError if an entry is
/// out of range for dims.
GaussRational propagator(const EntrySymbol& x, const EntrySymbol& y, Dims dims,
                         const PropagatorMatrix& props = PropagatorMatrix::standard());

struct WickMomentDetail {
  GaussRational value;
  std::uint64_t pairings = 0;  ///< pairings visited by the enumeration; 0 for odd length
};

/// Normalized Gaussian moment: sum over all pairings of products of
/// propagators. Multiply by free_partition(dims) for the unnormalized pairing.
GaussRational wick_moment(std::span<const EntrySymbol> entries, Dims dims,
                          const PropagatorMatrix& props = PropagatorMatrix::standard());

WickMomentDetail wick_moment_detailed(std::span<const EntrySymbol> entries, Dims dims,
                                      const PropagatorMatrix& props = PropagatorMatrix::standard());

/// (2m - 1)!! as an exact count.
std::uint64_t pairing_count(unsigned length);

}  // namespace tripleline::gaussian
