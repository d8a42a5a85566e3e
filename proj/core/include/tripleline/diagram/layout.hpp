#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tripleline/gaussian/basis.hpp"

namespace tripleline::diagram {

using gaussian::Family;

/// Upper bound on legs in any diagram (k <= 6 quartic vertices use 24).
inline constexpr int kMaxLegs = 32;

/// A leg of the quartic vertex Tr(A_mu B_nu A_mu B_nu): id = 4 * vertex +
/// position, positions 0 and 2 are A-legs, 1 and 3 are B-legs.
struct Leg {
  int id = 0;
  int vertex() const { return id / 4; }
  int position() const { return id % 4; }
  Family family() const { return position() % 2 == 0 ? Family::A : Family::B; }
};

enum class VertexKind : std::uint8_t {
  Quartic,   ///< A^{jl}_mu B^{lm}_nu A^{mn}_mu B^{nj}_nu
  Bilinear,  ///< A^{jn}_mu B^{nj}_mu
};

/// Leg structure of a product of vertices: quartic vertices first, then
/// bilinear ones. For every leg it records the trace successor (whose row
/// index equals this leg's column index), the Greek slot, and the family.
class VertexLayout {
 public:
  static VertexLayout quartic(int k);
  static VertexLayout mixed(int quartic, int bilinear);

  int leg_count() const { return static_cast<int>(vertex_.size()); }
  int vertex_count() const { return static_cast<int>(first_leg_.size()); }
  int quartic_count() const { return quartic_; }
  int bilinear_count() const { return vertex_count() - quartic_; }
  int slot_count() const { return slots_; }

  int vertex_of(int leg) const { return vertex_[static_cast<std::size_t>(leg)]; }
  int position_of(int leg) const { return leg - first_leg(vertex_of(leg)); }
  Family family_of(int leg) const { return family_[static_cast<std::size_t>(leg)]; }
  int next_in_trace(int leg) const { return next_[static_cast<std::size_t>(leg)]; }
  int slot_of(int leg) const { return slot_[static_cast<std::size_t>(leg)]; }
  /// The other leg carrying the same Greek index (the strand passes straight through).
  int through_leg(int leg) const { return through_[static_cast<std::size_t>(leg)]; }

  VertexKind kind_of(int vertex) const {
    return vertex < quartic_ ? VertexKind::Quartic : VertexKind::Bilinear;
  }
  int first_leg(int vertex) const { return first_leg_[static_cast<std::size_t>(vertex)]; }
  int vertex_size(int vertex) const { return kind_of(vertex) == VertexKind::Quartic ? 4 : 2; }

 private:
  int quartic_ = 0;
  int slots_ = 0;
  std::vector<std::uint8_t> vertex_;
  std::vector<Family> family_;
  std::vector<std::uint8_t> next_;
  std::vector<std::uint8_t> slot_;
  std::vector<std::uint8_t> through_;
  std::vector<std::uint8_t> first_leg_;
};

enum class MatchMode : std::uint8_t {
  AbOnly,  ///< every propagator joins an A-leg to a B-leg
  All,     ///< every perfect matching
};

std::string to_string(MatchMode m);

/// Fixed-point-free involution on the legs of a layout.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(int legs);

  /// Quartic-vertex pairing on 4k legs from its list of pairs. Throws
  /// ValidationError unless the pairs form a perfect matching.
  static Pairing from_pairs(int k, std::initializer_list<std::pair<int, int>> pairs);
  static Pairing from_pairs_on_legs(int legs, std::span<const std::pair<int, int>> pairs);

  int leg_count() const { return legs_; }
  /// Vertex count when the pairing lives on a quartic layout.
  int k() const { return legs_ / 4; }
  int partner(int leg) const { return match_[static_cast<std::size_t>(leg)]; }
  void join(int a, int b) {
    match_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    match_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  }

  /// Pairs (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> pairs() const;
  std::span<const std::uint8_t> match() const { return {match_.data(), static_cast<std::size_t>(legs_)}; }
  bool is_involution() const;
  /// True when every pair joins opposite families in `layout`.
  bool is_ab_only(const VertexLayout& layout) const;
  std::string to_string() const;

  friend bool operator==(const Pairing& a, const Pairing& b) {
    return a.legs_ == b.legs_ && std::equal(a.match().begin(), a.match().end(), b.match().begin());
  }
  /// Lexicographic on the involution array.
  friend std::strong_ordering operator<=>(const Pairing& a, const Pairing& b);

 private:
  std::uint8_t legs_ = 0;
  std::array<std::uint8_t, kMaxLegs> match_{};
};

}  // namespace tripleline::diagram
