#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tripleline::knot {

enum class Passage : std::uint8_t { Over, Under };

struct Crossing {
  int id = 1;
  Passage passage = Passage::Over;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// Sequence of crossing passages met along a closed strand.
class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<Crossing> seq) : seq_(std::move(seq)) {}

  /// Parses "O1U2O3U1O2U3"; the empty string is the zero-crossing unknot.
  /// Throws ValidationError on malformed text.
  static GaussCode parse(std::string_view text);

  const std::vector<Crossing>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  int crossing_count() const { return static_cast<int>(seq_.size() / 2); }

  /// Throws ValidationError unless every id occurs exactly twice, once over
  /// and once under.
  void validate() const;

  /// Least sequence over all cyclic rotations, each relabelled by order of
  /// first appearance (Over before Under at equal ids). No mirror or reversal.
  GaussCode canonical() const;

  /// Removes both passages of one crossing.
  GaussCode without(int id) const;

  std::string to_string() const;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Crossing> seq_;
};

/// True iff passages strictly alternate around the closed strand. Throws
/// ValidationError for a malformed code.
bool alternating_check(const GaussCode& c);

/// Ids whose two passages are cyclically adjacent.
std::vector<int> kinks(const GaussCode& c);

/// Deletes kinks until none remain.
GaussCode reduce_R1(const GaussCode& c);

}  // namespace tripleline::knot
