#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "tripleline/diagram/census.hpp"
#include "tripleline/exact.hpp"
#include "tripleline/gaussian/propagator.hpp"
#include "tripleline/series/tri_series.hpp"

namespace tripleline::series {

/// Vertex coupling per order: c = i g / 2 from the action's g / (2N) factor,
/// or c = i g as in the printed perturbation series. Both carry N^{-1}.
enum class Convention : std::uint8_t { Action, PaperSeries };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view name);

/// Standard: quadratic part Tr(A B), quartic vertex as written.
/// Symmetric: quadratic part Tr(AA) + Tr(BB) + Tr(AB), all pairings allowed.
/// WickOrdered: standard propagators with the Wick-ordered quartic vertex.
enum class SeriesAction : std::uint8_t { Standard, Symmetric, WickOrdered };

std::string_view to_string(SeriesAction a);
SeriesAction parse_series_action(std::string_view name);

struct AssembleOptions {
  Convention convention = Convention::Action;
  SeriesAction action = SeriesAction::Standard;
  int threads = 1;
  int max_k = diagram::kMaxOrder;
  /// Drop every pairing that contracts two legs of one vertex (standard and
  /// symmetric actions only).
  bool exclude_tadpoles = false;
};

/// c / g as an exact number: i/2 or i.
GaussRational vertex_coupling(Convention c);

/// Propagators and matching mode used by an action.
gaussian::PropagatorMatrix action_propagators(SeriesAction a);
diagram::MatchMode action_match_mode(SeriesAction a);

/// Product of propagator blocks for a census key.
GaussRational key_amplitude(const diagram::CensusKey& key, const gaussian::PropagatorMatrix& props);

/// Censuses for every order up to kmax, computed once and reused by the
/// Z series, the connected series and the planar counts. The Wick-ordered
/// action needs mixed layouts with `a` quartic and `b` bilinear vertices.
class DiagramSums {
 public:
  DiagramSums(int kmax, const AssembleOptions& options);

  int kmax() const { return kmax_; }
  const AssembleOptions& options() const { return options_; }
  const diagram::Census& census(int quartic, int bilinear = 0) const;

  /// Normalized Z: sum_k (1/k!) c^k N^{-k} sum_pairings amplitude N^C d^l.
  TriSeries z() const;
  /// The same prefactors summed over connected pairings only.
  TriSeries connected() const;
  /// Connected, genus 0, one Greek loop, nonzero amplitude, per order 1..kmax.
  std::vector<std::uint64_t> planar_single_loop_counts() const;

 private:
  int kmax_;
  AssembleOptions options_;
  std::map<std::pair<int, int>, diagram::Census> censuses_;
};

/// Throws ResourceLimitError when kmax exceeds options.max_k.
TriSeries assemble_Z(int kmax, const AssembleOptions& options = {});
TriSeries connected_assemble(int kmax, const AssembleOptions& options = {});

}  // namespace tripleline::series
