#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tripleline/diagram/layout.hpp"
#include "tripleline/errors.hpp"

namespace tripleline::diagram {

/// Hard bound on quartic vertices for exhaustive enumeration.
inline constexpr int kMaxOrder = 6;

/// (2k)! for ab_only, (4k-1)!! = (4k)! / (2^{2k} (2k)!) for all.
std::uint64_t expected_matchings(int k, MatchMode mode);

/// Throws ResourceLimitError if k lies outside [1, max_k] or max_k > kMaxOrder.
void check_order(int k, int max_k = kMaxOrder);

/// Decisions fixed before a subtree is enumerated: the partner chosen for the
/// lowest unmatched leg, in order.
using Prefix = std::vector<std::pair<int, int>>;

namespace detail {

template <class Visitor>
void enumerate_from(const VertexLayout& layout, MatchMode mode, Pairing& p, std::uint32_t used, Visitor& visit) {
  const int legs = layout.leg_count();
  const std::uint32_t all = legs == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << legs) - 1);
  if (used == all) {
    visit(static_cast<const Pairing&>(p));
    return;
  }
  int first = 0;
  while ((used >> first) & 1U) ++first;
  const std::uint32_t with_first = used | (std::uint32_t{1} << first);
  const Family fam = layout.family_of(first);
  for (int j = first + 1; j < legs; ++j) {
    if ((with_first >> j) & 1U) continue;
    if (mode == MatchMode::AbOnly && layout.family_of(j) == fam) continue;
    p.join(first, j);
    enumerate_from(layout, mode, p, with_first | (std::uint32_t{1} << j), visit);
  }
}

}  // namespace detail

/// Visits every pairing of `layout` allowed by `mode` exactly once, in
/// lexicographic order of the involution array, holding O(legs) state. The
/// visitor receives a reference that is only valid during the call.
template <class Visitor>
void for_each_matching(const VertexLayout& layout, MatchMode mode, Visitor&& visit) {
  Pairing p(layout.leg_count());
  detail::enumerate_from(layout, mode, p, 0, visit);
}

/// Same as for_each_matching restricted to the subtree below `prefix`.
template <class Visitor>
void for_each_matching_below(const VertexLayout& layout, MatchMode mode, const Prefix& prefix, Visitor&& visit) {
  Pairing p(layout.leg_count());
  std::uint32_t used = 0;
  for (const auto& [a, b] : prefix) {
    p.join(a, b);
    used |= (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
  }
  detail::enumerate_from(layout, mode, p, used, visit);
}

/// Prefixes of the given depth in lexicographic order; enumerating below each
/// of them in order reproduces for_each_matching's sequence.
std::vector<Prefix> partition_prefixes(const VertexLayout& layout, MatchMode mode, int depth);

/// Quartic-layout enumeration with the order cap applied.
template <class Visitor>
void enumerate_matchings(int k, MatchMode mode, Visitor&& visit, int max_k = kMaxOrder) {
  check_order(k, max_k);
  for_each_matching(VertexLayout::quartic(k), mode, std::forward<Visitor>(visit));
}

}  // namespace tripleline::diagram
