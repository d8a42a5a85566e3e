#include "tripleline/diagram/census.hpp"

#include <string>

namespace tripleline::diagram {

std::uint64_t expected_matchings(int k, MatchMode mode) {
  if (k < 0 || k > kMaxOrder) throw ResourceLimitError("expected_matchings: k out of range");
  std::uint64_t out = 1;
  if (mode == MatchMode::AbOnly) {
    for (int i = 2; i <= 2 * k; ++i) out *= static_cast<std::uint64_t>(i);
  } else {
    for (int i = 4 * k - 1; i > 1; i -= 2) out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

void check_order(int k, int max_k) {
  if (max_k > kMaxOrder) {
    throw ResourceLimitError("order cap " + std::to_string(max_k) + " exceeds the hard limit " +
                             std::to_string(kMaxOrder));
  }
  if (k < 1) throw ValidationError("order must be at least 1, got " + std::to_string(k));
  if (k > max_k) {
    throw ResourceLimitError("order " + std::to_string(k) + " exceeds the enumeration cap " + std::to_string(max_k));
  }
}

namespace {

void collect_prefixes(const VertexLayout& layout, MatchMode mode, int depth, std::uint32_t used, Prefix& current,
                      std::vector<Prefix>& out) {
  const int legs = layout.leg_count();
  if (depth == 0 || static_cast<int>(current.size()) * 2 == legs) {
    out.push_back(current);
    return;
  }
  int first = 0;
  while ((used >> first) & 1U) ++first;
  const std::uint32_t with_first = used | (std::uint32_t{1} << first);
  for (int j = first + 1; j < legs; ++j) {
    if ((with_first >> j) & 1U) continue;
    if (mode == MatchMode::AbOnly && layout.family_of(j) == layout.family_of(first)) continue;
    current.emplace_back(first, j);
    collect_prefixes(layout, mode, depth - 1, with_first | (std::uint32_t{1} << j), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Prefix> partition_prefixes(const VertexLayout& layout, MatchMode mode, int depth) {
  if (depth < 0) throw ValidationError("prefix depth must be non-negative");
  std::vector<Prefix> out;
  Prefix current;
  collect_prefixes(layout, mode, depth, 0, current, out);
  return out;
}

int partition_depth(const VertexLayout& layout, int threads) {
  // Serial runs use the same split as parallel ones so that the fold order is
  // identical; two levels give at least (legs-1)(legs-3) / 4 subtrees.
  const int pairs = layout.leg_count() / 2;
  int depth = 2;
  if (threads > 8) depth = 3;
  return std::min(depth, pairs);
}

void Census::add(const DiagramAnalysis& a) {
  ++histogram[CensusKey{a.C, a.l, a.components, a.tadpole, a.aa, a.ab, a.bb}];
  ++pairings;
  components_checked += static_cast<std::uint64_t>(a.components);
  max_genus = std::max(max_genus, a.max_genus);
}

void Census::merge(const Census& other) {
  for (const auto& [key, count] : other.histogram) histogram[key] += count;
  pairings += other.pairings;
  components_checked += other.components_checked;
  max_genus = std::max(max_genus, other.max_genus);
}

int connected_genus(const VertexLayout& layout, const CensusKey& key) {
  if (key.components != 1) throw ValidationError("connected_genus: diagram is disconnected");
  const int twice = 2 - layout.vertex_count() + layout.leg_count() / 2 - key.C;
  return twice / 2;
}

Census run_census(const VertexLayout& layout, const CensusOptions& options) {
  if (layout.leg_count() == 0) {
    Census empty;
    empty.pairings = 1;
    empty.histogram[CensusKey{}] = 1;
    return empty;
  }
  auto parts = partitioned_fold<Census>(
      layout, options.mode, options.threads, [] { return Census{}; },
      [&layout](Census& acc, const Pairing& p) { acc.add(analyze(layout, p)); });
  Census total;
  for (const auto& part : parts) total.merge(part);
  return total;
}

Census run_census(int k, const CensusOptions& options) {
  check_order(k, options.max_k);
  return run_census(VertexLayout::quartic(k), options);
}

}  // namespace tripleline::diagram
