#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "tripleline/diagram/enumerate.hpp"
#include "tripleline/diagram/layout.hpp"
#include "tripleline/diagram/loops.hpp"

namespace tripleline::diagram {

/// Everything about a pairing that the series assembly depends on.
struct CensusKey {
  int C = 0;
  int l = 0;
  int components = 0;
  bool tadpole = false;
  int aa = 0;
  int ab = 0;
  int bb = 0;

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct CensusOptions {
  MatchMode mode = MatchMode::AbOnly;
  int threads = 1;
  int max_k = kMaxOrder;
};

/// Exact histogram of census keys over all pairings of one layout.
struct Census {
  std::map<CensusKey, std::uint64_t> histogram;
  std::uint64_t pairings = 0;
  int max_genus = 0;
  std::uint64_t components_checked = 0;

  void add(const DiagramAnalysis& a);
  void merge(const Census& other);
  friend bool operator==(const Census&, const Census&) = default;
};

/// Genus of a connected diagram with the given key on `layout`.
int connected_genus(const VertexLayout& layout, const CensusKey& key);

/// Prefix depth giving enough independent tasks for `threads` workers.
int partition_depth(const VertexLayout& layout, int threads);

/// Runs `visit(acc, pairing)` over every pairing of `layout`, split into
/// subtrees by prefix. Each subtree gets its own accumulator from `make()`;
/// the returned accumulators are in prefix order regardless of `threads`, so
/// folding them left to right reproduces the serial result exactly.
template <class Acc, class Make, class Visit>
std::vector<Acc> partitioned_fold(const VertexLayout& layout, MatchMode mode, int threads, Make make, Visit visit) {
  if (threads < 1) throw ValidationError("thread count must be at least 1");
  const std::vector<Prefix> tasks = partition_prefixes(layout, mode, partition_depth(layout, threads));
  std::vector<Acc> results;
  results.reserve(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) results.push_back(make());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        Acc& acc = results[t];
        for_each_matching_below(layout, mode, tasks[t], [&](const Pairing& p) { visit(acc, p); });
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
        return;
      }
    }
  };
  const int n = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

Census run_census(const VertexLayout& layout, const CensusOptions& options = {});
/// Census of k quartic vertices; enforces the order cap.
Census run_census(int k, const CensusOptions& options = {});

}  // namespace tripleline::diagram
