#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "tripleline/diagram/brute_force.hpp"
#include "tripleline/diagram/census.hpp"
#include "tripleline/diagram/enumerate.hpp"
#include "tripleline/diagram/layout.hpp"
#include "tripleline/diagram/loops.hpp"
#include "tripleline/errors.hpp"

using namespace tripleline;
using namespace tripleline::diagram;
using gaussian::Dims;

namespace {

std::vector<Pairing> collect(int k, MatchMode mode) {
  std::vector<Pairing> out;
  enumerate_matchings(k, mode, [&](const Pairing& p) { out.push_back(p); });
  return out;
}

// Exponent e with value(x) = value(1) * x^e at x = 2 and x = 3, or -1.
int fitted_exponent(const GaussRational& v1, const GaussRational& v2, const GaussRational& v3) {
  if (v1.is_zero()) return -1;
  const GaussRational r2 = v2 / v1;
  const GaussRational r3 = v3 / v1;
  for (int e = 0; e <= 24; ++e) {
    if (r2 == GaussRational(2).pow(static_cast<unsigned>(e)) && r3 == GaussRational(3).pow(static_cast<unsigned>(e))) {
      return e;
    }
  }
  return -1;
}

}  // namespace

TEST(Legs, PositionsAndFamilies) {
  EXPECT_EQ(Leg{5}.vertex(), 1);
  EXPECT_EQ(Leg{5}.position(), 1);
  EXPECT_EQ(Leg{4}.family(), Family::A);
  EXPECT_EQ(Leg{7}.family(), Family::B);
  const auto layout = VertexLayout::quartic(2);
  for (int x = 0; x < 8; ++x) {
    EXPECT_EQ(layout.family_of(x), Leg{x}.family());
    EXPECT_EQ(layout.next_in_trace(x), 4 * (x / 4) + (x % 4 + 1) % 4);
    EXPECT_EQ(layout.through_leg(x), 4 * (x / 4) + (x % 4 + 2) % 4);
  }
}

TEST(Enumerate, OrderOneCounts) {
  EXPECT_EQ(collect(1, MatchMode::All).size(), 3u);
  const auto ab = collect(1, MatchMode::AbOnly);
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_EQ(ab[0], Pairing::from_pairs(1, {{0, 1}, {2, 3}}));
  EXPECT_EQ(ab[1], Pairing::from_pairs(1, {{0, 3}, {1, 2}}));
}

TEST(Enumerate, OrderTwoCounts) {
  EXPECT_EQ(collect(2, MatchMode::All).size(), 105u);
  EXPECT_EQ(collect(2, MatchMode::AbOnly).size(), 24u);
}

TEST(Enumerate, ClosedFormCountsUpToFive) {
  for (int k = 1; k <= 5; ++k) {
    std::uint64_t ab = 0;
    enumerate_matchings(k, MatchMode::AbOnly, [&](const Pairing&) { ++ab; });
    EXPECT_EQ(ab, expected_matchings(k, MatchMode::AbOnly));
    if (k <= 4) {
      std::uint64_t all = 0;
      enumerate_matchings(k, MatchMode::All, [&](const Pairing&) { ++all; });
      EXPECT_EQ(all, expected_matchings(k, MatchMode::All));
    }
  }
  EXPECT_EQ(expected_matchings(5, MatchMode::AbOnly), 3628800u);
  EXPECT_EQ(expected_matchings(5, MatchMode::All), 654729075u);
}

TEST(Enumerate, LexicographicUniqueInvolutions) {
  Pairing previous;
  bool first = true;
  std::set<std::vector<std::uint8_t>> seen;
  const auto layout = VertexLayout::quartic(3);
  enumerate_matchings(3, MatchMode::AbOnly, [&](const Pairing& p) {
    EXPECT_TRUE(p.is_involution());
    EXPECT_TRUE(p.is_ab_only(layout));
    if (!first) {
      EXPECT_LT(previous, p);
    }
    first = false;
    previous = p;
    seen.emplace(p.match().begin(), p.match().end());
  });
  EXPECT_EQ(seen.size(), 720u);
}

TEST(Enumerate, RefusesOrdersOverTheCap) {
  EXPECT_THROW(enumerate_matchings(7, MatchMode::AbOnly, [](const Pairing&) {}), ResourceLimitError);
  EXPECT_THROW(enumerate_matchings(4, MatchMode::AbOnly, [](const Pairing&) {}, 3), ResourceLimitError);
  EXPECT_THROW(check_order(0), ValidationError);
}

TEST(Enumerate, PrefixPartitionReproducesSerialOrder) {
  const auto layout = VertexLayout::quartic(3);
  std::vector<Pairing> serial;
  for_each_matching(layout, MatchMode::All, [&](const Pairing& p) { serial.push_back(p); });
  for (int depth = 0; depth <= 3; ++depth) {
    std::vector<Pairing> split;
    for (const auto& prefix : partition_prefixes(layout, MatchMode::All, depth)) {
      for_each_matching_below(layout, MatchMode::All, prefix, [&](const Pairing& p) { split.push_back(p); });
    }
    EXPECT_EQ(split, serial) << "depth " << depth;
  }
}

TEST(Loops, OrderOneValues) {
  for (const auto& p : {Pairing::from_pairs(1, {{0, 1}, {2, 3}}), Pairing::from_pairs(1, {{0, 3}, {1, 2}})}) {
    EXPECT_EQ(trace_latin_loops(p), 3);
    EXPECT_EQ(trace_greek_loops(p), 1);
    const auto r = components_and_genus(p);
    EXPECT_EQ(r.components, 1);
    EXPECT_EQ(r.genus_per_component, std::vector<int>{0});
    EXPECT_TRUE(is_tadpole(p));
  }
}

TEST(Loops, DoublySelfPairedOrderTwo) {
  const auto p = Pairing::from_pairs(2, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  EXPECT_EQ(trace_greek_loops(p), 2);
  EXPECT_EQ(trace_latin_loops(p), 6);
  const auto r = components_and_genus(p);
  EXPECT_EQ(r.components, 2);
  EXPECT_EQ(r.genus_per_component, (std::vector<int>{0, 0}));
  EXPECT_EQ(r.latin_per_component, (std::vector<int>{3, 3}));
  const auto w = diagram_weight(p);
  EXPECT_EQ(w.C, 6);
  EXPECT_EQ(w.l, 2);
  EXPECT_EQ(w.amplitude, GaussRational(1));
  EXPECT_FALSE(w.connected);
  // Product of the two order-one component weights.
  EXPECT_EQ(w.evaluate(3, 2), GaussRational(-27 * 2) * GaussRational(-27 * 2));
}

TEST(Loops, NoTadpoleWhenAllPropagatorsCrossVertices) {
  const auto p = Pairing::from_pairs(2, {{0, 5}, {1, 4}, {2, 7}, {3, 6}});
  EXPECT_FALSE(is_tadpole(p));
}

TEST(Loops, PortCyclesCoverEveryPortOnce) {
  for (int k = 1; k <= 3; ++k) {
    const auto layout = VertexLayout::quartic(k);
    enumerate_matchings(k, MatchMode::All, [&](const Pairing& p) {
      const auto cycles = latin_port_cycles(layout, p);
      EXPECT_EQ(std::accumulate(cycles.begin(), cycles.end(), 0), 8 * k);
      EXPECT_EQ(static_cast<int>(cycles.size()), trace_latin_loops(layout, p));
    });
  }
}

TEST(Loops, EulerIntegralityUpToFour) {
  for (int k = 1; k <= 4; ++k) {
    enumerate_matchings(k, MatchMode::AbOnly, [&](const Pairing& p) {
      const auto r = components_and_genus(p);
      int latin = 0;
      for (int c = 0; c < r.components; ++c) {
        const auto i = static_cast<std::size_t>(c);
        EXPECT_GE(r.genus_per_component[i], 0);
        EXPECT_EQ((r.latin_per_component[i] - r.vertices_per_component[i]) % 2, 0);
        latin += r.latin_per_component[i];
      }
      EXPECT_EQ(latin, r.C);
      EXPECT_GE(r.l, 1);
    });
  }
}

TEST(Loops, SomeOrderThreePairingHasGenusOne) {
  bool found = false;
  enumerate_matchings(3, MatchMode::AbOnly, [&](const Pairing& p) {
    const auto r = components_and_genus(p);
    for (const int g : r.genus_per_component) found = found || g == 1;
  });
  EXPECT_TRUE(found);
}

TEST(Weights, OrderOneValues) {
  const auto w = diagram_weight(Pairing::from_pairs(1, {{0, 1}, {2, 3}}));
  EXPECT_EQ(w.k, 1);
  EXPECT_EQ(w.C, 3);
  EXPECT_EQ(w.l, 1);
  ASSERT_TRUE(w.phase_ipow.has_value());
  EXPECT_EQ(*w.phase_ipow, 2);
  EXPECT_TRUE(w.connected);
  EXPECT_EQ(w.evaluate(2, 1), GaussRational(-8));
  GaussRational total;
  for (const auto& p : collect(1, MatchMode::AbOnly)) total += diagram_weight(p).evaluate(2, 3);
  EXPECT_EQ(total, GaussRational(-2 * 8 * 3));
}

TEST(Weights, PhaseIsTwiceTheOrder) {
  for (int k = 1; k <= 3; ++k) {
    enumerate_matchings(k, MatchMode::AbOnly, [&](const Pairing& p) {
      const auto w = diagram_weight(p);
      ASSERT_TRUE(w.phase_ipow.has_value());
      EXPECT_EQ(*w.phase_ipow, 2 * k);
    });
  }
}

TEST(BruteForce, OrderOneValues) {
  const auto p = Pairing::from_pairs(1, {{0, 1}, {2, 3}});
  EXPECT_EQ(brute_force_index_sum(p, Dims::make(2, 1)), GaussRational(-8));
  for (const auto& q : collect(1, MatchMode::AbOnly)) {
    EXPECT_EQ(brute_force_index_sum(q, Dims::make(1, 1)), GaussRational(-1));
  }
}

TEST(BruteForce, ExponentFitsMatchTracedLoopsAtOrderTwo) {
  for (const auto& p : collect(2, MatchMode::All)) {
    const auto props = gaussian::general_propagators(gaussian::ActionSpec::Symmetric);
    const auto w = diagram_weight(p, props);
    const auto n1 = brute_force_index_sum(p, Dims::make(1, 1), props);
    const auto n2 = brute_force_index_sum(p, Dims::make(2, 1), props);
    const auto n3 = brute_force_index_sum(p, Dims::make(3, 1), props);
    EXPECT_EQ(fitted_exponent(n1, n2, n3), trace_latin_loops(p)) << p.to_string();
    const auto d2 = brute_force_index_sum(p, Dims::make(1, 2), props);
    const auto d3 = brute_force_index_sum(p, Dims::make(1, 3), props);
    EXPECT_EQ(fitted_exponent(n1, d2, d3), trace_greek_loops(p)) << p.to_string();
    EXPECT_EQ(n1, w.amplitude);
  }
}

TEST(BruteForce, AgreesWithWeightsOnOrderTwoGrid) {
  for (const auto& p : collect(2, MatchMode::AbOnly)) {
    const auto w = diagram_weight(p);
    EXPECT_EQ(brute_force_index_sum(p, Dims::make(2, 2)), w.evaluate(2, 2));
    EXPECT_EQ(brute_force_index_sum(p, Dims::make(3, 2)), w.evaluate(3, 2));
  }
}

TEST(BruteForce, MixedLayoutMatchesTracedLoops) {
  const auto layout = VertexLayout::mixed(1, 2);
  for_each_matching(layout, MatchMode::AbOnly, [&](const Pairing& p) {
    const auto a = analyze(layout, p);
    const auto props = gaussian::PropagatorMatrix::standard();
    const GaussRational expected = amplitude(layout, p, props) * GaussRational(3).pow(static_cast<unsigned>(a.C)) *
                                   GaussRational(2).pow(static_cast<unsigned>(a.l));
    EXPECT_EQ(brute_force_index_sum(layout, p, Dims::make(3, 2), props), expected);
  });
}

TEST(BruteForce, RefusesLargeInputs) {
  const auto p = Pairing::from_pairs(1, {{0, 1}, {2, 3}});
  EXPECT_THROW(brute_force_index_sum(p, Dims::make(4, 1)), ResourceLimitError);
  EXPECT_THROW(brute_force_index_sum(p, Dims::make(1, 4)), ResourceLimitError);
  const auto big = collect(4, MatchMode::AbOnly).front();
  EXPECT_THROW(brute_force_index_sum(big, Dims::make(1, 1)), ResourceLimitError);
}

TEST(Census, ParallelFoldIsIdenticalToSerial) {
  for (const auto mode : {MatchMode::AbOnly, MatchMode::All}) {
    CensusOptions serial;
    serial.mode = mode;
    const auto reference = run_census(3, serial);
    for (const int threads : {2, 3, 8, 16}) {
      CensusOptions parallel = serial;
      parallel.threads = threads;
      EXPECT_EQ(run_census(3, parallel), reference) << threads;
    }
  }
}

TEST(Census, CountsAndOrderOneHistogram) {
  const auto c = run_census(1);
  EXPECT_EQ(c.pairings, 2u);
  ASSERT_EQ(c.histogram.size(), 1u);
  const auto& [key, count] = *c.histogram.begin();
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(key.C, 3);
  EXPECT_EQ(key.l, 1);
  EXPECT_EQ(key.ab, 2);
  EXPECT_TRUE(key.tadpole);
  EXPECT_EQ(connected_genus(VertexLayout::quartic(1), key), 0);
}

TEST(Census, WorkerExceptionsPropagate) {
  const auto layout = VertexLayout::quartic(2);
  EXPECT_THROW(partitioned_fold<int>(
                   layout, MatchMode::AbOnly, 4, [] { return 0; },
                   [](int&, const Pairing&) { throw InvariantViolation("boom"); }),
               InvariantViolation);
  EXPECT_THROW(run_census(2, CensusOptions{MatchMode::AbOnly, 0}), ValidationError);
}
