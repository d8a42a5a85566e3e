#pragma once

#include <optional>
#include <vector>

#include "tripleline/diagram/layout.hpp"
#include "tripleline/exact.hpp"
#include "tripleline/gaussian/propagator.hpp"

namespace tripleline::diagram {

using gaussian::PropagatorMatrix;

/// Index-loop structure of one diagram.
struct LoopReport {
  int C = 0;           ///< Latin (matrix index) loops
  int l = 0;           ///< Greek loops
  int components = 0;  ///< connected components of the vertex graph
  std::vector<int> genus_per_component;
  std::vector<int> latin_per_component;
  std::vector<int> vertices_per_component;
};

/// Latin loop count: cycles of leg -> next_in_trace(partner(leg)). Each cycle
/// of length m is a closed index line through 2m row/column ports.
int trace_latin_loops(const VertexLayout& layout, const Pairing& p);
int trace_latin_loops(const Pairing& p);

/// Cycle lengths of the explicit 2-regular graph on row/column ports (two per
/// leg): trace edges join col(x) to row(next_in_trace(x)), each propagator
/// joins row(x)-col(y) and col(x)-row(y). Lengths sum to 2 * legs.
std::vector<int> latin_port_cycles(const VertexLayout& layout, const Pairing& p);

/// Greek loop count: components of the graph on Greek slots whose edges are
/// the propagators (every slot carries two legs, so each component is a cycle).
int trace_greek_loops(const VertexLayout& layout, const Pairing& p);
int trace_greek_loops(const Pairing& p);

/// Components of the vertex graph and the genus of each, from
/// V - P + C = 2 - 2p per component. Throws InvariantViolation if a genus is
/// negative or not an integer.
LoopReport components_and_genus(const VertexLayout& layout, const Pairing& p);
LoopReport components_and_genus(const Pairing& p);

/// True iff a propagator joins two legs of the same vertex.
bool is_tadpole(const VertexLayout& layout, const Pairing& p);
bool is_tadpole(const Pairing& p);

/// Product of the propagator blocks over all pairs.
GaussRational amplitude(const VertexLayout& layout, const Pairing& p, const PropagatorMatrix& props);

/// Symbolic weight amplitude * N^C * d^l of a quartic-vertex diagram.
struct DiagramWeight {
  int k = 0;
  int C = 0;
  int l = 0;
  /// Set when the amplitude is a power of i (always 2k for the standard action).
  std::optional<int> phase_ipow;
  GaussRational amplitude;
  /// All propagators nonzero and the vertex graph connected.
  bool connected = false;

  /// amplitude * N^C * d^l.
  GaussRational evaluate(int N, int d) const;
};

DiagramWeight diagram_weight(const Pairing& p, const PropagatorMatrix& props = PropagatorMatrix::standard());

/// Everything the census needs, computed in one pass without allocation.
struct DiagramAnalysis {
  int C = 0;
  int l = 0;
  int components = 0;
  bool tadpole = false;
  int aa = 0;  ///< A-A propagators
  int ab = 0;
  int bb = 0;
  int max_genus = 0;
  int genus_sum = 0;
};

DiagramAnalysis analyze(const VertexLayout& layout, const Pairing& p);

}  // namespace tripleline::diagram
