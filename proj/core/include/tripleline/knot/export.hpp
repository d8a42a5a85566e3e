#pragma once

#include <vector>

#include "tripleline/diagram/layout.hpp"
#include "tripleline/exact.hpp"
#include "tripleline/knot/gauss_code.hpp"
#include "tripleline/series/assemble.hpp"

namespace tripleline::knot {

/// Walks the Greek loop of a quartic-vertex pairing from leg 0, passing
/// straight through each vertex; crossing id = vertex + 1, A-legs are over
/// and B-legs under. The result is not canonicalized. Throws ValidationError
/// unless the pairing is connected, has genus 0 and a single Greek loop.
GaussCode to_gauss_code(const diagram::Pairing& p);

struct KnotDiagram {
  int k = 0;
  GaussCode code;          ///< canonical form of the walked code
  GaussCode reduced_code;  ///< canonical form after reduce_R1
  GaussRational coefficient;
  diagram::Pairing pairing;
};

struct KnotOptions {
  series::Convention convention = series::Convention::Action;
  series::SeriesAction action = series::SeriesAction::Standard;
  int threads = 1;
  int max_k = diagram::kMaxOrder;
};

/// Every connected, genus-0, single-Greek-loop pairing with nonzero amplitude
/// at order k, in enumeration order, with coefficient (1/k!) c^k amplitude.
/// The Wick-ordered action skips tadpoles. The coefficients sum to the g^k
/// coefficient of F_{1,0}.
std::vector<KnotDiagram> enumerate_knot_diagrams(int k, const KnotOptions& options = {});

}  // namespace tripleline::knot
