#pragma once

#include "tripleline/diagram/layout.hpp"
#include "tripleline/exact.hpp"
#include "tripleline/gaussian/basis.hpp"
#include "tripleline/gaussian/propagator.hpp"

namespace tripleline::diagram {

struct BruteForceLimits {
  int max_N = 3;
  int max_d = 3;
  int max_vertices = 3;
};

/// Explicit index summation for one diagram: every Latin index (four per
/// quartic vertex, two per bilinear vertex, named after the written traces
/// A^{jl} B^{lm} A^{mn} B^{nj} and A^{jn} B^{nj}) runs over 1..N, every Greek
/// index over 1..d, and each propagator contributes
/// block * delta_{greek} * delta^{row col'} * delta^{col row'}. Kronecker deltas
/// are propagated while assigning, so only consistent assignments are
/// visited. Throws ResourceLimitError outside `limits`.
GaussRational brute_force_index_sum(const VertexLayout& layout, const Pairing& p, gaussian::Dims dims,
                                    const gaussian::PropagatorMatrix& props = gaussian::PropagatorMatrix::standard(),
                                    const BruteForceLimits& limits = {});

GaussRational brute_force_index_sum(const Pairing& p, gaussian::Dims dims,
                                    const gaussian::PropagatorMatrix& props = gaussian::PropagatorMatrix::standard(),
                                    const BruteForceLimits& limits = {});

}  // namespace tripleline::diagram
