#pragma once

#include <string>
#include <vector>

#include "tripleline/exact.hpp"
#include "tripleline/gaussian/basis.hpp"
#include "tripleline/gaussian/propagator.hpp"

namespace tripleline::gaussian {

using EntryProduct = std::vector<EntrySymbol>;

/// Index terms of sum_{mu,nu} Tr(A_mu B_nu A_mu B_nu): one 4-entry product per
/// (mu, nu, j, l, m, n), laid out as A^{jl} B^{lm} A^{mn} B^{nj}.
std::vector<EntryProduct> quartic_vertex_terms(Dims dims);

/// Index terms of sum_mu Tr(A_mu B_mu): A^{jn} B^{nj}.
std::vector<EntryProduct> bilinear_terms(Dims dims);

/// Constants of the Wick-ordered quartic vertex
///   :V: = V + c1 * sum_mu Tr(A_mu B_mu) + c2,
/// fixed by E[:V:] = 0 and E[:V: T] = 0 with T = sum_mu Tr(A_mu B_mu).
/// Every expectation is an exact wick_moment sum.
struct WickOrderCoefficients {
  GaussRational c1;
  GaussRational c2;
};

WickOrderCoefficients wick_order_quartic(Dims dims);

/// A constant of the form coeff * N^n_pow * d^d_pow.
struct Monomial {
  GaussRational coeff;
  int n_pow = 0;
  int d_pow = 0;

  GaussRational evaluate(Dims dims) const;
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct WickCounterterms {
  Monomial c1;
  Monomial c2;
};

/// Fits c1 and c2 as monomials in N and d from wick_order_quartic evaluated
/// at (N, d) in {(1,1), (2,1), (3,1), (1,2), (2,2)}. Throws
/// StructuralViolation if the values are not a single monomial.
WickCounterterms derive_wick_counterterms();

/// Derived constants next to the printed ones (c1 = 4 d N, reading the
/// printed lower-case n as N, and c2 = 2 d N^3).
struct WickOrderComparison {
  Dims dims;
  WickOrderCoefficients derived;
  WickOrderCoefficients printed;
  bool c1_matches = false;
  bool c2_matches = false;
};

WickOrderComparison compare_with_printed_constants(Dims dims);

}  // namespace tripleline::gaussian
