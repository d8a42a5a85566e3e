#pragma once

#include <compare>
#include <map>
#include <string>

#include "tripleline/exact.hpp"
#include "tripleline/gaussian/basis.hpp"
#include "tripleline/series/tri_series.hpp"

namespace tripleline::series {

/// Polynomial in g: power -> coefficient, zero coefficients omitted.
using GPolynomial = std::map<int, GaussRational>;

std::string polynomial_to_string(const GPolynomial& p);

struct LinkGenus {
  int l = 1;
  int p = 0;
  friend auto operator<=>(const LinkGenus&, const LinkGenus&) = default;
};

/// Coefficient polynomials F_{l,p}(g) of N^{2-2p} d^l in the normalized ln Z.
struct FlpTable {
  int kmax = 0;
  std::map<LinkGenus, GPolynomial> entries;

  /// Empty polynomial when absent.
  GPolynomial at(int l, int p) const;
  /// Rebuilds sum_{l,p} F_{l,p}(g) N^{2-2p} d^l as a series.
  TriSeries to_series() const;
  friend bool operator==(const FlpTable&, const FlpTable&) = default;
};

/// Sorts every coefficient onto the lattice N^{2-2p} d^l with p >= 0, l >= 1.
/// Throws StructuralViolation on any term off that lattice.
FlpTable extract_Flp(const TriSeries& ln_z_normalized);

/// lnpi_coeff * ln(pi) + polynomial, with ln(pi) kept symbolic.
struct GeneratingFunction {
  long lnpi_coeff = 0;
  GPolynomial polynomial;

  std::string to_string() const;
  friend bool operator==(const GeneratingFunction&, const GeneratingFunction&) = default;
};

/// ln(pi) + F_{1,0}(g).
GeneratingFunction F_of_g(const FlpTable& table);

/// ln Z including the free constant ln2_coeff ln 2 + lnpi_coeff ln pi,
/// where the coefficients are themselves monomials in N and d.
struct FullLogSeries {
  TriSeries normalized;
  /// ln 2 multiplies N^ln2_n d^ln2_d; ln pi multiplies N^lnpi_n d^lnpi_d.
  int ln2_n = 1;
  int ln2_d = 1;
  int lnpi_n = 2;
  int lnpi_d = 1;
};

FullLogSeries full_log_series(const TriSeries& ln_z_normalized);

struct DoubleLimitResult {
  bool ok = false;
  GeneratingFunction limit;
  GeneratingFunction expected;
};

/// Divides by d N^2, drops negative N powers (N to infinity), keeps the d^0
/// part (d to 0), and compares with F_of_g of the extracted table. Throws
/// StructuralViolation when a positive N power or a negative d power survives
/// the division.
DoubleLimitResult double_limit(const FullLogSeries& ln_z, int kmax);
bool double_limit_check(const FullLogSeries& ln_z, int kmax);

}  // namespace tripleline::series
