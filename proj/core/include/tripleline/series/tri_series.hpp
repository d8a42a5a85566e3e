#pragma once

#include <compare>
#include <map>
#include <string>

#include "tripleline/exact.hpp"

namespace tripleline::series {

/// Exponents of g, N and d in one monomial.
struct TriKey {
  int k = 0;
  int n_pow = 0;
  int d_pow = 0;
  friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

/// Formal power series in g truncated at g^kmax, whose coefficients are
/// Laurent polynomials in N and polynomials in d over the Gaussian rationals.
/// Zero coefficients are never stored.
class TriSeries {
 public:
  explicit TriSeries(int kmax = 0);
  static TriSeries one(int kmax);

  int kmax() const { return kmax_; }
  const std::map<TriKey, GaussRational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Zero when absent.
  GaussRational coeff(int k, int n_pow, int d_pow) const;
  /// Adds to a coefficient; terms above kmax are dropped.
  void add(int k, int n_pow, int d_pow, const GaussRational& value);
  void add(const TriKey& key, const GaussRational& value) { add(key.k, key.n_pow, key.d_pow, value); }

  /// Terms of exactly order g^k.
  TriSeries order(int k) const;
  /// Same terms, new truncation order.
  TriSeries truncated(int kmax) const;

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator-=(const TriSeries& o);
  TriSeries& operator*=(const GaussRational& c);
  friend TriSeries operator+(TriSeries a, const TriSeries& b) { return a += b; }
  friend TriSeries operator-(TriSeries a, const TriSeries& b) { return a -= b; }
  friend TriSeries operator*(TriSeries a, const GaussRational& c) { return a *= c; }
  /// Cauchy product truncated at min(kmax) of the operands.
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);
  /// Equal truncation order and identical coefficients.
  friend bool operator==(const TriSeries&, const TriSeries&) = default;

  /// "1 + (-i) g N^2 d + ..." in key order.
  std::string to_string() const;

 private:
  int kmax_ = 0;
  std::map<TriKey, GaussRational> terms_;
};

/// log(1 + u) = sum_{m >= 1} (-1)^{m+1} u^m / m. Throws ValidationError unless
/// the order-0 part of `s` is exactly the constant 1.
TriSeries formal_log(const TriSeries& s);

/// exp(u) = sum_m u^m / m!. Throws ValidationError if `u` has order-0 terms.
TriSeries formal_exp(const TriSeries& u);

}  // namespace tripleline::series
