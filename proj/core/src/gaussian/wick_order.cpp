#include "tripleline/gaussian/wick_order.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "tripleline/errors.hpp"

namespace tripleline::gaussian {

std::vector<EntryProduct> quartic_vertex_terms(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  std::vector<EntryProduct> out;
  for (int mu = 1; mu <= dims.d; ++mu) {
    for (int nu = 1; nu <= dims.d; ++nu) {
      for (int j = 1; j <= dims.N; ++j) {
        for (int l = 1; l <= dims.N; ++l) {
          for (int m = 1; m <= dims.N; ++m) {
            for (int n = 1; n <= dims.N; ++n) {
              out.push_back({{Family::A, mu, j, l}, {Family::B, nu, l, m}, {Family::A, mu, m, n},
                             {Family::B, nu, n, j}});
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<EntryProduct> bilinear_terms(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  std::vector<EntryProduct> out;
  for (int mu = 1; mu <= dims.d; ++mu) {
    for (int j = 1; j <= dims.N; ++j) {
      for (int n = 1; n <= dims.N; ++n) out.push_back({{Family::A, mu, j, n}, {Family::B, mu, n, j}});
    }
  }
  return out;
}

namespace {

GaussRational expectation(const std::vector<EntryProduct>& terms, Dims dims) {
  GaussRational sum;
  for (const auto& t : terms) sum += wick_moment(t, dims);
  return sum;
}

GaussRational cross_expectation(const std::vector<EntryProduct>& lhs, const std::vector<EntryProduct>& rhs,
                                Dims dims) {
  GaussRational sum;
  EntryProduct joined;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      sum += wick_moment(joined, dims);
    }
  }
  return sum;
}

// Integer e in [-12, 12] with base^e == r, if any.
std::optional<int> exact_log(const GaussRational& r, long base) {
  if (!r.is_real() || sgn(r.re()) <= 0) return std::nullopt;
  for (int e = -12; e <= 12; ++e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(std::abs(e)));
    const mpq_class v = e >= 0 ? mpq_class(p) : mpq_class(1, 1) / mpq_class(p);
    if (r.re() == v) return e;
  }
  return std::nullopt;
}

}  // namespace

WickOrderCoefficients wick_order_quartic(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  const auto quartic = quartic_vertex_terms(dims);
  const auto bilinear = bilinear_terms(dims);
  const GaussRational ev = expectation(quartic, dims);
  const GaussRational et = expectation(bilinear, dims);
  const GaussRational evt = cross_expectation(quartic, bilinear, dims);
  const GaussRational ett = cross_expectation(bilinear, bilinear, dims);
  // E[V] + c1 E[T] + c2 = 0 and E[VT] + c1 E[TT] + c2 E[T] = 0.
  const GaussRational var_t = ett - et * et;
  if (var_t.is_zero()) throw InvariantViolation("wick_order_quartic: Var(T) vanished");
  WickOrderCoefficients out;
  out.c1 = -(evt - ev * et) / var_t;
  out.c2 = -ev - out.c1 * et;
  return out;
}

GaussRational Monomial::evaluate(Dims dims) const {
  auto power = [](long base, int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(std::abs(e)));
    return e >= 0 ? GaussRational(mpq_class(p)) : GaussRational(mpq_class(1, 1) / mpq_class(p));
  };
  return coeff * power(dims.N, n_pow) * power(dims.d, d_pow);
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  os << '(' << coeff.to_string() << ')';
  if (n_pow != 0) os << " N^" << n_pow;
  if (d_pow != 0) os << " d^" << d_pow;
  return os.str();
}

WickCounterterms derive_wick_counterterms() {
  const std::array<Dims, 5> samples{{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}}};
  std::array<WickOrderCoefficients, 5> values;
  for (std::size_t s = 0; s < samples.size(); ++s) values[s] = wick_order_quartic(samples[s]);

  auto fit = [&](auto pick, const char* name) {
    const GaussRational base = pick(values[0]);
    if (base.is_zero()) return Monomial{0, 0, 0};
    const auto n_pow = exact_log(pick(values[1]) / base, 2);
    const auto d_pow = exact_log(pick(values[3]) / base, 2);
    if (!n_pow || !d_pow) {
      throw StructuralViolation(std::string("wick counterterm ") + name + " is not a monomial in N and d");
    }
    Monomial m{base, *n_pow, *d_pow};
    for (std::size_t s = 0; s < samples.size(); ++s) {
      if (!(m.evaluate(samples[s]) == pick(values[s]))) {
        throw StructuralViolation(std::string("wick counterterm ") + name + " is not a monomial in N and d");
      }
    }
    return m;
  };
  return {fit([](const WickOrderCoefficients& w) { return w.c1; }, "c1"),
          fit([](const WickOrderCoefficients& w) { return w.c2; }, "c2")};
}

WickOrderComparison compare_with_printed_constants(Dims dims) {
  dims = Dims::make(dims.N, dims.d);
  WickOrderComparison out;
  out.dims = dims;
  out.derived = wick_order_quartic(dims);
  const long N = dims.N;
  const long d = dims.d;
  out.printed = {GaussRational(4 * d * N), GaussRational(2 * d * N * N * N)};
  out.c1_matches = out.derived.c1 == out.printed.c1;
  out.c2_matches = out.derived.c2 == out.printed.c2;
  return out;
}

}  // namespace tripleline::gaussian
