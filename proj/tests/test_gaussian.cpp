#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tripleline/errors.hpp"
#include "tripleline/gaussian/basis.hpp"
#include "tripleline/gaussian/oracle.hpp"
#include "tripleline/gaussian/propagator.hpp"
#include "tripleline/gaussian/transforms.hpp"
#include "tripleline/gaussian/wick_order.hpp"

using namespace tripleline;
using namespace tripleline::gaussian;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

EntrySymbol A(int mu, int r, int c) { return {Family::A, mu, r, c}; }
EntrySymbol B(int mu, int r, int c) { return {Family::B, mu, r, c}; }

std::vector<EntrySymbol> all_entries(Dims dims) {
  std::vector<EntrySymbol> out;
  for (const Family f : {Family::A, Family::B}) {
    for (int mu = 1; mu <= dims.d; ++mu) {
      for (int r = 1; r <= dims.N; ++r) {
        for (int c = 1; c <= dims.N; ++c) out.push_back({f, mu, r, c});
      }
    }
  }
  return out;
}

MatrixPair scalar_pair(double f, double g) {
  MatrixPair fg = MatrixPair::zero(Dims::make(1, 1));
  fg.F[0](0, 0) = f;
  fg.G[0](0, 0) = g;
  return fg;
}

}  // namespace

// ---- basis ----

TEST(CosBasis, SmallestCaseIsOneDiagonalPerSlot) {
  const auto basis = cos_basis(Dims::make(1, 1));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0].family, Family::A);
  EXPECT_EQ(basis[0].kind, BasisKind::Diagonal);
  EXPECT_EQ(basis[1].family, Family::B);
}

TEST(CosBasis, TwoByTwoHasFourElementsPerSlot) {
  const auto basis = cos_basis(Dims::make(2, 1));
  ASSERT_EQ(basis.size(), 8u);
  int diag = 0, re = 0, im = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(basis[i].family, Family::A);
    diag += basis[i].kind == BasisKind::Diagonal;
    re += basis[i].kind == BasisKind::OffDiagReal;
    im += basis[i].kind == BasisKind::OffDiagImag;
  }
  EXPECT_EQ(diag, 2);
  EXPECT_EQ(re, 1);
  EXPECT_EQ(im, 1);
}

TEST(CosBasis, GramMatrixIsDiagonalUpToNFour) {
  for (int N = 1; N <= 4; ++N) {
    for (int d = 1; d <= 2; ++d) {
      const Dims dims = Dims::make(N, d);
      const auto basis = cos_basis(dims);
      ASSERT_EQ(basis.size(), static_cast<std::size_t>(2 * dims.coords_per_family()));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        const auto ma = basis[a].matrix(N);
        EXPECT_TRUE(ma.isApprox(ma.adjoint()));
        EXPECT_EQ(basis_index(basis[a], dims), a);
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (basis[a].family != basis[b].family || basis[a].mu != basis[b].mu) continue;
          const double ip = trace_inner(ma, basis[b].matrix(N));
          EXPECT_NEAR(ip, a == b ? basis[a].self_inner() : 0.0, 1e-15) << basis[a].to_string() << basis[b].to_string();
        }
      }
    }
  }
}

TEST(CosBasis, ThreeByThreeTwoComponentsHasEighteenPerSlot) {
  EXPECT_EQ(cos_basis(Dims::make(3, 2)).size(), 36u);
}

TEST(Dims, RejectsDegenerateSizes) {
  EXPECT_THROW(Dims::make(0, 1), ValidationError);
  EXPECT_THROW(Dims::make(1, 0), ValidationError);
}

// ---- T-transforms ----

TEST(TTransform, ZeroArgumentGivesRegularizedPrefactor) {
  for (const double eps : {0.3, 1.0, 2.0}) {
    const Dims dims = Dims::make(2, 1);
    const cd v = t_transform_reg(MatrixPair::zero(dims), RegKernel(eps));
    const double expected = std::pow(2.0, 2) * std::pow(kPi / std::sqrt(eps * eps + 1), 4);
    EXPECT_NEAR(v.real(), expected, 1e-12 * expected);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  }
}

TEST(TTransform, ScalarSubstitution) {
  const cd v = t_transform_reg(scalar_pair(1, 1), RegKernel(1.0));
  const cd expected = std::sqrt(2.0) * kPi * std::exp(-cd(2, 2) / 4.0);
  EXPECT_NEAR(std::abs(v - expected), 0.0, 1e-12);
}

TEST(TTransform, MatchesOracleCharacteristicFunction) {
  std::mt19937_64 rng(7);
  const Dims dims = Dims::make(2, 1);
  const OracleCovariance oracle(dims, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto fg = MatrixPair::random(dims, rng);
    const cd closed = t_transform_reg(fg, RegKernel(0.5));
    const cd numeric = oracle.characteristic(fg);
    EXPECT_LT(std::abs(closed - numeric) / std::abs(closed), 1e-8);
  }
}

TEST(TTransform, LimitValues) {
  const Dims dims = Dims::make(2, 2);
  EXPECT_DOUBLE_EQ(t_transform_limit(MatrixPair::zero(dims)).real(), free_partition(dims));
  const cd v = t_transform_limit(scalar_pair(1, 1));
  EXPECT_NEAR(std::abs(v - 2 * kPi * std::exp(cd(0, -1))), 0.0, 1e-12);
}

TEST(TTransform, RegularizedApproachesLimitMonotonically) {
  std::mt19937_64 rng(11);
  const Dims dims = Dims::make(2, 2);
  const auto fg = MatrixPair::random(dims, rng);
  const cd limit = t_transform_limit(fg);
  double previous = INFINITY;
  for (const double eps : {0.1, 0.01, 0.001}) {
    const double gap = std::abs(t_transform_reg(fg, RegKernel(eps)) - limit);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
}

TEST(TTransform, RejectsNonHermitianInput) {
  MatrixPair fg = MatrixPair::zero(Dims::make(2, 1));
  fg.F[0](0, 1) = 1.0;
  EXPECT_THROW(t_transform_reg(fg, RegKernel(0.5)), ValidationError);
  EXPECT_THROW(t_transform_limit(fg), ValidationError);
}

TEST(RegKernel, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(RegKernel(0.0), ValidationError);
  EXPECT_THROW(RegKernel(-1.0), ValidationError);
}

TEST(FreePartition, ClosedFormValues) {
  EXPECT_NEAR(free_partition(Dims::make(1, 1)), 2 * kPi, 1e-12);
  EXPECT_NEAR(free_partition(Dims::make(2, 1)), 4 * std::pow(kPi, 4), 1e-9);
  const auto c = free_partition_log(Dims::make(3, 2));
  EXPECT_EQ(c.ln2_coeff, 6);
  EXPECT_EQ(c.lnpi_coeff, 18);
}

// ---- propagators and Wick moments ----

TEST(Propagator, DeltaPatternValues) {
  const Dims dims = Dims::make(2, 2);
  EXPECT_EQ(propagator(A(1, 1, 2), B(1, 2, 1), dims), GaussRational::i());
  EXPECT_EQ(propagator(A(1, 1, 2), A(1, 2, 1), dims), GaussRational(0));
  EXPECT_EQ(propagator(A(1, 1, 2), B(2, 2, 1), dims), GaussRational(0));
  EXPECT_EQ(propagator(A(1, 1, 2), B(1, 1, 2), dims), GaussRational(0));
}

TEST(Propagator, RejectsOutOfRangeEntries) {
  EXPECT_THROW(propagator(A(1, 3, 1), B(1, 1, 1), Dims::make(2, 1)), ValidationError);
  EXPECT_THROW(propagator(A(2, 1, 1), B(1, 1, 1), Dims::make(2, 1)), ValidationError);
}

TEST(Propagator, SymmetricInItsArgumentsAndMatchesGeneralForm) {
  const Dims dims = Dims::make(2, 2);
  const auto pool = all_entries(dims);
  const auto general = general_propagators(ActionSpec::Standard);
  EXPECT_EQ(general, PropagatorMatrix::standard());
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      EXPECT_EQ(propagator(x, y, dims), propagator(y, x, dims));
      EXPECT_EQ(propagator(x, y, dims), propagator(x, y, dims, general));
    }
  }
}

TEST(Propagator, SymmetricActionBlocks) {
  const auto p = general_propagators(ActionSpec::Symmetric);
  EXPECT_EQ(p.block(Family::A, Family::A), GaussRational(0, mpq_class(2, 3)));
  EXPECT_EQ(p.block(Family::B, Family::B), GaussRational(0, mpq_class(2, 3)));
  EXPECT_EQ(p.block(Family::A, Family::B), GaussRational(0, mpq_class(-1, 3)));
  EXPECT_TRUE(p.is_family_symmetric());
}

TEST(WickMoment, OddMomentVanishes) {
  const std::vector<EntrySymbol> e{A(1, 1, 1)};
  EXPECT_EQ(wick_moment(e, Dims::make(1, 1)), GaussRational(0));
}

TEST(WickMoment, ScalarFourthMoment) {
  const std::vector<EntrySymbol> e{A(1, 1, 1), B(1, 1, 1), A(1, 1, 1), B(1, 1, 1)};
  const auto detail = wick_moment_detailed(e, Dims::make(1, 1));
  EXPECT_EQ(detail.value, GaussRational(-2));
  EXPECT_EQ(detail.pairings, 3u);
}

TEST(WickMoment, PairingCountsAreDoubleFactorials) {
  EXPECT_EQ(pairing_count(2), 1u);
  EXPECT_EQ(pairing_count(4), 3u);
  EXPECT_EQ(pairing_count(6), 15u);
  EXPECT_EQ(pairing_count(8), 105u);
}

TEST(WickMoment, InvariantUnderPermutation) {
  const Dims dims = Dims::make(2, 2);
  std::vector<EntrySymbol> e{A(1, 1, 2), B(2, 2, 1), B(1, 2, 1), A(2, 1, 2), A(1, 2, 2), B(1, 2, 2)};
  std::sort(e.begin(), e.end());
  const GaussRational reference = wick_moment(e, dims);
  int permutations = 0;
  do {
    EXPECT_EQ(wick_moment(e, dims), reference);
    ++permutations;
  } while (std::next_permutation(e.begin(), e.end()) && permutations < 200);
}

TEST(WickMoment, RandomDegreeFourMomentsMatchOracle) {
  const Dims dims = Dims::make(2, 2);
  const auto pool = all_entries(dims);
  const OracleLadder ladder(dims);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<EntrySymbol> e;
    for (int i = 0; i < 4; ++i) e.push_back(pool[pick(rng)]);
    const auto oracle = ladder.moment(e);
    EXPECT_LT(std::abs(wick_moment(e, dims).to_complex() - oracle.value), 1e-8);
  }
}

// ---- oracle ----

TEST(Oracle, EmptyMomentIsOne) {
  const OracleCovariance oracle(Dims::make(2, 1), 0.1);
  EXPECT_NEAR(std::abs(oracle.moment({}) - cd(1, 0)), 0.0, 1e-15);
}

TEST(Oracle, ScalarPropagatorConvergesToI) {
  const std::vector<EntrySymbol> e{A(1, 1, 1), B(1, 1, 1)};
  const Dims dims = Dims::make(1, 1);
  ExtrapolationOptions opts;
  const auto ex = extrapolate_to_zero([&](double eps) { return gaussian_oracle_moment(e, dims, eps); }, opts);
  EXPECT_TRUE(ex.converged);
  EXPECT_LT(std::abs(ex.value - cd(0, 1)), 1e-9);
  ASSERT_GE(ex.samples.size(), 3u);
  EXPECT_DOUBLE_EQ(ex.epsilons[0], 0.1);
  EXPECT_NEAR(ex.epsilons[2], 0.001, 1e-15);
}

TEST(Oracle, SameFamilyPairIsOrderEpsilonAndVanishesInTheLimit) {
  const Dims dims = Dims::make(2, 1);
  const std::vector<EntrySymbol> e{A(1, 1, 2), A(1, 2, 1)};
  for (const double eps : {0.5, 0.1, 0.01, 0.001}) {
    const double v = std::abs(gaussian_oracle_moment(e, dims, eps));
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, eps);
  }
  EXPECT_LT(std::abs(OracleLadder(dims).moment(e).value), 1e-9);
}

TEST(Oracle, CouplingInverseResidualIsTiny) {
  for (const double eps : {0.1, 1e-3, 1e-6}) {
    const OracleCovariance oracle(Dims::make(3, 2), eps);
    EXPECT_LT(oracle.residual(), 1e-10);
  }
  EXPECT_THROW(OracleCovariance(Dims::make(1, 1), 0.0), ValidationError);
}

TEST(Oracle, SymmetricActionSecondMomentsMatchBlocks) {
  const Dims dims = Dims::make(2, 1);
  const auto props = general_propagators(ActionSpec::Symmetric);
  const OracleLadder ladder(dims, ActionSpec::Symmetric);
  const auto pool = all_entries(dims);
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      const std::array<EntrySymbol, 2> e{x, y};
      EXPECT_LT(std::abs(ladder.moment(e).value - propagator(x, y, dims, props).to_complex()), 1e-8)
          << x.to_string() << ' ' << y.to_string();
    }
  }
}

TEST(Oracle, ExtrapolatedNormalizationMatchesFreePartition) {
  const OracleLadder ladder(Dims::make(2, 1));
  const auto ex = ladder.normalization();
  const double z = free_partition(Dims::make(2, 1));
  EXPECT_LT(std::abs(ex.value - z) / z, 1e-6);
}

// ---- Wick ordering ----

TEST(WickOrder, DerivedCountertermsAreMonomials) {
  const auto ct = derive_wick_counterterms();
  EXPECT_EQ(ct.c1.coeff, GaussRational(0, -4));
  EXPECT_EQ(ct.c1.n_pow, 1);
  EXPECT_EQ(ct.c1.d_pow, 0);
  EXPECT_EQ(ct.c2.coeff, GaussRational(-2));
  EXPECT_EQ(ct.c2.n_pow, 3);
  EXPECT_EQ(ct.c2.d_pow, 1);
}

TEST(WickOrder, OrderedVertexHasZeroExpectationExactly) {
  for (const auto dims : {Dims::make(1, 1), Dims::make(2, 1), Dims::make(2, 2)}) {
    const auto c = wick_order_quartic(dims);
    GaussRational ev = c.c2;
    for (const auto& t : quartic_vertex_terms(dims)) ev += wick_moment(t, dims);
    for (const auto& t : bilinear_terms(dims)) ev += c.c1 * wick_moment(t, dims);
    EXPECT_TRUE(ev.is_zero());
  }
}

TEST(WickOrder, OrderedVertexHasZeroOracleExpectation) {
  const Dims dims = Dims::make(1, 1);
  const auto c = wick_order_quartic(dims);
  const OracleLadder ladder(dims);
  cd ev = c.c2.to_complex();
  for (const auto& t : quartic_vertex_terms(dims)) ev += ladder.moment(t).value;
  for (const auto& t : bilinear_terms(dims)) ev += c.c1.to_complex() * ladder.moment(t).value;
  EXPECT_LT(std::abs(ev), 1e-10);
}

TEST(WickOrder, PrintedConstantsAreFlaggedAsMismatches) {
  const auto cmp = compare_with_printed_constants(Dims::make(2, 1));
  EXPECT_FALSE(cmp.c1_matches);
  EXPECT_FALSE(cmp.c2_matches);
  EXPECT_EQ(cmp.printed.c1, GaussRational(8));
  EXPECT_EQ(cmp.printed.c2, GaussRational(16));
  EXPECT_EQ(cmp.derived.c1, GaussRational(0, -8));
  EXPECT_EQ(cmp.derived.c2, GaussRational(-16));
}

// ---- growth bound ----

TEST(UBound, HoldsWithEqualityAtZero) {
  std::mt19937_64 rng(5);
  const auto fg = MatrixPair::random(Dims::make(2, 1), rng);
  const std::vector<cd> z{cd(0, 0)};
  EXPECT_NEAR(std::abs(normalized_t_transform_scaled(fg, RegKernel(0.1), 0.0)), 1.0, 1e-15);
  EXPECT_TRUE(u_bound_check(fg, z, RegKernel(0.1)));
}

TEST(UBound, HoldsOnGridAndNegativeControlFails) {
  std::mt19937_64 rng(9);
  const auto fg = MatrixPair::random(Dims::make(2, 1), rng);
  std::vector<cd> zs;
  for (double re = -3; re <= 3; re += 0.25) {
    for (double im = -3; im <= 3; im += 0.25) {
      if (std::abs(cd(re, im)) <= 3.0) zs.emplace_back(re, im);
    }
  }
  EXPECT_TRUE(u_bound_check(fg, zs, RegKernel(0.1)));
  EXPECT_FALSE(u_bound_check(fg, zs, RegKernel(0.1), 10.0));
  EXPECT_THROW(u_bound_check(fg, zs, RegKernel(0.9)), ValidationError);
}
