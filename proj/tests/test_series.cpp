#include <gtest/gtest.h>

#include "tripleline/errors.hpp"
#include "tripleline/series/assemble.hpp"
#include "tripleline/series/flp.hpp"
#include "tripleline/series/tri_series.hpp"

using namespace tripleline;
using namespace tripleline::series;

namespace {

const GaussRational I = GaussRational::i();

AssembleOptions with(Convention c, SeriesAction a = SeriesAction::Standard) {
  AssembleOptions o;
  o.convention = c;
  o.action = a;
  return o;
}

TriSeries expected_ln_z_order3() {
  TriSeries s(3);
  s.add(1, 2, 1, -I);
  s.add(2, 0, 2, GaussRational::from_ints(-1, 4, 0, 1));
  s.add(2, 2, 1, -2);
  s.add(2, 2, 2, GaussRational::from_ints(-1, 4, 0, 1));
  s.add(3, 0, 1, I);
  s.add(3, 0, 2, I * 2);
  s.add(3, 0, 3, GaussRational::from_ints(0, 1, 1, 3));
  s.add(3, 2, 1, I * 7);
  s.add(3, 2, 2, I * 2);
  return s;
}

}  // namespace

TEST(TriSeries, ArithmeticAndTruncation) {
  TriSeries a(2);
  a.add(1, 2, 1, I);
  a.add(3, 0, 0, 5);
  EXPECT_TRUE(a.coeff(3, 0, 0).is_zero());
  a.add(1, 2, 1, -I);
  EXPECT_TRUE(a.empty());

  TriSeries u(3);
  u.add(1, 1, 0, 2);
  const auto sq = u * u;
  EXPECT_EQ(sq.coeff(2, 2, 0), GaussRational(4));
  EXPECT_EQ(sq.terms().size(), 1u);
  EXPECT_EQ((TriSeries::one(3) + u).to_string(), "(1) + (2) g N");
}

TEST(TriSeries, LogOfLinearSeries) {
  TriSeries s = TriSeries::one(4);
  s.add(1, 0, 0, 3);
  const auto l = formal_log(s);
  EXPECT_EQ(l.coeff(1, 0, 0), GaussRational(3));
  EXPECT_EQ(l.coeff(2, 0, 0), GaussRational(mpq_class(-9, 2)));
  EXPECT_EQ(l.coeff(3, 0, 0), GaussRational(9));
  EXPECT_EQ(l.coeff(4, 0, 0), GaussRational(mpq_class(-81, 4)));
}

TEST(TriSeries, ExpInvertsLog) {
  TriSeries s = TriSeries::one(4);
  s.add(1, 2, 1, -I);
  s.add(2, 4, 2, GaussRational::from_ints(-1, 2, 0, 1));
  s.add(2, 2, 1, 7);
  s.add(3, -2, 1, I * 3);
  EXPECT_EQ(formal_exp(formal_log(s)), s);
}

TEST(TriSeries, LogRequiresUnitConstant) {
  TriSeries s(2);
  s.add(0, 0, 0, 2);
  EXPECT_THROW(formal_log(s), ValidationError);
  EXPECT_THROW(formal_exp(s), ValidationError);
}

TEST(Assemble, LeadingCoefficients) {
  const auto z_action = assemble_Z(1, with(Convention::Action));
  EXPECT_EQ(z_action.coeff(0, 0, 0), GaussRational(1));
  EXPECT_EQ(z_action.coeff(1, 2, 1), -I);
  EXPECT_EQ(z_action.terms().size(), 2u);
  const auto z_paper = assemble_Z(1, with(Convention::PaperSeries));
  EXPECT_EQ(z_paper.coeff(1, 2, 1), -I * 2);
}

TEST(Assemble, OrderZeroIsOne) {
  EXPECT_EQ(assemble_Z(0), TriSeries::one(0));
  EXPECT_TRUE(connected_assemble(0).empty());
}

TEST(Assemble, LogarithmAtOrderThree) {
  const auto ln_z = formal_log(assemble_Z(3));
  EXPECT_EQ(ln_z, expected_ln_z_order3()) << ln_z.to_string();
}

TEST(Assemble, LinkedClusterBothConventions) {
  for (const auto c : {Convention::Action, Convention::PaperSeries}) {
    for (const auto a : {SeriesAction::Standard, SeriesAction::Symmetric, SeriesAction::WickOrdered}) {
      const DiagramSums sums(3, with(c, a));
      EXPECT_EQ(formal_log(sums.z()), sums.connected()) << to_string(c) << " " << to_string(a);
    }
  }
}

TEST(Assemble, DisconnectedDiagramsOnlyInZ) {
  const DiagramSums sums(2, with(Convention::Action));
  // Two separate order-one bubbles: N^4 d^2 with weight (-i)^2 / 2!.
  EXPECT_EQ(sums.z().coeff(2, 4, 2), GaussRational(mpq_class(-1, 2)));
  EXPECT_TRUE(sums.connected().coeff(2, 4, 2).is_zero());
  const auto connected = sums.connected();
  for (const auto& [key, c] : connected.terms()) EXPECT_LE(key.n_pow, 2);
}

TEST(Assemble, ConventionsDifferByPowersOfTwo) {
  const auto a = assemble_Z(3, with(Convention::Action));
  const auto p = assemble_Z(3, with(Convention::PaperSeries));
  ASSERT_EQ(a.terms().size(), p.terms().size());
  for (const auto& [key, c] : a.terms()) {
    EXPECT_EQ(p.coeff(key.k, key.n_pow, key.d_pow), c * GaussRational(2).pow(static_cast<unsigned>(key.k)));
  }
}

TEST(Assemble, WickOrderedEqualsTadpoleFreeStandard) {
  for (const auto c : {Convention::Action, Convention::PaperSeries}) {
    AssembleOptions no_tadpoles = with(c);
    no_tadpoles.exclude_tadpoles = true;
    EXPECT_EQ(assemble_Z(3, with(c, SeriesAction::WickOrdered)), assemble_Z(3, no_tadpoles));
  }
}

TEST(Assemble, WickOrderedStartsAtOrderTwoInLogarithm) {
  const auto ln_z = formal_log(assemble_Z(3, with(Convention::Action, SeriesAction::WickOrdered)));
  EXPECT_TRUE(ln_z.order(1).empty());
}

TEST(Assemble, PlanarSingleLoopCounts) {
  const DiagramSums sums(3, with(Convention::Action));
  EXPECT_EQ(sums.planar_single_loop_counts(), (std::vector<std::uint64_t>{2, 16, 336}));
}

TEST(Assemble, OrderCapIsEnforced) {
  AssembleOptions o;
  o.max_k = 2;
  EXPECT_THROW(assemble_Z(3, o), ResourceLimitError);
}

TEST(Assemble, ParallelMatchesSerial) {
  AssembleOptions parallel;
  parallel.threads = 4;
  EXPECT_EQ(assemble_Z(3, parallel), assemble_Z(3));
}

TEST(Flp, TableFromOrderThree) {
  const auto table = extract_Flp(formal_log(assemble_Z(3)));
  EXPECT_EQ(table.kmax, 3);
  const auto f10 = table.at(1, 0);
  ASSERT_EQ(f10.count(1), 1u);
  EXPECT_EQ(f10.at(1), -I);
  EXPECT_EQ(polynomial_to_string(f10), "-i g - 2 g^2 + 7 i g^3");
  for (const auto& [lp, poly] : table.entries) {
    EXPECT_GE(lp.p, 0);
    EXPECT_LE(lp.p, 1);
    EXPECT_GE(lp.l, 1);
    EXPECT_LE(lp.l, 3);
    EXPECT_FALSE(poly.empty());
  }
  EXPECT_EQ(table.to_series(), formal_log(assemble_Z(3)));
}

TEST(Flp, EmptySeriesGivesEmptyTable) {
  const auto table = extract_Flp(TriSeries(2));
  EXPECT_TRUE(table.entries.empty());
  const auto F = F_of_g(table);
  EXPECT_EQ(F.lnpi_coeff, 1);
  EXPECT_TRUE(F.polynomial.empty());
  EXPECT_EQ(F.to_string(), "ln π");
}

TEST(Flp, RejectsOffLatticeTerms) {
  TriSeries odd(1);
  odd.add(1, 1, 1, 1);
  EXPECT_THROW(extract_Flp(odd), StructuralViolation);
  TriSeries no_greek(1);
  no_greek.add(1, 2, 0, 1);
  EXPECT_THROW(extract_Flp(no_greek), StructuralViolation);
}

TEST(Flp, GeneratingFunctionInBothConventions) {
  const auto f_action = F_of_g(extract_Flp(formal_log(assemble_Z(1, with(Convention::Action)))));
  EXPECT_EQ(f_action.to_string(), "ln π - i g");
  const auto f_paper = F_of_g(extract_Flp(formal_log(assemble_Z(1, with(Convention::PaperSeries)))));
  EXPECT_EQ(f_paper.to_string(), "ln π - 2 i g");
  const auto f0 = F_of_g(extract_Flp(formal_log(assemble_Z(0))));
  EXPECT_EQ(f0.to_string(), "ln π");
  const auto f3 = F_of_g(extract_Flp(formal_log(assemble_Z(3))));
  EXPECT_EQ(f3.to_string(), "ln π - i g - 2 g^2 + 7 i g^3");
}

TEST(DoubleLimit, RecoversGeneratingFunction) {
  for (int kmax = 0; kmax <= 3; ++kmax) {
    for (const auto c : {Convention::Action, Convention::PaperSeries}) {
      const auto full = full_log_series(formal_log(assemble_Z(kmax, with(c))));
      const auto r = double_limit(full, kmax);
      EXPECT_TRUE(r.ok) << kmax;
      EXPECT_EQ(r.limit, r.expected);
      EXPECT_TRUE(double_limit_check(full, kmax));
    }
  }
}

TEST(DoubleLimit, PositiveNPowerIsStructural) {
  auto ln_z = formal_log(assemble_Z(2));
  ln_z.add(2, 3, 1, 1);
  EXPECT_THROW(double_limit(full_log_series(ln_z), 2), StructuralViolation);
}

TEST(DoubleLimit, FreeConstantExponents) {
  const auto full = full_log_series(TriSeries(1));
  EXPECT_EQ(full.ln2_n, 1);
  EXPECT_EQ(full.ln2_d, 1);
  EXPECT_EQ(full.lnpi_n, 2);
  EXPECT_EQ(full.lnpi_d, 1);
}
