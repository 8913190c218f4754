// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_common.hpp"

using namespace linrel;
using namespace linrel::testing;

TEST(OracleAdjoint, HandCheckable)
{
  const Scalar c(2.0, 0.5);
  EXPECT_TRUE(same(oracle::adjoint_definitional(graph_of(c)), graph_of(std::conj(c))));
  EXPECT_TRUE(same(oracle::adjoint_definitional(multivalued_line()), multivalued_line()));
  EXPECT_TRUE(same(oracle::adjoint_definitional(product(Subspace(2), Subspace(3))), product(Subspace::full(3), Subspace::full(2))));
}

TEST(OracleAdjoint, RandomThreeByFour)
{
  random::Engine rng(34);
  for (int i = 0; i < 20; ++i)
  {
    const LinearRelation R = random::relation(3, 4, rng);
    EXPECT_TRUE(same(oracle::adjoint_definitional(R), adjoint(R)));
  }
}

TEST(NumericalRange, LiftedGraphOne)
{
  for (const Scalar z : oracle::numerical_range_hull(lift(graph_of(1.0)).S, 500, 1))
    EXPECT_LT(std::abs(z), 1e-12);
}

TEST(NumericalRange, DiagonalOneTwo)
{
  const std::vector<Scalar> pts = oracle::numerical_range_hull(from_operator(mat(2, 2, {1.0, 0.0, 0.0, 2.0})), 500, 2);
  ASSERT_FALSE(pts.empty());
  for (const Scalar z : pts)
  {
    EXPECT_LT(std::abs(z.imag()), 1e-12);
    EXPECT_GE(z.real(), 1.0 - 1e-12);
    EXPECT_LE(z.real(), 2.0 + 1e-12);
  }
}

TEST(NumericalRange, PurelyMultivalued)
{
  const std::vector<Scalar> pts = oracle::numerical_range_hull(purely_multivalued(2, 2), 100, 3);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], Scalar(0.0));
}

TEST(NumericalRange, AgreesWithCrossGram)
{
  random::Engine rng(8);
  for (int i = 0; i < 30; ++i)
  {
    const LinearRelation S = lift(random_relation(rng, 3)).S;
    ASSERT_TRUE(classify(S).dom_perp_ran);
    for (const Scalar z : oracle::numerical_range_hull(S, 200, i))
      EXPECT_LT(std::abs(z), 1e-10);
  }
}

TEST(Sweep, TwentyParametersGiveTwentyExtensions)
{
  const LiftBundle b = lift(graph_of(1.0));
  const BoundaryTriplet t = triplet_main(b);
  const oracle::SweepReport rep = oracle::extension_sweep(t, oracle::theta_grid(t.g(), 20, 99));
  EXPECT_EQ(rep.entries.size(), 20u);
  EXPECT_EQ(rep.distinct_extensions, 20u);
  EXPECT_TRUE(rep.injective);
  EXPECT_TRUE(rep.correspondence_ok);
  EXPECT_TRUE(rep.all_between);
  for (const oracle::SweepEntry &e : rep.entries)
    EXPECT_TRUE(e.result_selfadjoint);
}

TEST(Sweep, RecoversHAndK)
{
  random::Engine rng(21);
  const LiftBundle b = lift(random::relation(2, 3, rng));
  const BoundaryTriplet t = triplet_main(b);
  std::vector<LinearRelation> thetas = {zero_operator(t.g(), t.g()), purely_multivalued(t.g(), t.g())};
  const oracle::SweepReport rep = oracle::extension_sweep(t, thetas);
  EXPECT_TRUE(rep.correspondence_ok);
  EXPECT_EQ(rep.distinct_extensions, t.g() > 0 ? 2u : 1u);
  EXPECT_TRUE(same(extension_from_boundary(t, thetas[0]), b.K));
  EXPECT_TRUE(same(extension_from_boundary(t, thetas[1]), b.H));
}

TEST(Sweep, FlagsNonSelfadjointParameters)
{
  const BoundaryTriplet t = triplet_main(lift(from_operator(Mat::Zero(2, 2))));
  const std::vector<LinearRelation> thetas = oracle::theta_grid(t.g(), 3, 7, 4);
  const oracle::SweepReport rep = oracle::extension_sweep(t, thetas);
  ASSERT_EQ(rep.entries.size(), 7u);
  EXPECT_TRUE(rep.correspondence_ok);
  for (std::size_t i = 3; i < 7; ++i)
  {
    EXPECT_FALSE(rep.entries[i].theta_selfadjoint);
    EXPECT_FALSE(rep.entries[i].result_selfadjoint);
  }
}
