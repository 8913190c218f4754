// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_common.hpp"

using namespace linrel;
using namespace linrel::testing;

namespace
{
Block2x2 random_block(random::Engine &rng, Index max_dim = 3)
{
  const Index a = random::uniform_index(1, max_dim, rng), b = random::uniform_index(1, max_dim, rng);
  return {random::relation(a, a, rng), random::relation(b, a, rng), random::relation(a, b, rng),
          random::relation(b, b, rng)};
}

LinearRelation full_product(Index n1, Index n2) { return product(Subspace::full(n1), Subspace::full(n2)); }
} // namespace

TEST(Column, TwoScalars)
{
  EXPECT_TRUE(same(column(graph_of(1.0), graph_of(2.0)), from_operator(mat(2, 1, {1.0, 2.0}))));
}

TEST(Column, MultivaluedSecondEntry)
{
  const LinearRelation C = column(graph_of(1.0), multivalued_line());
  EXPECT_TRUE(same(C, product(Subspace(1), coordinate_subspace(2, 1, 1))));
  // col(A; {0} x M) = col({0} x mul A; {0} x M)
  const LinearRelation mulA = product(Subspace(1), parts(graph_of(1.0)).mul);
  EXPECT_TRUE(same(C, column(mulA, multivalued_line())));
}

TEST(Column, DomainMismatchThrows)
{
  EXPECT_THROW(column(graph_of(1.0), from_operator(Mat::Identity(2, 2))), DimensionMismatch);
}

TEST(Row, TwoScalars)
{
  EXPECT_TRUE(same(row(graph_of(1.0), graph_of(1.0)), from_operator(mat(1, 2, {1.0, 1.0}))));
}

TEST(Row, ZeroOperatorAndMultivalued)
{
  const LinearRelation C = from_operator(m1(0.0));
  const LinearRelation Rw = row(C, multivalued_line());
  // enumerate: ((h1, 0), 0 + m)
  Mat gens(3, 2);
  gens << 1.0, 0.0, 0.0, 0.0, 0.0, 1.0;
  EXPECT_TRUE(same(Rw.graph(), span(gens)));
  const RelationParts p = parts(Rw);
  EXPECT_TRUE(same(p.dom, coordinate_subspace(2, 0, 1)));
  EXPECT_TRUE(p.ran.is_full());
}

TEST(Row, RangeMismatchThrows)
{
  EXPECT_THROW(row(graph_of(1.0), from_operator(Mat::Identity(2, 2))), DimensionMismatch);
}

TEST(Block, LiftOfGraphOne)
{
  const Block2x2 b{product(Subspace::full(1), Subspace(1)), product(Subspace(1), Subspace(1)), graph_of(1.0),
                   product(Subspace(1), Subspace(1))};
  const LinearRelation S = block(b);
  EXPECT_TRUE(same(S.graph(), span({vec({1.0, 0.0, 0.0, 1.0})}, 4)));
  EXPECT_TRUE(same(S, lift(graph_of(1.0)).S));
}

TEST(Block, OperatorEntriesGiveMatrix)
{
  const Block2x2 b{graph_of(1.0), graph_of(2.0), graph_of(3.0), graph_of(4.0)};
  EXPECT_TRUE(same(block(b), from_operator(mat(2, 2, {1.0, 2.0, 3.0, 4.0}))));
}

TEST(Block, ProductEntries)
{
  // M1 = span e1 in C^2, N1 = {0}, M2 = {0}, N2 = C, H1 = C^2, H2 = C
  const Subspace M1 = coordinate_subspace(2, 0, 1), N1(2), M2(1), N2 = Subspace::full(1);
  const Block2x2 b{product(M1, N1), product(M2, N1), product(M1, N2), product(M2, N2)};
  const LinearRelation expected = product(direct_sum(M1, M2), direct_sum(N1, N2));
  EXPECT_TRUE(same(block(b), expected));
  EXPECT_TRUE(same(column_of_rows(b), expected));
}

TEST(Block, ProductWithComplementsIsSelfadjoint)
{
  const Subspace M1 = span({vec({1.0, Scalar(0, 1)})}, 2), M2 = coordinate_subspace(1, 0, 1);
  const Block2x2 b{product(M1, complement(M1)), product(M2, complement(M1)), product(M1, complement(M2)),
                   product(M2, complement(M2))};
  EXPECT_TRUE(is_selfadjoint(block(b)));
}

TEST(Block, ShapeMismatchThrows)
{
  const Block2x2 b{graph_of(1.0), graph_of(1.0), from_operator(mat(2, 1, {1.0, 1.0})), graph_of(1.0)};
  EXPECT_THROW(block(b), DimensionMismatch);
}

TEST(Duality, ZeroAndMultivaluedBlocks)
{
  const LinearRelation z = product(Subspace(1), Subspace(1));
  EXPECT_TRUE(check_row_col_duality({z, z, z, z}));
  const LinearRelation m = multivalued_line();
  EXPECT_TRUE(check_row_col_duality({m, m, m, m}));
}

TEST(AdjointInclusion, BoundedOperatorsGiveEquality)
{
  random::Engine rng(7);
  const Block2x2 b{from_operator(random::gaussian(2, 2, rng)), from_operator(random::gaussian(2, 1, rng)),
                   from_operator(random::gaussian(1, 2, rng)), from_operator(random::gaussian(1, 1, rng))};
  const AdjointInclusion r = check_adjoint_inclusion(b);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.comparison.verdict, Inclusion::equal);
}

TEST(AdjointInclusion, MultivaluedColumnEntry)
{
  // A = {0} x C (dom A* = C), B = {0} x C: col(A; B)* = (dom A* x H; M^⊥ x H)
  const LinearRelation A = multivalued_line(), B = multivalued_line();
  const LinearRelation lhs = adjoint(column(A, B));
  const LinearRelation rhs = row(product(parts(adjoint(A)).dom, Subspace::full(1)),
                                 product(complement(parts(B).mul), Subspace::full(1)));
  EXPECT_TRUE(same(lhs, rhs));
  EXPECT_EQ(check_column_adjoint(A, B).verdict, Inclusion::equal);
}

TEST(AdjointInclusion, NonDenseDomainAgainstMultivaluedEntry)
{
  // A with dom A* ≠ whole space paired with B = {0} x M
  const LinearRelation A = from_kernel_pair(mat(2, 1, {1.0, 0.0}), mat(2, 1, {0.0, 1.0}));
  const LinearRelation B = product(Subspace(2), coordinate_subspace(2, 0, 1));
  const SubspaceComparison c = check_column_adjoint(A, B);
  EXPECT_NE(c.verdict, Inclusion::superset);
  EXPECT_NE(c.verdict, Inclusion::incomparable);
  const LinearRelation rhs = row(product(parts(adjoint(A)).dom, Subspace::full(2)),
                                 product(complement(coordinate_subspace(2, 0, 1)), Subspace::full(2)));
  EXPECT_TRUE(same(adjoint(column(A, B)), rhs));
}

TEST(NonUniqueness, TwoBlocksForK)
{
  random::Engine rng(11);
  for (int trial = 0; trial < 10; ++trial)
  {
    const LinearRelation R = random_relation(rng, 3);
    const LinearRelation Rs = adjoint(R);
    const Index n1 = R.n1(), n2 = R.n2();
    const RelationParts p = parts(R), q = parts(Rs);
    const Block2x2 k1{product(Subspace::full(n1), Subspace(n1)), Rs, R, product(Subspace::full(n2), Subspace(n2))};
    const Block2x2 k2{product(p.dom, q.mul), Rs, R, product(q.dom, p.mul)};
    const LinearRelation K1 = block(k1), K2 = block(k2);
    EXPECT_TRUE(same(K1, K2)) << "trial " << trial;
    EXPECT_TRUE(same(K1, lift(R).K)) << "trial " << trial;
  }
}

class BlockProperties : public ::testing::TestWithParam<int>
{};

TEST_P(BlockProperties, DualityAndAdjoints)
{
  random::Engine rng(900 + GetParam());
  const Block2x2 b = random_block(rng);
  EXPECT_TRUE(check_row_col_duality(b));
  const AdjointInclusion inc = check_adjoint_inclusion(b);
  EXPECT_TRUE(inc.holds) << to_string(inc.comparison.verdict);
}

TEST_P(BlockProperties, RowAndColumnAdjoint)
{
  random::Engine rng(1000 + GetParam());
  const Index h = random::uniform_index(1, 3, rng);
  const LinearRelation C = random::relation(random::uniform_index(1, 3, rng), h, rng);
  const LinearRelation D = random::relation(random::uniform_index(1, 3, rng), h, rng);
  EXPECT_TRUE(check_row_adjoint(C, D));
  const LinearRelation A = random::relation(h, random::uniform_index(1, 3, rng), rng);
  const LinearRelation B = random::relation(h, random::uniform_index(1, 3, rng), rng);
  const SubspaceComparison c = check_column_adjoint(A, B);
  EXPECT_TRUE(c.verdict == Inclusion::equal || c.verdict == Inclusion::subset) << to_string(c.verdict);
}

TEST_P(BlockProperties, PartsIdentities)
{
  random::Engine rng(1100 + GetParam());
  const Index h = random::uniform_index(1, 3, rng);
  const LinearRelation A = random::relation(h, random::uniform_index(1, 3, rng), rng);
  const LinearRelation B = random::relation(h, random::uniform_index(1, 3, rng), rng);
  const RelationParts pa = parts(A), pb = parts(B), pc = parts(column(A, B));
  EXPECT_TRUE(same(pc.dom, meet(pa.dom, pb.dom)));
  EXPECT_TRUE(same(pc.mul, direct_sum(pa.mul, pb.mul)));

  const LinearRelation C = random::relation(random::uniform_index(1, 3, rng), h, rng);
  const LinearRelation D = random::relation(random::uniform_index(1, 3, rng), h, rng);
  const RelationParts qc = parts(C), qd = parts(D), qr = parts(row(C, D));
  EXPECT_TRUE(same(qr.dom, direct_sum(qc.dom, qd.dom)));
  EXPECT_TRUE(same(qr.mul, join(qc.mul, qd.mul)));

  const Block2x2 b = random_block(rng);
  const RelationParts pb2 = parts(block(b));
  const RelationParts p11 = parts(b.e11), p12 = parts(b.e12), p21 = parts(b.e21), p22 = parts(b.e22);
  EXPECT_TRUE(same(pb2.dom, direct_sum(meet(p11.dom, p21.dom), meet(p12.dom, p22.dom))));
  EXPECT_TRUE(same(pb2.mul, direct_sum(join(p11.mul, p12.mul), join(p21.mul, p22.mul))));
}

TEST_P(BlockProperties, Monotonicity)
{
  random::Engine rng(1200 + GetParam());
  const Block2x2 small = random_block(rng);
  // enlarge each entry by joining another relation with the same spaces
  auto grow = [&](const LinearRelation &e) {
    return componentwise_sum(e, random::relation(e.n1(), e.n2(), rng));
  };
  const Block2x2 big{grow(small.e11), grow(small.e12), grow(small.e21), grow(small.e22)};
  EXPECT_TRUE(contains(block(big), block(small)));
  const Block2x2 top{full_product(small.n1(), small.n1()), full_product(small.n2(), small.n1()),
                     full_product(small.n1(), small.n2()), full_product(small.n2(), small.n2())};
  EXPECT_TRUE(contains(block(top), block(big)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, BlockProperties, ::testing::Range(0, 40));
