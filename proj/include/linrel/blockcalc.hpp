// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "linrel/relation.hpp"

namespace linrel
{

// col(A; B) = {(h, (k1, k2)) : (h, k1) in A, (h, k2) in B} for A : H -> K1, B : H -> K2.
inline LinearRelation column(const LinearRelation &A, const LinearRelation &B, const ToleranceConfig &cfg = {})
{
  if (A.n1() != B.n1())
    throw DimensionMismatch("column: relations must share the domain space");
  const Mat FA = A.dom_block(), FB = B.dom_block();
  // coefficients (a, b) with FA a = FB b
  const Mat coeff = detail::null_basis(detail::hcat(FA, -FB), cfg);
  const Mat ca = coeff.topRows(A.dim()), cb = coeff.bottomRows(B.dim());
  Mat vecs(A.n1() + A.n2() + B.n2(), coeff.cols());
  vecs << FA * ca, A.ran_block() * ca, B.ran_block() * cb;
  return LinearRelation(A.n1(), A.n2() + B.n2(), span_internal(vecs, cfg));
}

// (C; D) = {((h1, h2), k1 + k2) : (h1, k1) in C, (h2, k2) in D} for C : H1 -> K, D : H2 -> K.
inline LinearRelation row(const LinearRelation &C, const LinearRelation &D, const ToleranceConfig &cfg = {})
{
  if (C.n2() != D.n2())
    throw DimensionMismatch("row: relations must share the range space");
  Mat vecs(C.n1() + D.n1() + C.n2(), C.dim() + D.dim());
  vecs << detail::block_diag(C.dom_block(), D.dom_block()), detail::hcat(C.ran_block(), D.ran_block());
  return LinearRelation(C.n1() + D.n1(), C.n2(), span_internal(vecs, cfg));
}

// A 2x2 block [E_ij] with E_ij : H_j -> H_i.
struct Block2x2
{
  LinearRelation e11, e12, e21, e22;

  Index n1() const { return e11.n1(); }
  Index n2() const { return e22.n1(); }

  void validate() const
  {
    const Index a = n1(), b = n2();
    const bool ok = e11.n1() == a && e11.n2() == a && e12.n1() == b && e12.n2() == a && e21.n1() == a &&
                    e21.n2() == b && e22.n1() == b && e22.n2() == b;
    if (!ok)
      throw DimensionMismatch("Block2x2: entry shapes do not fit H1 + H2");
  }
};

// The block relation: the row of the two columns.
inline LinearRelation block(const Block2x2 &b, const ToleranceConfig &cfg = {})
{
  b.validate();
  return row(column(b.e11, b.e21, cfg), column(b.e12, b.e22, cfg), cfg);
}

// The same relation assembled as the column of the two rows.
inline LinearRelation column_of_rows(const Block2x2 &b, const ToleranceConfig &cfg = {})
{
  b.validate();
  return column(row(b.e11, b.e12, cfg), row(b.e21, b.e22, cfg), cfg);
}

// Formal adjoint [E_ij]^* = [[E11*, E21*], [E12*, E22*]].
inline Block2x2 formal_adjoint(const Block2x2 &b)
{
  b.validate();
  return {adjoint(b.e11), adjoint(b.e21), adjoint(b.e12), adjoint(b.e22)};
}

inline bool check_row_col_duality(const Block2x2 &b, const ToleranceConfig &cfg = {})
{
  return equal(block(b, cfg), column_of_rows(b, cfg), cfg);
}

struct AdjointInclusion
{
  SubspaceComparison comparison; // block of adjoints against adjoint of block
  bool holds = false;            // verdict is equal or subset
};

inline AdjointInclusion check_adjoint_inclusion(const Block2x2 &b, const ToleranceConfig &cfg = {})
{
  AdjointInclusion out;
  out.comparison = relate(block(formal_adjoint(b), cfg), adjoint(block(b, cfg)), cfg);
  out.holds = out.comparison.verdict == Inclusion::equal || out.comparison.verdict == Inclusion::subset;
  return out;
}

// (A*; B*) against col(A; B)*.
inline SubspaceComparison check_column_adjoint(const LinearRelation &A, const LinearRelation &B,
                                               const ToleranceConfig &cfg = {})
{
  return relate(row(adjoint(A), adjoint(B), cfg), adjoint(column(A, B, cfg)), cfg);
}

// (C; D)* = col(C*; D*).
inline bool check_row_adjoint(const LinearRelation &C, const LinearRelation &D, const ToleranceConfig &cfg = {})
{
  return equal(adjoint(row(C, D, cfg)), column(adjoint(C), adjoint(D), cfg), cfg);
}

} // namespace linrel
