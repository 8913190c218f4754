// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "linrel/relation.hpp"

namespace linrel::random
{

using Engine = std::mt19937_64;

inline Mat gaussian(Index rows, Index cols, Engine &rng)
{
  std::normal_distribution<double> normal;
  Mat A(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      A(i, j) = Scalar(normal(rng), normal(rng));
  return A;
}

inline Index uniform_index(Index lo, Index hi, Engine &rng)
{
  std::uniform_int_distribution<Index> dist(lo, hi);
  return dist(rng);
}

inline double uniform_real(double lo, double hi, Engine &rng)
{
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

inline Mat unitary(Index n, Engine &rng)
{
  if (n == 0)
    return Mat(0, 0);
  Eigen::HouseholderQR<Mat> qr(gaussian(n, n, rng));
  return qr.householderQ() * Mat::Identity(n, n);
}

// Uniformly oriented subspace of C^n of dimension d.
inline Subspace subspace(Index n, Index d, Engine &rng)
{
  return Subspace::from_orthonormal_unchecked(unitary(n, rng).leftCols(d));
}

inline Mat hermitian(Index n, Engine &rng)
{
  const Mat A = gaussian(n, n, rng);
  return 0.5 * (A + A.adjoint());
}

// Positive semidefinite with prescribed rank.
inline Mat psd(Index n, Index rank, Engine &rng)
{
  const Mat A = gaussian(n, rank, rng);
  return A * A.adjoint() / std::max<double>(1.0, static_cast<double>(rank));
}

//
// Random closed relation C^n1 -> C^n2. Half of the draws are generic graph subspaces of a
// random dimension 0..n1+n2; the others come from a parametric pair (C x, D x) with
// rank-deficient C and D, which produces nontrivial kernels and multivalued parts.
//
inline LinearRelation relation(Index n1, Index n2, Engine &rng, const ToleranceConfig &cfg = {})
{
  if (uniform_index(0, 1, rng) == 0)
    return LinearRelation(n1, n2, subspace(n1 + n2, uniform_index(0, n1 + n2, rng), rng));
  const Index p = uniform_index(1, n1 + n2, rng);
  const Index rc = uniform_index(0, std::min(n1, p), rng);
  const Index rd = uniform_index(0, std::min(n2, p), rng);
  const Mat C = gaussian(n1, rc, rng) * gaussian(rc, p, rng);
  const Mat D = gaussian(n2, rd, rng) * gaussian(rd, p, rng);
  return LinearRelation(n1, n2, span_internal(detail::vcat(C, D), cfg));
}

// Selfadjoint relation in C^g: a Hermitian operator on L^⊥ plus {0} x L for a random L.
inline LinearRelation selfadjoint_relation(Index g, Engine &rng, bool nonnegative = false,
                                           Index mul_dim = -1)
{
  const Index m = mul_dim >= 0 ? mul_dim : uniform_index(0, g, rng);
  const Mat U = unitary(g, rng);
  const Mat L = U.leftCols(m), P = U.rightCols(g - m);
  const Index r = g - m;
  const Mat T = nonnegative ? psd(r, uniform_index(0, r, rng), rng) : hermitian(r, rng);
  // graph vectors (P y, P T y) and (0, L z)
  Mat vecs(2 * g, g);
  vecs << P, Mat::Zero(g, m), P * T, L;
  return LinearRelation(g, g, span_internal(vecs, ToleranceConfig{}));
}

} // namespace linrel::random
