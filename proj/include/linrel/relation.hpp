// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "linrel/subspace.hpp"

namespace linrel
{

//
// A closed linear relation from H1 = C^n1 to H2 = C^n2, stored as its graph,
// a subspace of C^{n1+n2} whose first n1 coordinates are the domain side.
//
class LinearRelation
{
public:
  LinearRelation() = default;

  LinearRelation(Index n1, Index n2, Subspace graph)
    : n1_(n1)
    , n2_(n2)
    , graph_(std::move(graph))
  {
    if (n1 < 0 || n2 < 0 || graph_.ambient_dim() != n1 + n2)
      throw DimensionMismatch("LinearRelation: graph ambient dimension " +
                              std::to_string(graph_.ambient_dim()) + " != n1 + n2 = " +
                              std::to_string(n1 + n2));
  }

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  bool is_square() const { return n1_ == n2_; }
  const Subspace &graph() const { return graph_; }
  Index dim() const { return graph_.dim(); }

  // Domain-side and range-side rows of the orthonormal graph basis.
  Mat dom_block() const { return graph_.basis().topRows(n1_); }
  Mat ran_block() const { return graph_.basis().bottomRows(n2_); }

private:
  Index n1_ = 0;
  Index n2_ = 0;
  Subspace graph_;
};

inline void require_same_spaces(const LinearRelation &A, const LinearRelation &B, const char *what)
{
  if (A.n1() != B.n1() || A.n2() != B.n2())
    throw DimensionMismatch(std::string(what) + ": relations act between different spaces");
}

inline void require_square(const LinearRelation &A, const char *what)
{
  if (!A.is_square())
    throw DimensionMismatch(std::string(what) + ": relation must act in one space (n1 == n2)");
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

// Graph of the n2 x n1 matrix `op`.
inline LinearRelation from_operator(const Mat &op, const ToleranceConfig &cfg = {})
{
  const Index n1 = op.cols(), n2 = op.rows();
  return LinearRelation(n1, n2, span_internal(detail::vcat(Mat::Identity(n1, n1), op), cfg));
}

// { (C x, D x) : x in C^p }.
inline LinearRelation from_kernel_pair(const Mat &C, const Mat &D, const ToleranceConfig &cfg = {})
{
  if (C.cols() != D.cols())
    throw DimensionMismatch("from_kernel_pair: C and D must have the same column count");
  return LinearRelation(C.rows(), D.rows(), span(detail::vcat(C, D), cfg));
}

// Relation whose graph basis is supplied directly; columns must be orthonormal.
inline LinearRelation from_graph_basis(Index n1, Index n2, const Mat &basis, const ToleranceConfig &cfg = {})
{
  if (basis.rows() != n1 + n2)
    throw DimensionMismatch("from_graph_basis: basis has " + std::to_string(basis.rows()) +
                            " rows, expected n1 + n2 = " + std::to_string(n1 + n2));
  return LinearRelation(n1, n2, Subspace::from_orthonormal(basis, cfg));
}

// Cartesian product M x N, i.e. the relation { (m, k) : m in M, k in N }.
inline LinearRelation product(const Subspace &M, const Subspace &N)
{
  return LinearRelation(M.ambient_dim(), N.ambient_dim(), direct_sum(M, N));
}

// H1 x {0}: the zero operator.
inline LinearRelation zero_operator(Index n1, Index n2)
{
  return product(Subspace::full(n1), Subspace(n2));
}

// {0} x H2: purely multivalued.
inline LinearRelation purely_multivalued(Index n1, Index n2)
{
  return product(Subspace(n1), Subspace::full(n2));
}

// Graph of lambda * I on C^n.
inline LinearRelation scalar_operator(Index n, Scalar lambda, const ToleranceConfig &cfg = {})
{
  return from_operator(lambda * Mat::Identity(n, n), cfg);
}

// Image of a relation on C^g under an isometry B : C^g -> C^n (columns orthonormal).
inline LinearRelation embed(const LinearRelation &theta, const Mat &B)
{
  if (!theta.is_square() || B.cols() != theta.n1())
    throw DimensionMismatch("embed: relation must act in C^g with g = columns of B");
  const Index n = B.rows();
  Mat graph(2 * n, theta.dim());
  graph << B * theta.dom_block(), B * theta.ran_block();
  return LinearRelation(n, n, Subspace::from_orthonormal_unchecked(std::move(graph)));
}

// ---------------------------------------------------------------------------
// structure
// ---------------------------------------------------------------------------

struct RelationParts
{
  Subspace dom; // in H1
  Subspace ran; // in H2
  Subspace ker; // in H1
  Subspace mul; // in H2
};

inline RelationParts parts(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  const Index n1 = R.n1(), n2 = R.n2();
  RelationParts p;
  p.dom = coordinate_image(R.graph(), 0, n1, cfg);
  p.ran = coordinate_image(R.graph(), n1, n2, cfg);
  const Subspace kerside = meet(R.graph(), coordinate_subspace(n1 + n2, 0, n1), cfg);
  const Subspace mulside = meet(R.graph(), coordinate_subspace(n1 + n2, n1, n2), cfg);
  p.ker = coordinate_image(kerside, 0, n1, cfg);
  p.mul = coordinate_image(mulside, n1, n2, cfg);
  return p;
}

// {(g, f) : (f, g) in R}.
inline LinearRelation inverse(const LinearRelation &R)
{
  Mat swapped(R.n1() + R.n2(), R.dim());
  swapped << R.ran_block(), R.dom_block();
  return LinearRelation(R.n2(), R.n1(), Subspace::from_orthonormal_unchecked(std::move(swapped)));
}

//
// Adjoint through the flip-flop identity R^⊥ = J R*, J{φ,ψ} = {ψ,-φ}:
// if [P1; P2] spans R^⊥ then [-P2; P1] spans R* (from H2 to H1).
//
inline LinearRelation adjoint(const LinearRelation &R)
{
  const Subspace perp = complement(R.graph());
  const Mat &P = perp.basis();
  Mat star(R.n1() + R.n2(), P.cols());
  star << -P.bottomRows(R.n2()), P.topRows(R.n1());
  return LinearRelation(R.n2(), R.n1(), Subspace::from_orthonormal_unchecked(std::move(star)));
}

inline SubspaceComparison relate(const LinearRelation &A, const LinearRelation &B, const ToleranceConfig &cfg = {})
{
  require_same_spaces(A, B, "relate");
  return relate(A.graph(), B.graph(), cfg);
}

inline bool equal(const LinearRelation &A, const LinearRelation &B, const ToleranceConfig &cfg = {})
{
  return A.n1() == B.n1() && A.n2() == B.n2() && equal(A.graph(), B.graph(), cfg);
}

// inner ⊂ outer.
inline bool contains(const LinearRelation &outer, const LinearRelation &inner, const ToleranceConfig &cfg = {})
{
  require_same_spaces(outer, inner, "contains");
  return contains(outer.graph(), inner.graph(), cfg);
}

// Componentwise sum A +̂ B (join of graphs).
inline LinearRelation componentwise_sum(const LinearRelation &A, const LinearRelation &B,
                                        const ToleranceConfig &cfg = {})
{
  require_same_spaces(A, B, "componentwise_sum");
  return LinearRelation(A.n1(), A.n2(), join(A.graph(), B.graph(), cfg));
}

// Orthogonal componentwise sum A ⊕̂ B; the graphs must be orthogonal.
inline LinearRelation orthogonal_sum(const LinearRelation &A, const LinearRelation &B,
                                     const ToleranceConfig &cfg = {})
{
  require_same_spaces(A, B, "orthogonal_sum");
  if (!orthogonal(A.graph(), B.graph(), cfg))
    throw PreconditionViolated("orthogonal_sum: graphs are not orthogonal");
  return LinearRelation(A.n1(), A.n2(),
                        Subspace::from_orthonormal_unchecked(detail::hcat(A.graph().basis(), B.graph().basis())));
}

inline LinearRelation intersection(const LinearRelation &A, const LinearRelation &B, const ToleranceConfig &cfg = {})
{
  require_same_spaces(A, B, "intersection");
  return LinearRelation(A.n1(), A.n2(), meet(A.graph(), B.graph(), cfg));
}

// {(f, g - M f) : (f, g) in R} for an n2 x n1 matrix M.
inline LinearRelation subtract_operator(const LinearRelation &R, const Mat &M, const ToleranceConfig &cfg = {})
{
  if (M.rows() != R.n2() || M.cols() != R.n1())
    throw DimensionMismatch("subtract_operator: operator shape does not match relation");
  const Mat F = R.dom_block();
  return LinearRelation(R.n1(), R.n2(), span_internal(detail::vcat(F, R.ran_block() - M * F), cfg));
}

//
// Matrix of the operator part R_s on an orthonormal basis of dom R:
// column j of `matrix` is R_s applied to column j of `dom_basis`.
//
struct OperatorPartMatrix
{
  Mat dom_basis; // n1 x r
  Mat matrix;    // n2 x r, values in (mul R)^⊥
};

namespace detail
{
// Thin factorisation F = U Σ W^H of the domain block restricted to its numerical rank,
// together with the kernel directions of F in coefficient space.
struct DomainFactor
{
  Mat U;        // n1 x r
  RealVec sigma; // r
  Mat W;        // d x r
  Mat W_null;   // d x (d - r)
};

inline DomainFactor factor_domain_block(const LinearRelation &R, const ToleranceConfig &cfg)
{
  const Mat F = R.dom_block();
  const Index d = F.cols();
  DomainFactor out;
  if (d == 0 || F.rows() == 0)
  {
    out.U = Mat(F.rows(), 0);
    out.sigma = RealVec(0);
    out.W = Mat(d, 0);
    out.W_null = Mat::Identity(d, d);
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(F, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVec &sv = svd.singularValues();
  const double cutoff = cfg.rank_tol * std::max(sv(0), 1.0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff)
    ++r;
  out.U = svd.matrixU().leftCols(r);
  out.sigma = sv.head(r);
  out.W = svd.matrixV().leftCols(r);
  out.W_null = svd.matrixV().rightCols(d - r);
  return out;
}

inline Mat hermitian_part(const Mat &A) { return 0.5 * (A + A.adjoint()); }

inline double hermitian_defect(const Mat &A)
{
  return A.size() == 0 ? 0.0 : (A - A.adjoint()).cwiseAbs().maxCoeff();
}

inline double min_eigenvalue(const Mat &hermitian)
{
  if (hermitian.rows() == 0)
    return infinity();
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}
} // namespace detail

inline OperatorPartMatrix operator_part_matrix(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  const detail::DomainFactor df = detail::factor_domain_block(R, cfg);
  const Mat G = R.ran_block();
  Mat T = G * df.W * df.sigma.cwiseInverse().asDiagonal();
  const Subspace mul = span_internal(G * df.W_null, cfg);
  T -= mul.basis() * (mul.basis().adjoint() * T);
  return {df.U, T};
}

// R_s = {(f, P g) : (f, g) in R}, P the orthogonal projection onto (mul R)^⊥.
inline LinearRelation operator_part(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  const Subspace mul = parts(R, cfg).mul;
  const Mat G = R.ran_block();
  const Mat PG = G - mul.basis() * (mul.basis().adjoint() * G);
  return LinearRelation(R.n1(), R.n2(), span_internal(detail::vcat(R.dom_block(), PG), cfg));
}

// Operator norm of the operator part R_s.
inline double operator_part_norm(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  return detail::spectral_norm(operator_part_matrix(R, cfg).matrix);
}

// Nonnegativity: (g, f) >= 0 for all (f, g) in R.
inline bool is_nonnegative(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  require_square(R, "is_nonnegative");
  const Mat cross = R.dom_block().adjoint() * R.ran_block();
  return detail::hermitian_defect(cross) < cfg.angle_tol &&
         detail::min_eigenvalue(detail::hermitian_part(cross)) >= cfg.psd_floor;
}

//
// Greatest lower bound m(S) = inf (g, f)/|f|^2 of a symmetric relation, computed on the
// compressed operator part. +inf when dom S = {0}; NaN when S is not symmetric.
//
inline double lower_bound(const LinearRelation &S, const ToleranceConfig &cfg = {})
{
  require_square(S, "lower_bound");
  const Mat cross = S.dom_block().adjoint() * S.ran_block();
  if (detail::hermitian_defect(cross) >= cfg.angle_tol)
    return quiet_nan();
  const detail::DomainFactor df = detail::factor_domain_block(S, cfg);
  if (df.U.cols() == 0)
    return infinity();
  const Mat form = df.U.adjoint() * S.ran_block() * df.W * df.sigma.cwiseInverse().asDiagonal();
  return detail::min_eigenvalue(detail::hermitian_part(form));
}

struct SymmetryReport
{
  bool square = false; // the remaining fields are only meaningful when true
  bool is_symmetric = false;
  bool is_selfadjoint = false;
  bool is_nonnegative = false;
  bool dom_perp_ran = false;
  double cross_gram_max = 0.0;         // max |(g_i, f_j)| over the graph basis
  double lower_bound = quiet_nan();    // m(S); +inf for empty domain, NaN if not symmetric
  double numerical_range_radius = 0.0; // sampled max |(g, f)| with |f| = 1
};

inline constexpr int kDefaultRangeSamples = 2048;
inline constexpr std::uint64_t kDefaultRangeSeed = 0x5eedULL;

namespace detail
{
inline double sampled_numerical_radius(const LinearRelation &R, const DomainFactor &df, int samples,
                                       std::uint64_t seed)
{
  if (df.U.cols() == 0)
    return 0.0; // purely multivalued: W(S) = {0} by convention
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const Mat G = R.ran_block();
  const Mat F = R.dom_block();
  double radius = 0.0;
  for (int s = 0; s < samples; ++s)
  {
    // unit-scale domain direction plus an arbitrary multivalued component
    Vec y(df.U.cols()), z(df.W_null.cols());
    for (Index i = 0; i < y.size(); ++i)
      y(i) = Scalar(normal(rng), normal(rng));
    for (Index i = 0; i < z.size(); ++i)
      z(i) = Scalar(normal(rng), normal(rng));
    const Vec c = df.W * (y.array() / df.sigma.array().cast<Scalar>()).matrix() + df.W_null * z;
    const Vec f = F * c;
    const double nf = f.squaredNorm();
    if (nf == 0.0)
      continue;
    radius = std::max(radius, std::abs(f.dot(G * c)) / nf);
  }
  return radius;
}
} // namespace detail

//
// Symmetry classes of a relation in one space. dom S ⊥ ran S is decided exactly
// by the cross-Gram matrix F^H G of the graph basis [F; G]; the sampled radius
// is informational only.
//
inline SymmetryReport classify(const LinearRelation &R, const ToleranceConfig &cfg = {},
                               int samples = kDefaultRangeSamples, std::uint64_t seed = kDefaultRangeSeed)
{
  SymmetryReport rep;
  rep.square = R.is_square();
  if (!rep.square)
    return rep;
  const Mat cross = R.dom_block().adjoint() * R.ran_block();
  rep.cross_gram_max = detail::max_abs(cross);
  rep.dom_perp_ran = rep.cross_gram_max < cfg.angle_tol;
  const LinearRelation star = adjoint(R);
  rep.is_symmetric = contains(star, R, cfg);
  rep.is_selfadjoint = rep.is_symmetric && equal(star, R, cfg);
  rep.is_nonnegative = detail::hermitian_defect(cross) < cfg.angle_tol &&
                       detail::min_eigenvalue(detail::hermitian_part(cross)) >= cfg.psd_floor;
  rep.lower_bound = rep.is_symmetric ? lower_bound(R, cfg) : quiet_nan();
  rep.numerical_range_radius =
      detail::sampled_numerical_radius(R, detail::factor_domain_block(R, cfg), samples, seed);
  return rep;
}

// N̂_λ(T) = T ∩ graph(λ I), as a subspace of C^{2n}.
inline Subspace defect_pairs(const LinearRelation &T, Scalar lambda, const ToleranceConfig &cfg = {})
{
  require_square(T, "defect_pairs");
  return meet(T.graph(), scalar_operator(T.n1(), lambda, cfg).graph(), cfg);
}

// N_λ(T) = ker(T - λ).
inline Subspace eigenspace(const LinearRelation &T, Scalar lambda, const ToleranceConfig &cfg = {})
{
  return coordinate_image(defect_pairs(T, lambda, cfg), 0, T.n1(), cfg);
}

//
// Matrix of (A - λ)^{-1} for selfadjoint A. λ belongs to the spectrum exactly when
// {(g - λ f, f)} fails to be the graph of an everywhere defined operator.
//
inline Mat resolvent(const LinearRelation &A, Scalar lambda, const ToleranceConfig &cfg = {})
{
  require_square(A, "resolvent");
  if (!equal(adjoint(A), A, cfg))
    throw PreconditionViolated("resolvent: relation is not selfadjoint");
  const Index n = A.n1();
  const Mat F = A.dom_block();
  const Subspace inv = span_internal(detail::vcat(A.ran_block() - lambda * F, F), cfg);
  const Mat top = inv.basis().topRows(n);
  if (inv.dim() != n || detail::numerical_rank(top, cfg) != n)
    throw ResolventUndefined("resolvent: lambda lies in the spectrum");
  return inv.basis().bottomRows(n) * top.inverse();
}

} // namespace linrel
