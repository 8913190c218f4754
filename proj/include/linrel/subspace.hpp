// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "linrel/config.hpp"

namespace linrel
{

namespace detail
{

inline double spectral_norm(const Mat &A)
{
  if (A.size() == 0)
    return 0.0;
  Eigen::JacobiSVD<Mat> svd(A);
  return svd.singularValues()(0);
}

//
// Orthonormal basis of the column span of A. Singular values at or below
// rank_tol * max(sigma_max, scale_floor) are discarded. Internal callers pass
// scale_floor = 1 because their matrices are assembled from orthonormal blocks,
// so an all-noise matrix must not be promoted to full rank.
//
inline Mat orth(const Mat &A, const ToleranceConfig &cfg, double scale_floor = 1.0)
{
  const Index m = A.rows();
  if (A.cols() == 0 || m == 0)
    return Mat(m, 0);
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU);
  const RealVec &sv = svd.singularValues();
  const double cutoff = cfg.rank_tol * std::max(sv(0), scale_floor);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff)
    ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of { c : A c = 0 } with the same cutoff rule as orth().
inline Mat null_basis(const Mat &A, const ToleranceConfig &cfg, double scale_floor = 1.0)
{
  const Index p = A.cols();
  if (p == 0)
    return Mat(0, 0);
  if (A.rows() == 0)
    return Mat::Identity(p, p);
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const RealVec &sv = svd.singularValues();
  const double cutoff = cfg.rank_tol * std::max(sv(0), scale_floor);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff)
    ++r;
  return svd.matrixV().rightCols(p - r);
}

inline Index numerical_rank(const Mat &A, const ToleranceConfig &cfg, double scale_floor = 1.0)
{
  return orth(A, cfg, scale_floor).cols();
}

// Columns d..n-1 of the Q factor of an orthonormal n x d basis.
inline Mat orthogonal_complement_basis(const Mat &Q)
{
  const Index n = Q.rows(), d = Q.cols();
  if (d == 0)
    return Mat::Identity(n, n);
  if (d == n)
    return Mat(n, 0);
  Eigen::HouseholderQR<Mat> qr(Q);
  Mat full = qr.householderQ() * Mat::Identity(n, n);
  return full.rightCols(n - d);
}

inline Mat block_diag(const Mat &A, const Mat &B)
{
  Mat out = Mat::Zero(A.rows() + B.rows(), A.cols() + B.cols());
  out.topLeftCorner(A.rows(), A.cols()) = A;
  out.bottomRightCorner(B.rows(), B.cols()) = B;
  return out;
}

inline Mat hcat(const Mat &A, const Mat &B)
{
  if (A.rows() != B.rows())
    throw DimensionMismatch("hcat: row counts differ");
  Mat out(A.rows(), A.cols() + B.cols());
  out << A, B;
  return out;
}

inline Mat vcat(const Mat &A, const Mat &B)
{
  if (A.cols() != B.cols())
    throw DimensionMismatch("vcat: column counts differ");
  Mat out(A.rows() + B.rows(), A.cols());
  out << A, B;
  return out;
}

inline double max_abs(const Mat &A) { return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff(); }

} // namespace detail

//
// A closed subspace of C^n carried by an orthonormal basis (n x d, d = 0 allowed).
// Two subspaces are compared through principal angles, never through their bases.
//
class Subspace
{
public:
  Subspace() = default;

  // The zero subspace of C^ambient.
  explicit Subspace(Index ambient)
    : ambient_(ambient)
    , basis_(ambient, 0)
  {}

  // Adopts `basis` as is; the caller guarantees orthonormal columns.
  static Subspace from_orthonormal_unchecked(Mat basis)
  {
    Subspace s;
    s.ambient_ = basis.rows();
    s.basis_ = std::move(basis);
    return s;
  }

  // Adopts `basis` after checking basis^H basis = I within cfg.angle_tol.
  static Subspace from_orthonormal(Mat basis, const ToleranceConfig &cfg = {})
  {
    const Index d = basis.cols();
    const double defect = detail::max_abs(basis.adjoint() * basis - Mat::Identity(d, d));
    if (!(defect <= cfg.angle_tol))
      throw InvariantViolation("basis columns are not orthonormal (max |B^H B - I| = " +
                               std::to_string(defect) + ")");
    return from_orthonormal_unchecked(std::move(basis));
  }

  static Subspace full(Index n) { return from_orthonormal_unchecked(Mat::Identity(n, n)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  bool is_full() const { return basis_.cols() == ambient_; }
  const Mat &basis() const { return basis_; }

  Mat projector() const { return basis_ * basis_.adjoint(); }
  Vec project(const Vec &x) const { return basis_ * (basis_.adjoint() * x); }

private:
  Index ambient_ = 0;
  Mat basis_;
};

// Column span of `vectors`, rank decided relative to the largest singular value.
inline Subspace span(const Mat &vectors, const ToleranceConfig &cfg = {})
{
  if (vectors.size() == 0)
    return Subspace(vectors.rows());
  Eigen::JacobiSVD<Mat> svd(vectors);
  if (svd.singularValues()(0) == 0.0)
    return Subspace(vectors.rows());
  return Subspace::from_orthonormal_unchecked(detail::orth(vectors, cfg, 0.0));
}

inline Subspace span(const std::vector<Vec> &vectors, Index ambient, const ToleranceConfig &cfg = {})
{
  Mat A(ambient, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j)
  {
    if (vectors[j].size() != ambient)
      throw DimensionMismatch("span: vector " + std::to_string(j) + " has length " +
                              std::to_string(vectors[j].size()) + ", expected " +
                              std::to_string(ambient));
    A.col(static_cast<Index>(j)) = vectors[j];
  }
  return span(A, cfg);
}

// Span of matrices assembled from orthonormal blocks (absolute cutoff for tiny inputs).
inline Subspace span_internal(const Mat &vectors, const ToleranceConfig &cfg)
{
  return Subspace::from_orthonormal_unchecked(detail::orth(vectors, cfg, 1.0));
}

// span{e_first, ..., e_{first+count-1}} in C^n.
inline Subspace coordinate_subspace(Index n, Index first, Index count)
{
  if (first < 0 || count < 0 || first + count > n)
    throw DimensionMismatch("coordinate_subspace: range outside ambient space");
  Mat B = Mat::Zero(n, count);
  for (Index j = 0; j < count; ++j)
    B(first + j, j) = 1.0;
  return Subspace::from_orthonormal_unchecked(std::move(B));
}

inline Subspace complement(const Subspace &U)
{
  return Subspace::from_orthonormal_unchecked(detail::orthogonal_complement_basis(U.basis()));
}

inline void require_same_ambient(const Subspace &U, const Subspace &V, const char *what)
{
  if (U.ambient_dim() != V.ambient_dim())
    throw DimensionMismatch(std::string(what) + ": ambient dimensions differ (" +
                            std::to_string(U.ambient_dim()) + " vs " +
                            std::to_string(V.ambient_dim()) + ")");
}

// Closure of U + V.
inline Subspace join(const Subspace &U, const Subspace &V, const ToleranceConfig &cfg = {})
{
  require_same_ambient(U, V, "join");
  if (U.is_zero())
    return V;
  if (V.is_zero())
    return U;
  return span_internal(detail::hcat(U.basis(), V.basis()), cfg);
}

// U ∩ V, computed as the complement of U^⊥ + V^⊥.
inline Subspace meet(const Subspace &U, const Subspace &V, const ToleranceConfig &cfg = {})
{
  require_same_ambient(U, V, "meet");
  if (U.is_zero())
    return U;
  if (V.is_zero())
    return V;
  return complement(join(complement(U), complement(V), cfg));
}

// (U ⊕ V) inside C^{a+b} for U ⊂ C^a, V ⊂ C^b.
inline Subspace direct_sum(const Subspace &U, const Subspace &V)
{
  return Subspace::from_orthonormal_unchecked(detail::block_diag(U.basis(), V.basis()));
}

// Span of the rows [first, first+count) of U's basis, i.e. the image of U under a coordinate projection.
inline Subspace coordinate_image(const Subspace &U, Index first, Index count, const ToleranceConfig &cfg)
{
  return span_internal(U.basis().middleRows(first, count), cfg);
}

enum class Inclusion
{
  equal,
  subset,   // U ⊊ V
  superset, // V ⊊ U
  incomparable
};

inline const char *to_string(Inclusion inc)
{
  switch (inc)
  {
  case Inclusion::equal:
    return "equal";
  case Inclusion::subset:
    return "subset";
  case Inclusion::superset:
    return "superset";
  case Inclusion::incomparable:
    return "incomparable";
  }
  return "?";
}

struct SubspaceComparison
{
  Inclusion verdict = Inclusion::incomparable;
  double max_angle = 0.0; // largest principal angle between the smaller space and the larger one
};

namespace detail
{
// Sine of the largest angle between a direction of U and the subspace V.
inline double containment_gap(const Subspace &U, const Subspace &V)
{
  if (U.is_zero())
    return 0.0;
  if (V.is_zero())
    return 1.0;
  const Mat residual = U.basis() - V.basis() * (V.basis().adjoint() * U.basis());
  return std::min(1.0, spectral_norm(residual));
}
} // namespace detail

// Principal-angle verdict; sines are used so that tiny angles keep full precision.
inline SubspaceComparison relate(const Subspace &U, const Subspace &V, const ToleranceConfig &cfg = {})
{
  require_same_ambient(U, V, "relate");
  SubspaceComparison out;
  if (U.dim() <= V.dim())
  {
    out.max_angle = std::asin(detail::containment_gap(U, V));
    if (out.max_angle < cfg.angle_tol || U.is_zero())
      out.verdict = U.dim() == V.dim() ? Inclusion::equal : Inclusion::subset;
    else
      out.verdict = Inclusion::incomparable;
  }
  else
  {
    out.max_angle = std::asin(detail::containment_gap(V, U));
    out.verdict = (out.max_angle < cfg.angle_tol || V.is_zero()) ? Inclusion::superset : Inclusion::incomparable;
  }
  return out;
}

inline bool equal(const Subspace &U, const Subspace &V, const ToleranceConfig &cfg = {})
{
  return relate(U, V, cfg).verdict == Inclusion::equal;
}

// inner ⊂ outer (not necessarily strict).
inline bool contains(const Subspace &outer, const Subspace &inner, const ToleranceConfig &cfg = {})
{
  const Inclusion v = relate(inner, outer, cfg).verdict;
  return v == Inclusion::equal || v == Inclusion::subset;
}

inline bool operator==(const Subspace &U, const Subspace &V)
{
  return U.ambient_dim() == V.ambient_dim() && equal(U, V);
}

inline bool orthogonal(const Subspace &U, const Subspace &V, const ToleranceConfig &cfg = {})
{
  require_same_ambient(U, V, "orthogonal");
  return detail::max_abs(U.basis().adjoint() * V.basis()) < cfg.angle_tol;
}

} // namespace linrel
