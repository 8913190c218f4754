// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "linrel/boundary.hpp"
#include "linrel/random.hpp"

namespace linrel::oracle
{

//
// Brute-force verifiers. Every routine here works from raw graph bases with its own
// factorizations and never reuses the intermediate results of the main algorithms.
//

//
// R* straight from the definition: (h, k) in R* iff <k, f> = <h, g> for every basis
// vector (f, g) of R, i.e. the nullspace of [-G^H, F^H] acting on (h, k).
//
inline LinearRelation adjoint_definitional(const LinearRelation &R, double rank_tol = 1e-10)
{
  const Mat F = R.dom_block(), G = R.ran_block();
  const Index n1 = R.n1(), n2 = R.n2(), d = R.dim();
  const Index m = n1 + n2;
  if (d == 0)
    return LinearRelation(n2, n1, Subspace::full(m));
  Mat system(d, m);
  system << -G.adjoint(), F.adjoint();
  Eigen::JacobiSVD<Mat> svd(system, Eigen::ComputeFullV);
  const RealVec &sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol * std::max(sv(0), 1.0))
    ++r;
  return LinearRelation(n2, n1, Subspace::from_orthonormal_unchecked(svd.matrixV().rightCols(m - r)));
}

// Sampled points (g, f) with |f| = 1; {0} for a purely multivalued relation.
inline std::vector<Scalar> numerical_range_hull(const LinearRelation &R, int samples, std::uint64_t seed)
{
  if (!R.is_square())
    throw DimensionMismatch("numerical_range_hull: relation must act in one space");
  const Mat F = R.dom_block(), G = R.ran_block();
  std::vector<Scalar> pts;
  if (R.dim() == 0 || F.norm() == 0.0)
    return {Scalar(0.0)};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s)
  {
    Vec c(R.dim());
    for (Index i = 0; i < c.size(); ++i)
      c(i) = Scalar(normal(rng), normal(rng));
    const Vec f = F * c, g = G * c;
    const double nf = f.norm();
    if (nf < 1e-8 * c.norm())
      continue;
    pts.push_back(f.dot(g) / (nf * nf));
  }
  if (pts.empty())
    pts.push_back(Scalar(0.0));
  return pts;
}

// Selfadjointness through the definitional adjoint.
inline bool selfadjoint_by_definition(const LinearRelation &A, const ToleranceConfig &cfg = {})
{
  return A.is_square() && equal(adjoint_definitional(A, cfg.rank_tol), A, cfg);
}

struct SweepEntry
{
  bool theta_selfadjoint = false;
  bool result_selfadjoint = false;
  bool between = false; // T ⊂ A_Θ ⊂ T*
};

struct SweepReport
{
  std::vector<SweepEntry> entries;
  bool injective = true;         // distinct parameters give distinct extensions
  bool correspondence_ok = true; // A_Θ selfadjoint exactly when Θ is
  bool all_between = true;
  std::size_t distinct_extensions = 0;
};

// Seeded grid of parameters: selfadjoint relations of every multivalued dimension plus a few non-selfadjoint ones.
inline std::vector<LinearRelation> theta_grid(Index g, int count, std::uint64_t seed, int non_selfadjoint = 0)
{
  random::Engine rng(seed);
  std::vector<LinearRelation> out;
  for (int i = 0; i < count; ++i)
  {
    // the purely multivalued parameter is unique, so it appears once
    const Index m = g == 0 ? 0 : (i <= g ? i : i % g);
    out.push_back(random::selfadjoint_relation(g, rng, false, m));
  }
  for (int i = 0; i < non_selfadjoint && g > 0; ++i)
  {
    const Mat T = random::gaussian(g, g, rng);
    out.push_back(from_operator(T));
  }
  return out;
}

inline SweepReport extension_sweep(const BoundaryTriplet &t, const std::vector<LinearRelation> &thetas,
                                   const ToleranceConfig &cfg = {})
{
  SweepReport rep;
  std::vector<LinearRelation> results;
  for (const LinearRelation &theta : thetas)
  {
    SweepEntry e;
    e.theta_selfadjoint = selfadjoint_by_definition(theta, cfg);
    const LinearRelation A = extension_from_boundary(t, theta, cfg);
    e.result_selfadjoint = selfadjoint_by_definition(A, cfg);
    e.between = contains(A, t.symmetric, cfg) && contains(t.star, A, cfg);
    rep.correspondence_ok = rep.correspondence_ok && (e.theta_selfadjoint == e.result_selfadjoint);
    rep.all_between = rep.all_between && e.between;
    rep.entries.push_back(e);
    results.push_back(A);
  }
  for (std::size_t i = 0; i < thetas.size(); ++i)
    for (std::size_t j = i + 1; j < thetas.size(); ++j)
      if (!equal(thetas[i], thetas[j], cfg) && equal(results[i], results[j], cfg))
        rep.injective = false;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < results.size(); ++i)
  {
    bool fresh = true;
    for (std::size_t k : reps)
      fresh = fresh && !equal(results[i], results[k], cfg);
    if (fresh)
      reps.push_back(i);
  }
  rep.distinct_extensions = reps.size();
  return rep;
}

} // namespace linrel::oracle
