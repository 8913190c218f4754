// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <future>
#include <random>
#include <vector>

#include "linrel/extension.hpp"

namespace linrel
{

enum class TripletKind
{
  main,     // for S*, boundary space G
  basic,    // for S0*, boundary space G0
  basic_op, // for ((S0)_op)* inside H1 + ker R*, boundary space G0
  tilde     // for (S~)*, boundary space G~
};

inline const char *to_string(TripletKind k)
{
  switch (k)
  {
  case TripletKind::main:
    return "main";
  case TripletKind::basic:
    return "basic";
  case TripletKind::basic_op:
    return "basic_op";
  case TripletKind::tilde:
    return "tilde";
  }
  return "?";
}

//
// Boundary triplet {G, Γ0, Γ1} for star = T*. Γ0 and Γ1 are g x d matrices acting on the
// coefficients of star.graph().basis(); boundary values are coordinates in boundary_space.basis().
//
struct BoundaryTriplet
{
  TripletKind kind = TripletKind::main;
  LinearRelation symmetric;
  LinearRelation star;
  Subspace boundary_space;
  Mat gamma0, gamma1;
  bool kernel_gamma0_is_friedrichs = false;

  Index g() const { return boundary_space.dim(); }
  Index d() const { return star.dim(); }
  bool degenerate() const { return g() == 0; }
};

namespace detail
{
// (-k1, h2) and (h1, k2) evaluated on the columns of a graph basis of a relation in H1 + H2.
inline Mat flip_pair(const Mat &W, Index n1, Index n2)
{
  const Index n = n1 + n2;
  return vcat(-W.block(n, 0, n1, W.cols()), W.block(n1, 0, n2, W.cols()));
}

inline Mat diag_pair(const Mat &W, Index n1, Index n2)
{
  const Index n = n1 + n2;
  return vcat(W.topRows(n1), W.block(n + n1, 0, n2, W.cols()));
}
} // namespace detail

inline BoundaryTriplet triplet_main(const LiftBundle &b)
{
  BoundaryTriplet t;
  t.kind = TripletKind::main;
  t.symmetric = b.S;
  t.star = b.S_star;
  t.boundary_space = b.G;
  const Mat &W = t.star.graph().basis();
  const Mat &B = b.G.basis();
  t.gamma0 = B.adjoint() * detail::flip_pair(W, b.n1(), b.n2());
  t.gamma1 = B.adjoint() * detail::diag_pair(W, b.n1(), b.n2());
  t.kernel_gamma0_is_friedrichs = b.R_parts.dom.is_full();
  return t;
}

inline BoundaryTriplet triplet_basic(const LiftBundle &b)
{
  BoundaryTriplet t;
  t.kind = TripletKind::basic;
  t.symmetric = b.S0;
  t.star = b.S0_star;
  t.boundary_space = b.G0;
  const Mat &B = b.G0.basis();
  t.gamma0 = B.adjoint() * t.star.dom_block();
  t.gamma1 = B.adjoint() * t.star.ran_block();
  t.kernel_gamma0_is_friedrichs = true;
  return t;
}

// Restriction to the operator part of S0, viewed inside H0 = H1 + ker R* (embedded in H).
inline BoundaryTriplet triplet_basic_op(const LiftBundle &b)
{
  BoundaryTriplet t;
  t.kind = TripletKind::basic_op;
  const Subspace dom0 = direct_sum(b.R_parts.dom, Subspace(b.n2()));
  t.symmetric = product(dom0, Subspace(b.n()));
  t.star = product(direct_sum(Subspace::full(b.n1()), b.R_star_parts.ker), b.G0);
  t.boundary_space = b.G0;
  const Mat &B = b.G0.basis();
  t.gamma0 = B.adjoint() * t.star.dom_block();
  t.gamma1 = B.adjoint() * t.star.ran_block();
  t.kernel_gamma0_is_friedrichs = true;
  return t;
}

inline BoundaryTriplet triplet_tilde(const LiftBundle &b)
{
  BoundaryTriplet t;
  t.kind = TripletKind::tilde;
  t.symmetric = b.S_tilde;
  t.star = b.S_tilde_star;
  t.boundary_space = b.G_tilde;
  const Mat &W = t.star.graph().basis();
  const Mat &B = b.G_tilde.basis();
  t.gamma0 = B.adjoint() * detail::flip_pair(W, b.n1(), b.n2());
  t.gamma1 = B.adjoint() * detail::diag_pair(W, b.n1(), b.n2());
  t.kernel_gamma0_is_friedrichs = true;
  return t;
}

inline BoundaryTriplet make_triplet(const LiftBundle &b, TripletKind kind)
{
  switch (kind)
  {
  case TripletKind::main:
    return triplet_main(b);
  case TripletKind::basic:
    return triplet_basic(b);
  case TripletKind::basic_op:
    return triplet_basic_op(b);
  case TripletKind::tilde:
    return triplet_tilde(b);
  }
  throw PreconditionViolated("make_triplet: unknown kind");
}

// Green identity on all pairs of basis vectors at once:
// W_top^H W_bot - W_bot^H W_top = Γ0^H Γ1 - Γ1^H Γ0.
inline double green_residual(const BoundaryTriplet &t)
{
  const Mat top = t.star.dom_block(), bot = t.star.ran_block();
  const Mat lhs = top.adjoint() * bot - bot.adjoint() * top;
  const Mat rhs = t.gamma0.adjoint() * t.gamma1 - t.gamma1.adjoint() * t.gamma0;
  return detail::max_abs(lhs - rhs);
}

// Green identity evaluated on `pairs` random pairs of unit-coefficient graph vectors.
inline double green_residual_sampled(const BoundaryTriplet &t, int pairs, std::mt19937_64 &rng)
{
  const Index d = t.d();
  if (d == 0)
    return 0.0;
  std::normal_distribution<double> normal;
  auto draw = [&] {
    Vec c(d);
    for (Index i = 0; i < d; ++i)
      c(i) = Scalar(normal(rng), normal(rng));
    return Vec(c / c.norm());
  };
  const Mat top = t.star.dom_block(), bot = t.star.ran_block();
  double worst = 0.0;
  for (int s = 0; s < pairs; ++s)
  {
    const Vec a = draw(), c = draw();
    const Vec f = top * a, fp = bot * a, h = top * c, hp = bot * c;
    const Scalar lhs = h.dot(fp) - hp.dot(f); // <f', h> - <f, h'>
    const Vec g0f = t.gamma0 * a, g1f = t.gamma1 * a, g0h = t.gamma0 * c, g1h = t.gamma1 * c;
    const Scalar rhs = g0h.dot(g1f) - g1h.dot(g0f); // <Γ1 f, Γ0 h> - <Γ0 f, Γ1 h>
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

inline Index boundary_rank(const BoundaryTriplet &t, const ToleranceConfig &cfg = {})
{
  return detail::numerical_rank(detail::vcat(t.gamma0, t.gamma1), cfg);
}

inline bool is_surjective(const BoundaryTriplet &t, const ToleranceConfig &cfg = {})
{
  return boundary_rank(t, cfg) == 2 * t.g();
}

namespace detail
{
inline LinearRelation star_subrelation(const BoundaryTriplet &t, const Mat &coeff)
{
  const Index n = t.star.n1();
  return LinearRelation(n, n, Subspace::from_orthonormal_unchecked(t.star.graph().basis() * coeff));
}
} // namespace detail

inline LinearRelation kernel_gamma0(const BoundaryTriplet &t, const ToleranceConfig &cfg = {})
{
  return detail::star_subrelation(t, detail::null_basis(t.gamma0, cfg));
}

inline LinearRelation kernel_gamma1(const BoundaryTriplet &t, const ToleranceConfig &cfg = {})
{
  return detail::star_subrelation(t, detail::null_basis(t.gamma1, cfg));
}

// A_Θ = {f in T* : (Γ0 f, Γ1 f) in Θ} for a relation Θ in the boundary space (coordinates).
inline LinearRelation extension_from_boundary(const BoundaryTriplet &t, const LinearRelation &theta,
                                              const ToleranceConfig &cfg = {})
{
  if (theta.n1() != t.g() || theta.n2() != t.g())
    throw DimensionMismatch("extension_from_boundary: parameter must act in C^" + std::to_string(t.g()));
  const Mat P = complement(theta.graph()).basis();
  const Mat constraint = P.adjoint() * detail::vcat(t.gamma0, t.gamma1);
  return detail::star_subrelation(t, detail::null_basis(constraint, cfg));
}

inline constexpr double kSingularRadius = 1e-6;

struct WeylValue
{
  Scalar lambda;
  Mat matrix;
};

namespace detail
{
inline void require_regular(Scalar lambda, const char *what)
{
  if (std::abs(lambda) < kSingularRadius)
    throw SingularPoint(std::string(what) + ": lambda lies within the singular disk around 0");
}

struct DefectSolve
{
  Mat coeff; // d x g, spans the defect pairs in star coordinates
  Mat X0;    // Γ0 coeff, invertible
};

inline DefectSolve solve_defect(const BoundaryTriplet &t, Scalar lambda, const ToleranceConfig &cfg)
{
  const double scale = std::max(1.0, std::abs(lambda));
  const Mat pencil = (t.star.ran_block() - lambda * t.star.dom_block()) / scale;
  DefectSolve out;
  out.coeff = null_basis(pencil, cfg);
  out.X0 = t.gamma0 * out.coeff;
  if (out.coeff.cols() != t.g() || numerical_rank(out.X0, cfg) != t.g())
    throw SingularPoint("weyl: Γ0 is not invertible on the defect subspace at this lambda");
  return out;
}
} // namespace detail

// Generic Weyl function: M(λ) Γ0 f = Γ1 f on the defect pairs N̂_λ(T*).
inline WeylValue weyl(const BoundaryTriplet &t, Scalar lambda, const ToleranceConfig &cfg = {})
{
  detail::require_regular(lambda, "weyl");
  if (t.degenerate())
    return {lambda, Mat(0, 0)};
  const detail::DefectSolve ds = detail::solve_defect(t, lambda, cfg);
  const Mat X1 = t.gamma1 * ds.coeff;
  // M = X1 X0^{-1}
  const Mat M = ds.X0.adjoint().fullPivLu().solve(X1.adjoint()).adjoint();
  return {lambda, M};
}

// γ(λ): boundary coordinates -> N_λ(T*) in H.
inline Mat gamma_field(const BoundaryTriplet &t, Scalar lambda, const ToleranceConfig &cfg = {})
{
  detail::require_regular(lambda, "gamma_field");
  const Index n = t.star.n1();
  if (t.degenerate())
    return Mat(n, 0);
  const detail::DefectSolve ds = detail::solve_defect(t, lambda, cfg);
  const Mat N = t.star.dom_block() * ds.coeff;
  return ds.X0.adjoint().fullPivLu().solve(N.adjoint()).adjoint();
}

// Closed forms: Q diag(-1/λ, λ) restricted to the boundary space for main and tilde, λ I otherwise.
inline WeylValue weyl_closed_form(const BoundaryTriplet &t, Scalar lambda, Index n1)
{
  detail::require_regular(lambda, "weyl_closed_form");
  const Index g = t.g();
  if (t.kind == TripletKind::basic || t.kind == TripletKind::basic_op)
    return {lambda, lambda * Mat::Identity(g, g)};
  const Mat &B = t.boundary_space.basis();
  const Index n = B.rows();
  Vec diag(n);
  diag.head(n1).setConstant(-1.0 / lambda);
  diag.tail(n - n1).setConstant(lambda);
  return {lambda, B.adjoint() * diag.asDiagonal() * B};
}

// Closed-form γ(λ) = diag(-1/λ, 1) on G for main and tilde, the inclusion of G0 otherwise.
inline Mat gamma_closed_form(const BoundaryTriplet &t, Scalar lambda, Index n1)
{
  detail::require_regular(lambda, "gamma_closed_form");
  const Mat &B = t.boundary_space.basis();
  if (t.kind == TripletKind::basic || t.kind == TripletKind::basic_op)
    return B;
  const Index n = B.rows();
  Vec diag(n);
  diag.head(n1).setConstant(-1.0 / lambda);
  diag.tail(n - n1).setConstant(1.0);
  return diag.asDiagonal() * B;
}

struct WeylPoint
{
  Scalar lambda;
  Mat matrix;            // empty when singular
  bool singular = false;
};

// Weyl function over a grid, evaluated concurrently; output order follows input order.
inline std::vector<WeylPoint> weyl_grid(const BoundaryTriplet &t, const std::vector<Scalar> &lambdas,
                                        const ToleranceConfig &cfg = {})
{
  std::vector<std::future<WeylPoint>> jobs;
  jobs.reserve(lambdas.size());
  for (const Scalar lam : lambdas)
    jobs.push_back(std::async(std::launch::async, [&t, lam, cfg] {
      WeylPoint p;
      p.lambda = lam;
      try
      {
        p.matrix = weyl(t, lam, cfg).matrix;
      }
      catch (const SingularPoint &)
      {
        p.singular = true;
      }
      return p;
    }));
  std::vector<WeylPoint> out;
  out.reserve(jobs.size());
  for (auto &j : jobs)
    out.push_back(j.get());
  return out;
}

struct SemiboundVerdict
{
  bool lhs = false; // x <= A_Θ
  bool rhs = false; // M(x) <= Θ
  double lower_bound = 0.0;  // m(A_Θ)
  double rhs_min_eig = 0.0;  // min eig of the form of Θ - M(x)
};

//
// Both sides of  x <= A_Θ  <=>  M(x) <= Θ  for x < 0. The triplet must have ker Γ0 = S_F.
// Θ - M(x) = {(a, b - M a) : (a, b) in Θ} is nonnegative iff F^H (G - M F) is Hermitian PSD
// for a graph basis [F; G] of Θ.
//
inline SemiboundVerdict semibound_criterion(const BoundaryTriplet &t, const LinearRelation &theta, double x,
                                            const ToleranceConfig &cfg = {})
{
  if (!(x < 0.0))
    throw PreconditionViolated("semibound_criterion: x must be negative");
  if (!t.kernel_gamma0_is_friedrichs)
    throw PreconditionViolated("semibound_criterion: ker Γ0 is not the Friedrichs extension for this triplet");
  if (!is_selfadjoint(theta, cfg))
    throw PreconditionViolated("semibound_criterion: parameter is not selfadjoint");
  SemiboundVerdict v;
  const LinearRelation A = extension_from_boundary(t, theta, cfg);
  v.lower_bound = lower_bound(A, cfg);
  const double scale = std::max(1.0, std::abs(x));
  v.lhs = v.lower_bound - x >= cfg.psd_floor * scale;
  const Mat M = weyl(t, x, cfg).matrix;
  const Mat F = theta.dom_block();
  const Mat form = F.adjoint() * (theta.ran_block() - M * F);
  v.rhs_min_eig = detail::min_eigenvalue(detail::hermitian_part(form));
  if (form.rows() == 0)
    v.rhs_min_eig = 0.0;
  v.rhs = detail::hermitian_defect(form) < cfg.angle_tol * scale && v.rhs_min_eig >= cfg.psd_floor * scale;
  return v;
}

struct AlternativeRow
{
  double c = 0.0;
  double lower_bound = 0.0;    // m(A_Θ) from the generic pipeline
  double closed_form = 0.0;    // [-δ(1+c²) - sqrt(δ²(1+c²)² + 4c²)] / 2
  double operator_norm = 0.0;  // |(R*)_s|
  double bound_x = 0.0;        // point satisfying the part (i) hypotheses
  bool bound_holds = false;    // bound_x <= A_Θ
};

struct AlternativeReport
{
  double delta = 0.0;
  std::vector<AlternativeRow> rows;
  double max_abs_error = 0.0;
  bool strictly_decreasing = false;
  bool part_i_holds = false;
};

inline double alternative_closed_form(double c, double delta)
{
  const double a = delta * (1.0 + c * c);
  return (-a - std::sqrt(a * a + 4.0 * c * c)) / 2.0;
}

//
// R_c = graph of the scalar c, Θ = -δ on G~ of the tilde triplet. Every finite member is
// semibounded; the family diverges as c grows, which is how the unbounded alternative shows up.
//
inline AlternativeRow alternative_row(double c, double delta, const ToleranceConfig &cfg = {})
{
  AlternativeRow row;
  row.c = c;
  const LiftBundle b = lift(from_operator(Mat::Constant(1, 1, c), cfg), cfg);
  const BoundaryTriplet t = triplet_tilde(b);
  const LinearRelation theta = scalar_operator(t.g(), -delta, cfg);
  const LinearRelation A = extension_from_boundary(t, theta, cfg);
  row.lower_bound = lower_bound(A, cfg);
  row.closed_form = alternative_closed_form(c, delta);
  row.operator_norm = operator_part_norm(b.R_star, cfg);
  const double M2 = row.operator_norm * row.operator_norm;
  const double gamma = -delta;
  row.bound_x = std::min({-1.0, -M2, (M2 + 1.0) * gamma - 1.0}) - 1.0;
  row.bound_holds = row.lower_bound >= row.bound_x;
  return row;
}

inline AlternativeReport alternative_experiment(const std::vector<double> &c_list, double delta,
                                                const ToleranceConfig &cfg = {})
{
  if (c_list.empty())
    throw PreconditionViolated("alternative_experiment: empty c list");
  if (!(delta > 0.0))
    throw PreconditionViolated("alternative_experiment: delta must be positive");
  for (std::size_t i = 0; i < c_list.size(); ++i)
    if (!(c_list[i] >= 0.0) || (i > 0 && !(c_list[i] > c_list[i - 1])))
      throw PreconditionViolated("alternative_experiment: c values must be nonnegative and increasing");
  std::vector<std::future<AlternativeRow>> jobs;
  for (const double c : c_list)
    jobs.push_back(std::async(std::launch::async, [c, delta, cfg] { return alternative_row(c, delta, cfg); }));
  AlternativeReport rep;
  rep.delta = delta;
  rep.strictly_decreasing = true;
  rep.part_i_holds = true;
  for (auto &j : jobs)
  {
    rep.rows.push_back(j.get());
    const AlternativeRow &r = rep.rows.back();
    rep.max_abs_error = std::max(rep.max_abs_error, std::abs(r.lower_bound - r.closed_form));
    rep.part_i_holds = rep.part_i_holds && r.bound_holds;
    if (rep.rows.size() > 1 && !(r.lower_bound < rep.rows[rep.rows.size() - 2].lower_bound))
      rep.strictly_decreasing = false;
  }
  return rep;
}

} // namespace linrel
