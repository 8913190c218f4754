// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "linrel/relation.hpp"

namespace linrel
{

namespace detail
{
// Columns of a relation in H = H1 + H2 given by its four coordinate blocks (h1, h2, k1, k2).
struct QuadBuilder
{
  Index n1, n2;
  std::vector<Mat> h1, h2, k1, k2;

  void add(const Mat &a, const Mat &b, const Mat &c, const Mat &d)
  {
    h1.push_back(a);
    h2.push_back(b);
    k1.push_back(c);
    k2.push_back(d);
  }

  // Adds the columns of X placed into the given slot (0 = h1, 1 = h2, 2 = k1, 3 = k2), zeros elsewhere.
  void put(int slot, const Mat &X)
  {
    const Index p = X.cols();
    Mat z1 = Mat::Zero(n1, p), z2 = Mat::Zero(n2, p);
    add(slot == 0 ? X : z1, slot == 1 ? X : z2, slot == 2 ? X : z1, slot == 3 ? X : z2);
  }

  Mat assemble() const
  {
    Index cols = 0;
    for (const Mat &m : h1)
      cols += m.cols();
    Mat out(2 * (n1 + n2), cols);
    Index c = 0;
    for (std::size_t i = 0; i < h1.size(); ++i)
    {
      const Index p = h1[i].cols();
      out.block(0, c, n1, p) = h1[i];
      out.block(n1, c, n2, p) = h2[i];
      out.block(n1 + n2, c, n1, p) = k1[i];
      out.block(2 * n1 + n2, c, n2, p) = k2[i];
      c += p;
    }
    return out;
  }

  // Blocks with mutually orthogonal supports: the concatenation is already orthonormal.
  LinearRelation orthogonal() const
  {
    return LinearRelation(n1 + n2, n1 + n2, Subspace::from_orthonormal_unchecked(assemble()));
  }

  LinearRelation spanned(const ToleranceConfig &cfg) const
  {
    return LinearRelation(n1 + n2, n1 + n2, span_internal(assemble(), cfg));
  }
};
} // namespace detail

//
// The lift S of R together with every extension built from it. All members come from
// their closed product/graph formulas; nothing here calls adjoint() on a lifted relation.
//
struct LiftBundle
{
  LinearRelation R, R_star;
  RelationParts R_parts, R_star_parts; // R_star_parts: dom/ker in H2, ran/mul in H1

  LinearRelation S, S_star;
  LinearRelation H, K;
  LinearRelation S_F, S_K;
  LinearRelation S0, S0_star;
  LinearRelation S_tilde, S_tilde_star;
  LinearRelation S_tilde_K, S_tilde0, S_tilde0_star;

  Subspace G;       // N_{-1}(S*) = R^⊥
  Subspace G0;      // mul R* + ker R*
  Subspace G_tilde; // J (R*)_s
  Subspace G_tilde0; // {0} + ker R*

  Index n1() const { return R.n1(); }
  Index n2() const { return R.n2(); }
  Index n() const { return R.n1() + R.n2(); }
};

inline LiftBundle lift(const LinearRelation &R, const ToleranceConfig &cfg = {})
{
  using detail::QuadBuilder;
  LiftBundle b;
  const Index n1 = R.n1(), n2 = R.n2();
  b.R = R;
  b.R_star = adjoint(R);
  b.R_parts = parts(R, cfg);
  b.R_star_parts = parts(b.R_star, cfg);

  const Mat F = R.dom_block(), Gm = R.ran_block();
  const Mat Fs = b.R_star.dom_block(), Gs = b.R_star.ran_block(); // Fs in H2, Gs in H1
  const Mat I1 = Mat::Identity(n1, n1), I2 = Mat::Identity(n2, n2);
  const Mat &domR = b.R_parts.dom.basis();
  const Mat &ranR = b.R_parts.ran.basis();
  const Mat &mulRs = b.R_star_parts.mul.basis();
  const Mat &kerRs = b.R_star_parts.ker.basis();

  auto fresh = [&] { return QuadBuilder{n1, n2, {}, {}, {}, {}}; };

  {
    QuadBuilder q = fresh();
    q.add(F, Mat::Zero(n2, F.cols()), Mat::Zero(n1, F.cols()), Gm);
    b.S = q.orthogonal();
    q.put(2, mulRs);
    b.S_tilde = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, I1);
    q.add(Mat::Zero(n1, Fs.cols()), Fs, Gs, Mat::Zero(n2, Fs.cols()));
    q.put(3, I2);
    b.S_star = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.add(Mat::Zero(n1, Fs.cols()), Fs, Gs, Mat::Zero(n2, Fs.cols()));
    q.put(3, I2);
    b.S_tilde_star = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, I1);
    q.put(3, I2);
    b.H = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.add(F, Mat::Zero(n2, F.cols()), Mat::Zero(n1, F.cols()), Gm);
    q.add(Mat::Zero(n1, Fs.cols()), Fs, Gs, Mat::Zero(n2, Fs.cols()));
    b.K = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.put(2, mulRs);
    q.put(3, I2);
    b.S_F = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, I1);
    q.put(1, kerRs);
    q.put(3, ranR);
    b.S_K = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.put(3, ranR);
    b.S0 = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, I1);
    q.put(1, kerRs);
    q.put(2, mulRs);
    q.put(3, I2);
    b.S0_star = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.put(1, kerRs);
    q.put(2, mulRs);
    q.put(3, ranR);
    b.S_tilde_K = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.put(2, mulRs);
    q.put(3, ranR);
    b.S_tilde0 = q.orthogonal();
  }
  {
    QuadBuilder q = fresh();
    q.put(0, domR);
    q.put(1, kerRs);
    q.put(2, mulRs);
    q.put(3, I2);
    b.S_tilde0_star = q.orthogonal();
  }

  b.G = complement(R.graph());
  b.G0 = direct_sum(b.R_star_parts.mul, b.R_star_parts.ker);
  {
    const LinearRelation Rs = operator_part(b.R_star, cfg); // H2 -> H1
    b.G_tilde = span_internal(detail::vcat(-Rs.ran_block(), Rs.dom_block()), cfg);
  }
  b.G_tilde0 = direct_sum(Subspace(n1), b.R_star_parts.ker);
  return b;
}

// S_F = {(h, k) in S* : h in dom S}; requires dom S ⊥ ran S.
inline LinearRelation friedrichs_generic(const LinearRelation &S, const ToleranceConfig &cfg = {})
{
  require_square(S, "friedrichs_generic");
  if (detail::max_abs(S.dom_block().adjoint() * S.ran_block()) >= cfg.angle_tol)
    throw PreconditionViolated("friedrichs_generic: dom S is not orthogonal to ran S");
  const Index n = S.n1();
  const RelationParts p = parts(S, cfg);
  return intersection(adjoint(S), product(p.dom, Subspace::full(n)), cfg);
}

// S_K = {(h, k) in S* : k in ran S}; requires dom S ⊥ ran S.
inline LinearRelation krein_generic(const LinearRelation &S, const ToleranceConfig &cfg = {})
{
  require_square(S, "krein_generic");
  if (detail::max_abs(S.dom_block().adjoint() * S.ran_block()) >= cfg.angle_tol)
    throw PreconditionViolated("krein_generic: dom S is not orthogonal to ran S");
  const Index n = S.n1();
  const RelationParts p = parts(S, cfg);
  return intersection(adjoint(S), product(Subspace::full(n), p.ran), cfg);
}

inline bool is_selfadjoint(const LinearRelation &A, const ToleranceConfig &cfg = {})
{
  return A.is_square() && equal(adjoint(A), A, cfg);
}

//
// Selfadjoint extension of S0 for a selfadjoint Θ in G0, given in coordinates of
// bundle.G0.basis(): the zero operator on dom R, Θ on G0 and the multivalued part
// {0} x (0 + ran R).
//
inline LinearRelation nonneg_extension(const LiftBundle &b, const LinearRelation &theta,
                                       const ToleranceConfig &cfg = {})
{
  const Index g0 = b.G0.dim();
  if (theta.n1() != g0 || theta.n2() != g0)
    throw DimensionMismatch("nonneg_extension: parameter must act in G0 (dimension " + std::to_string(g0) + ")");
  if (!is_selfadjoint(theta, cfg))
    throw PreconditionViolated("nonneg_extension: parameter is not selfadjoint in G0");
  const Index n1 = b.n1(), n2 = b.n2(), n = b.n();
  const Mat &B0 = b.G0.basis();
  detail::QuadBuilder q{n1, n2, {}, {}, {}, {}};
  q.put(0, b.R_parts.dom.basis());
  q.put(3, b.R_parts.ran.basis());
  Mat graph = q.assemble();
  Mat theta_cols(2 * n, theta.dim());
  theta_cols << B0 * theta.dom_block(), B0 * theta.ran_block();
  return LinearRelation(n, n, Subspace::from_orthonormal_unchecked(detail::hcat(graph, theta_cols)));
}

namespace detail
{
inline void require_nonneg_extension(const LinearRelation &A, const LiftBundle &b, const ToleranceConfig &cfg,
                                     const char *what)
{
  if (A.n1() != b.n() || A.n2() != b.n())
    throw DimensionMismatch(std::string(what) + ": relation does not act in H1 + H2");
  if (!is_selfadjoint(A, cfg))
    throw PreconditionViolated(std::string(what) + ": relation is not selfadjoint");
  if (!is_nonnegative(A, cfg))
    throw PreconditionViolated(std::string(what) + ": relation is not nonnegative");
  if (!contains(A, b.S, cfg))
    throw PreconditionViolated(std::string(what) + ": relation does not extend S");
}
} // namespace detail

// Extremal nonnegative selfadjoint extension: W(A) = {0}, decided by the cross-Gram matrix.
inline bool is_extremal(const LinearRelation &A, const LiftBundle &b, const ToleranceConfig &cfg = {})
{
  detail::require_nonneg_extension(A, b, cfg, "is_extremal");
  return detail::max_abs(A.dom_block().adjoint() * A.ran_block()) < cfg.angle_tol;
}

struct KreinOrder
{
  bool holds = false;
  double lower_gap_min_eig = 0.0; // min eig of (A+1)^{-1} - (S_F+1)^{-1}
  double upper_gap_min_eig = 0.0; // min eig of (S_K+1)^{-1} - (A+1)^{-1}
  double hermitian_defect = 0.0;
};

inline KreinOrder krein_order_check(const LinearRelation &A, const LiftBundle &b, const ToleranceConfig &cfg = {})
{
  detail::require_nonneg_extension(A, b, cfg, "krein_order_check");
  const Mat rF = resolvent(b.S_F, -1.0, cfg);
  const Mat rA = resolvent(A, -1.0, cfg);
  const Mat rK = resolvent(b.S_K, -1.0, cfg);
  const Mat lower = rA - rF, upper = rK - rA;
  KreinOrder out;
  out.hermitian_defect = std::max(detail::hermitian_defect(lower), detail::hermitian_defect(upper));
  out.lower_gap_min_eig = detail::min_eigenvalue(detail::hermitian_part(lower));
  out.upper_gap_min_eig = detail::min_eigenvalue(detail::hermitian_part(upper));
  if (lower.rows() == 0)
    out.lower_gap_min_eig = out.upper_gap_min_eig = 0.0;
  out.holds = out.hermitian_defect < cfg.angle_tol && out.lower_gap_min_eig >= cfg.psd_floor &&
              out.upper_gap_min_eig >= cfg.psd_floor;
  return out;
}

// Θ_L = L x (G0 ⊖ L), in coordinates of G0.
inline LinearRelation extremal_parameter(const Subspace &L)
{
  return product(L, complement(L));
}

inline LinearRelation extremal_family(const LiftBundle &b, const Subspace &L, const ToleranceConfig &cfg = {})
{
  if (L.ambient_dim() != b.G0.dim())
    throw DimensionMismatch("extremal_family: subspace must live in G0 coordinates");
  return nonneg_extension(b, extremal_parameter(L), cfg);
}

// Θ = dom Θ x (dom Θ)^⊥.
inline bool is_extremal_parameter(const LinearRelation &theta, const ToleranceConfig &cfg = {})
{
  require_square(theta, "is_extremal_parameter");
  return equal(theta, extremal_parameter(parts(theta, cfg).dom), cfg);
}

struct S0AdjointCheck
{
  bool matches_closed_form = false; // adjoint(S0) against (H1 + ker R*) x (mul R* + H2)
  bool is_sum_of_extremes = false;  // adjoint(S0) = S_F +̂ S_K
  bool transversal = false;         // S* = H +̂ K
  bool all() const { return matches_closed_form && is_sum_of_extremes && transversal; }
};

inline S0AdjointCheck s0_adjoint_decomposition_check(const LiftBundle &b, const ToleranceConfig &cfg = {})
{
  S0AdjointCheck out;
  const LinearRelation s0_star = adjoint(b.S0);
  out.matches_closed_form = equal(s0_star, b.S0_star, cfg);
  out.is_sum_of_extremes = equal(s0_star, componentwise_sum(b.S_F, b.S_K, cfg), cfg);
  out.transversal = equal(adjoint(b.S), componentwise_sum(b.H, b.K, cfg), cfg);
  return out;
}

} // namespace linrel
