// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace linrel
{

using Scalar = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr const char *kVersion = "0.1.0";

//
// Errors. Every failure the library reports derives from Error; the CLI maps
// the subclasses onto exit codes.
//
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Shapes or ambient dimensions that do not fit together.
class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold for its input.
class PreconditionViolated : public Error
{
public:
  using Error::Error;
};

// lambda lies in the spectrum: (A - lambda)^{-1} is not an everywhere defined operator.
class ResolventUndefined : public PreconditionViolated
{
public:
  using PreconditionViolated::PreconditionViolated;
};

// Evaluation of a Weyl function or gamma-field at a singular point.
class SingularPoint : public PreconditionViolated
{
public:
  using PreconditionViolated::PreconditionViolated;
};

// A value handed in claims a structural property (e.g. orthonormal columns) it lacks.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

//
// Numerical thresholds shared by all verdicts.
//
//   rank_tol  : singular values below rank_tol * scale count as zero
//   angle_tol : largest principal angle (radians) still treated as "same subspace";
//               also the bound for entries that must vanish (cross-Gram, Hermitian defect)
//   psd_floor : smallest eigenvalue still accepted as nonnegative
//
struct ToleranceConfig
{
  double rank_tol = 1e-10;
  double angle_tol = 1e-8;
  double psd_floor = -1e-10;

  void validate() const
  {
    if (!std::isfinite(rank_tol) || !std::isfinite(angle_tol) || !std::isfinite(psd_floor))
      throw PreconditionViolated("ToleranceConfig: all tolerances must be finite");
    if (!(rank_tol > 0.0))
      throw PreconditionViolated("ToleranceConfig: rank_tol must be positive");
    if (angle_tol < 0.0)
      throw PreconditionViolated("ToleranceConfig: angle_tol must be nonnegative");
    if (psd_floor > 0.0)
      throw PreconditionViolated("ToleranceConfig: psd_floor must be <= 0");
  }
};

inline double infinity() { return std::numeric_limits<double>::infinity(); }
inline double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

} // namespace linrel
