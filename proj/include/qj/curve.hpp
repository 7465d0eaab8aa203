#pragma once

// Smooth plane quartics X = {F = 0} with a hyper-flex at inf = (0:1:0)
// whose tangent is z = 0, and intersection divisors X . C.

#include <cstdint>
#include <vector>

#include "qj/geometry.hpp"

namespace qj {

struct SmoothnessCertificate {
  /// gcd(Res_y(f, f_x), Res_y(f, f_y)) was 1.
  bool resultants_coprime = false;
  /// Common roots of the two resultants that were inspected fiber by fiber.
  int refined_fibers = 0;
  /// Largest k for which every point of X(F_{p^k}) was checked directly.
  int exhaustive_degree = 0;
};

struct ValidateOptions {
  int exhaustive_degree = 3;
  std::uint64_t exhaustive_budget = 1'000'000;  // max p^k swept
};

class CurveContext {
 public:
  const Form& F() const { return F_; }
  const Form& Fx() const { return grad_[0]; }
  const Form& Fy() const { return grad_[1]; }
  const Form& Fz() const { return grad_[2]; }
  const Field& field() const { return F_.field(); }
  const SmoothnessCertificate& certificate() const { return cert_; }

  /// f(x, y) = F(x, y, 1) as coefficients of y^0..y^3 (each in F_p[x]);
  /// the y^3 coefficient is the nonzero constant kappa().
  const std::vector<Poly>& affine_by_y() const { return affine_; }
  Fe kappa() const { return affine_[3][0]; }

 private:
  friend CurveContext curve_validate(const Form& raw, const ValidateOptions& opts);
  Form F_;
  Form grad_[3];
  std::vector<Poly> affine_;
  SmoothnessCertificate cert_;
};

/// Checks the hyper-flex normalization and smoothness of the quartic.
/// Errors: NoHyperflexNormalization, SingularCurve.
CurveContext curve_validate(const Form& raw, const ValidateOptions& opts = {});

/// x^4 + y^3 z + z^4.
Form reference_quartic(const Field& f);

/// A point of X given by a local parametrization t -> (x(t) : y(t) : z(t)).
struct LocalParam {
  Series x, y, z;
};

/// Local parametrization of X at P with `terms` coefficients. At affine
/// points either x - x0 = t or y - y0 = t (whichever is a local parameter);
/// at inf, x = t in the chart y = 1. Errors: NotOnCurve.
LocalParam local_param(const CurveContext& ctx, const PlanePoint& P, int terms);

/// Intersection multiplicity I_P(X, C), computed by local expansion up to
/// max_order. Returns max_order when the expansion vanishes to that order.
int local_intersection(const CurveContext& ctx, const PlanePoint& P, const Form& C, int max_order);

/// The linear conditions on a form sum_j u_j basis_j (+ fixed) meaning that
/// it meets X at P with multiplicity >= m: coefficient rows for t^0..t^{m-1}.
/// rhs receives the negated coefficients of `fixed` (if given).
struct ContactRows {
  std::vector<std::vector<Fe>> rows;
  std::vector<Fe> rhs;
};
ContactRows contact_rows(const CurveContext& ctx, const PlanePoint& P, int m, const std::vector<Form>& basis,
                         const Form* fixed = nullptr);

/// X . C, with every point in the smallest common field. Computed from the
/// norm of C(x, y, 1) in F_p[x][y]/(f), fibre gcds in y, local expansions for
/// clustered fibres and at inf. Errors: ComponentShared, DegreeOverflow.
Divisor intersection_divisor(const CurveContext& ctx, const Form& C, int bound = kDefaultSplittingBound);

/// X . C - known. Only fibres not exhausted by `known` are split, so the
/// field stays as small as the residual allows. Throws InternalConsistency
/// unless known <= X . C.
Divisor residual_intersection(const CurveContext& ctx, const Form& C, const Divisor& known,
                              int bound = kDefaultSplittingBound);

/// The line grad F(P) . (x, y, z) = 0. Errors: NotOnCurve, SingularPoint.
Form tangent_line(const CurveContext& ctx, const PlanePoint& P);

/// Value of F at P.
inline Fe evaluate(const CurveContext& ctx, const PlanePoint& P) { return ctx.F().eval(P); }

/// Norm of c(x, y) = sum_j c_j(x) y^j in K[x][y]/(f); vanishes at x0 to the
/// total intersection multiplicity of X and {c = 0} over x = x0.
Poly norm_over_curve(const CurveContext& ctx, const std::vector<Poly>& c_by_y);

}  // namespace qj
