#include "qj/jacobian.hpp"

namespace qj {

namespace {

// Rational vector from a kernel computed over an extension.
std::vector<Fe> restrict_vector(const std::vector<Fe>& v, const Field& K) {
  std::vector<Fe> out;
  for (const Fe& e : v) {
    Fe r;
    if (!try_restrict(e, K, r)) fail(ErrorCode::InternalConsistency, "interpolating form is not rational");
    out.push_back(r);
  }
  return out;
}

Form combine(const std::vector<Form>& basis, const std::vector<Fe>& u, int degree) {
  Form r(basis.front().field(), degree);
  for (std::size_t i = 0; i < basis.size(); ++i) r = r + basis[i] * u[i];
  return r;
}

Divisor infinity_times(const Field& f, int m) { return Divisor(f, {{PlanePoint::infinity(f), m}}); }

// Kernel of the conditions X . form >= D, as rational forms.
std::vector<Form> interpolating_forms(const CurveContext& ctx, const Divisor& D, const std::vector<Form>& basis,
                                      int degree) {
  std::vector<Form> out;
  for (const auto& v : kernel(interpolation_system(ctx, D, basis).matrix)) {
    out.push_back(combine(basis, restrict_vector(v, ctx.field()), degree));
  }
  return out;
}

// The effective E with E + D + 2 inf = X . Q for the first conic Q through D + 2 inf.
Divisor conic_residual(const CurveContext& ctx, const Divisor& D) {
  const Divisor known = D + infinity_times(D.field(), 2);
  const auto qs = interpolating_forms(ctx, known, monomial_basis(ctx.field(), 2), 2);
  if (qs.empty()) fail(ErrorCode::DegenerateConicSystem, "no conic through D + 2 inf");
  return residual_intersection(ctx, qs.front(), known);
}

}  // namespace

JacobianClass make_class(const CurveContext& ctx, const Divisor& D) {
  JacobianClass c{D.canonical(), std::nullopt};
  if (classify(ctx, c.rep).in_Z) c.certificate = zpoint_from_divisor(ctx, c.rep);
  return c;
}

JacobianClass zero_class(const CurveContext& ctx) {
  const Form x = monomial_form(ctx.field(), 1, 1, 0);
  return make_class(ctx, residual_intersection(ctx, x, infinity_times(ctx.field(), 1)));
}

ZPoint neg(const ZPoint& z, NegScalars* scalars) {
  const Form A = z.A.form(), B = z.B.form();
  // move H along the pencil until it loses its x^2 term
  const Fe lambda = -z.H.coeff(2, 0);
  const Form Gt = z.G + B * lambda;
  const Form Ht = z.H - A * lambda;
  if (!Ht.coeff(0, 2).is_zero() || Ht.coeff(1, 1).is_zero()) {
    fail(ErrorCode::ShapeViolation, "H does not have the shape of B up to scale");
  }
  const Fe s = -Ht.coeff(1, 1);
  const Fe si = s.inv();
  ZPoint r;
  r.A = z.A;
  r.B = ConicB{Ht.coeff(0, 0) * si, Ht.coeff(1, 0) * si, Ht.coeff(0, 1) * si};
  const Fe mu = Gt.coeff(1, 1) - A.field().one();
  r.G = Gt + r.B.form() * mu;
  r.H = B * s - A * mu;
  if (scalars) *scalars = NegScalars{s, lambda, mu};
  return r;
}

JacobianClass neg_class(const CurveContext& ctx, const JacobianClass& c) {
  return make_class(ctx, conic_residual(ctx, c.rep));
}

bool is_zero(const CurveContext& ctx, const JacobianClass& c) {
  const Divisor D = c.rep + infinity_times(c.rep.field(), 1);
  return !kernel(interpolation_system(ctx, D, monomial_basis(ctx.field(), 1)).matrix).empty();
}

JacobianClass add(const CurveContext& ctx, const JacobianClass& c1, const JacobianClass& c2) {
  const Field& K = ctx.field();
  const Divisor S = c1.rep + c2.rep;
  const Divisor known = S + infinity_times(S.field(), 3);
  const auto cubics = interpolating_forms(ctx, known, monomial_basis(K, 3), 3);
  if (cubics.empty()) fail(ErrorCode::InternalConsistency, "no cubic through D + D' + 3 inf");
  std::optional<Divisor> e_minus;
  for (const Form& C : cubics) {
    Divisor r = residual_intersection(ctx, C, known);
    if (!r.contains_infinity()) {
      e_minus = std::move(r);
      break;
    }
    if (!e_minus) e_minus = std::move(r);
  }
  Divisor E = conic_residual(ctx, *e_minus);
  JacobianClass out = make_class(ctx, E);
  if (is_zero(ctx, out)) return zero_class(ctx);
  return out;
}

JacobianClass scalar_mul(const CurveContext& ctx, std::int64_t n, const JacobianClass& c) {
  if (n < 0) return scalar_mul(ctx, -n, neg_class(ctx, c));
  JacobianClass acc = zero_class(ctx);
  if (n == 0) return acc;
  int top = 63;
  while (!((static_cast<std::uint64_t>(n) >> top) & 1)) --top;
  acc = c;
  for (int b = top - 1; b >= 0; --b) {
    acc = add(ctx, acc, acc);
    if ((static_cast<std::uint64_t>(n) >> b) & 1) acc = add(ctx, acc, c);
  }
  return acc;
}

bool class_equal(const CurveContext& ctx, const JacobianClass& c1, const JacobianClass& c2) {
  if (c1.rep == c2.rep) return true;
  if (c1.certificate && c2.certificate) return false;
  return is_zero(ctx, add(ctx, c1, neg_class(ctx, c2)));
}

Matrix tangent_matrix(const CurveContext& ctx, const ZPoint& z, bool full_g) {
  const Field& K = ctx.field();
  const Form A = z.A.form(), B = z.B.form();
  const auto conics = monomial_basis(K, 2);
  // V part of the conic basis: z^2, xz, yz
  const std::vector<Form> v{conics[5], conics[2], conics[4]};
  std::vector<Form> cols;
  for (const Form& m : v) cols.push_back(m * z.G);
  for (const Form& m : v) cols.push_back(m * z.H);
  for (std::size_t i = 0; i < conics.size(); ++i) {
    if (!full_g && i == 1) continue;  // g11 is frozen
    cols.push_back(A * conics[i]);
  }
  for (const Form& m : conics) cols.push_back(B * m);
  Matrix out(K, 15, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < 15; ++i) out(i, j) = cols[j].coeffs()[i];
  }
  return out;
}

int tangent_dimension(const CurveContext& ctx, const ZPoint& z) {
  const Matrix m = tangent_matrix(ctx, z);
  return static_cast<int>(m.cols() - rank(m));
}

JacobianClass random_class(const CurveContext& ctx, std::uint64_t seed) {
  return make_class(ctx, random_reduced_divisor_any(ctx, seed));
}

}  // namespace qj
