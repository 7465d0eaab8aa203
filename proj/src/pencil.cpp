#include "qj/pencil.hpp"

namespace qj {

namespace {

const std::vector<Form>& v_basis(const Field& f) {
  thread_local const Field* cached = nullptr;
  thread_local std::vector<Form> basis;
  if (cached != &f) {
    basis = {monomial_form(f, 2, 0, 0), monomial_form(f, 2, 1, 0), monomial_form(f, 2, 0, 1)};
    cached = &f;
  }
  return basis;
}

std::vector<Fe> solve_rational(const CurveContext& ctx, const Divisor& D, const Form& fixed) {
  const Field& K = ctx.field();
  const LinearSystem sys = interpolation_system(ctx, D, v_basis(K), &fixed);
  if (rank(sys.matrix) < 3) fail(ErrorCode::SingularSystem, "the conic conditions for D are dependent");
  const auto sol = solve(sys.matrix, sys.rhs);
  if (!sol) fail(ErrorCode::SingularSystem, "the conic conditions for D are inconsistent");
  std::vector<Fe> out;
  for (const Fe& v : *sol) {
    Fe r;
    if (!try_restrict(v, K, r)) fail(ErrorCode::InternalConsistency, "conic through a Galois-stable divisor is not rational");
    out.push_back(r);
  }
  return out;
}

}  // namespace

Form ConicA::form() const {
  const Field& f = a00.field();
  return Form(f, 2, {-f.one(), f.zero(), a10, f.zero(), a01, a00});
}

Form ConicB::form() const {
  const Field& f = b00.field();
  return Form(f, 2, {f.zero(), -f.one(), b10, f.zero(), b01, b00});
}

std::string monomial_name(int degree, int index) {
  const Monomial m = monomial_at(degree, index);
  std::string s;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put('x', m.ex);
  put('y', m.ey);
  put('z', m.ez);
  return s.empty() ? "1" : s;
}

Fe conic_determinant(const Form& c) {
  const Field& K = c.field();
  const Fe h = K.from_int(2).inv();
  const Fe m[3][3] = {{c.coeff(2, 0), c.coeff(1, 1) * h, c.coeff(1, 0) * h},
                      {c.coeff(1, 1) * h, c.coeff(0, 2), c.coeff(0, 1) * h},
                      {c.coeff(1, 0) * h, c.coeff(0, 1) * h, c.coeff(0, 0)}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::pair<ConicA, ConicB> conics_from_divisor(const CurveContext& ctx, const Divisor& D) {
  if (!classify(ctx, D).in_Z) fail(ErrorCode::NotInZ, "divisor is special or meets infinity");
  const Field& K = ctx.field();
  const auto a = solve_rational(ctx, D, monomial_form(K, 2, 2, 0) * -K.one());
  const auto b = solve_rational(ctx, D, monomial_form(K, 2, 1, 1) * -K.one());
  return {ConicA{a[0], a[1], a[2]}, ConicB{b[0], b[1], b[2]}};
}

namespace {

Matrix decomposition_matrix(const Form& A, const Form& B) {
  const Field& K = A.field();
  Matrix m(K, 15, 12);
  const auto basis = monomial_basis(K, 2);
  for (std::size_t j = 0; j < 6; ++j) {
    const Form ag = A * basis[j];
    const Form bh = B * basis[j];
    for (std::size_t i = 0; i < 15; ++i) {
      m(i, j) = ag.coeffs()[i];
      m(i, j + 6) = bh.coeffs()[i];
    }
  }
  return m;
}

}  // namespace

std::pair<Form, Form> complete_decomposition(const CurveContext& ctx, const ConicA& A, const ConicB& B) {
  const Field& K = ctx.field();
  const Form a = A.form(), b = B.form();
  const auto sol = solve(decomposition_matrix(a, b), ctx.F().coeffs());
  if (!sol) fail(ErrorCode::NoDecomposition, "F is not in the ideal generated by A and B");
  Form G(K, 2, std::vector<Fe>(sol->begin(), sol->begin() + 6));
  Form H(K, 2, std::vector<Fe>(sol->begin() + 6, sol->end()));
  // (G + l B, H - l A) is again a solution; B has xy-coefficient -1
  const Fe lambda = G.coeff(1, 1) - K.one();
  G = G + b * lambda;
  H = H - a * lambda;
  return {G, H};
}

int decomposition_freedom(const CurveContext& ctx, const ConicA& A, const ConicB& B) {
  (void)ctx;
  return static_cast<int>(12 - rank(decomposition_matrix(A.form(), B.form())));
}

ZPoint zpoint_from_divisor(const CurveContext& ctx, const Divisor& D) {
  const auto [A, B] = conics_from_divisor(ctx, D);
  const auto [G, H] = complete_decomposition(ctx, A, B);
  return ZPoint{A, B, G, H};
}

Divisor divisor_from_conics(const CurveContext& ctx, const ConicA& A, const ConicB& B) {
  const Field& K = ctx.field();
  if (A.a01.is_zero()) {
    // A splits into the lines x = r z with r^2 - a10 r - a00 = 0
    const auto split = splitting_field(Poly(K, {-A.a00, -A.a10, K.one()}));
    for (const Root& r : split.roots) {
      const Fe b01 = embed(B.b01, *split.field), b00 = embed(B.b00, *split.field), b10 = embed(B.b10, *split.field);
      if (b01 == r.value && (b00 + b10 * r.value).is_zero()) {
        fail(ErrorCode::CommonComponent, "A and B share the line x = " + r.value.to_string() + " z");
      }
    }
    fail(ErrorCode::NotInZ, "A is reducible (a01 = 0)");
  }
  // on A: y = (x^2 - a10 x - a00) / a01; B * a01 restricted to A:
  const Poly phi = Poly(K, {-A.a00, -A.a10, K.one()});
  const Poly res = Poly(K, {B.b00 * A.a01, B.b10 * A.a01}) + Poly(K, {B.b01, -K.one()}) * phi;
  if (res.is_zero()) fail(ErrorCode::CommonComponent, "A is a component of B");
  const auto split = splitting_field(res);
  const Field& T = *split.field;
  const Fe inv01 = embed(A.a01, T).inv();
  std::vector<Divisor::Entry> es;
  for (const Root& r : split.roots) {
    es.push_back({PlanePoint::affine(r.value, phi.embedded(T).eval(r.value) * inv01), r.multiplicity});
  }
  const Divisor D = Divisor(T, std::move(es)).canonical();
  const Form F = ctx.F().embedded(D.field());
  for (const auto& e : D.entries()) {
    if (!F.eval(e.point).is_zero()) fail(ErrorCode::NotInZ, "A . B contains a point off the curve");
  }
  if (D.degree() != 3 || !classify(ctx, D).in_Z) fail(ErrorCode::NotInZ, "A . B - inf is not in the non-special locus");
  try {
    complete_decomposition(ctx, A, B);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoDecomposition) throw;
    fail(ErrorCode::NotInZ, "F is not of the form A G + B H");
  }
  return D;
}

ZValidation zpoint_validate(const CurveContext& ctx, const ZPoint& z) {
  ZValidation v;
  const Field& K = ctx.field();
  const Form diff = z.A.form() * z.G + z.B.form() * z.H - ctx.F();
  for (int i = 0; i < 15; ++i) {
    if (!diff.coeffs()[static_cast<std::size_t>(i)].is_zero()) v.failed_monomials.push_back(monomial_name(4, i));
  }
  v.g11_not_one = z.G.coeff(1, 1) != K.one();
  v.reducible_A = conic_determinant(z.A.form()).is_zero();
  v.ok = v.failed_monomials.empty() && !v.g11_not_one && !v.reducible_A;
  return v;
}

}  // namespace qj
