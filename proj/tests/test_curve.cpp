#include <map>
#include <random>

#include "doctest.h"
#include "qj/oracles.hpp"
#include "support.hpp"

using namespace qj;

namespace {

Form line(const Fe& a, const Fe& b, const Fe& c) {
  const Field& K = a.field();
  return monomial_form(K, 1, 1, 0) * a + monomial_form(K, 1, 0, 1) * b + monomial_form(K, 1, 0, 0) * c;
}

std::array<Fe, 3> cross(const std::array<Fe, 3>& u, const std::array<Fe, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_null(const std::array<Fe, 3>& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// X . L by restricting F to L = span(P, Q): the quartic g(t) = F(P + t Q)
// has a root per point of L other than Q, and Q counts 4 - deg g times.
Divisor line_section_by_restriction(const CurveContext& ctx, const Form& L) {
  const Field& K = ctx.field();
  const std::array<Fe, 3> l{L.coeff(1, 0), L.coeff(0, 1), L.coeff(0, 0)};
  std::vector<std::array<Fe, 3>> span;
  for (int i = 0; i < 3 && span.size() < 2; ++i) {
    std::array<Fe, 3> e{K.zero(), K.zero(), K.zero()};
    e[static_cast<std::size_t>(i)] = K.one();
    const auto v = cross(l, e);
    if (is_null(v) || (!span.empty() && is_null(cross(span[0], v)))) continue;
    span.push_back(v);
  }
  REQUIRE(span.size() == 2);
  const auto& P = span[0];
  const auto& Q = span[1];
  Poly g(K);
  for (int i = 0; i < 5; ++i) {
    const Fe ti = K.from_int(i);
    Poly basis = Poly::constant(K.one());
    Fe denom = K.one();
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      basis = basis * Poly::from_ints(K, {-j, 1});
      denom *= K.from_int(i - j);
    }
    g = g + basis * (ctx.F().eval(P[0] + ti * Q[0], P[1] + ti * Q[1], P[2] + ti * Q[2]) / denom);
  }
  std::vector<Divisor::Entry> out;
  const Field& T = *splitting_field(g).field;
  for (const Root& r : oracle::roots_by_search(g, T)) {
    const PlanePoint pt = PlanePoint::make(embed(P[0], T) + r.value * embed(Q[0], T),
                                           embed(P[1], T) + r.value * embed(Q[1], T),
                                           embed(P[2], T) + r.value * embed(Q[2], T));
    out.push_back({pt, r.multiplicity});
  }
  if (g.degree() < 4) out.push_back({PlanePoint::make(Q[0], Q[1], Q[2]).embedded(T), 4 - g.degree()});
  return Divisor(T, out).canonical();
}

Form random_form(const Field& K, int degree, std::mt19937_64& rng) {
  std::vector<Fe> c;
  for (int i = 0; i < monomial_count(degree); ++i) c.push_back(K.from_int(static_cast<std::int64_t>(rng() % K.p())));
  return Form(K, degree, c);
}

}  // namespace

TEST_CASE("reference curve validates") {
  const CurveContext& ctx = qjt::ref(31);
  CHECK(ctx.certificate().resultants_coprime);
  CHECK(ctx.certificate().exhaustive_degree == 3);
  for (int i = 0; i < 15; ++i) {
    const Monomial m = monomial_at(4, i);
    const bool present = m.ex == 4 || m.ez == 4 || (m.ey == 3 && m.ez == 1);
    CHECK(ctx.F().coeffs()[static_cast<std::size_t>(i)].is_zero() == !present);
  }
  const PlanePoint inf = PlanePoint::infinity(ctx.field());
  CHECK(ctx.Fx().eval(inf).is_zero());
  CHECK(ctx.Fy().eval(inf).is_zero());
  CHECK(ctx.Fz().eval(inf).is_one());
}

TEST_CASE("curve validation errors") {
  const Field& K = Field::prime(31);
  const Form x4 = monomial_form(K, 4, 4, 0);
  CHECK(qjt::code_of([&] { curve_validate(x4 + monomial_form(K, 4, 0, 4) + monomial_form(K, 4, 0, 0)); }) ==
        ErrorCode::NoHyperflexNormalization);
  CHECK(qjt::code_of([&] { curve_validate(x4); }) == ErrorCode::SingularCurve);
  // x^4 + y^3 z has a cusp at (0:0:1)
  CHECK(qjt::code_of([&] { curve_validate(x4 + monomial_form(K, 4, 0, 3)); }) == ErrorCode::SingularCurve);
}

TEST_CASE("evaluate") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const PlanePoint inf = PlanePoint::infinity(K);
  CHECK(evaluate(ctx, inf).is_zero());
  CHECK(monomial_form(K, 1, 0, 0).eval(inf).is_zero());
  for (int x0 : {0, 5, 17}) {
    std::vector<Fe> c;
    for (const Poly& cj : ctx.affine_by_y()) c.push_back(cj.eval(K.from_int(x0)));
    const SplittingField s = splitting_field(Poly(K, c));
    for (const Root& r : s.roots)
      CHECK(evaluate(ctx, PlanePoint::affine(embed(K.from_int(x0), *s.field), r.value)).is_zero());
  }
}

TEST_CASE("hyper-flex and the line x = 0") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const PlanePoint inf = PlanePoint::infinity(K);
  CHECK(intersection_divisor(ctx, monomial_form(K, 1, 0, 0)) == Divisor(K, {{inf, 4}}));
  const Divisor D = intersection_divisor(ctx, monomial_form(K, 1, 1, 0));
  CHECK(D == qjt::divisor_of({inf, PlanePoint::affine(K.zero(), K.from_int(6)),
                             PlanePoint::affine(K.zero(), K.from_int(26)),
                             PlanePoint::affine(K.zero(), K.from_int(30))}));
}

TEST_CASE("line sections agree with restriction to the line") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const auto pts = qjt::rational_points(ctx);
  REQUIRE(pts.size() == 27);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Form L;
    if (i < 25) {
      const auto& P = pts[rng() % pts.size()];
      auto Q = pts[rng() % pts.size()];
      if (P == Q) continue;
      const auto l = cross({P.x, P.y, P.z}, {Q.x, Q.y, Q.z});
      L = line(l[0], l[1], l[2]);
      const Divisor D = intersection_divisor(ctx, L);
      CHECK(D.multiplicity(P.embedded(D.field())) >= 1);
      CHECK(D.multiplicity(Q.embedded(D.field())) >= 1);
    } else {
      L = line(K.from_int(static_cast<std::int64_t>(rng() % 31)), K.from_int(static_cast<std::int64_t>(rng() % 31)),
               K.from_int(static_cast<std::int64_t>(rng() % 31)));
      if (L.is_zero()) continue;
    }
    const Divisor D = intersection_divisor(ctx, L);
    CHECK(D.degree() == 4);
    CHECK(D == line_section_by_restriction(ctx, L));
    for (const auto& e : D.entries()) CHECK(local_intersection(ctx, e.point, L.embedded(D.field()), 8) == e.multiplicity);
  }
}

TEST_CASE("Bezout, Galois stability and additivity") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  std::mt19937_64 rng(8);
  int done = 0;
  for (int deg : {1, 2, 3}) {
    for (int i = 0; i < 8; ++i) {
      const Form C = random_form(K, deg, rng);
      Divisor D;
      try {
        D = intersection_divisor(ctx, C);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeOverflow);
        continue;
      }
      ++done;
      CHECK(D.degree() == 4 * deg);
      CHECK(D.frobenius() == D);
      for (const auto& e : D.entries()) CHECK(C.eval(e.point).is_zero());
    }
  }
  CHECK(done >= 16);
  for (int i = 0; i < 6; ++i) {
    const Form L1 = random_form(K, 1, rng), L2 = random_form(K, 1, rng);
    CHECK(intersection_divisor(ctx, L1 * L2) == intersection_divisor(ctx, L1) + intersection_divisor(ctx, L2));
  }
}

TEST_CASE("component shared with the curve") {
  const CurveContext& ctx = qjt::ref(31);
  try {
    (void)intersection_divisor(ctx, ctx.F());
    FAIL("F . F accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComponentShared);
  }
}

TEST_CASE("contact at infinity with A and B") {
  const CurveContext& ctx = qjt::ref(31);
  const PlanePoint inf = PlanePoint::infinity(ctx.field());
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ZPoint z = zpoint_from_divisor(ctx, random_reduced_divisor(ctx, s));
    CHECK(intersection_divisor(ctx, z.A.form()).multiplicity(inf) == 2);
    CHECK(intersection_divisor(ctx, z.B.form()).multiplicity(inf) == 1);
  }
}

TEST_CASE("tangent lines") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const Form t = tangent_line(ctx, PlanePoint::infinity(K));
  CHECK(t.coeff(1, 0).is_zero());
  CHECK(t.coeff(0, 1).is_zero());
  CHECK(!t.coeff(0, 0).is_zero());
  for (const auto& P : qjt::rational_points(ctx)) {
    const Form T = tangent_line(ctx, P);
    CHECK(T == line(ctx.Fx().eval(P), ctx.Fy().eval(P), ctx.Fz().eval(P)));
  }
  try {
    (void)tangent_line(ctx, PlanePoint::affine(K.one(), K.one()));
    FAIL("tangent off the curve");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnCurve);
  }
}

TEST_CASE("flexes found by exhaustive search") {
  const CurveContext& ctx = qjt::ref(31);
  int flexes = 0;
  for (const auto& P : qjt::rational_points(ctx)) {
    const Form T = tangent_line(ctx, P);
    const Divisor S = line_section_by_restriction(ctx, T);
    const int brute = S.multiplicity(P.embedded(S.field()));
    CHECK(brute >= 2);
    CHECK(local_intersection(ctx, P, T, 8) == brute);
    flexes += brute >= 3;
  }
  // (0, y) with y^3 = -1 are hyper-flexes with tangent y = y0 z
  CHECK(flexes >= 3);
}

TEST_CASE("residual intersection") {
  const CurveContext& ctx = qjt::ref(31);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Divisor D = random_reduced_divisor(ctx, s);
    const ZPoint z = zpoint_from_divisor(ctx, D);
    const Divisor full = intersection_divisor(ctx, z.A.form());
    CHECK(full.degree() == 8);
    const Divisor r = residual_intersection(ctx, z.A.form(), D);
    CHECK(r + D == full);
  }
}
