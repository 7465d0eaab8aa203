#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qj;

namespace {

// det of the rows (1, x_i, y_i): the conditions for a00 + a10 x + a01 y = x^2
// at three distinct affine points.
Fe det_MD(const Divisor& D) {
  const auto& e = D.entries();
  auto row = [&](std::size_t i) { return std::array<Fe, 3>{D.field().one(), e[i].point.x, e[i].point.y}; };
  const auto a = row(0), b = row(1), c = row(2);
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

TEST_CASE("classify examples") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const PlanePoint inf = PlanePoint::infinity(K);
  const MembershipReport r = classify(ctx, Divisor(K, {{inf, 3}}));
  CHECK(!r.in_Z);
  CHECK(r.violations.count(Violation::ContainsInfinity) == 1);

  // three points of a line section
  const auto pts = qjt::rational_points(ctx);
  bool found = false;
  for (std::size_t i = 0; i < pts.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && !found; ++j) {
      const Form L = monomial_form(K, 1, 1, 0) * (pts[i].y - pts[j].y) + monomial_form(K, 1, 0, 1) * (pts[j].x - pts[i].x) +
                     monomial_form(K, 1, 0, 0) * (pts[i].x * pts[j].y - pts[j].x * pts[i].y);
      const Divisor S = intersection_divisor(ctx, L);
      if (S.field().degree() != 1 || S.entries().size() != 4 || S.contains_infinity()) continue;
      const Divisor D(K, {S.entries()[0], S.entries()[1], S.entries()[2]});
      const MembershipReport m = classify(ctx, D);
      CHECK(!m.in_Z);
      CHECK(m.violations.count(Violation::ThreePointsCollinear) == 1);
      CHECK(det_MD(D.canonical()).is_zero());
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("classify rejects bad input") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  CHECK(qjt::code_of([&] { classify(ctx, Divisor(K, {{PlanePoint::infinity(K), 2}})); }) == ErrorCode::WrongDegree);
  CHECK(qjt::code_of([&] { classify(ctx, Divisor(K, {{PlanePoint::affine(K.one(), K.one()), 3}})); }) ==
        ErrorCode::PointOffCurve);
}

TEST_CASE("two points on a vertical line with infinity") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  // (0, 6), (0, 26) and inf lie on x = 0
  const Divisor D = qjt::divisor_of({PlanePoint::affine(K.zero(), K.from_int(6)),
                                     PlanePoint::affine(K.zero(), K.from_int(26)),
                                     PlanePoint::affine(K.from_int(7), K.from_int(14))});
  const MembershipReport m = classify(ctx, D);
  CHECK(!m.in_Z);
  CHECK(m.violations.count(Violation::TwoPointsPlusInfinityCollinear) == 1);
}

TEST_CASE("sampler goldens") {
  const CurveContext& ctx = qjt::ref(31);
  auto pt = [](int x, int y) { return PlanePoint::affine(qjt::fp(31, x), qjt::fp(31, y)); };
  CHECK(random_reduced_divisor(ctx, 0) == qjt::divisor_of({pt(7, 14), pt(17, 21), pt(19, 4)}));
  CHECK(random_reduced_divisor(ctx, 1) == qjt::divisor_of({pt(1, 24), pt(24, 14), pt(30, 11)}));
}

TEST_CASE("sampled divisors are in Z with invertible M_D") {
  const CurveContext& ctx = qjt::ref(31);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Divisor D = random_reduced_divisor(ctx, s);
    CHECK(D.degree() == 3);
    CHECK(classify(ctx, D).in_Z);
    if (D.entries().size() == 3) CHECK(!det_MD(D).is_zero());
    CHECK(random_reduced_divisor(ctx, s) == D);
  }
}

TEST_CASE("M_D invertibility matches membership on all triples of rational points") {
  // For three distinct affine points no two on a vertical line, in_Z is
  // decided by the 3 x 3 determinant alone.
  const CurveContext& ctx = qjt::ref(31);
  const auto pts = qjt::rational_points(ctx);
  int checked = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (pts[i].x == pts[j].x || pts[i].x == pts[k].x || pts[j].x == pts[k].x) continue;
        const Divisor D = qjt::divisor_of({pts[i], pts[j], pts[k]});
        CHECK(classify(ctx, D).in_Z == !det_MD(D).is_zero());
        ++checked;
      }
  CHECK(checked > 1000);
}

TEST_CASE("canonical form ignores point order") {
  const CurveContext& ctx = qjt::ref(31);
  const Divisor D = random_reduced_divisor(ctx, 3);
  auto es = D.entries();
  std::reverse(es.begin(), es.end());
  CHECK(Divisor(D.field(), es).canonical() == D);
  const Field& T = Field::extension(31, 2);
  CHECK(D.embedded(T).canonical() == D);
}

TEST_CASE("rational sampler is exhausted over F_7, the mixed one is not") {
  const CurveContext& ctx = qjt::ref(7);
  SamplerOptions small;
  small.max_draws = 2000;
  CHECK(qjt::code_of([&] { random_reduced_divisor(ctx, 0, small); }) == ErrorCode::SamplingExhausted);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Divisor D = random_reduced_divisor_any(ctx, s);
    CHECK(D.degree() == 3);
    CHECK(D.frobenius() == D);
    CHECK(classify(ctx, D).in_Z);
  }
}
