#include "doctest.h"
#include "qj/kummer.hpp"
#include "support.hpp"

using namespace qj;

TEST_CASE("Kummer coordinates are invariant under neg") {
  const CurveContext& ctx = qjt::ref(31);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ZPoint z = zpoint_from_divisor(ctx, random_reduced_divisor(ctx, s));
    const KummerCoords k = kummer_coords(ctx, z);
    CHECK(k == kummer_coords(ctx, neg(z)));
    CHECK(k.A == z.A);
    CHECK(k.A.form() * k.G + k.Q == ctx.F());
    CHECK(kummer_vanishing_pattern(k.Q));
  }
}

TEST_CASE("Q factors as B H") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const PlanePoint inf = PlanePoint::infinity(K), e1 = PlanePoint::make(K.one(), K.zero(), K.zero());
  for (std::uint64_t s = 0; s < 20; ++s) {
    const KummerCoords k = kummer_coords(ctx, zpoint_from_divisor(ctx, random_reduced_divisor(ctx, s)));
    const KummerCheck c = kummer_reducibility_check(k.Q);
    CHECK(c.pattern_ok);
    CHECK(c.reducible);
    REQUIRE(c.witness);
    const auto& [P, R] = *c.witness;
    CHECK(P * R == k.Q);
    for (const Form& f : {P, R}) {
      CHECK(f.eval(inf).is_zero());
      CHECK(f.eval(e1).is_zero());
    }
  }
}

TEST_CASE("perturbed Q is irreducible") {
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  int irreducible = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const KummerCoords k = kummer_coords(ctx, zpoint_from_divisor(ctx, random_reduced_divisor(ctx, s)));
    Form G = k.G;
    G.set(0, 0, G.coeff(0, 0) + K.one());
    const Form Q = ctx.F() - k.A.form() * G;
    const KummerCheck c = kummer_reducibility_check(Q);
    CHECK(c.pattern_ok);
    irreducible += !c.reducible;
  }
  CHECK(irreducible >= 18);
}

TEST_CASE("vanishing pattern violation") {
  const CurveContext& ctx = qjt::ref(31);
  const KummerCoords k = kummer_coords(ctx, zpoint_from_divisor(ctx, random_reduced_divisor(ctx, 0)));
  Form Q = k.Q;
  Q.set(3, 0, ctx.field().one());
  const KummerCheck c = kummer_reducibility_check(Q);
  CHECK(!c.pattern_ok);
  CHECK(!c.reducible);
  CHECK(!c.witness);
}
