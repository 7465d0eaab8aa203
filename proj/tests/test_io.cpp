#include "doctest.h"
#include "qj/io.hpp"
#include "support.hpp"

using namespace qj;

TEST_CASE("quartic round trip") {
  const CurveContext& ctx = qjt::ref(31);
  const std::string text = write_quartic(ctx.F());
  CHECK(text.rfind("quartic p=31\n", 0) == 0);
  CHECK(read_quartic(text) == ctx.F());
  CHECK(read_quartic("quartic p=31\n1 0 0 0 0 0 0 0 0 0 0 1 0 0 1\n") == ctx.F());
  CHECK(header_kind(text) == "quartic");
}

TEST_CASE("divisor round trip and golden text") {
  const CurveContext& ctx = qjt::ref(31);
  const Divisor D = random_reduced_divisor(ctx, 0);
  const std::string text = write_divisor(D);
  CHECK(text ==
        "divisor p^L=31^1\n"
        "31^1:[7] 31^1:[14] 31^1:[1] 1\n"
        "31^1:[17] 31^1:[21] 31^1:[1] 1\n"
        "31^1:[19] 31^1:[4] 31^1:[1] 1\n");
  CHECK(read_divisor(text, &ctx) == D);
  const Divisor E = add(ctx, make_class(ctx, D), make_class(ctx, random_reduced_divisor(ctx, 1))).rep;
  CHECK(read_divisor(write_divisor(E), &ctx) == E);
  CHECK(qjt::code_of([&] { read_divisor("divisor p^L=31^1\n31^1:[1] 31^1:[1] 31^1:[1] 1\n", &ctx); }) == ErrorCode::PointOffCurve);
}

TEST_CASE("zpoint, plucker, zeta round trips") {
  const CurveContext& ctx = qjt::ref(31);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ZPoint z = zpoint_from_divisor(ctx, random_reduced_divisor(ctx, s));
    CHECK(read_zpoint(write_zpoint(z)) == z);
    CHECK(read_zpoint(write_zpoint(neg(z))) == neg(z));
    const PluckerVector v = plucker(z);
    CHECK(read_plucker(write_plucker(v)) == v);
  }
  const ZetaData zd = jacobian_order(qjt::ref(7));
  const std::string text = write_zeta(7, zd);
  CHECK(text == "zeta p=7\n4 20 364\n-4 -7 56 -49 -196 343\n144\n");
  const ZetaData back = read_zeta(text);
  CHECK(back.L == zd.L);
  CHECK(back.order == zd.order);
  CHECK(back.N3 == zd.N3);
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "quartic\n", "quartic p=31\n1 2 3\n", "quartic p=31\n1 0 0 0 0 0 0 0 0 0 0 1 0 0 x\n",
                          "zpoint p=31\nA: 1 2 3\n"}) {
    CHECK(qjt::code_of([&] {
            if (std::string(bad).rfind("zpoint", 0) == 0)
              read_zpoint(bad);
            else
              read_quartic(bad);
          }) == ErrorCode::Parse);
  }
  CHECK(qjt::code_of([] { read_divisor("divisor p^L=31\n"); }) == ErrorCode::Parse);
  CHECK(qjt::code_of([] { read_zeta("zeta p=7\n4 20\n"); }) == ErrorCode::Parse);
}
