#include <numeric>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "qj/linalg.hpp"
#include "qj/oracles.hpp"
#include "support.hpp"

using namespace qj;

namespace {

// Every monic polynomial of degree k <= 3 with no root in F_p, in counter
// order with c_0 least significant; the first one is the canonical modulus.
std::vector<std::uint32_t> first_rootless(std::uint32_t p, int k) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(k), 0);
  while (true) {
    bool has_root = false;
    for (std::uint64_t x = 0; x < p && !has_root; ++x) {
      std::uint64_t v = 1;
      for (int i = k - 1; i >= 0; --i) v = (v * x + c[static_cast<std::size_t>(i)]) % p;
      has_root = v == 0;
    }
    if (!has_root) {
      c.push_back(1);
      return c;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

Fe random_fe(const Field& f, std::mt19937_64& rng) { return f.element_at(rng() % f.size_or_zero()); }

Poly random_poly(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Fe> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_fe(f, rng));
  c.push_back(f.one());
  return Poly(f, c);
}

}  // namespace

TEST_CASE("prime field examples") {
  const Field& F7 = Field::prime(7);
  CHECK(F7.from_int(3) * F7.from_int(5) == F7.one());
  CHECK(F7.from_int(-1) == F7.from_int(6));
  try {
    (void)F7.zero().inv();
    FAIL("inverse of zero returned");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("F_49 uses t^2 + 1") {
  const Field& F49 = Field::extension(7, 2);
  CHECK(F49.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(F49.gen() * F49.gen() == F49.from_int(6));
}

TEST_CASE("canonical modulus is the first irreducible in counter order") {
  for (std::uint32_t p : {5u, 7u, 11u, 31u})
    for (int k : {2, 3}) CHECK(Field::extension(p, k).modulus() == first_rootless(p, k));
}

TEST_CASE("invalid characteristic") {
  for (std::uint32_t p : {2u, 3u, 9u}) {
    try {
      (void)Field::prime(p);
      FAIL("accepted p");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidField);
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(1);
  for (int k : {1, 2, 3, 6}) {
    const Field& F = Field::extension(31, k);
    for (int i = 0; i < 50; ++i) {
      const Fe a = random_fe(F, rng), b = random_fe(F, rng), c = random_fe(F, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.pow(F.size_or_zero()) == a);
      Fe f = a;
      for (int j = 0; j < k; ++j) f = f.frobenius();
      CHECK(f == a);
      CHECK(k % a.algebraic_degree() == 0);
    }
  }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  std::mt19937_64 rng(2);
  const Field& S = Field::extension(7, 2);
  const Field& T = Field::extension(7, 6);
  for (int i = 0; i < 50; ++i) {
    const Fe a = random_fe(S, rng), b = random_fe(S, rng);
    CHECK(embed(a + b, T) == embed(a, T) + embed(b, T));
    CHECK(embed(a * b, T) == embed(a, T) * embed(b, T));
  }
  CHECK(embed(S.gen(), T).algebraic_degree() == 2);
}

TEST_CASE("element text round trip") {
  std::mt19937_64 rng(3);
  const Field& F = Field::extension(31, 3);
  for (int i = 0; i < 20; ++i) {
    const Fe a = random_fe(F, rng);
    CHECK(Fe::parse(a.to_string()) == a);
  }
  CHECK(Fe::parse("7^2:[3,4]") == Field::extension(7, 2).gen() * Field::extension(7, 2).from_int(4) +
                                        Field::extension(7, 2).from_int(3));
  for (const char* bad : {"7^2:[3]", "7^2:[3,7]", "7:[3]", "7^2:3,4", "x"}) {
    try {
      (void)Fe::parse(bad);
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("factor examples") {
  const Field& F7 = Field::prime(7);
  auto f = factor(Poly::from_ints(F7, {-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(((f[0].poly == Poly::from_ints(F7, {-1, 1}) && f[1].poly == Poly::from_ints(F7, {1, 1})) ||
         (f[1].poly == Poly::from_ints(F7, {-1, 1}) && f[0].poly == Poly::from_ints(F7, {1, 1}))));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].multiplicity == 1);
  f = factor(Poly::from_ints(F7, {1, 0, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].poly == Poly::from_ints(F7, {1, 0, 1}));
  CHECK(f[0].multiplicity == 1);
}

TEST_CASE("factorization re-expands to the input") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {7u, 31u}) {
    const Field& F = Field::prime(p);
    for (int i = 0; i < 40; ++i) {
      Poly f = random_poly(F, 1 + static_cast<int>(rng() % 12), rng);
      if (i % 4 == 0) f = f * f * random_poly(F, 2, rng);
      Poly prod = Poly::constant(F.one());
      for (const Factor& fa : factor(f)) {
        CHECK(fa.poly.lead().is_one());
        prod = prod * fa.poly.pow(static_cast<unsigned>(fa.multiplicity));
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("splitting field examples") {
  const Field& F7 = Field::prime(7);
  SplittingField s = splitting_field(Poly::from_ints(F7, {1, 0, 1}));
  CHECK(s.field->degree() == 2);
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0].multiplicity == 1);
  s = splitting_field(Poly::from_ints(F7, {-2, 1}).pow(3));
  CHECK(s.field->degree() == 1);
  REQUIRE(s.roots.size() == 1);
  CHECK(s.roots[0].value == F7.from_int(2));
  CHECK(s.roots[0].multiplicity == 3);
}

TEST_CASE("splitting field agrees with exhaustive root search") {
  std::mt19937_64 rng(5);
  int compared = 0;
  for (std::uint32_t p : {5u, 7u, 31u}) {
    const Field& F = Field::prime(p);
    for (int i = 0; i < 60; ++i) {
      Poly f = random_poly(F, 1 + static_cast<int>(rng() % 12), rng);
      if (i % 3 == 0) f = f * Poly::from_ints(F, {1, 1}).pow(2);
      int lcm_deg = 1;
      for (const Factor& fa : factor(f)) lcm_deg = std::lcm(lcm_deg, fa.poly.degree());
      if (lcm_deg > kDefaultSplittingBound) {
        CHECK_THROWS_AS(splitting_field(f), Error);
        continue;
      }
      const SplittingField s = splitting_field(f);
      CHECK(s.field->degree() == lcm_deg);
      std::set<std::string> roots;
      for (const Root& r : s.roots) roots.insert(r.value.to_string());
      // Frobenius closure
      for (const Root& r : s.roots) CHECK(roots.count(r.value.frobenius().to_string()) == 1);
      int mult = 0;
      for (const Root& r : s.roots) mult += r.multiplicity;
      CHECK(mult == f.degree());
      if (s.field->approx_size() > 2e5) continue;
      const auto brute = oracle::roots_by_search(f, *s.field);
      REQUIRE(brute.size() == s.roots.size());
      std::map<std::string, int> a, b;
      for (const Root& r : brute) a[r.value.to_string()] = r.multiplicity;
      for (const Root& r : s.roots) b[r.value.to_string()] = r.multiplicity;
      CHECK(a == b);
      // the field is generated by the roots
      int l = 1;
      for (const Root& r : s.roots) l = std::lcm(l, r.value.algebraic_degree());
      CHECK(l == s.field->degree());
      ++compared;
    }
  }
  CHECK(compared > 60);
}

TEST_CASE("factors of the norm of an addition cubic") {
  // The x-norm of a cubic through D1 + D2 + 3 inf on the reference curve.
  const CurveContext& ctx = qjt::ref(31);
  const Field& K = ctx.field();
  const Divisor S = random_reduced_divisor(ctx, 0) + random_reduced_divisor(ctx, 1);
  const Divisor known = S + Divisor(K, {{PlanePoint::infinity(K), 3}});
  const auto sys = interpolation_system(ctx, known, monomial_basis(K, 3));
  const auto ker = kernel(sys.matrix);
  REQUIRE(!ker.empty());
  Form C(K, 3);
  for (std::size_t j = 0; j < ker[0].size(); ++j) C = C + monomial_basis(K, 3)[j] * ker[0][j];
  const Poly N = norm_over_curve(ctx, C.affine_by_y());
  CHECK(N.degree() == 12 - local_intersection(ctx, PlanePoint::infinity(K), C, 13));
  Poly prod = Poly::constant(N.lead());
  for (const Factor& fa : factor(N)) {
    prod = prod * fa.poly.pow(static_cast<unsigned>(fa.multiplicity));
    const int d = fa.poly.degree();
    if (d > 3) continue;
    // a degree-d irreducible has exactly d roots in F_{31^d} and none below
    CHECK(oracle::roots_by_search(fa.poly, Field::extension(31, d)).size() == static_cast<std::size_t>(d));
    for (int e = 1; e < d; ++e) CHECK(oracle::roots_by_search(fa.poly, Field::extension(31, e)).empty());
  }
  CHECK(prod == N);
  // every point of S lies over a root of N
  for (const auto& e : S.entries()) CHECK(N.embedded(S.field()).eval(e.point.x).is_zero());
}

TEST_CASE("kernel, rank and solve") {
  std::mt19937_64 rng(6);
  const Field& F = Field::prime(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = F.from_int(static_cast<std::int64_t>(rng() % 3));
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < r; ++i) {
        Fe s = F.zero();
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
    std::vector<Fe> x0(c), b(r, F.zero());
    for (auto& x : x0) x = F.from_int(static_cast<std::int64_t>(rng() % 7));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += m(i, j) * x0[j];
    const auto x = solve(m, b);
    REQUIRE(x);
    for (std::size_t i = 0; i < r; ++i) {
      Fe s = F.zero();
      for (std::size_t j = 0; j < c; ++j) s += m(i, j) * (*x)[j];
      CHECK(s == b[i]);
    }
  }
}
