#include "qj/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "qj/counting.hpp"
#include "qj/grassmann.hpp"
#include "qj/kummer.hpp"
#include "qj/oracles.hpp"

namespace qj {

namespace {

struct Counter {
  int ok = 0, total = 0;
  void check(bool c) {
    ++total;
    ok += c ? 1 : 0;
  }
  bool all() const { return ok == total && total > 0; }
  std::string str() const { return std::to_string(ok) + "/" + std::to_string(total); }
};

struct Suite {
  const AcceptanceOptions& opts;
  const CurveContext& c31;

  int n(int base) const { return std::max(1, static_cast<int>(std::ceil(base * opts.scale))); }

  Divisor sample(int seed) const { return random_reduced_divisor(c31, static_cast<std::uint64_t>(seed)); }

  CriterionResult coverage() const {
    std::vector<std::string> bad;
    auto check = [&](bool c, const char* what) {
      if (!c) bad.push_back(what);
    };
    const Field& K = c31.field();
    const Field& K2 = Field::extension(31, 2);
    const Fe a = K2.gen() + K2.from_int(3), b = K2.gen() * K2.from_int(5) - K2.one();
    check((a * b) / b == a && a - a + b == b && a.inv() * a == K2.one() && a.pow(31 * 31 - 1).is_one(),
          "field_arith");
    const Poly f = Poly::from_ints(K, {1, 0, 0, 0, 1});
    Poly prod = Poly::constant(K.one());
    for (const Factor& fa : factor(f)) prod = prod * fa.poly.pow(static_cast<unsigned>(fa.multiplicity));
    check(prod == f, "poly_factor");
    const SplittingField sf = splitting_field(Poly::from_ints(K, {-3, 0, 0, 1}));
    int mult = 0;
    for (const Root& r : sf.roots) {
      mult += r.multiplicity;
      check(Poly::from_ints(K, {-3, 0, 0, 1}).embedded(*sf.field).eval(r.value).is_zero(), "splitting_field");
    }
    check(mult == 3, "splitting_field");
    const PlanePoint inf = PlanePoint::infinity(K);
    check(evaluate(c31, inf).is_zero(), "evaluate");
    const Form zline = monomial_form(K, 1, 0, 0);
    check(intersection_divisor(c31, zline) == Divisor(K, {{inf, 4}}), "intersection_divisor");
    const Form t = tangent_line(c31, inf);
    check(t.coeff(1, 0).is_zero() && t.coeff(0, 1).is_zero() && !t.coeff(0, 0).is_zero(), "tangent_line");
    const Divisor D = sample(0);
    check(classify(c31, D).in_Z, "classify");
    const Divisor Dinf = Divisor(K, {{inf, 1}, D.entries()[0], D.entries()[1]});
    check(!classify(c31, Dinf).in_Z, "classify");
    const auto [A, B] = conics_from_divisor(c31, D);
    const auto [G, H] = complete_decomposition(c31, A, B);
    check(A.form() * G + B.form() * H == c31.F(), "complete_decomposition");
    check(decomposition_freedom(c31, A, B) == 1, "decomposition_freedom");
    const ZPoint z = zpoint_from_divisor(c31, D);
    check(projectively_equal(plucker_of_divisor(c31, D), plucker(z)), "plucker_of_divisor");
    check(count_points(c31, 1) == count_points_serial(c31, 1) && count_points(c31, 1) == count_points_naive(c31, 1),
          "count_points");
    std::string detail = bad.empty() ? "every operation checked" : "failed:";
    for (const auto& w : bad) detail += " " + w;
    return {0, "operation coverage", bad.empty(), detail};
  }

  CriterionResult decomposition() const {
    Counter c;
    for (int s = 0; s < n(100); ++s) {
      const ZPoint z = zpoint_from_divisor(c31, sample(s));
      const ZValidation v = zpoint_validate(c31, z);
      c.check(v.failed_monomials.empty() && !v.g11_not_one);
    }
    return {1, "decomposition identity F = AG + BH", c.all(), c.str() + " samples with all 15 coefficients equal"};
  }

  CriterionResult round_trip() const {
    Counter c;
    for (int s = 0; s < n(100); ++s) {
      const Divisor D = sample(s);
      const ZPoint z = zpoint_from_divisor(c31, D);
      const Divisor back = divisor_from_conics(c31, z.A, z.B);
      c.check(back == D && zpoint_from_divisor(c31, back) == z);
    }
    return {2, "divisor <-> (A, B, G, H) round trip", c.all(), c.str() + " round trips are identities"};
  }

  CriterionResult negation() const {
    Counter inv, recipe, cls;
    const Field& K = c31.field();
    for (int s = 0; s < n(50); ++s) {
      const Divisor D = sample(s);
      const ZPoint z = zpoint_from_divisor(c31, D);
      const ZPoint nz = neg(z);
      inv.check(neg(nz) == z && zpoint_validate(c31, nz).ok);
      const Divisor residual =
          residual_intersection(c31, z.A.form(), D + Divisor(K, {{PlanePoint::infinity(K), 2}}));
      recipe.check(divisor_from_conics(c31, nz.A, nz.B) == residual);
      const JacobianClass nc = neg_class(c31, make_class(c31, D));
      cls.check(nc.certificate && *nc.certificate == nz);
    }
    return {3, "negation", inv.all() && recipe.all() && cls.all(),
            "involution " + inv.str() + ", X.A - D - 2inf " + recipe.str() + ", neg_class " + cls.str()};
  }

  CriterionResult group_axioms() const {
    std::vector<JacobianClass> cs;
    for (int i = 0; i < n(75); ++i) cs.push_back(make_class(c31, sample(1000 + i)));
    const JacobianClass zero = zero_class(c31);
    Counter id, inv, comm, assoc;
    for (int i = 0; i < n(50); ++i) {
      const auto& c = cs[static_cast<std::size_t>(i) % cs.size()];
      id.check(class_equal(c31, add(c31, c, zero), c) && class_equal(c31, add(c31, zero, c), c));
      inv.check(is_zero(c31, add(c31, c, neg_class(c31, c))));
    }
    for (int i = 0; i < n(50); ++i) {
      const auto& a = cs[static_cast<std::size_t>(i) % cs.size()];
      const auto& b = cs[static_cast<std::size_t>(i + 1) % cs.size()];
      comm.check(class_equal(c31, add(c31, a, b), add(c31, b, a)));
    }
    for (int i = 0; i < n(25); ++i) {
      const auto& a = cs[static_cast<std::size_t>(3 * i) % cs.size()];
      const auto& b = cs[static_cast<std::size_t>(3 * i + 1) % cs.size()];
      const auto& c = cs[static_cast<std::size_t>(3 * i + 2) % cs.size()];
      assoc.check(class_equal(c31, add(c31, add(c31, a, b), c), add(c31, a, add(c31, b, c))));
    }
    return {4, "group axioms over F_31", id.all() && inv.all() && comm.all() && assoc.all(),
            "identity " + id.str() + ", inverse " + inv.str() + ", commutativity " + comm.str() + ", associativity " +
                assoc.str()};
  }

  CriterionResult annihilation() const {
    std::ostringstream detail;
    bool pass = true;
    for (std::uint32_t p : {7u, 11u}) {
      const CurveContext ctx = curve_validate(reference_quartic(Field::prime(p)));
      const ZetaData zd = jacobian_order(ctx);
      Counter c;
      for (int s = 0; s < n(10); ++s) {
        const JacobianClass cl = random_class(ctx, static_cast<std::uint64_t>(s));
        c.check(is_zero(ctx, scalar_mul(ctx, zd.order, cl)) && class_equal(ctx, scalar_mul(ctx, zd.order + 1, cl), cl));
      }
      pass = pass && c.all();
      detail << "F_" << p << ": N = " << zd.order << ", " << c.str() << "; ";
    }
    return {5, "order annihilation", pass, detail.str()};
  }

  CriterionResult tangent() const {
    Counter c;
    for (int s = 0; s < n(50); ++s) {
      const ZPoint z = zpoint_from_divisor(c31, sample(s));
      c.check(tangent_dimension(c31, z) == 3 && rank(tangent_matrix(c31, z)) == 14);
    }
    return {6, "tangent space dimension 3", c.all(), c.str() + " with rank 14 and dimension 3"};
  }

  CriterionResult grassmann() const {
    Counter formula, rel;
    std::set<std::string> divisors, vectors;
    const Field& K = c31.field();
    for (int s = 0; s < n(100); ++s) {
      const Divisor D = sample(s);
      const ZPoint z = zpoint_from_divisor(c31, D);
      const PluckerVector v = plucker(z);
      const std::array<Fe, 5> a{z.A.a00, z.A.a10, z.A.a01, -K.one(), K.zero()};
      const std::array<Fe, 5> b{z.B.b00, z.B.b10, z.B.b01, K.zero(), -K.one()};
      formula.check(from_standard(standard_minors(a, b)) == v && v.coords[9].is_one());
      rel.check(plucker_relations_check(v));
      divisors.insert(D.to_string());
      std::string key;
      for (const Fe& e : normalized(v).coords) key += e.to_string() + " ";
      vectors.insert(key);
    }
    const bool injective = divisors.size() == vectors.size();
    return {7, "Plucker embedding", formula.all() && rel.all() && injective,
            "tuple = minors " + formula.str() + ", relations " + rel.str() + ", " + std::to_string(divisors.size()) +
                " distinct divisors -> " + std::to_string(vectors.size()) + " distinct vectors"};
  }

  CriterionResult kummer() const {
    Counter inv, pat, red;
    const Field& K = c31.field();
    const PlanePoint inf = PlanePoint::infinity(K), e1 = PlanePoint::make(K.one(), K.zero(), K.zero());
    for (int s = 0; s < n(50); ++s) {
      const ZPoint z = zpoint_from_divisor(c31, sample(s));
      const KummerCoords k = kummer_coords(c31, z);
      inv.check(k == kummer_coords(c31, neg(z)));
      const KummerCheck ch = kummer_reducibility_check(k.Q);
      pat.check(ch.pattern_ok);
      bool ok = ch.reducible && ch.witness;
      if (ok) {
        const auto& [B, H] = *ch.witness;
        ok = B * H == k.Q && B.eval(inf).is_zero() && H.eval(inf).is_zero() && B.eval(e1).is_zero() &&
             H.eval(e1).is_zero() && A_plus_Q_is_F(k);
      }
      red.check(ok);
    }
    return {8, "Kummer coordinates", inv.all() && pat.all() && red.all(),
            "neg-invariant " + inv.str() + ", vanishing pattern " + pat.str() + ", factors as B H " + red.str()};
  }

  bool A_plus_Q_is_F(const KummerCoords& k) const { return k.A.form() * k.G + k.Q == c31.F(); }

  CriterionResult oracle() const {
    const CurveContext c7 = curve_validate(reference_quartic(Field::prime(7)));
    const Field& K = c7.field();
    Counter agree;
    int equal_pairs = 0, unequal_pairs = 0;
    std::uint64_t seed = 0;
    auto line_rep = [&](std::int64_t a) {
      const Form L = monomial_form(K, 1, 1, 0) - monomial_form(K, 1, 0, 0) * K.from_int(a);
      return make_class(c7, residual_intersection(c7, L, Divisor(K, {{PlanePoint::infinity(K), 1}})));
    };
    const int pairs = std::max(4, n(10));
    for (int i = 0; i < pairs; ++i) {
      for (int attempt = 0; attempt < 200; ++attempt, ++seed) {
        JacobianClass c1, c2;
        switch (i % 4) {
          case 0:
            c1 = random_class(c7, seed);
            c2 = random_class(c7, seed + 5000);
            break;
          case 1: {
            c1 = random_class(c7, seed);
            const JacobianClass r = random_class(c7, seed + 7000);
            c2 = add(c7, add(c7, c1, r), neg_class(c7, r));
            break;
          }
          case 2:
            c1 = line_rep(static_cast<std::int64_t>(seed % 7));
            c2 = line_rep(static_cast<std::int64_t>((seed + 1 + seed / 7 % 6) % 7));
            break;
          default:
            c1 = line_rep(static_cast<std::int64_t>(seed % 7));
            c2 = random_class(c7, seed);
        }
        const auto truth = oracle::linearly_equivalent(c7, c1.rep, c2.rep);
        if (!truth) continue;
        const bool lib = class_equal(c7, c1, c2);
        agree.check(lib == *truth);
        (*truth ? equal_pairs : unequal_pairs)++;
        ++seed;
        break;
      }
    }
    const bool pass = agree.all() && agree.total == pairs && equal_pairs > 0 && unequal_pairs > 0;
    return {9, "brute-force linear equivalence over F_7", pass,
            agree.str() + " pairs agree (" + std::to_string(equal_pairs) + " equivalent, " +
                std::to_string(unequal_pairs) + " not)"};
  }
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail;
  os.precision(2);
  os << std::fixed << " (" << r.seconds << " s)";
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  const CurveContext c31 = curve_validate(reference_quartic(Field::prime(31)));
  const Suite suite{opts, c31};
  using Fn = CriterionResult (Suite::*)() const;
  const std::vector<std::pair<int, Fn>> all{
      {1, &Suite::decomposition}, {2, &Suite::round_trip}, {3, &Suite::negation},
      {4, &Suite::group_axioms},  {5, &Suite::annihilation}, {6, &Suite::tangent},
      {7, &Suite::grassmann},     {8, &Suite::kummer},     {9, &Suite::oracle}};
  std::vector<CriterionResult> out;
  auto run_one = [&](int id, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = (suite.*fn)();
    } catch (const Error& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string(error_token(e.code())) + ": " + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  if (opts.coverage) run_one(0, &Suite::coverage);
  for (const auto& [id, fn] : all) {
    if (opts.only.empty() || opts.only.count(id)) run_one(id, fn);
  }
  return out;
}

}  // namespace qj
