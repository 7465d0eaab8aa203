#include "qj/divisor.hpp"

#include <random>

namespace qj {

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::ContainsInfinity: return "ContainsInfinity";
    case Violation::ThreePointsCollinear: return "ThreePointsCollinear";
    case Violation::TwoPointsPlusInfinityCollinear: return "TwoPointsPlusInfinityCollinear";
    case Violation::TangentThroughInfinity: return "TangentThroughInfinity";
  }
  return "?";
}

std::vector<Form> monomial_basis(const Field& f, int degree) {
  std::vector<Form> out;
  for (int i = 0; i < monomial_count(degree); ++i) {
    const Monomial m = monomial_at(degree, i);
    out.push_back(monomial_form(f, degree, m.ex, m.ey));
  }
  return out;
}

LinearSystem interpolation_system(const CurveContext& ctx, const Divisor& D, const std::vector<Form>& basis,
                                  const Form* fixed) {
  LinearSystem sys{Matrix(D.field(), 0, basis.size()), {}};
  for (const auto& e : D.entries()) {
    const ContactRows cr = contact_rows(ctx, e.point, e.multiplicity, basis, fixed);
    for (std::size_t i = 0; i < cr.rows.size(); ++i) {
      sys.matrix.append_row(cr.rows[i]);
      sys.rhs.push_back(cr.rhs[i]);
    }
  }
  return sys;
}

namespace {

bool on_common_line(const CurveContext& ctx, const Divisor& D) {
  const auto lines = monomial_basis(ctx.field(), 1);
  return rank(interpolation_system(ctx, D, lines).matrix) < 3;
}

}  // namespace

MembershipReport classify(const CurveContext& ctx, const Divisor& D) {
  if (D.degree() != 3) fail(ErrorCode::WrongDegree, "expected a degree-3 divisor, got " + std::to_string(D.degree()));
  const Form F = ctx.F().embedded(D.field());
  for (const auto& e : D.entries()) {
    if (!F.eval(e.point).is_zero()) fail(ErrorCode::PointOffCurve, e.point.to_string() + " is not on the curve");
  }
  MembershipReport rep;
  if (D.contains_infinity()) rep.violations.insert(Violation::ContainsInfinity);
  if (on_common_line(ctx, D)) rep.violations.insert(Violation::ThreePointsCollinear);

  const Divisor inf(D.field(), {{PlanePoint::infinity(D.field()), 1}});
  const auto& es = D.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i; j < es.size(); ++j) {
      if (i == j && es[i].multiplicity < 2) continue;
      Divisor pair = i == j ? Divisor(D.field(), {{es[i].point, 2}})
                            : Divisor(D.field(), {{es[i].point, 1}, {es[j].point, 1}});
      if (on_common_line(ctx, pair + inf)) {
        rep.violations.insert(Violation::TwoPointsPlusInfinityCollinear);
        if (i == j) rep.violations.insert(Violation::TangentThroughInfinity);
      }
    }
  }
  rep.in_Z = rep.violations.empty();
  return rep;
}

namespace {

// A point of X whose coordinates generate F_{p^d}, drawn over that field.
bool draw_point(const CurveContext& ctx, std::mt19937_64& rng, int d, PlanePoint& out) {
  const Field& T = Field::extension(ctx.field().p(), d);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(d));
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % T.p());
  const Fe x = Fe::from_coeffs(T, c);
  std::vector<Fe> coeffs;
  for (const Poly& q : ctx.affine_by_y()) coeffs.push_back(q.embedded(T).eval(x));
  const auto ys = roots(Poly(T, std::move(coeffs)));
  if (ys.empty()) return false;
  const PlanePoint P = PlanePoint::affine(x, ys[rng() % ys.size()].value);
  if (P.algebraic_degree() != d) return false;
  out = P;
  return true;
}

Divisor closed_point(const PlanePoint& P) {
  std::vector<Divisor::Entry> es;
  PlanePoint Q = P;
  for (int i = 0; i < P.algebraic_degree(); ++i) {
    es.push_back({Q, 1});
    Q = Q.frobenius();
  }
  return Divisor(P.field(), std::move(es)).canonical();
}

Divisor sample(const CurveContext& ctx, std::uint64_t seed, const SamplerOptions& opts, bool any_type) {
  std::mt19937_64 rng(seed);
  int draws = 0;
  auto draw = [&](int d) {
    PlanePoint P;
    while (true) {
      if (++draws > opts.max_draws) fail(ErrorCode::SamplingExhausted, "no suitable divisor within the draw budget");
      if (draw_point(ctx, rng, d, P)) return closed_point(P);
    }
  };
  while (true) {
    std::vector<int> type{1, 1, 1};
    if (any_type) {
      static const std::vector<std::vector<int>> kTypes{{1, 1, 1}, {1, 2}, {3}};
      type = kTypes[rng() % kTypes.size()];
    }
    Divisor D = draw(type[0]);
    for (std::size_t i = 1; i < type.size(); ++i) D = D + draw(type[i]);
    D = D.canonical();
    if (classify(ctx, D).in_Z) return D;
  }
}

}  // namespace

Divisor random_reduced_divisor(const CurveContext& ctx, std::uint64_t seed, const SamplerOptions& opts) {
  return sample(ctx, seed, opts, false);
}

Divisor random_reduced_divisor_any(const CurveContext& ctx, std::uint64_t seed, const SamplerOptions& opts) {
  return sample(ctx, seed, opts, true);
}

}  // namespace qj
