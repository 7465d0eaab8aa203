#include "qj/oracles.hpp"

#include <array>

namespace qj::oracle {

std::vector<Root> roots_by_search(const Poly& f, const Field& T) {
  std::vector<Poly> ders{f.embedded(T)};
  while (ders.back().degree() > 0) ders.push_back(ders.back().derivative());
  std::vector<Root> out;
  const std::uint64_t q = T.size_or_zero();
  for (std::uint64_t i = 0; i < q; ++i) {
    const Fe r = T.element_at(i);
    int m = 0;
    while (m < static_cast<int>(ders.size()) && ders[static_cast<std::size_t>(m)].eval(r).is_zero()) ++m;
    if (m > 0) out.push_back({r, m});
  }
  return out;
}

bool is_reduced_affine(const Divisor& D) {
  for (const auto& e : D.entries())
    if (e.multiplicity != 1 || e.point.is_infinity()) return false;
  return true;
}

namespace {

// Calls fn on one representative of each nonzero vector of F_p^n up to scale
// (first nonzero coordinate 1).
template <class Fn>
void projective_sweep(const Field& K, int n, Fn fn) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= K.p();
  std::vector<Fe> v(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t t = idx;
    int first = -1;
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = K.from_int(static_cast<std::int64_t>(t % K.p()));
      t /= K.p();
      if (first < 0 && !v[static_cast<std::size_t>(i)].is_zero()) first = i;
    }
    if (!v[static_cast<std::size_t>(first)].is_one()) continue;
    fn(v);
  }
}

}  // namespace

std::vector<std::array<Fe, 4>> tangent_conics_through(const CurveContext& ctx, const Divisor& D) {
  const Field& K = ctx.field();
  const Field& T = D.field();
  std::vector<std::array<Fe, 4>> out;
  projective_sweep(K, 4, [&](const std::vector<Fe>& q) {
    for (const auto& e : D.entries()) {
      const Fe &x = e.point.x, &y = e.point.y, &z = e.point.z;
      const Fe v = embed(q[0], T) * x * x + embed(q[1], T) * x * z + embed(q[2], T) * y * z + embed(q[3], T) * z * z;
      if (!v.is_zero()) return;
    }
    out.push_back({q[0], q[1], q[2], q[3]});
  });
  return out;
}

bool equivalent_to_six_inf(const CurveContext& ctx, const Divisor& D) {
  if (D.degree() != 6 || !is_reduced_affine(D)) fail(ErrorCode::InternalConsistency, "oracle needs a reduced affine sextic");
  return !tangent_conics_through(ctx, D).empty();
}

bool is_zero_by_lines(const CurveContext& ctx, const Divisor& D) {
  if (D.degree() != 3 || !is_reduced_affine(D)) fail(ErrorCode::InternalConsistency, "oracle needs a reduced affine cubic divisor");
  bool found = false;
  projective_sweep(ctx.field(), 2, [&](const std::vector<Fe>& l) {
    bool all = true;
    for (const auto& e : D.entries())
      all = all && (embed(l[0], D.field()) * e.point.x + embed(l[1], D.field()) * e.point.z).is_zero();
    found = found || all;
  });
  return found;
}

std::optional<Divisor> negative(const CurveContext& ctx, const Divisor& D) {
  if (D.degree() != 3 || !is_reduced_affine(D)) return std::nullopt;
  const Field& K = ctx.field();
  const Field& T6 = Field::extension(K.p(), 6);
  for (const auto& q : tangent_conics_through(ctx, D)) {
    if (q[2].is_zero()) continue;
    // on the conic: y = -(q20 x^2 + q10 x + q00) / q01
    const Poly y = Poly(K, {q[3], q[1], q[0]}) * (-q[2].inv());
    Poly g(K);
    const auto& f = ctx.affine_by_y();
    Poly ypow = Poly::constant(K.one());
    for (const Poly& c : f) {
      g = g + c * ypow;
      ypow = ypow * y;
    }
    if (g.degree() != 6) continue;
    std::vector<Fe> residual;
    const Divisor D6 = D.embedded(common_field(D.field(), T6));
    for (const Root& r : roots_by_search(g, T6)) {
      int in_D = 0;
      for (const auto& e : D6.entries())
        if (embed(r.value, D6.field()) == e.point.x) ++in_D;
      if (r.multiplicity - in_D < 0) return std::nullopt;
      if (r.multiplicity - in_D > 1 || (r.multiplicity - in_D == 1 && in_D > 0)) return std::nullopt;
      if (r.multiplicity - in_D == 1) residual.push_back(r.value);
    }
    if (residual.size() != 3) return std::nullopt;
    std::vector<Divisor::Entry> es;
    for (const Fe& x : residual) es.push_back({PlanePoint::affine(x, y.embedded(T6).eval(x)), 1});
    return Divisor(T6, std::move(es)).canonical();
  }
  return std::nullopt;
}

std::optional<bool> linearly_equivalent(const CurveContext& ctx, const Divisor& D1, const Divisor& D2) {
  if (!is_reduced_affine(D1) || !is_reduced_affine(D2)) return std::nullopt;
  const bool z1 = is_zero_by_lines(ctx, D1), z2 = is_zero_by_lines(ctx, D2);
  if (z1 || z2) return z1 && z2;
  const auto neg2 = negative(ctx, D2);
  if (!neg2) return std::nullopt;
  const Divisor E = D1 + *neg2;
  if (!is_reduced_affine(E)) return std::nullopt;
  return equivalent_to_six_inf(ctx, E);
}

}  // namespace qj::oracle
