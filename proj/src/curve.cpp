#include "qj/curve.hpp"

#include <algorithm>
#include <atomic>

namespace qj {

namespace {

std::vector<Poly> embed_all(const std::vector<Poly>& v, const Field& K) {
  std::vector<Poly> r;
  for (const Poly& p : v) r.push_back(p.embedded(K));
  return r;
}

// Polynomial in y with coefficients evaluated at x0.
Poly fibre(const std::vector<Poly>& by_y, const Fe& x0) {
  std::vector<Fe> c;
  for (const Poly& p : by_y) c.push_back(p.eval(x0));
  return Poly(x0.field(), std::move(c));
}

Poly det3(const std::vector<std::vector<Poly>>& m) {
  auto minor = [&](int r1, int r2, int c1, int c2) {
    return m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] * m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -
           m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] * m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)];
  };
  return m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
}

// True if some point of X(F_{p^k}) with z = 1 is singular.
bool has_singular_rational_point(const CurveContext& ctx, int k) {
  const Field& T = Field::extension(ctx.field().p(), k);
  const auto f = embed_all(ctx.affine_by_y(), T);
  const auto fx = embed_all(ctx.Fx().affine_by_y(), T);
  const auto fy = embed_all(ctx.Fy().affine_by_y(), T);
  const auto q = static_cast<std::int64_t>(T.size_or_zero());
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t idx = 0; idx < q; ++idx) {
    if (found.load(std::memory_order_relaxed)) continue;
    const Fe x0 = T.element_at(static_cast<std::uint64_t>(idx));
    Poly g = gcd(fibre(f, x0), fibre(fy, x0));
    if (g.degree() < 1) continue;
    g = gcd(g, fibre(fx, x0));
    if (g.degree() >= 1 && count_distinct_roots(g) > 0) found = true;
  }
  return found;
}

}  // namespace

Form reference_quartic(const Field& f) {
  Form F(f, 4);
  F.set(4, 0, f.one());
  F.set(0, 3, f.one());
  F.set(0, 0, f.one());
  return F;
}

Poly norm_over_curve(const CurveContext& ctx, const std::vector<Poly>& c_by_y) {
  const Field& K = c_by_y.front().field();
  const auto f = embed_all(ctx.affine_by_y(), K);
  const Fe kinv = embed(ctx.kappa(), K).inv();
  std::vector<Poly> monic;  // y^3 = -(m0 + m1 y + m2 y^2)
  for (int j = 0; j < 3; ++j) monic.push_back(f[static_cast<std::size_t>(j)] * kinv);

  auto reduce = [&](std::vector<Poly> v) {
    while (v.size() > 3) {
      const Poly top = v.back();
      const std::size_t d = v.size() - 1;
      for (std::size_t j = 0; j < 3; ++j) v[d - 3 + j] = v[d - 3 + j] - top * monic[j];
      v.pop_back();
    }
    v.resize(3, Poly(K));
    return v;
  };
  std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3, Poly(K)));
  std::vector<Poly> cur = c_by_y;
  for (std::size_t col = 0; col < 3; ++col) {
    const auto red = reduce(cur);
    for (std::size_t row = 0; row < 3; ++row) m[row][col] = red[row];
    cur.insert(cur.begin(), Poly(K));  // multiply by y
  }
  return det3(m);
}

CurveContext curve_validate(const Form& raw, const ValidateOptions& opts) {
  if (raw.degree() != 4) fail(ErrorCode::NoHyperflexNormalization, "curve must be a quartic");
  const Field& K = raw.field();
  if (!K.is_prime()) fail(ErrorCode::InvalidField, "curves are defined over a prime field");
  // F(x, y, 0) = c x^4 with c != 0
  if (raw.coeff(4, 0).is_zero() || !raw.coeff(3, 1).is_zero() || !raw.coeff(2, 2).is_zero() ||
      !raw.coeff(1, 3).is_zero() || !raw.coeff(0, 4).is_zero()) {
    fail(ErrorCode::NoHyperflexNormalization, "F(x, y, 0) must be c*x^4 with c != 0");
  }
  // grad F(inf) = (coef xy^3, 4 coef y^4, coef y^3 z); the first two vanish by now
  if (raw.coeff(0, 3).is_zero()) fail(ErrorCode::SingularCurve, "F is singular at (0:1:0)");

  CurveContext ctx;
  ctx.F_ = raw;
  for (int v = 0; v < 3; ++v) ctx.grad_[v] = raw.partial(v);
  ctx.affine_ = raw.affine_by_y();
  ctx.affine_.resize(4, Poly(K));

  // Affine singular points lie over common roots of N(f_x) and N(f_y).
  const Poly r_y = norm_over_curve(ctx, ctx.Fy().affine_by_y());
  const Poly r_x = norm_over_curve(ctx, ctx.Fx().affine_by_y());
  if (r_x.is_zero() && r_y.is_zero()) fail(ErrorCode::SingularCurve, "F has a repeated component");
  const Poly g = gcd(r_x, r_y);
  ctx.cert_.resultants_coprime = g.degree() <= 0;
  if (!ctx.cert_.resultants_coprime) {
    const auto split = splitting_field(g);
    const Field& T = *split.field;
    const auto f = embed_all(ctx.affine_, T);
    const auto fx = embed_all(ctx.Fx().affine_by_y(), T);
    const auto fy = embed_all(ctx.Fy().affine_by_y(), T);
    for (const Root& r : split.roots) {
      ++ctx.cert_.refined_fibers;
      const Poly common = gcd(gcd(fibre(f, r.value), fibre(fx, r.value)), fibre(fy, r.value));
      if (common.degree() >= 1) fail(ErrorCode::SingularCurve, "F has a singular point over x = " + r.value.to_string());
    }
  }
  for (int k = 1; k <= opts.exhaustive_degree; ++k) {
    const auto q = Field::extension(K.p(), k).size_or_zero();
    if (q == 0 || q > opts.exhaustive_budget) break;
    if (has_singular_rational_point(ctx, k)) {
      fail(ErrorCode::SingularCurve, "singular point over F_{p^" + std::to_string(k) + "}");
    }
    ctx.cert_.exhaustive_degree = k;
  }
  return ctx;
}

LocalParam local_param(const CurveContext& ctx, const PlanePoint& P, int terms) {
  const Field& K = P.field();
  const Form F = ctx.F().embedded(K);
  if (!F.eval(P).is_zero()) fail(ErrorCode::NotOnCurve, "point " + P.to_string() + " is not on the curve");
  LocalParam lp{Series(K, terms), Series(K, terms), Series(K, terms)};
  if (terms == 0) return lp;
  if (P.is_infinity()) {
    // chart y = 1, z = z(x); F_z(inf) != 0 is guaranteed by validation
    const Fe scale = ctx.Fz().embedded(K).eval(P).inv();
    if (terms > 1) lp.x[1] = K.one();
    lp.y = Series::constant(K.one(), terms);
    for (int it = 0; it < terms; ++it) lp.z = lp.z - F.eval(lp.x, lp.y, lp.z) * scale;
    return lp;
  }
  const Fe fx = ctx.Fx().embedded(K).eval(P);
  const Fe fy = ctx.Fy().embedded(K).eval(P);
  lp.x = Series::constant(P.x, terms);
  lp.y = Series::constant(P.y, terms);
  lp.z = Series::constant(K.one(), terms);
  if (!fy.is_zero()) {
    if (terms > 1) lp.x[1] = K.one();
    const Fe scale = fy.inv();
    for (int it = 0; it < terms; ++it) lp.y = lp.y - F.eval(lp.x, lp.y, lp.z) * scale;
  } else if (!fx.is_zero()) {
    if (terms > 1) lp.y[1] = K.one();
    const Fe scale = fx.inv();
    for (int it = 0; it < terms; ++it) lp.x = lp.x - F.eval(lp.x, lp.y, lp.z) * scale;
  } else {
    fail(ErrorCode::SingularPoint, "curve is singular at " + P.to_string());
  }
  return lp;
}

int local_intersection(const CurveContext& ctx, const PlanePoint& P, const Form& C, int max_order) {
  const LocalParam lp = local_param(ctx, P, max_order);
  return C.embedded(P.field()).eval(lp.x, lp.y, lp.z).order();
}

ContactRows contact_rows(const CurveContext& ctx, const PlanePoint& P, int m, const std::vector<Form>& basis,
                         const Form* fixed) {
  const Field& K = P.field();
  ContactRows out;
  if (m <= 0) return out;
  const LocalParam lp = local_param(ctx, P, m);
  std::vector<Series> vals;
  for (const Form& b : basis) vals.push_back(b.eval(lp.x, lp.y, lp.z));
  Series fixed_val(K, m);
  if (fixed) fixed_val = fixed->eval(lp.x, lp.y, lp.z);
  for (int i = 0; i < m; ++i) {
    std::vector<Fe> row;
    for (const Series& s : vals) row.push_back(s[i]);
    out.rows.push_back(std::move(row));
    out.rhs.push_back(-fixed_val[i]);
  }
  return out;
}

Divisor residual_intersection(const CurveContext& ctx, const Form& C, const Divisor& known, int bound) {
  if (C.is_zero()) fail(ErrorCode::ComponentShared, "the zero form contains every curve");
  const Field& K = C.field();
  if (K.p() != ctx.field().p()) fail(ErrorCode::FieldMismatch, "form and curve over different characteristics");
  const auto c_by_y = C.affine_by_y();
  const Poly R = norm_over_curve(ctx, c_by_y);
  if (R.is_zero()) fail(ErrorCode::ComponentShared, "form shares a component with the curve");

  // x-coordinates of the known affine points, as a polynomial over K
  Poly Rk = Poly::constant(K.one());
  if (known.field_ptr() && !known.empty()) {
    const Field& W = common_field(K, known.field());
    Poly acc = Poly::constant(W.one());
    for (const auto& e : known.entries()) {
      if (e.point.is_infinity()) continue;
      acc = acc * Poly::linear_root(embed(e.point.x, W)).pow(static_cast<unsigned>(e.multiplicity));
    }
    std::vector<Fe> down;
    for (const Fe& c : acc.coeffs()) {
      Fe r;
      if (!try_restrict(c, K, r)) fail(ErrorCode::InternalConsistency, "known divisor is not Galois-stable");
      down.push_back(r);
    }
    Rk = Poly(K, std::move(down));
  }
  if (!(R % Rk).is_zero()) fail(ErrorCode::InternalConsistency, "known divisor is not part of the intersection");

  struct Fibre {
    Poly phi;
    int order;  // ord of phi in R
  };
  std::vector<Fibre> fibres;
  std::uint64_t M = static_cast<std::uint64_t>(K.degree());
  if (known.field_ptr()) M = lcm_u64(M, static_cast<std::uint64_t>(known.field().degree()));
  if (R.degree() > 0) {
    for (const Factor& fa : factor(R)) {
      int in_known = 0;
      for (Poly q = Rk; in_known < fa.multiplicity && (q % fa.poly).is_zero(); q = q / fa.poly) ++in_known;
      if (in_known == fa.multiplicity) continue;
      fibres.push_back({fa.poly, fa.multiplicity});
      M = lcm_u64(M, static_cast<std::uint64_t>(K.degree() * fa.poly.degree()));
    }
  }

  std::vector<Divisor::Entry> entries;
  const Field* T = nullptr;
  while (true) {
    if (M > static_cast<std::uint64_t>(std::min(bound, kMaxExtensionDegree))) {
      fail(ErrorCode::DegreeOverflow, "intersection points need F_{p^" + std::to_string(M) + "}");
    }
    T = &Field::extension(K.p(), static_cast<int>(M));
    entries.clear();
    const auto f_T = embed_all(ctx.affine_by_y(), *T);
    const auto c_T = embed_all(c_by_y, *T);
    std::uint64_t grow = 1;
    for (const Fibre& fb : fibres) {
      // one fibre per K-conjugacy class of roots; the others follow by Frobenius
      const Fe x0 = roots(fb.phi.embedded(*T)).front().value;
      const Poly g = gcd(fibre(f_T, x0), fibre(c_T, x0));
      const Poly sq = g / gcd(g, g.derivative());
      const auto ys = roots(sq);
      if (static_cast<int>(ys.size()) < sq.degree()) {
        for (const auto& [part, d] : distinct_degree_factorization(sq)) grow = lcm_u64(grow, static_cast<std::uint64_t>(d));
        continue;
      }
      std::vector<Divisor::Entry> local;
      if (ys.size() == 1) {
        local.push_back({PlanePoint::affine(x0, ys[0].value), fb.order});
      } else {
        int total = 0;
        for (const Root& y : ys) {
          const PlanePoint P = PlanePoint::affine(x0, y.value);
          const int I = local_intersection(ctx, P, C, fb.order + 1);
          if (I < 1 || I > fb.order) fail(ErrorCode::InternalConsistency, "bad local multiplicity");
          local.push_back({P, I});
          total += I;
        }
        if (total != fb.order) {
          fail(ErrorCode::InternalConsistency, "fibre multiplicities do not add up to the norm's root order");
        }
      }
      for (int i = 0; i < fb.phi.degree(); ++i) {
        for (auto& e : local) {
          entries.push_back(e);
          for (int s = 0; s < K.degree(); ++s) e.point = e.point.frobenius();
        }
      }
    }
    if (grow == 1) break;
    M *= grow;
  }

  const int at_inf = 4 * C.degree() - R.degree();
  if (at_inf > 0) {
    const PlanePoint inf = PlanePoint::infinity(*T);
    if (local_intersection(ctx, inf, C, at_inf + 1) != at_inf) {
      fail(ErrorCode::InternalConsistency, "local multiplicity at infinity disagrees with the norm degree");
    }
    entries.push_back({inf, at_inf});
  }
  if (known.field_ptr() && !known.empty()) {
    // fibres exhausted by `known` were skipped, so subtract pointwise
    std::vector<Divisor::Entry> rest;
    for (auto& e : entries) {
      const int m = e.multiplicity - known.multiplicity(e.point);
      if (m < 0) fail(ErrorCode::InternalConsistency, "known divisor is not part of the intersection");
      if (m > 0) rest.push_back({e.point, m});
    }
    entries = std::move(rest);
  }
  Divisor out = Divisor(*T, std::move(entries)).canonical();
  if (out.degree() != 4 * C.degree() - (known.field_ptr() ? known.degree() : 0)) {
    fail(ErrorCode::InternalConsistency, "known divisor is not part of the intersection");
  }
  return out;
}

Divisor intersection_divisor(const CurveContext& ctx, const Form& C, int bound) {
  return residual_intersection(ctx, C, Divisor(), bound);
}

Form tangent_line(const CurveContext& ctx, const PlanePoint& P) {
  const Field& K = P.field();
  if (!ctx.F().embedded(K).eval(P).is_zero()) fail(ErrorCode::NotOnCurve, "point " + P.to_string() + " is not on the curve");
  const Fe gx = ctx.Fx().embedded(K).eval(P);
  const Fe gy = ctx.Fy().embedded(K).eval(P);
  const Fe gz = ctx.Fz().embedded(K).eval(P);
  if (gx.is_zero() && gy.is_zero() && gz.is_zero()) fail(ErrorCode::SingularPoint, "curve is singular at " + P.to_string());
  return Form(K, 1, {gx, gy, gz});
}

}  // namespace qj
