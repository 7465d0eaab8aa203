#include "qj/kummer.hpp"

namespace qj {

namespace {

// Affine bivariate polynomial with x- and y-degrees at most 2, stored as
// polynomials in x indexed by the power of y.
using BiPoly = std::vector<Poly>;

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, const Field& K) {
  BiPoly r(a.size() + b.size() - 1, Poly(K));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  return r;
}

int x_degree(const BiPoly& a) {
  int d = -1;
  for (const Poly& p : a) d = std::max(d, p.degree());
  return d;
}

int y_degree(const BiPoly& a) {
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j)
    if (!a[static_cast<std::size_t>(j)].is_zero()) return j;
  return -1;
}

Poly content(const BiPoly& a, const Field& K) {
  Poly g(K);
  for (const Poly& p : a) g = gcd(g, p);
  return g;
}

BiPoly divide_content(const BiPoly& a, const Poly& c) {
  BiPoly r;
  for (const Poly& p : a) r.push_back(p / c);
  return r;
}

// Square root in K[x], if the polynomial is a square.
std::optional<Poly> poly_sqrt(const Poly& d) {
  const Field& K = d.field();
  if (d.is_zero()) return Poly(K);
  if (d.degree() % 2) return std::nullopt;
  Fe lead;
  if (!try_sqrt(d.lead(), lead)) return std::nullopt;
  const int n = d.degree() / 2;
  std::vector<Fe> s(static_cast<std::size_t>(n) + 1, K.zero());
  s[static_cast<std::size_t>(n)] = lead;
  const Fe inv2l = (lead + lead).inv();
  // match coefficients of x^(n+k) from the top
  for (int k = n - 1; k >= 0; --k) {
    Fe acc = d[n + k];
    for (int i = k + 1; i < n; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n + k - i)];
    s[static_cast<std::size_t>(k)] = acc * inv2l;
  }
  Poly r(K, std::move(s));
  if (!(r * r == d)) return std::nullopt;
  return r;
}

Form to_conic(const BiPoly& a, const Field& K) {
  Form f(K, 2);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (int i = 0; i <= a[j].degree(); ++i) f.set(i, static_cast<int>(j), a[j][i]);
  return f;
}

}  // namespace

KummerCoords kummer_coords(const CurveContext& ctx, const ZPoint& z) {
  (void)ctx;
  const Form A = z.A.form();
  const Fe lambda = -z.H.coeff(2, 0);
  const Form G = z.G + z.B.form() * lambda;
  const Form H = z.H - A * lambda;
  return KummerCoords{z.A, G, z.B.form() * H};
}

bool kummer_vanishing_pattern(const Form& Q) {
  for (auto [i, j] : {std::pair{3, 0}, {0, 3}, {4, 0}, {1, 3}, {3, 1}, {0, 4}}) {
    if (!Q.coeff(i, j).is_zero()) return false;
  }
  return true;
}

KummerCheck kummer_reducibility_check(const Form& Q) {
  KummerCheck out;
  if (Q.degree() != 4) return out;
  out.pattern_ok = kummer_vanishing_pattern(Q);
  if (!out.pattern_ok || Q.is_zero()) return out;
  const Field& K = Q.field();
  const BiPoly q = Q.affine_by_y();  // x-degree <= 2, y-degree <= 2 by the pattern

  // irreducible pieces: factors of the x-content, then y-dependent factors
  const Poly c = content(q, K);
  const BiPoly prim = divide_content(q, c);
  std::vector<BiPoly> pieces;
  if (c.degree() > 0) {
    for (const Factor& f : factor(c))
      for (int m = 0; m < f.multiplicity; ++m) pieces.push_back({f.poly});
  }
  const int dy = y_degree(prim);
  if (dy == 2) {
    const Poly &p0 = prim[0], &p1 = prim[1], &p2 = prim[2];
    const auto s = poly_sqrt(p1 * p1 - p0 * p2 * K.from_int(4));
    if (!s) return out;
    for (const Poly& l0 : {p1 - *s, p1 + *s}) {
      BiPoly l{l0, p2 * K.from_int(2)};
      pieces.push_back(divide_content(l, content(l, K)));
    }
  } else if (dy == 1) {
    pieces.push_back(prim);
  }

  // try every split of the pieces into two bidegree-(1,1) factors
  const std::size_t n = pieces.size();
  if (n > 16) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BiPoly f{Poly::constant(K.one())}, g{Poly::constant(K.one())};
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) f = bi_mul(f, pieces[i], K);
      else g = bi_mul(g, pieces[i], K);
    }
    if (x_degree(f) > 1 || y_degree(f) > 1 || x_degree(g) > 1 || y_degree(g) > 1) continue;
    Form B = to_conic(f, K), H = to_conic(g, K);
    const Form prod = B * H;
    // fix the scalar so that B H = Q exactly
    Fe ratio;
    bool found = false;
    for (std::size_t i = 0; i < 15; ++i) {
      if (!prod.coeffs()[i].is_zero()) {
        ratio = Q.coeffs()[i] / prod.coeffs()[i];
        found = true;
        break;
      }
    }
    if (!found) continue;
    H = H * ratio;
    if (!(B * H == Q)) continue;
    out.reducible = true;
    out.witness = std::make_pair(B, H);
    return out;
  }
  return out;
}

}  // namespace qj
