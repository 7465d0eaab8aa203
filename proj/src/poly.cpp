#include "qj/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qj {

namespace {

// splitmix64; used for the Cantor-Zassenhaus random choices.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t seed_from(const Poly& f, int d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<std::uint64_t>(d));
  mix(f.field().p());
  for (const Fe& c : f.coeffs()) {
    for (auto v : c.coeffs()) mix(v);
  }
  return h;
}

Fe random_element(const Field& f, SplitMix& rng) {
  Fe r(f);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()));
  for (auto& v : c) v = static_cast<std::uint32_t>(rng.next() % f.p());
  return Fe::from_coeffs(f, c);
}

}  // namespace

Poly::Poly(const Field& f, std::vector<Fe> coeffs) : field_(&f), c_(std::move(coeffs)) {
  for (const Fe& c : c_) {
    if (c.field_ptr() != field_) fail(ErrorCode::FieldMismatch, "polynomial coefficient from another field");
  }
  trim();
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fe& c, int degree) {
  std::vector<Fe> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v.back() = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear_root(const Fe& r) { return Poly(r.field(), {-r, r.field().one()}); }

Poly Poly::from_ints(const Field& f, std::initializer_list<std::int64_t> c) {
  std::vector<Fe> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fe Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[static_cast<std::size_t>(i)];
}

Fe Poly::lead() const {
  if (c_.empty()) return field_->zero();
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(*field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (Fe& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return Poly(*field_);
  std::vector<Fe> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Fe& s) const {
  Poly r = *this;
  for (Fe& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (field_ != d.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (degree() < d.degree()) return {Poly(*field_), *this};
  std::vector<Fe> rem = c_;
  std::vector<Fe> q(c_.size() - d.c_.size() + 1, field_->zero());
  const Fe inv_lead = d.lead().inv();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    const Fe coef = rem[i] * inv_lead;
    q[i - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= coef * d.c_[j];
  }
  rem.resize(dd);
  return {Poly(*field_, std::move(q)), Poly(*field_, std::move(rem))};
}

bool Poly::operator==(const Poly& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(*field_);
  std::vector<Fe> r(c_.size() - 1, field_->zero());
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * field_->from_int(static_cast<std::int64_t>(i));
  return Poly(*field_, std::move(r));
}

Fe Poly::eval(const Fe& x) const {
  Fe acc = x.field().zero();
  if (c_.empty()) return acc;
  if (x.field_ptr() != field_) fail(ErrorCode::FieldMismatch, "evaluation point from another field");
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::embedded(const Field& target) const {
  if (&target == field_) return *this;
  std::vector<Fe> r;
  r.reserve(c_.size());
  for (const Fe& c : c_) r.push_back(embed(c, target));
  return Poly(target, std::move(r));
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(field_->one());
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Poly::canonical_less(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    auto c = c_[static_cast<std::size_t>(i)].lex_compare(o.c_[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i].to_string();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.field().one()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

Poly frobenius_mod(const Poly& base, const Poly& m) {
  Poly r = base % m;
  const std::uint32_t p = m.field().p();
  for (int i = 0; i < m.field().degree(); ++i) r = powmod(r, p, m);
  return r;
}

namespace {

// a^{1/p} for a in F_{p^k} is a^{p^{k-1}}.
Fe pth_root(const Fe& a) {
  Fe r = a;
  for (int i = 1; i < a.field().degree(); ++i) r = r.frobenius();
  return r;
}

bool is_one(const Poly& f) { return f.degree() == 0 && f.lead().is_one(); }

// a^{(q^d - 1)/2} mod f, q = p^k, via (q^d-1)/2 = (p-1)/2 * sum_{i<kd} p^i.
Poly half_power(const Poly& a, int d, const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.p();
  const int steps = F.degree() * d;
  Poly cur = a % f;
  Poly norm = cur;
  for (int i = 1; i < steps; ++i) {
    cur = powmod(cur, p, f);
    norm = (norm * cur) % f;
  }
  return powmod(norm, (p - 1) / 2, f);
}

}  // namespace

std::vector<Factor> squarefree_factorization(const Poly& f0) {
  if (f0.is_zero()) fail(ErrorCode::ZeroPolynomial, "square-free factorization of zero");
  std::vector<Factor> out;
  const Poly f = f0.monic();
  if (f.degree() <= 0) return out;
  const Field& F = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!is_one(w)) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p
    const int p = static_cast<int>(F.p());
    std::vector<Fe> root;
    for (int j = 0; j * p <= c.degree(); ++j) root.push_back(pth_root(c[j * p]));
    for (const Factor& g : squarefree_factorization(Poly(F, std::move(root)))) {
      out.push_back({g.poly, g.multiplicity * p});
    }
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f.monic();
  const Field& F = f.field();
  const Poly x = Poly::monomial(F.one(), 1);
  Poly h = x % rest;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = frobenius_mod(h, rest);
    Poly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f0, int d) {
  const Poly f = f0.monic();
  if (f.degree() <= d) return {f};
  const Field& F = f.field();
  SplitMix rng{seed_from(f, d)};
  const Poly one = Poly::constant(F.one());
  std::vector<Poly> pending{f}, done;
  while (!pending.empty()) {
    Poly g = std::move(pending.back());
    pending.pop_back();
    if (g.degree() == d) {
      done.push_back(g);
      continue;
    }
    while (true) {
      std::vector<Fe> coeffs;
      for (int i = 0; i < g.degree(); ++i) coeffs.push_back(random_element(F, rng));
      Poly a(F, std::move(coeffs));
      if (a.degree() <= 0) continue;
      Poly b = half_power(a, d, g) - one;
      Poly h = gcd(g, b);
      if (h.degree() > 0 && h.degree() < g.degree()) {
        pending.push_back(h);
        pending.push_back(g / h);
        break;
      }
    }
  }
  for (Poly& g : done) g = g.monic();
  std::sort(done.begin(), done.end(), [](const Poly& a, const Poly& b) { return a.canonical_less(b); });
  return done;
}

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factorization of the zero polynomial");
  std::vector<Factor> out;
  for (const Factor& sf : squarefree_factorization(f)) {
    for (const auto& [g, d] : distinct_degree_factorization(sf.poly)) {
      for (Poly& irr : equal_degree_factorization(g, d)) out.push_back({std::move(irr), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly.canonical_less(b.poly); });
  // merge repeated factors (possible across square-free layers)
  std::vector<Factor> merged;
  for (Factor& fa : out) {
    if (!merged.empty() && merged.back().poly == fa.poly) {
      merged.back().multiplicity += fa.multiplicity;
    } else {
      merged.push_back(std::move(fa));
    }
  }
  return merged;
}

std::vector<Root> roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Root> out;
  const Field& F = f.field();
  const Poly x = Poly::monomial(F.one(), 1);
  for (const Factor& sf : squarefree_factorization(f)) {
    Poly split = gcd(sf.poly, frobenius_mod(x, sf.poly) - x);
    if (split.degree() <= 0) continue;
    for (const Poly& lin : equal_degree_factorization(split, 1)) {
      out.push_back({-lin[0], sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value.lex_compare(b.value) < 0; });
  return out;
}

int count_distinct_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (f.degree() <= 0) return 0;
  const Poly x = Poly::monomial(f.field().one(), 1);
  return gcd(f, frobenius_mod(x, f) - x).degree();
}

SplittingField splitting_field(const Poly& f, int bound) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "splitting field of the zero polynomial");
  const Field& K = f.field();
  const auto factors = factor(f);
  std::uint64_t l = 1;
  for (const Factor& fa : factors) l = lcm_u64(l, static_cast<std::uint64_t>(fa.poly.degree()));
  const std::uint64_t L = l * static_cast<std::uint64_t>(K.degree());
  if (L > static_cast<std::uint64_t>(bound) || L > static_cast<std::uint64_t>(kMaxExtensionDegree)) {
    fail(ErrorCode::DegreeOverflow, "splitting field degree " + std::to_string(L) + " exceeds bound " +
                                        std::to_string(std::min(bound, kMaxExtensionDegree)));
  }
  const Field& T = Field::extension(K.p(), static_cast<int>(L));
  SplittingField out{&T, {}};
  for (const Factor& fa : factors) {
    const Poly g = fa.poly.embedded(T);
    for (const Poly& lin : equal_degree_factorization(g, 1)) out.roots.push_back({-lin[0], fa.multiplicity});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return a.value.lex_compare(b.value) < 0; });
  return out;
}

bool try_sqrt(const Fe& a, Fe& out) {
  if (a.is_zero()) {
    out = a;
    return true;
  }
  const Field& F = a.field();
  const auto r = roots(Poly(F, {-a, F.zero(), F.one()}));
  if (r.empty()) return false;
  out = r.front().value;
  return true;
}

// ---------------------------------------------------------------------------
// Canonical subfield embeddings.

namespace {

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

const Field::EmbeddingData& embedding_data(const Field& sub, const Field& target) {
  if (const auto* cached = sub.cached_embedding(target)) return *cached;
  const int d = sub.degree();
  const int M = target.degree();
  const std::uint32_t p = target.p();
  std::vector<Fe> mc;
  for (auto v : sub.modulus()) mc.push_back(target.from_int(v));
  auto rts = roots(Poly(target, std::move(mc)));
  if (rts.empty()) fail(ErrorCode::InternalConsistency, "modulus has no root in the larger field");
  const Fe r = rts.front().value;  // roots() is sorted lexicographically
  Field::EmbeddingData data;
  data.gen_image.assign(r.coeffs().begin(), r.coeffs().end());

  // basis images r^i as columns of an M x d matrix; find a left inverse
  std::vector<std::vector<std::uint32_t>> cols;
  Fe pw = target.one();
  for (int i = 0; i < d; ++i) {
    cols.emplace_back(pw.coeffs().begin(), pw.coeffs().end());
    pw *= r;
  }
  // augmented [B | I_M] row reduction restricted to d pivots
  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(M),
                                               std::vector<std::uint32_t>(static_cast<std::size_t>(d + M), 0));
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < d; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + i)] = 1;
  }
  int prow = 0;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = prow; i < M; ++i) {
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) fail(ErrorCode::InternalConsistency, "embedding basis is degenerate");
    std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(prow)]);
    auto& pr = rows[static_cast<std::size_t>(prow)];
    const std::uint32_t inv = inv_mod_p(pr[static_cast<std::size_t>(c)], p);
    for (auto& v : pr) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
    for (int i = 0; i < M; ++i) {
      if (i == prow) continue;
      auto& row = rows[static_cast<std::size_t>(i)];
      const std::uint64_t fct = row[static_cast<std::size_t>(c)];
      if (fct == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = static_cast<std::uint32_t>((row[j] + (p - fct) * pr[j]) % p);
      }
    }
    ++prow;
  }
  for (int i = 0; i < d; ++i) {
    data.pullback.emplace_back(rows[static_cast<std::size_t>(i)].begin() + d, rows[static_cast<std::size_t>(i)].end());
  }
  return sub.store_embedding(target, std::move(data));
}

}  // namespace

Fe embed(const Fe& a, const Field& target) {
  const Field& src = a.field();
  if (&src == &target) return a;
  if (src.p() != target.p()) fail(ErrorCode::FieldMismatch, "embedding across characteristics");
  if (a.is_prime_subfield()) return target.from_int(a.coeff(0));
  if (target.degree() % src.degree() != 0) {
    fail(ErrorCode::FieldMismatch, "F_{p^" + std::to_string(src.degree()) + "} does not embed in F_{p^" +
                                       std::to_string(target.degree()) + "}");
  }
  const auto& data = embedding_data(src, target);
  const Fe r = Fe::from_coeffs(target, data.gen_image);
  Fe acc = target.zero();
  for (int i = src.degree(); i-- > 0;) acc = acc * r + target.from_int(a.coeff(i));
  return acc;
}

bool try_restrict(const Fe& a, const Field& sub, Fe& out) {
  const Field& src = a.field();
  if (&src == &sub) {
    out = a;
    return true;
  }
  if (src.p() != sub.p()) fail(ErrorCode::FieldMismatch, "restriction across characteristics");
  if (a.is_prime_subfield()) {
    out = sub.from_int(a.coeff(0));
    return true;
  }
  if (src.degree() % sub.degree() != 0) return false;
  const auto& data = embedding_data(sub, src);
  const std::uint32_t p = src.p();
  std::vector<std::uint32_t> c(static_cast<std::size_t>(sub.degree()), 0);
  for (int i = 0; i < sub.degree(); ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < src.degree(); ++j) {
      acc = (acc + static_cast<std::uint64_t>(data.pullback[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * a.coeff(j)) % p;
    }
    c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc);
  }
  Fe candidate = Fe::from_coeffs(sub, c);
  if (embed(candidate, src) != a) return false;
  out = candidate;
  return true;
}

}  // namespace qj
