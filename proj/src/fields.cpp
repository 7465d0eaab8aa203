#include "qj/fields.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qj {

namespace {

using Raw = std::vector<std::uint32_t>;  // polynomial over F_p, low first

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((a * b) % p);
}

std::uint32_t powmod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = (r * a) % p;
    a = (a * a) % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return powmod(a, p - 2, p);
}

void trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t inv_lead = invmod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t q = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - mulmod(q, m[i], p)) % p);
    }
    trim(a);
  }
  return a;
}

Raw raw_mul(const Raw& a, const Raw& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Raw r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + mulmod(a[i], b[j], p)) % p);
    }
  }
  trim(r);
  return r;
}

Raw raw_sub(Raw a, const Raw& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Raw raw_gcd(Raw a, Raw b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Raw raw_powmod(Raw base, std::uint64_t e, const Raw& m, std::uint32_t p) {
  Raw result{1};
  base = raw_mod(base, m, p);
  while (e) {
    if (e & 1) result = raw_mod(raw_mul(result, base, p), m, p);
    base = raw_mod(raw_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

// Ben-Or's test: m (monic, degree k) is irreducible over F_p iff it has
// no factor of degree i <= k/2, i.e. gcd(m, x^{p^i} - x) = 1 for those i.
bool raw_irreducible(const Raw& m, std::uint32_t p) {
  const int k = static_cast<int>(m.size()) - 1;
  if (k == 1) return true;
  const Raw x{0, 1};
  Raw h = raw_mod(x, m, p);
  for (int i = 1; i <= k / 2; ++i) {
    h = raw_powmod(h, p, m, p);
    if (raw_gcd(m, raw_sub(h, x, p), p).size() > 1) return false;
  }
  return true;
}

Raw find_canonical_modulus(std::uint32_t p, int k) {
  Raw m(static_cast<std::size_t>(k) + 1, 0);
  m[static_cast<std::size_t>(k)] = 1;
  if (k == 1) return m;  // t
  while (true) {
    if (raw_irreducible(m, p)) return m;
    // increment base-p counter over c_0 .. c_{k-1}, c_0 least significant
    int i = 0;
    while (i < k) {
      if (++m[static_cast<std::size_t>(i)] < p) break;
      m[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k) fail(ErrorCode::InternalConsistency, "no irreducible polynomial found");
  }
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<std::uint32_t, int>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

Field::Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  neg_modulus_.resize(modulus_.size());
  for (std::size_t i = 0; i < modulus_.size(); ++i) neg_modulus_[i] = (p_ - modulus_[i]) % p_;
}

const Field& Field::prime(std::uint32_t p) { return extension(p, 1); }

const Field& Field::extension(std::uint32_t p, int k) {
  if (k < 1 || k > kMaxExtensionDegree) {
    fail(ErrorCode::DegreeOverflow, "extension degree " + std::to_string(k) + " outside [1, " +
                                        std::to_string(kMaxExtensionDegree) + "]");
  }
  Registry& reg = registry();
  {
    std::lock_guard lock(reg.mutex);
    auto it = reg.fields.find({p, k});
    if (it != reg.fields.end()) return *it->second;
  }
  if (p < 5 || p >= (1u << 30) || !qj::is_prime(p)) {
    fail(ErrorCode::InvalidField, "characteristic must be a prime in [5, 2^30): " + std::to_string(p));
  }
  Raw m = find_canonical_modulus(p, k);
  std::lock_guard lock(reg.mutex);
  auto& slot = reg.fields[{p, k}];
  if (!slot) slot.reset(new Field(p, k, std::move(m)));
  return *slot;
}

double Field::approx_size() const {
  double s = 1;
  for (int i = 0; i < k_; ++i) s *= p_;
  return s;
}

std::uint64_t Field::size_or_zero() const {
  unsigned __int128 s = 1;
  for (int i = 0; i < k_; ++i) {
    s *= p_;
    if (s > static_cast<unsigned __int128>(UINT64_MAX)) return 0;
  }
  return static_cast<std::uint64_t>(s);
}

Fe Field::zero() const { return Fe(*this); }

Fe Field::one() const { return from_int(1); }

Fe Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  std::uint32_t c = static_cast<std::uint32_t>(r);
  return Fe::from_coeffs(*this, std::span<const std::uint32_t>(&c, 1));
}

Fe Field::gen() const {
  if (k_ == 1) return zero();  // modulus t: the generator reduces to 0
  std::uint32_t c[2] = {0, 1};
  return Fe::from_coeffs(*this, c);
}

Fe Field::element_at(std::uint64_t index) const {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  for (int i = 0; i < k_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return Fe::from_coeffs(*this, std::span<const std::uint32_t>(c.data(), static_cast<std::size_t>(k_)));
}

const Field::EmbeddingData* Field::cached_embedding(const Field& target) const {
  std::lock_guard lock(cache_mutex_);
  auto it = embeddings_.find(&target);
  return it == embeddings_.end() ? nullptr : it->second.get();
}

const Field::EmbeddingData& Field::store_embedding(const Field& target, EmbeddingData data) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = embeddings_[&target];
  if (!slot) slot = std::make_unique<EmbeddingData>(std::move(data));
  return *slot;
}

// ---------------------------------------------------------------------------

Fe Fe::from_coeffs(const Field& f, std::span<const std::uint32_t> c) {
  Fe r(f);
  if (f.degree() == 1) {
    // interpret as a polynomial in t and reduce mod t
    if (!c.empty()) r.c_[0] = c[0] % f.p();
    return r;
  }
  Raw tmp(c.begin(), c.end());
  for (auto& v : tmp) v %= f.p();
  if (tmp.size() > static_cast<std::size_t>(f.degree())) tmp = raw_mod(tmp, f.modulus(), f.p());
  for (std::size_t i = 0; i < tmp.size(); ++i) r.c_[i] = tmp[i];
  return r;
}

void Fe::check_same(const Fe& o) const {
  if (field_ != o.field_ || field_ == nullptr) {
    fail(ErrorCode::FieldMismatch, "arithmetic on elements of different fields");
  }
}

bool Fe::is_zero() const {
  for (int i = 0; i < field_->degree(); ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool Fe::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < field_->degree(); ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool Fe::is_prime_subfield() const {
  for (int i = 1; i < field_->degree(); ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

Fe Fe::operator+(const Fe& o) const {
  check_same(o);
  Fe r(*field_);
  const std::uint32_t p = field_->p_;
  for (int i = 0; i < field_->k_; ++i) {
    const auto s = c_[static_cast<std::size_t>(i)] + o.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = s >= p ? s - p : s;
  }
  return r;
}

Fe Fe::operator-(const Fe& o) const {
  check_same(o);
  Fe r(*field_);
  const std::uint32_t p = field_->p_;
  for (int i = 0; i < field_->k_; ++i) {
    const auto a = c_[static_cast<std::size_t>(i)];
    const auto b = o.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = a >= b ? a - b : a + p - b;
  }
  return r;
}

Fe Fe::operator-() const {
  Fe r(*field_);
  const std::uint32_t p = field_->p_;
  for (int i = 0; i < field_->k_; ++i) {
    const auto a = c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = a == 0 ? 0 : p - a;
  }
  return r;
}

Fe Fe::operator*(const Fe& o) const {
  check_same(o);
  const Field& f = *field_;
  const std::uint32_t p = f.p_;
  const int k = f.k_;
  Fe r(f);
  if (k == 1) {
    r.c_[0] = mulmod(c_[0], o.c_[0], p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
  if (p < (1u << 20)) {
    // products stay below 2^40, so sums of at most 2k of them cannot overflow
    for (int i = 0; i < k; ++i) {
      const std::uint64_t a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(i + j)] += a * o.c_[static_cast<std::size_t>(j)];
    }
    for (int i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t top = acc[static_cast<std::size_t>(i)] % p;
      if (top == 0) continue;
      for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(i - k + j)] += top * f.neg_modulus_[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < k; ++i) r.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)] % p);
    return r;
  }
  for (int i = 0; i < k; ++i) {
    const std::uint64_t a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < k; ++j) {
      acc[static_cast<std::size_t>(i + j)] += (a * o.c_[static_cast<std::size_t>(j)]) % p;
    }
  }
  for (int i = 2 * k - 2; i >= 0; --i) acc[static_cast<std::size_t>(i)] %= p;
  for (int i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t top = acc[static_cast<std::size_t>(i)] % p;
    if (top == 0) continue;
    for (int j = 0; j < k; ++j) {
      auto& slot = acc[static_cast<std::size_t>(i - k + j)];
      slot = (slot + top * f.neg_modulus_[static_cast<std::size_t>(j)]) % p;
    }
  }
  for (int i = 0; i < k; ++i) r.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)] % p);
  return r;
}

Fe Fe::inv() const {
  const Field& f = *field_;
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t p = f.p_;
  if (f.k_ == 1) {
    Fe r(f);
    r.c_[0] = invmod(c_[0], p);
    return r;
  }
  // extended Euclid on F_p[t]: find s with s*a = 1 mod m
  Raw r0 = f.modulus_, r1(c_.begin(), c_.begin() + f.k_);
  trim(r1);
  Raw s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    Raw rem = r0;
    Raw q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const std::uint32_t inv_lead = invmod(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::uint32_t coef = mulmod(rem.back(), inv_lead, p);
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = coef;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - mulmod(coef, r1[i], p)) % p);
      }
      trim(rem);
    }
    trim(q);
    Raw s2 = raw_sub(s0, raw_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const std::uint32_t scale = invmod(r0[0], p);
  Fe out(f);
  for (std::size_t i = 0; i < s0.size(); ++i) out.c_[i] = mulmod(s0[i], scale, p);
  return out;
}

Fe Fe::operator/(const Fe& o) const {
  check_same(o);
  return *this * o.inv();
}

Fe Fe::pow(std::uint64_t e) const {
  Fe result = field_->one();
  Fe base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Fe Fe::frobenius() const {
  if (field_->k_ == 1) return *this;
  return pow(field_->p_);
}

int Fe::algebraic_degree() const {
  const int k = field_->k_;
  Fe cur = *this;
  for (int d = 1; d <= k; ++d) {
    cur = cur.frobenius();
    if (k % d == 0 && cur == *this) return d;
  }
  return k;
}

bool Fe::operator==(const Fe& o) const {
  check_same(o);
  for (int i = 0; i < field_->k_; ++i) {
    if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::strong_ordering Fe::lex_compare(const Fe& o) const {
  check_same(o);
  for (int i = 0; i < field_->k_; ++i) {
    const auto a = c_[static_cast<std::size_t>(i)], b = o.c_[static_cast<std::size_t>(i)];
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string Fe::to_string() const {
  std::ostringstream os;
  os << field_->p_ << '^' << field_->k_ << ":[";
  for (int i = 0; i < field_->k_; ++i) {
    if (i) os << ',';
    os << c_[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::Parse, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Fe Fe::parse(std::string_view text) {
  const auto caret = text.find('^');
  const auto colon = text.find(':');
  if (caret == std::string_view::npos || colon == std::string_view::npos || colon < caret ||
      colon + 2 > text.size() || text[colon + 1] != '[' || text.back() != ']') {
    fail(ErrorCode::Parse, "field element must look like p^k:[c0,...]: '" + std::string(text) + "'");
  }
  const auto p = parse_uint(text.substr(0, caret), "characteristic");
  const auto k = parse_uint(text.substr(caret + 1, colon - caret - 1), "degree");
  if (p > UINT32_MAX || k == 0 || k > static_cast<std::uint64_t>(kMaxExtensionDegree)) {
    fail(ErrorCode::Parse, "unsupported field in '" + std::string(text) + "'");
  }
  const Field& f = Field::extension(static_cast<std::uint32_t>(p), static_cast<int>(k));
  std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
  std::vector<std::uint32_t> c;
  while (true) {
    const auto comma = body.find(',');
    const auto v = parse_uint(body.substr(0, comma), "residue");
    if (v >= p) fail(ErrorCode::Parse, "residue not reduced in '" + std::string(text) + "'");
    c.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (c.size() != k) fail(ErrorCode::Parse, "wrong number of residues in '" + std::string(text) + "'");
  return from_coeffs(f, c);
}

}  // namespace qj
