#include "qj/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace qj {

int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

int monomial_index(int degree, int ex, int ey) {
  const int r = degree - ex;
  return r * (r + 1) / 2 + (r - ey);
}

Monomial monomial_at(int degree, int index) {
  int r = 0;
  while ((r + 1) * (r + 2) / 2 <= index) ++r;
  const int ex = degree - r;
  const int ey = r - (index - r * (r + 1) / 2);
  return {ex, ey, degree - ex - ey};
}

// ---------------------------------------------------------------------------

Form::Form(const Field& f, int degree)
    : field_(&f), degree_(degree), c_(static_cast<std::size_t>(monomial_count(degree)), f.zero()) {}

Form::Form(const Field& f, int degree, std::vector<Fe> coeffs) : field_(&f), degree_(degree), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != monomial_count(degree)) {
    fail(ErrorCode::InternalConsistency, "form of degree " + std::to_string(degree) + " needs " +
                                             std::to_string(monomial_count(degree)) + " coefficients");
  }
  for (const Fe& c : c_) {
    if (c.field_ptr() != field_) fail(ErrorCode::FieldMismatch, "form coefficient from another field");
  }
}

void Form::set(int ex, int ey, const Fe& v) { c_[static_cast<std::size_t>(monomial_index(degree_, ex, ey))] = v; }

bool Form::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Fe& c) { return c.is_zero(); });
}

Form Form::operator+(const Form& o) const {
  if (degree_ != o.degree_) fail(ErrorCode::InternalConsistency, "adding forms of different degree");
  Form r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Form Form::operator-(const Form& o) const { return *this + o * (-o.field().one()); }

Form Form::operator*(const Form& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "forms over different fields");
  Form r(*field_, degree_ + o.degree_);
  for (int i = 0; i < monomial_count(degree_); ++i) {
    const Fe& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    const Monomial mi = monomial_at(degree_, i);
    for (int j = 0; j < monomial_count(o.degree_); ++j) {
      const Fe& b = o.c_[static_cast<std::size_t>(j)];
      if (b.is_zero()) continue;
      const Monomial mj = monomial_at(o.degree_, j);
      auto& slot = r.c_[static_cast<std::size_t>(monomial_index(r.degree_, mi.ex + mj.ex, mi.ey + mj.ey))];
      slot += a * b;
    }
  }
  return r;
}

Form Form::operator*(const Fe& s) const {
  Form r = *this;
  for (Fe& c : r.c_) c *= s;
  return r;
}

bool Form::operator==(const Form& o) const {
  if (degree_ != o.degree_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

Form Form::partial(int var) const {
  if (degree_ == 0) return Form(*field_, 0);
  Form r(*field_, degree_ - 1);
  for (int i = 0; i < monomial_count(degree_); ++i) {
    const Monomial m = monomial_at(degree_, i);
    const int e = var == 0 ? m.ex : var == 1 ? m.ey : m.ez;
    if (e == 0) continue;
    const int ex = m.ex - (var == 0), ey = m.ey - (var == 1);
    r.c_[static_cast<std::size_t>(monomial_index(degree_ - 1, ex, ey))] += c_[static_cast<std::size_t>(i)] * field_->from_int(e);
  }
  return r;
}

Form Form::embedded(const Field& target) const {
  if (&target == field_) return *this;
  std::vector<Fe> r;
  r.reserve(c_.size());
  for (const Fe& c : c_) r.push_back(embed(c, target));
  return Form(target, degree_, std::move(r));
}

Fe Form::eval(const Fe& x, const Fe& y, const Fe& z) const {
  const Field& f = x.field();
  std::vector<Fe> px{f.one()}, py{f.one()}, pz{f.one()};
  for (int i = 0; i < degree_; ++i) {
    px.push_back(px.back() * x);
    py.push_back(py.back() * y);
    pz.push_back(pz.back() * z);
  }
  Fe acc = f.zero();
  for (int i = 0; i < monomial_count(degree_); ++i) {
    const Fe& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Monomial m = monomial_at(degree_, i);
    acc += embed(c, f) * px[static_cast<std::size_t>(m.ex)] * py[static_cast<std::size_t>(m.ey)] *
           pz[static_cast<std::size_t>(m.ez)];
  }
  return acc;
}

Fe Form::eval(const PlanePoint& p) const { return eval(p.x, p.y, p.z); }

Series Form::eval(const Series& x, const Series& y, const Series& z) const {
  const Field& f = x.field();
  const int n = x.terms();
  std::vector<Series> px{Series::constant(f.one(), n)}, py = px, pz = px;
  for (int i = 0; i < degree_; ++i) {
    px.push_back(px.back() * x);
    py.push_back(py.back() * y);
    pz.push_back(pz.back() * z);
  }
  Series acc(f, n);
  for (int i = 0; i < monomial_count(degree_); ++i) {
    const Fe& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Monomial m = monomial_at(degree_, i);
    acc = acc + px[static_cast<std::size_t>(m.ex)] * py[static_cast<std::size_t>(m.ey)] *
                    pz[static_cast<std::size_t>(m.ez)] * embed(c, f);
  }
  return acc;
}

std::vector<Poly> Form::affine_by_y() const {
  std::vector<std::vector<Fe>> parts(static_cast<std::size_t>(degree_) + 1,
                                     std::vector<Fe>(static_cast<std::size_t>(degree_) + 1, field_->zero()));
  for (int i = 0; i < monomial_count(degree_); ++i) {
    const Monomial m = monomial_at(degree_, i);
    parts[static_cast<std::size_t>(m.ey)][static_cast<std::size_t>(m.ex)] = c_[static_cast<std::size_t>(i)];
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.emplace_back(*field_, std::move(p));
  return out;
}

std::string Form::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i].to_string();
  }
  return os.str();
}

Form monomial_form(const Field& f, int degree, int ex, int ey) {
  Form r(f, degree);
  r.set(ex, ey, f.one());
  return r;
}

// ---------------------------------------------------------------------------

PlanePoint PlanePoint::make(const Fe& x, const Fe& y, const Fe& z) {
  if (!z.is_zero()) {
    const Fe iz = z.inv();
    return {x * iz, y * iz, z.field().one()};
  }
  if (!y.is_zero()) {
    const Fe iy = y.inv();
    return {x * iy, y.field().one(), z};
  }
  if (!x.is_zero()) return {x.field().one(), y, z};
  fail(ErrorCode::InternalConsistency, "the zero vector is not a projective point");
}

PlanePoint PlanePoint::affine(const Fe& x, const Fe& y) { return {x, y, x.field().one()}; }

PlanePoint PlanePoint::infinity(const Field& f) { return {f.zero(), f.one(), f.zero()}; }

PlanePoint PlanePoint::embedded(const Field& target) const {
  return {embed(x, target), embed(y, target), embed(z, target)};
}

PlanePoint PlanePoint::frobenius() const { return {x.frobenius(), y.frobenius(), z.frobenius()}; }

int PlanePoint::algebraic_degree() const {
  return static_cast<int>(lcm_u64(lcm_u64(static_cast<std::uint64_t>(x.algebraic_degree()),
                                          static_cast<std::uint64_t>(y.algebraic_degree())),
                                  static_cast<std::uint64_t>(z.algebraic_degree())));
}

std::strong_ordering PlanePoint::lex_compare(const PlanePoint& o) const {
  if (auto c = x.lex_compare(o.x); c != 0) return c;
  if (auto c = y.lex_compare(o.y); c != 0) return c;
  return z.lex_compare(o.z);
}

std::string PlanePoint::to_string() const { return x.to_string() + " " + y.to_string() + " " + z.to_string(); }

// ---------------------------------------------------------------------------

Series Series::constant(const Fe& c, int terms) {
  Series s(c.field(), terms);
  if (terms > 0) s[0] = c;
  return s;
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  for (int i = 0; i < terms(); ++i) r[i] += o[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r = *this;
  for (int i = 0; i < terms(); ++i) r[i] -= o[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(*field_, terms());
  for (int i = 0; i < terms(); ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j < terms(); ++j) r[i + j] += (*this)[i] * o[j];
  }
  return r;
}

Series Series::operator*(const Fe& s) const {
  Series r = *this;
  for (int i = 0; i < terms(); ++i) r[i] *= s;
  return r;
}

int Series::order() const {
  for (int i = 0; i < terms(); ++i) {
    if (!(*this)[i].is_zero()) return i;
  }
  return terms();
}

// ---------------------------------------------------------------------------

const Field& common_field(const Field& a, const Field& b) {
  if (a.p() != b.p()) fail(ErrorCode::FieldMismatch, "fields of different characteristic");
  const auto l = lcm_u64(static_cast<std::uint64_t>(a.degree()), static_cast<std::uint64_t>(b.degree()));
  if (l > static_cast<std::uint64_t>(kMaxExtensionDegree)) {
    fail(ErrorCode::DegreeOverflow, "common field degree " + std::to_string(l) + " too large");
  }
  return Field::extension(a.p(), static_cast<int>(l));
}

Divisor::Divisor(const Field& f, std::vector<Entry> entries) : field_(&f), entries_(std::move(entries)) {
  for (const Entry& e : entries_) {
    if (e.point.x.field_ptr() != field_) fail(ErrorCode::FieldMismatch, "divisor point from another field");
    if (e.multiplicity <= 0) fail(ErrorCode::InternalConsistency, "divisor multiplicities must be positive");
  }
}

int Divisor::degree() const {
  int d = 0;
  for (const Entry& e : entries_) d += e.multiplicity;
  return d;
}

int Divisor::multiplicity(const PlanePoint& p) const {
  const PlanePoint q = p.embedded(common_field(p.field(), *field_));
  for (const Entry& e : entries_) {
    if (e.point.embedded(q.field()) == q) return e.multiplicity;
  }
  return 0;
}

bool Divisor::contains_infinity() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.point.is_infinity(); });
}

Divisor Divisor::embedded(const Field& target) const {
  if (&target == field_) return *this;
  std::vector<Entry> r;
  for (const Entry& e : entries_) r.push_back({e.point.embedded(target), e.multiplicity});
  return Divisor(target, std::move(r));
}

Divisor Divisor::canonical() const {
  std::uint64_t l = 1;
  for (const Entry& e : entries_) l = lcm_u64(l, static_cast<std::uint64_t>(e.point.algebraic_degree()));
  const Field& sub = Field::extension(field_->p(), static_cast<int>(l));
  std::vector<Entry> r;
  for (const Entry& e : entries_) {
    PlanePoint q;
    if (!try_restrict(e.point.x, sub, q.x) || !try_restrict(e.point.y, sub, q.y) ||
        !try_restrict(e.point.z, sub, q.z)) {
      fail(ErrorCode::InternalConsistency, "point coordinates outside their generated field");
    }
    r.push_back({q, e.multiplicity});
  }
  std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.point.lex_compare(b.point) < 0; });
  std::vector<Entry> merged;
  for (Entry& e : r) {
    if (!merged.empty() && merged.back().point == e.point) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return Divisor(sub, std::move(merged));
}

Divisor Divisor::frobenius() const {
  std::vector<Entry> r;
  for (const Entry& e : entries_) r.push_back({e.point.frobenius(), e.multiplicity});
  return Divisor(*field_, std::move(r)).canonical();
}

Divisor Divisor::operator+(const Divisor& o) const {
  const Field& f = common_field(*field_, *o.field_);
  Divisor a = embedded(f), b = o.embedded(f);
  a.entries_.insert(a.entries_.end(), b.entries_.begin(), b.entries_.end());
  return a.canonical();
}

Divisor Divisor::operator-(const Divisor& o) const {
  const Field& f = common_field(*field_, *o.field_);
  Divisor a = embedded(f).canonical().embedded(f);
  const Divisor b = o.embedded(f);
  for (const Entry& e : b.entries_) {
    auto it = std::find_if(a.entries_.begin(), a.entries_.end(), [&](const Entry& x) { return x.point == e.point; });
    if (it == a.entries_.end() || it->multiplicity < e.multiplicity) {
      fail(ErrorCode::InternalConsistency, "divisor subtraction leaves a negative multiplicity at " +
                                               e.point.to_string());
    }
    it->multiplicity -= e.multiplicity;
    if (it->multiplicity == 0) a.entries_.erase(it);
  }
  return a.canonical();
}

bool Divisor::operator==(const Divisor& o) const {
  const Divisor a = canonical(), b = o.canonical();
  if (a.field_ != b.field_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].multiplicity != b.entries_[i].multiplicity || !(a.entries_[i].point == b.entries_[i].point)) {
      return false;
    }
  }
  return true;
}

bool Divisor::geq(const Divisor& o) const {
  const Field& f = common_field(*field_, *o.field_);
  const Divisor a = embedded(f).canonical().embedded(f);
  for (const Entry& e : o.embedded(f).canonical().embedded(f).entries_) {
    auto it = std::find_if(a.entries_.begin(), a.entries_.end(), [&](const Entry& x) { return x.point == e.point; });
    if (it == a.entries_.end() || it->multiplicity < e.multiplicity) return false;
  }
  return true;
}

std::string Divisor::to_string() const {
  std::ostringstream os;
  os << "divisor p^L=" << field_->p() << '^' << field_->degree() << '\n';
  for (const Entry& e : entries_) os << e.point.to_string() << ' ' << e.multiplicity << '\n';
  return os.str();
}

}  // namespace qj
