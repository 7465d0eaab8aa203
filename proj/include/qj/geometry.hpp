#pragma once

// Plane forms, projective points, truncated power series and effective
// divisors: the shared vocabulary of the curve, pencil and jacobian modules.

#include <string>
#include <vector>

#include "qj/fields.hpp"
#include "qj/poly.hpp"

namespace qj {

// Monomials x^ex y^ey z^ez of degree d are ordered by descending ex, then
// descending ey: x^4, x^3y, x^3z, x^2y^2, ... , z^4 for quartics and
// x^2, xy, xz, y^2, yz, z^2 for conics.
struct Monomial {
  int ex, ey, ez;
};
int monomial_count(int degree);
int monomial_index(int degree, int ex, int ey);
Monomial monomial_at(int degree, int index);

struct PlanePoint;
class Series;

/// Homogeneous form of degree 1..4 (PlaneForm; a Quartic is a degree-4 form).
class Form {
 public:
  Form() = default;
  Form(const Field& f, int degree);
  Form(const Field& f, int degree, std::vector<Fe> coeffs);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  Fe coeff(int ex, int ey) const { return c_[static_cast<std::size_t>(monomial_index(degree_, ex, ey))]; }
  void set(int ex, int ey, const Fe& v);
  bool is_zero() const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form operator*(const Fe& s) const;
  bool operator==(const Form& o) const;

  /// var: 0 = x, 1 = y, 2 = z.
  Form partial(int var) const;
  Form embedded(const Field& target) const;
  /// Value at (x, y, z); coefficients are embedded into the point's field.
  Fe eval(const Fe& x, const Fe& y, const Fe& z) const;
  Fe eval(const PlanePoint& p) const;
  /// Form evaluated on a series point (z taken from the parametrization).
  Series eval(const Series& x, const Series& y, const Series& z) const;
  /// Affine part f(x, y) = F(x, y, 1) as coefficients of y^j in F[x].
  std::vector<Poly> affine_by_y() const;

  /// Space-separated coefficients in monomial order.
  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  int degree_ = 0;
  std::vector<Fe> c_;
};

/// Single monomial form.
Form monomial_form(const Field& f, int degree, int ex, int ey);

/// Projective point normalized so the last nonzero coordinate is 1.
struct PlanePoint {
  Fe x, y, z;

  static PlanePoint make(const Fe& x, const Fe& y, const Fe& z);
  static PlanePoint affine(const Fe& x, const Fe& y);
  static PlanePoint infinity(const Field& f);

  const Field& field() const { return x.field(); }
  bool is_infinity() const { return z.is_zero(); }
  PlanePoint embedded(const Field& target) const;
  PlanePoint frobenius() const;
  /// Degree of the smallest field containing all coordinates.
  int algebraic_degree() const;
  bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y && z == o.z; }
  std::strong_ordering lex_compare(const PlanePoint& o) const;
  std::string to_string() const;
};

/// Power series in t truncated to a fixed number of terms.
class Series {
 public:
  Series(const Field& f, int terms) : field_(&f), c_(static_cast<std::size_t>(terms), f.zero()) {}
  static Series constant(const Fe& c, int terms);

  int terms() const { return static_cast<int>(c_.size()); }
  const Field& field() const { return *field_; }
  Fe& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Fe& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Fe& s) const;
  /// Index of the first nonzero coefficient, or terms() if none.
  int order() const;

 private:
  const Field* field_;
  std::vector<Fe> c_;
};

/// Effective divisor: points with positive multiplicities, all over one field.
/// canonical() merges repeated points, sorts by coordinates and shrinks the
/// field to the one generated by the coordinates, so equality is structural.
class Divisor {
 public:
  struct Entry {
    PlanePoint point;
    int multiplicity;
  };

  Divisor() = default;
  explicit Divisor(const Field& f) : field_(&f) {}
  Divisor(const Field& f, std::vector<Entry> entries);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  const std::vector<Entry>& entries() const { return entries_; }
  int degree() const;
  int multiplicity(const PlanePoint& p) const;
  bool contains_infinity() const;
  bool empty() const { return entries_.empty(); }

  Divisor embedded(const Field& target) const;
  Divisor canonical() const;
  /// Frobenius applied to every point.
  Divisor frobenius() const;

  /// Sum, over the smallest field containing both supports.
  Divisor operator+(const Divisor& o) const;
  /// Difference; throws InternalConsistency unless o <= *this.
  Divisor operator-(const Divisor& o) const;
  bool operator==(const Divisor& o) const;
  bool geq(const Divisor& o) const;

  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  std::vector<Entry> entries_;
};

/// The field F_{p^lcm(a,b)} containing both.
const Field& common_field(const Field& a, const Field& b);

}  // namespace qj
