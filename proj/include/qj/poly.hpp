#pragma once

// Univariate polynomials over a finite field, with factorization
// (square-free, distinct-degree, Cantor-Zassenhaus) and root finding.

#include <cstdint>
#include <utility>
#include <vector>

#include "qj/fields.hpp"

namespace qj {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Fe> coeffs);
  static Poly constant(const Fe& c);
  static Poly monomial(const Fe& c, int degree);
  /// x - r
  static Poly linear_root(const Fe& r);
  /// From small integer coefficients, low degree first.
  static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> c);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Fe>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  Fe operator[](int i) const;
  Fe lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Fe& s) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  bool operator==(const Poly& o) const;

  Poly monic() const;
  Poly derivative() const;
  Fe eval(const Fe& x) const;
  Poly embedded(const Field& target) const;
  Poly pow(unsigned e) const;

  /// Lexicographic by degree, then coefficients from the top.
  bool canonical_less(const Poly& o) const;
  std::string to_string() const;

 private:
  void trim();
  const Field* field_ = nullptr;
  std::vector<Fe> c_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m, with an arbitrary-size exponent given in base p digits via
/// the Frobenius trick where needed.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// base^{q} mod m where q = |field|.
Poly frobenius_mod(const Poly& base, const Poly& m);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

/// Square-free decomposition: pairs (square-free monic g, multiplicity).
std::vector<Factor> squarefree_factorization(const Poly& f);
/// Distinct-degree factorization of a monic square-free f.
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);
/// Cantor-Zassenhaus splitting of a monic square-free f whose irreducible
/// factors all have degree d. Deterministic PRNG seeded from f.
std::vector<Poly> equal_degree_factorization(const Poly& f, int d);
/// Complete factorization; factors sorted canonically. Throws ZeroPolynomial.
std::vector<Factor> factor(const Poly& f);

struct Root {
  Fe value;
  int multiplicity;
};

/// Roots of f lying in f's own field, sorted by lex order, with multiplicity.
std::vector<Root> roots(const Poly& f);
/// Number of distinct roots of f in its field (deg gcd(f, x^q - x)).
int count_distinct_roots(const Poly& f);

struct SplittingField {
  const Field* field;
  std::vector<Root> roots;
};

inline constexpr int kDefaultSplittingBound = 24;

/// Smallest F_{p^L} containing all roots of f, with every root there.
/// Throws DegreeOverflow when L exceeds bound.
SplittingField splitting_field(const Poly& f, int bound = kDefaultSplittingBound);

/// Square root in a finite field, if one exists (smallest in lex order).
bool try_sqrt(const Fe& a, Fe& out);

}  // namespace qj
