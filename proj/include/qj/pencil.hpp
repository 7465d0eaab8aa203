#pragma once

// The pencil representation of non-special degree-3 divisors: D maps to the
// conics A, B through D + inf (A also tangent to z = 0 at inf), completed by
// G, H with F = A G + B H and the xy-coefficient of G equal to 1.

#include <string>
#include <utility>
#include <vector>

#include "qj/divisor.hpp"

namespace qj {

/// a00 z^2 + a10 xz + a01 yz - x^2
struct ConicA {
  Fe a00, a10, a01;
  Form form() const;
  bool operator==(const ConicA& o) const { return a00 == o.a00 && a10 == o.a10 && a01 == o.a01; }
};

/// b00 z^2 + b10 xz + b01 yz - xy
struct ConicB {
  Fe b00, b10, b01;
  Form form() const;
  bool operator==(const ConicB& o) const { return b00 == o.b00 && b10 == o.b10 && b01 == o.b01; }
};

/// Coefficient of x^i y^j z^(2-i-j) in a conic.
inline Fe conic_coeff(const Form& c, int i, int j) { return c.coeff(i, j); }

struct ZPoint {
  ConicA A;
  ConicB B;
  Form G;  // xy-coefficient 1
  Form H;
  bool operator==(const ZPoint& o) const { return A == o.A && B == o.B && G == o.G && H == o.H; }
};

/// Errors: NotInZ (D outside the non-special locus), SingularSystem.
std::pair<ConicA, ConicB> conics_from_divisor(const CurveContext& ctx, const Divisor& D);

/// The unique (G, H) with F = A G + B H and g11 = 1. Errors: NoDecomposition.
std::pair<Form, Form> complete_decomposition(const CurveContext& ctx, const ConicA& A, const ConicB& B);

/// Dimension of the space of (G, H) with A G + B H = 0 restricted to the
/// 12 unknowns, i.e. the freedom left before pinning g11.
int decomposition_freedom(const CurveContext& ctx, const ConicA& A, const ConicB& B);

ZPoint zpoint_from_divisor(const CurveContext& ctx, const Divisor& D);

/// D with A . B = D + inf. Errors: CommonComponent, NotInZ.
Divisor divisor_from_conics(const CurveContext& ctx, const ConicA& A, const ConicB& B);

struct ZValidation {
  bool ok = false;
  /// Monomials (e.g. "x^2yz") where A G + B H and F differ.
  std::vector<std::string> failed_monomials;
  bool reducible_A = false;
  bool g11_not_one = false;
};
ZValidation zpoint_validate(const CurveContext& ctx, const ZPoint& z);

std::string monomial_name(int degree, int index);

/// Determinant of the symmetric matrix of a conic; zero iff it is reducible.
Fe conic_determinant(const Form& c);

}  // namespace qj
