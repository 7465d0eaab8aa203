#pragma once

// Coordinates on the quotient by -1: F = A G~ + Q with Q = B H~, where the
// pencil gauge is fixed so that H~ (like B) has no x^2 term. Negation swaps
// the two factors of Q, so (A, G~, Q) is invariant.

#include <optional>
#include <utility>

#include "qj/jacobian.hpp"

namespace qj {

struct KummerCoords {
  ConicA A;
  Form G;  // conic
  Form Q;  // quartic
  bool operator==(const KummerCoords& o) const { return A == o.A && G == o.G && Q == o.Q; }
};

KummerCoords kummer_coords(const CurveContext& ctx, const ZPoint& z);

/// c30 = c03 = c40 = c13 = c31 = c04 = 0, where c_ij is the coefficient of
/// x^i y^j z^(4-i-j).
bool kummer_vanishing_pattern(const Form& Q);

struct KummerCheck {
  bool pattern_ok = false;
  bool reducible = false;
  /// Conics through inf and (1:0:0) whose product is Q.
  std::optional<std::pair<Form, Form>> witness;
};

/// Decides whether Q is a product of two conics vanishing at inf and (1:0:0).
KummerCheck kummer_reducibility_check(const Form& Q);

}  // namespace qj
