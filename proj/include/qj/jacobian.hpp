#pragma once

// The group of classes D - 3 inf, D effective of degree 3.

#include <cstdint>
#include <optional>

#include "qj/pencil.hpp"

namespace qj {

struct JacobianClass {
  Divisor rep;
  std::optional<ZPoint> certificate;  // present iff rep is non-special
};

/// Wraps D, attaching the pencil certificate when D is non-special.
JacobianClass make_class(const CurveContext& ctx, const Divisor& D);

/// X . {x = 0} - inf.
JacobianClass zero_class(const CurveContext& ctx);

/// H' = H - lambda A loses its x^2 term; new B = H' / s; the new G is then
/// moved by mu times the new B to restore g11 = 1.
struct NegScalars {
  Fe s, lambda, mu;
};

/// (A, B, G, H) -> (A, H, G, B) up to the pencil gauge and the scalings
/// that restore the normal forms. Errors: ShapeViolation.
ZPoint neg(const ZPoint& z, NegScalars* scalars = nullptr);

/// Class of X . Q - D - 2 inf for the first conic Q with X . Q >= D + 2 inf.
JacobianClass neg_class(const CurveContext& ctx, const JacobianClass& c);

bool is_zero(const CurveContext& ctx, const JacobianClass& c);

JacobianClass add(const CurveContext& ctx, const JacobianClass& c1, const JacobianClass& c2);

JacobianClass scalar_mul(const CurveContext& ctx, std::int64_t n, const JacobianClass& c);

bool class_equal(const CurveContext& ctx, const JacobianClass& c1, const JacobianClass& c2);

/// 15 x 17 matrix of A' G + A G' + B' H + B H' = 0 in the unknowns
/// (A': 3, B': 3, G': 5 without xy, H': 6); with full_g, G' has all 6.
Matrix tangent_matrix(const CurveContext& ctx, const ZPoint& z, bool full_g = false);
int tangent_dimension(const CurveContext& ctx, const ZPoint& z);

/// Random class with a non-special representative (any splitting type).
JacobianClass random_class(const CurveContext& ctx, std::uint64_t seed);

}  // namespace qj
