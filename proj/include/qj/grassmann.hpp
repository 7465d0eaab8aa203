#pragma once

// The pencil <A, B> as a point of the Grassmannian of 2-planes in the space V
// of conics through inf, with basis (z^2, xz, yz, x^2, xy).

#include <array>

#include "qj/pencil.hpp"

namespace qj {

/// The published 10-tuple:
/// (a1 b0 - b1 a0, a2 b0 - b2 a0, -a0, a1 b2 - a2 b1, -a1, -a2, -b0, -b1, -b2, 1)
/// with (a0, a1, a2) = (a00, a10, a01) and (b0, b1, b2) = (b00, b10, b01).
struct PluckerVector {
  std::array<Fe, 10> coords;
  bool operator==(const PluckerVector& o) const { return coords == o.coords; }
};

PluckerVector plucker(const ZPoint& z);

/// Minors p_ij (i < j, lexicographic: 01, 02, 03, 04, 12, 13, 14, 23, 24, 34)
/// of the 2 x 5 matrix with rows A, B in the basis above.
using StandardMinors = std::array<Fe, 10>;
StandardMinors standard_minors(const std::array<Fe, 5>& u, const std::array<Fe, 5>& v);

/// Published tuple = (-p01, -p02, p04, p12, p14, p24, -p03, -p13, -p23, p34).
StandardMinors to_standard(const PluckerVector& v);
PluckerVector from_standard(const StandardMinors& p);

/// Scales so that the last nonzero coordinate is 1.
PluckerVector normalized(const PluckerVector& v);
bool projectively_equal(const PluckerVector& a, const PluckerVector& b);

/// The five three-term quadratic relations.
bool plucker_relations_check(const PluckerVector& v);

/// Plücker vector of the pencil {Q in V : X . Q >= D} for any degree-3 D
/// whose conditions on V have rank 3. Injective only on the non-special
/// locus. Errors: SingularSystem.
PluckerVector plucker_of_divisor(const CurveContext& ctx, const Divisor& D);

}  // namespace qj
