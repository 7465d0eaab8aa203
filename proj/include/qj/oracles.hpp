#pragma once

// Brute-force references for tiny fields. They share only field and
// polynomial arithmetic with the library.

#include <array>
#include <optional>
#include <vector>

#include "qj/curve.hpp"

namespace qj::oracle {

/// Every element of F_{p^k} with f(r) = 0, with multiplicity (read off from
/// derivatives, so valid for multiplicities < p).
std::vector<Root> roots_by_search(const Poly& f, const Field& T);

/// Reduced: every multiplicity is 1 and inf is not in the support.
bool is_reduced_affine(const Divisor& D);

/// Conics q20 x^2 + q10 xz + q01 yz + q00 z^2 (so tangent to z = 0 at inf)
/// vanishing on every point of a reduced D, found by enumerating all of
/// F_p^4 up to scale.
std::vector<std::array<Fe, 4>> tangent_conics_through(const CurveContext& ctx, const Divisor& D);

/// Reduced D of degree 6: D ~ 6 inf iff such a conic exists.
bool equivalent_to_six_inf(const CurveContext& ctx, const Divisor& D);

/// Reduced D of degree 3: D ~ 3 inf iff some line x = c z passes through D.
bool is_zero_by_lines(const CurveContext& ctx, const Divisor& D);

/// D- with D + D- + 2 inf cut out by a tangent conic, when both D and D- are
/// reduced and the residual points lie in F_{p^6}.
std::optional<Divisor> negative(const CurveContext& ctx, const Divisor& D);

/// Decides D1 - 3 inf == D2 - 3 inf as D1 + D2- ~ 6 inf, when every divisor
/// involved is reduced; nullopt otherwise. Classes of degree-3 reduced
/// divisors equivalent to 3 inf are settled by is_zero_by_lines.
std::optional<bool> linearly_equivalent(const CurveContext& ctx, const Divisor& D1, const Divisor& D2);

}  // namespace qj::oracle
