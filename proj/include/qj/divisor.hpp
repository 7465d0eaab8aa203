#pragma once

// Degree-3 effective divisors: membership in the non-special locus and
// seeded sampling.

#include <cstdint>
#include <set>
#include <string>

#include "qj/curve.hpp"
#include "qj/linalg.hpp"

namespace qj {

enum class Violation {
  ContainsInfinity,
  ThreePointsCollinear,
  TwoPointsPlusInfinityCollinear,
  TangentThroughInfinity,
};
std::string_view violation_name(Violation v);

struct MembershipReport {
  bool in_Z = false;
  std::set<Violation> violations;
};

/// Errors: WrongDegree, PointOffCurve.
MembershipReport classify(const CurveContext& ctx, const Divisor& D);

/// Linear conditions (over D's field) for sum_j u_j basis_j + fixed to meet
/// X in a divisor >= D.
struct LinearSystem {
  Matrix matrix;
  std::vector<Fe> rhs;
};
LinearSystem interpolation_system(const CurveContext& ctx, const Divisor& D, const std::vector<Form>& basis,
                                  const Form* fixed = nullptr);

/// All forms of the given degree in monomial order.
std::vector<Form> monomial_basis(const Field& f, int degree);

struct SamplerOptions {
  int max_draws = 100000;
};

/// Three F_p-rational points drawn with mt19937_64(seed), resampled until the
/// divisor lies in the non-special locus. Errors: SamplingExhausted.
Divisor random_reduced_divisor(const CurveContext& ctx, std::uint64_t seed, const SamplerOptions& opts = {});

/// Like random_reduced_divisor, but the divisor is assembled from closed
/// points of degree 1, 2 or 3 (splitting type 1+1+1, 1+2 or 3, chosen by the
/// seed). Needed on curves with few rational points.
Divisor random_reduced_divisor_any(const CurveContext& ctx, std::uint64_t seed, const SamplerOptions& opts = {});

}  // namespace qj
