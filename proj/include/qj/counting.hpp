#pragma once

// Point counts over F_{p^k}, k <= 3, and the zeta function of X.

#include <array>
#include <cstdint>

#include "qj/curve.hpp"

namespace qj {

struct CountOptions {
  std::uint64_t budget = 1'000'000;  // max p^k
};

/// #X(F_{p^k}) = 1 + sum over x of the number of distinct roots of f(x, y).
/// OpenMP over the x-strata. Errors: BudgetExceeded.
std::int64_t count_points(const CurveContext& ctx, int k, const CountOptions& opts = {});

/// Same sweep on one thread.
std::int64_t count_points_serial(const CurveContext& ctx, int k, const CountOptions& opts = {});

/// Evaluates F on every affine pair (x, y); only for small p^k.
std::int64_t count_points_naive(const CurveContext& ctx, int k, const CountOptions& opts = {});

struct ZetaData {
  std::int64_t N1 = 0, N2 = 0, N3 = 0;
  std::array<std::int64_t, 7> L{};  // L[0] = 1, ..., L[6] = p^3
  std::int64_t order = 0;
};

/// Errors: InconsistentCounts.
ZetaData zeta_from_counts(std::uint32_t p, std::int64_t N1, std::int64_t N2, std::int64_t N3);

/// Errors: BudgetExceeded, InconsistentCounts.
ZetaData jacobian_order(const CurveContext& ctx, const CountOptions& opts = {});

}  // namespace qj
