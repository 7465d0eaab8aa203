#include "qj/counting.hpp"

#include <cmath>

namespace qj {

namespace {

const Field& counting_field(const CurveContext& ctx, int k, const CountOptions& opts) {
  if (k < 1 || k > 3) fail(ErrorCode::BudgetExceeded, "point counts are only needed for k = 1, 2, 3");
  const Field& T = Field::extension(ctx.field().p(), k);
  const std::uint64_t q = T.size_or_zero();
  if (q == 0 || q > opts.budget) {
    fail(ErrorCode::BudgetExceeded, "p^" + std::to_string(k) + " exceeds the enumeration budget");
  }
  return T;
}

std::vector<Poly> affine_over(const CurveContext& ctx, const Field& T) {
  std::vector<Poly> out;
  for (const Poly& q : ctx.affine_by_y()) out.push_back(q.embedded(T));
  return out;
}

int stratum(const std::vector<Poly>& f, const Field& T, std::uint64_t idx) {
  const Fe x = T.element_at(idx);
  std::vector<Fe> c;
  for (const Poly& q : f) c.push_back(q.eval(x));
  return count_distinct_roots(Poly(T, std::move(c)));
}

}  // namespace

std::int64_t count_points(const CurveContext& ctx, int k, const CountOptions& opts) {
  const Field& T = counting_field(ctx, k, opts);
  const auto f = affine_over(ctx, T);
  const auto q = static_cast<std::int64_t>(T.size_or_zero());
  std::int64_t total = 1;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t idx = 0; idx < q; ++idx) total += stratum(f, T, static_cast<std::uint64_t>(idx));
  return total;
}

std::int64_t count_points_serial(const CurveContext& ctx, int k, const CountOptions& opts) {
  const Field& T = counting_field(ctx, k, opts);
  const auto f = affine_over(ctx, T);
  std::int64_t total = 1;
  for (std::uint64_t idx = 0; idx < T.size_or_zero(); ++idx) total += stratum(f, T, idx);
  return total;
}

std::int64_t count_points_naive(const CurveContext& ctx, int k, const CountOptions& opts) {
  const Field& T = counting_field(ctx, k, opts);
  const std::uint64_t q = T.size_or_zero();
  if (q > 5000) fail(ErrorCode::BudgetExceeded, "pair enumeration is limited to p^k <= 5000");
  const Form F = ctx.F().embedded(T);
  std::int64_t total = 1;
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j)
      if (F.eval(T.element_at(i), T.element_at(j), T.one()).is_zero()) ++total;
  return total;
}

ZetaData zeta_from_counts(std::uint32_t p, std::int64_t N1, std::int64_t N2, std::int64_t N3) {
  const std::int64_t P = p;
  ZetaData z{N1, N2, N3, {}, 0};
  // S_k = sum of the k-th powers of the Frobenius eigenvalues
  const std::int64_t S1 = P + 1 - N1, S2 = P * P + 1 - N2, S3 = P * P * P + 1 - N3;
  const std::int64_t a1 = -S1;
  const std::int64_t t2 = -(S2 + a1 * S1);
  if (t2 % 2) fail(ErrorCode::InconsistentCounts, "Newton identity for a2 is not integral");
  const std::int64_t a2 = t2 / 2;
  const std::int64_t t3 = -(S3 + a1 * S2 + a2 * S1);
  if (t3 % 3) fail(ErrorCode::InconsistentCounts, "Newton identity for a3 is not integral");
  const std::int64_t a3 = t3 / 3;
  z.L = {1, a1, a2, a3, P * a2, P * P * a1, P * P * P};
  if ((N1 - P - 1) * (N1 - P - 1) > 36 * P) fail(ErrorCode::InconsistentCounts, "N1 violates the Hasse-Weil bound");
  if (N2 < N1) fail(ErrorCode::InconsistentCounts, "N2 < N1");
  for (std::int64_t c : z.L) z.order += c;
  if (z.order <= 0) fail(ErrorCode::InconsistentCounts, "L(1) is not positive");
  // |L(1) - (p + 1)^3| is bounded by the Weil bound on each factor
  const double sp = std::sqrt(static_cast<double>(P));
  if (static_cast<double>(z.order) < std::pow(sp - 1, 6) - 0.5 || static_cast<double>(z.order) > std::pow(sp + 1, 6) + 0.5) {
    fail(ErrorCode::InconsistentCounts, "L(1) outside the Weil interval");
  }
  return z;
}

ZetaData jacobian_order(const CurveContext& ctx, const CountOptions& opts) {
  return zeta_from_counts(ctx.field().p(), count_points(ctx, 1, opts), count_points(ctx, 2, opts),
                          count_points(ctx, 3, opts));
}

}  // namespace qj
