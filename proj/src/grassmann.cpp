#include "qj/grassmann.hpp"

namespace qj {

namespace {

constexpr int kPairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

int pair_index(int i, int j) {
  for (int k = 0; k < 10; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
  return -1;
}

// published position -> (standard index, sign)
constexpr int kDict[10][2] = {{0, -1}, {1, -1}, {3, 1}, {4, 1}, {6, 1}, {8, 1}, {2, -1}, {5, -1}, {7, -1}, {9, 1}};

}  // namespace

PluckerVector plucker(const ZPoint& z) {
  const Fe &a0 = z.A.a00, &a1 = z.A.a10, &a2 = z.A.a01;
  const Fe &b0 = z.B.b00, &b1 = z.B.b10, &b2 = z.B.b01;
  return PluckerVector{{a1 * b0 - b1 * a0, a2 * b0 - b2 * a0, -a0, a1 * b2 - a2 * b1, -a1, -a2, -b0, -b1, -b2,
                        a0.field().one()}};
}

StandardMinors standard_minors(const std::array<Fe, 5>& u, const std::array<Fe, 5>& v) {
  StandardMinors p;
  for (int k = 0; k < 10; ++k) {
    const auto i = static_cast<std::size_t>(kPairs[k][0]), j = static_cast<std::size_t>(kPairs[k][1]);
    p[static_cast<std::size_t>(k)] = u[i] * v[j] - u[j] * v[i];
  }
  return p;
}

StandardMinors to_standard(const PluckerVector& v) {
  StandardMinors p;
  for (int k = 0; k < 10; ++k) {
    const Fe& c = v.coords[static_cast<std::size_t>(k)];
    p[static_cast<std::size_t>(kDict[k][0])] = kDict[k][1] > 0 ? c : -c;
  }
  return p;
}

PluckerVector from_standard(const StandardMinors& p) {
  PluckerVector v;
  for (int k = 0; k < 10; ++k) {
    const Fe& c = p[static_cast<std::size_t>(kDict[k][0])];
    v.coords[static_cast<std::size_t>(k)] = kDict[k][1] > 0 ? c : -c;
  }
  return v;
}

PluckerVector normalized(const PluckerVector& v) {
  for (int k = 9; k >= 0; --k) {
    const Fe& c = v.coords[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Fe inv = c.inv();
    PluckerVector r;
    for (std::size_t i = 0; i < 10; ++i) r.coords[i] = v.coords[i] * inv;
    return r;
  }
  return v;
}

bool projectively_equal(const PluckerVector& a, const PluckerVector& b) { return normalized(a) == normalized(b); }

bool plucker_relations_check(const PluckerVector& v) {
  const StandardMinors p = to_standard(v);
  auto P = [&](int i, int j) { return p[static_cast<std::size_t>(pair_index(i, j))]; };
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l) {
          if (!(P(i, j) * P(k, l) - P(i, k) * P(j, l) + P(i, l) * P(j, k)).is_zero()) return false;
        }
  return true;
}

PluckerVector plucker_of_divisor(const CurveContext& ctx, const Divisor& D) {
  const Field& K = ctx.field();
  std::vector<Form> basis{monomial_form(K, 2, 0, 0), monomial_form(K, 2, 1, 0), monomial_form(K, 2, 0, 1),
                          monomial_form(K, 2, 2, 0), monomial_form(K, 2, 1, 1)};
  const auto ker = kernel(interpolation_system(ctx, D, basis).matrix);
  if (ker.size() != 2) fail(ErrorCode::SingularSystem, "conditions of D on conics through inf are not independent");
  std::array<Fe, 5> u, v;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!try_restrict(ker[0][i], K, u[i]) || !try_restrict(ker[1][i], K, v[i])) {
      fail(ErrorCode::InternalConsistency, "pencil of a Galois-stable divisor is not rational");
    }
  }
  return normalized(from_standard(standard_minors(u, v)));
}

}  // namespace qj
