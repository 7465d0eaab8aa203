#pragma once

#include <functional>
#include <map>
#include <vector>

#include "doctest.h"

#include "qj/jacobian.hpp"

namespace qjt {

inline const qj::CurveContext& ref(std::uint32_t p) {
  static std::map<std::uint32_t, qj::CurveContext> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, qj::curve_validate(qj::reference_quartic(qj::Field::prime(p)))).first;
  return it->second;
}

/// Code of the qj::Error thrown by f; fails the test if none is thrown.
inline qj::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const qj::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return qj::ErrorCode::InternalConsistency;
}

inline qj::Fe fp(std::uint32_t p, std::int64_t v) { return qj::Field::prime(p).from_int(v); }

/// Affine F_p-rational points of the curve, by enumeration of all (x, y).
inline std::vector<qj::PlanePoint> rational_points(const qj::CurveContext& ctx) {
  const qj::Field& K = ctx.field();
  std::vector<qj::PlanePoint> out;
  for (std::uint32_t x = 0; x < K.p(); ++x)
    for (std::uint32_t y = 0; y < K.p(); ++y)
      if (ctx.F().eval(K.from_int(x), K.from_int(y), K.one()).is_zero())
        out.push_back(qj::PlanePoint::affine(K.from_int(x), K.from_int(y)));
  return out;
}

inline qj::Divisor divisor_of(const std::vector<qj::PlanePoint>& pts) {
  std::vector<qj::Divisor::Entry> es;
  for (const auto& p : pts) es.push_back({p, 1});
  return qj::Divisor(pts.front().field(), es).canonical();
}

}  // namespace qjt
