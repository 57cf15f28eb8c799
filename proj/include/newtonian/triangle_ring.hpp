#pragma once

#include <algorithm>
#include <stdexcept>

#include "newtonian/triangle.hpp"

namespace newtonian {

// Ring element: the row N(y, n) represented by its index y with n as a tag.
// Addition and multiplication act on the index; entries are materialized on
// demand. Indices are rational so the fraction-field variant shares the type;
// the integral subring is the case is_integral(y).
struct RingRow {
  Rat y;
  unsigned n = 0;

  Row materialize() const { return row(y, n); }
  bool operator==(const RingRow&) const = default;
};

// Whole triangle T(y) under the same index operations.
struct RingTriangle {
  Rat y;
  unsigned depth = 0;

  Triangle materialize() const { return triangle(y, depth); }
  bool operator==(const RingTriangle&) const = default;
};

inline void require_same_rank(const RingRow& u, const RingRow& v) {
  if (u.n != v.n) throw std::invalid_argument("incompatible rows");
}

inline RingRow add(const RingRow& u, const RingRow& v) {
  require_same_rank(u, v);
  return {u.y + v.y, u.n};
}

inline RingRow mul(const RingRow& u, const RingRow& v) {
  require_same_rank(u, v);
  return {u.y * v.y, u.n};
}

inline RingRow scalar_mul(const Int& scalar, const RingRow& u) {
  return {Rat(scalar) * u.y, u.n};
}

inline RingRow ring_identity(unsigned n) { return {Rat(1), n}; }
inline RingRow ring_zero(unsigned n) { return {Rat(0), n}; }

// Multiplicative inverse in the fraction-field variant; y must be nonzero.
inline RingRow inverse(const RingRow& u) {
  if (u.y == 0) throw std::domain_error("zero row has no inverse");
  return {1 / u.y, u.n};
}

// Triangle operations mirror the row ones. Mixed depths are normalized to
// the larger of the two.
inline RingTriangle add(const RingTriangle& u, const RingTriangle& v) {
  return {u.y + v.y, std::max(u.depth, v.depth)};
}

inline RingTriangle mul(const RingTriangle& u, const RingTriangle& v) {
  return {u.y * v.y, std::max(u.depth, v.depth)};
}

inline RingTriangle scalar_mul(const Int& scalar, const RingTriangle& u) {
  return {Rat(scalar) * u.y, u.depth};
}

}  // namespace newtonian
