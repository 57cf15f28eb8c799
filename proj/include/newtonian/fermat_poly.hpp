#pragma once

#include <optional>

#include "newtonian/polynomial.hpp"

namespace newtonian {

// The difference polynomial behind the power-sum equations:
//   q_poly(n, a)(y) = delta_value(n, y+a) - delta_value(n, y),
// degree n-1, with the coefficient of y^(n-j) equal to
// C(n,j)*((10+a)^j - 10^j). Requires n >= 1 and a != 0.
Poly q_poly(unsigned n, const Rat& a);

// Companion sum: delta_value(n, y+a) + delta_value(n, y), degree n.
Poly p_poly(unsigned n, const Rat& a);

// Residual of scaling row 2: delta_value(2, lambda*y) - lambda^2 * delta_value(2, y),
// computed by expansion. Requires lambda outside {0, 1}.
Poly r1_lambda(const Rat& lambda);

// Cubic residual delta_value(3, y+a) - delta_value(3, y+b) - delta_value(3, y);
// encodes four-cube identities. Requires a != 0 and b != 0.
Poly r3_poly(const Rat& a, const Rat& b);

// Elementary symmetric functions of the roots of the monic normalization
// q_poly(n,a)/(n*a): s1 (sum), s2 (pair sum, defined for n >= 3) and
// s_last (product), all in closed form. Requires n >= 2, a != 0.
struct SymmetricCoefficients {
  Rat s1;
  std::optional<Rat> s2;
  Rat s_last;
};

SymmetricCoefficients symmetric_coefficients(unsigned n, const Rat& a);

// Order of the Galois group of q_poly(n, a), computed exactly for
// degree <= 3 (linear/quadratic/cubic classification over Q) and otherwise
// reported as the claimed value (degree)! only.
struct GaloisReport {
  enum class Status { exact, claim_only };
  unsigned degree = 0;
  std::optional<unsigned> computed_order;  // present iff degree <= 3
  Int claimed_order;                       // (degree)!
  Status status = Status::exact;
};

GaloisReport galois_order(unsigned n, const Rat& a);

}  // namespace newtonian
