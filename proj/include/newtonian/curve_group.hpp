#pragma once

#include <vector>

#include "newtonian/rational.hpp"

namespace newtonian {

// The Pythagorean curve P_a: y^2 = 2a*x + a(20+a), a != 0.
bool on_p_curve(const Rat& x, const Rat& y, const Rat& a);

// Parametrized point on P_a. The group product is defined on the parameters
// (p, q), which the coordinates alone do not determine, so the point stores
// (p, q, z, a) and derives (x, y):
//   y = p*z + q,   x = p^2 z^2/2a + pq z/a + (q^2 - a(20+a))/2a.
struct GroupPoint {
  Rat p, q, z, a;  // p, q, a nonzero

  Rat x() const;
  Rat y() const;
  bool operator==(const GroupPoint&) const = default;
};

GroupPoint make_point(const Rat& p, const Rat& q, const Rat& z, const Rat& a);

// Componentwise product on (p, q). Both points must share z and a.
GroupPoint group_mul(const GroupPoint& u, const GroupPoint& v);
GroupPoint group_identity(const Rat& z, const Rat& a);
GroupPoint group_inverse(const GroupPoint& u);

// Candidate point for the quadratic curve E_a: y^2 = q_poly(3,a)(x), built
// from the parametrization that requires a = k^2/3 so that sqrt(3a) = |k| is
// rational. The membership residual q_poly(3,a)(x) - y^2 is reported rather
// than asserted zero; it works out to a^3/4 for every choice of parameters.
struct ECurveCandidate {
  Rat p, q, z;
  Int k;
  Rat a;
  Rat x, y;
  Rat residual;
};

ECurveCandidate ea_candidate(const Rat& p, const Rat& q, const Rat& z, const Int& k);

struct CurvePoint {
  Rat x, y;
  bool operator==(const CurvePoint&) const = default;
};

// Bounded hunt for points on the power curve y^n = q_poly(n,a)(x), n > 2,
// over rationals x with |numerator| and denominator at most `bound`.
// Candidates where any side of the underlying power-sum identity vanishes
// (y = 0, x = -10 or x = -10-a) are skipped, matching the curve set's
// restriction to nonzero solutions. Expected empty at every tested bound.
std::vector<CurvePoint> fermat_curve_points(unsigned n, const Rat& a, unsigned bound);

}  // namespace newtonian
