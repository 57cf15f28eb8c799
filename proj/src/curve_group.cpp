#include "newtonian/curve_group.hpp"

#include <stdexcept>

#include "newtonian/fermat_poly.hpp"

namespace newtonian {

bool on_p_curve(const Rat& x, const Rat& y, const Rat& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  return y * y == 2 * a * x + a * (20 + a);
}

Rat GroupPoint::x() const {
  return p * p * z * z / (2 * a) + p * q * z / a + (q * q - a * (20 + a)) / (2 * a);
}

Rat GroupPoint::y() const { return p * z + q; }

GroupPoint make_point(const Rat& p, const Rat& q, const Rat& z, const Rat& a) {
  if (p == 0 || q == 0) throw std::invalid_argument("p and q must be nonzero");
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  return GroupPoint{p, q, z, a};
}

GroupPoint group_mul(const GroupPoint& u, const GroupPoint& v) {
  if (u.z != v.z || u.a != v.a) throw std::invalid_argument("points on different fibers");
  return GroupPoint{u.p * v.p, u.q * v.q, u.z, u.a};
}

GroupPoint group_identity(const Rat& z, const Rat& a) {
  return make_point(Rat(1), Rat(1), z, a);
}

GroupPoint group_inverse(const GroupPoint& u) {
  return GroupPoint{1 / u.p, 1 / u.q, u.z, u.a};
}

ECurveCandidate ea_candidate(const Rat& p, const Rat& q, const Rat& z, const Int& k) {
  if (k == 0) throw std::invalid_argument("k must be nonzero");
  if (p == 0 || q == 0) throw std::invalid_argument("p and q must be nonzero");
  ECurveCandidate c{p, q, z, k, make_rational(k * k, Int(3)), Rat(0), Rat(0), Rat(0)};
  const Rat root_3a = Rat(Int(abs(k)));  // sqrt(3a) with a = k^2/3
  const Rat a = c.a;
  c.x = p / root_3a * z + (2 * p * q * root_3a - (3 * a * a + 60 * a) * p) / (6 * a * p);
  c.y = p * z + q;
  c.residual = q_poly(3, a)(c.x) - c.y * c.y;
  return c;
}

std::vector<CurvePoint> fermat_curve_points(unsigned n, const Rat& a, unsigned bound) {
  if (n <= 2) throw std::invalid_argument("n must exceed 2");
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  const Poly q = q_poly(n, a);
  std::vector<CurvePoint> points;
  for (unsigned long den = 1; den <= bound; ++den) {
    for (long num = -static_cast<long>(bound); num <= static_cast<long>(bound); ++num) {
      if (gcd(Int(num), Int(den)) != 1) continue;
      Rat x = make_rational(Int(num), Int(den));
      if (x == -10 || x == Rat(-10) - a) continue;  // vanishing power sides
      auto witness = nth_root_exact(q(x), n);
      if (!witness || witness->root == 0) continue;
      points.push_back(CurvePoint{x, witness->root});
      if (n % 2 == 0) points.push_back(CurvePoint{x, -witness->root});
    }
  }
  return points;
}

}  // namespace newtonian
