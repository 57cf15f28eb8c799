#include "newtonian/fermat_poly.hpp"

#include <stdexcept>

namespace newtonian {

namespace {

// Expansion of (c + y)^n as a polynomial in y.
Poly shifted_power(const Rat& c, unsigned n) {
  std::vector<Rat> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[k] = Rat(binomial(n, k)) * pow_rat(c, n - k);
  return Poly(std::move(coeffs));
}

void require_nonzero_a(const Rat& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
}

}  // namespace

Poly q_poly(unsigned n, const Rat& a) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  require_nonzero_a(a);
  std::vector<Rat> coeffs(n);  // degree n-1
  for (unsigned j = 1; j <= n; ++j)
    coeffs[n - j] = Rat(binomial(n, j)) * (pow_rat(Rat(10) + a, j) - pow_rat(Rat(10), j));
  return Poly(std::move(coeffs));
}

Poly p_poly(unsigned n, const Rat& a) {
  std::vector<Rat> coeffs(n + 1);
  for (unsigned j = 0; j <= n; ++j)
    coeffs[n - j] = Rat(binomial(n, j)) * (pow_rat(Rat(10) + a, j) + pow_rat(Rat(10), j));
  return Poly(std::move(coeffs));
}

Poly r1_lambda(const Rat& lambda) {
  if (lambda == 0 || lambda == 1) throw std::invalid_argument("excluded parameter");
  // delta_value(2, lambda*y) = 100 + 20*lambda*y + lambda^2*y^2
  Poly scaled(std::vector<Rat>{Rat(100), 20 * lambda, lambda * lambda});
  Poly plain = shifted_power(Rat(10), 2);
  return scaled - lambda * lambda * plain;
}

Poly r3_poly(const Rat& a, const Rat& b) {
  require_nonzero_a(a);
  if (b == 0) throw std::invalid_argument("b must be nonzero");
  return shifted_power(Rat(10) + a, 3) - shifted_power(Rat(10) + b, 3) -
         shifted_power(Rat(10), 3);
}

SymmetricCoefficients symmetric_coefficients(unsigned n, const Rat& a) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  require_nonzero_a(a);
  SymmetricCoefficients s;
  s.s1 = Rat(-(static_cast<long>(n) - 1)) * (a + 20) / 2;
  if (n >= 3)
    s.s2 = Rat(Int(n - 1) * Int(n - 2)) * (a * a + 30 * a + 300) / 6;
  // Product of the roots: ((-1)^(n-1)/n) * sum_{k<n} C(n,k) 10^k a^(n-1-k),
  // the explicit series form of ((10+a)^n - 10^n)/(n*a).
  Rat series(0);
  for (unsigned k = 0; k + 1 <= n; ++k)
    series += Rat(binomial(n, k)) * pow_rat(Rat(10), k) * pow_rat(a, n - 1 - k);
  s.s_last = series / n;
  if (n % 2 == 0) s.s_last = -s.s_last;
  return s;
}

namespace {

bool is_rational_square(const Rat& value) {
  return nth_root_exact(value, 2).has_value();
}

unsigned quadratic_galois_order(const Poly& p) {
  return is_rational_square(discriminant(p)) ? 1u : 2u;
}

unsigned cubic_galois_order(const Poly& p) {
  auto roots = rational_roots(p);
  if (roots.size() == 3) return 1;
  if (roots.size() == 1) {
    // Splitting field is that of the remaining quadratic factor.
    return quadratic_galois_order(p.deflate(roots.front()));
  }
  // Irreducible cubic: cyclic of order 3 when the discriminant is a square,
  // otherwise the full symmetric group of order 6.
  return is_rational_square(discriminant(p)) ? 3u : 6u;
}

}  // namespace

GaloisReport galois_order(unsigned n, const Rat& a) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  require_nonzero_a(a);
  GaloisReport report;
  report.degree = n - 1;
  report.claimed_order = factorial(n - 1);
  if (report.degree > 3) {
    report.status = GaloisReport::Status::claim_only;
    return report;
  }
  report.status = GaloisReport::Status::exact;
  switch (report.degree) {
    case 0:
    case 1:
      report.computed_order = 1;
      break;
    case 2:
      report.computed_order = quadratic_galois_order(q_poly(n, a));
      break;
    default:
      report.computed_order = cubic_galois_order(q_poly(n, a));
      break;
  }
  return report;
}

}  // namespace newtonian
