#pragma once

#include <vector>

#include "newtonian/rational.hpp"

namespace newtonian {

// Dense univariate polynomial with exact rational coefficients.
// Stored ascending (coeffs_[k] is the coefficient of y^k) and kept trimmed,
// so the leading coefficient is nonzero unless the polynomial is zero
// (empty coefficient list, degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending);
  static Poly constant(const Rat& c);
  static Poly from_descending(const std::vector<Rat>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(unsigned power) const;
  const Rat& leading() const;
  const std::vector<Rat>& ascending() const { return coeffs_; }
  std::vector<Rat> descending() const;

  Rat operator()(const Rat& x) const;  // Horner

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  bool operator==(const Poly&) const = default;

  // Quotient of division by (y - root); requires root to be an exact root.
  Poly deflate(const Rat& root) const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// All rational roots with multiplicity, sorted ascending.
// Throws std::domain_error on the zero polynomial.
std::vector<Rat> rational_roots(const Poly& p);

// True iff p splits into linear factors over Q, i.e. the number of rational
// roots counted with multiplicity equals the degree. Requires degree >= 1.
bool completely_reducible(const Poly& p);

// Discriminant of a quadratic or cubic.
Rat discriminant(const Poly& p);

}  // namespace newtonian
