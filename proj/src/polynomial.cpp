#include "newtonian/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace newtonian {

Poly::Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::from_descending(const std::vector<Rat>& coeffs) {
  return Poly(std::vector<Rat>(coeffs.rbegin(), coeffs.rend()));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rat(0);
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::vector<Rat> Poly::descending() const {
  return std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend());
}

Rat Poly::operator()(const Rat& x) const {
  Rat value(0);
  for (size_t i = coeffs_.size(); i-- > 0;) value = value * x + coeffs_[i];
  return value;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> product(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(product);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  for (Rat& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly Poly::deflate(const Rat& root) const {
  if (coeffs_.size() < 2) throw std::domain_error("cannot deflate below degree 1");
  std::vector<Rat> quotient(coeffs_.size() - 1, Rat(0));
  Rat acc = coeffs_.back();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    quotient[i] = acc;
    acc = coeffs_[i] + acc * root;
  }
  if (acc != 0) throw std::invalid_argument("deflate called with a non-root");
  return Poly(std::move(quotient));
}

namespace {

std::vector<Int> positive_divisors(const Int& v) {
  Int n = abs(v);
  std::vector<Int> small, large;
  for (Int d(1); d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Scales away denominators and content; roots are unchanged.
std::vector<Int> integer_coefficients(const Poly& p) {
  Int lcm_den(1);
  for (const Rat& c : p.ascending()) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<Int> out;
  out.reserve(p.ascending().size());
  Int content(0);
  for (const Rat& c : p.ascending()) {
    Rat scaled = c * Rat(lcm_den);
    out.push_back(scaled.get_num());
    content = gcd(content, out.back());
  }
  if (content > 1)
    for (Int& c : out) c /= content;
  return out;
}

// One rational root of p (degree >= 1), if any, by the rational root test.
std::optional<Rat> find_rational_root(const Poly& p) {
  if (p.degree() == 1) return -p.coeff(0) / p.coeff(1);
  std::vector<Int> coeffs = integer_coefficients(p);
  const Int& leading = coeffs.back();
  const Int& constant = coeffs.front();
  for (const Int& num : positive_divisors(constant)) {
    for (const Int& den : positive_divisors(leading)) {
      if (gcd(num, den) != 1) continue;
      Rat candidate = make_rational(num, den);
      if (p(candidate) == 0) return candidate;
      if (p(-candidate) == 0) return -candidate;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rat> roots;
  Poly current = p;
  // Strip zero roots first so the constant term of the remainder is nonzero.
  while (current.degree() >= 1 && current.coeff(0) == 0) {
    roots.emplace_back(0);
    current = current.deflate(Rat(0));
  }
  while (current.degree() >= 1) {
    auto root = find_rational_root(current);
    if (!root) break;
    roots.push_back(*root);
    current = current.deflate(*root);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool completely_reducible(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("reducibility needs degree >= 1");
  return static_cast<int>(rational_roots(p).size()) == p.degree();
}

Rat discriminant(const Poly& p) {
  if (p.degree() == 2) {
    const Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    return b * b - 4 * a * c;
  }
  if (p.degree() == 3) {
    const Rat a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
  }
  throw std::invalid_argument("discriminant implemented for degrees 2 and 3");
}

}  // namespace newtonian
