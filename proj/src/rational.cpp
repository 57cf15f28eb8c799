#include "newtonian/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace newtonian {

Rat make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rational(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(text.substr(num_begin, i - num_begin));
  if (negative) num.insert(num.begin(), '-');
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    size_t den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den.assign(text.substr(den_begin));
  }
  Int d(den);
  if (d == 0) return std::nullopt;
  return make_rational(Int(num), d);
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& v) { return v.get_str(); }

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  return r;  // powers of a canonical fraction stay canonical
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

// Exact integer nth root of v >= 0; nullopt when v is not a perfect power.
std::optional<Int> exact_root_nonneg(const Int& v, unsigned long n) {
  Int root;
  int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return root;
}

}  // namespace

std::optional<ExactWitness> nth_root_exact(const Rat& r, unsigned long n) {
  if (n == 0) throw std::invalid_argument("power must be positive");
  if (r == 0) return ExactWitness{Rat(0), n};
  const bool negative = sgn(r) < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  // The fraction is in lowest terms, so num and den are nth powers
  // exactly when each is one on its own.
  auto num_root = exact_root_nonneg(abs(r.get_num()), n);
  if (!num_root) return std::nullopt;
  auto den_root = exact_root_nonneg(r.get_den(), n);
  if (!den_root) return std::nullopt;
  Rat root(negative ? Int(-*num_root) : *num_root, *den_root);
  return ExactWitness{root, n};
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
  if (a == 0 && b == 0 && c == 0) throw std::domain_error("gcd undefined");
  return gcd(gcd(a, b), c);
}

}  // namespace newtonian
