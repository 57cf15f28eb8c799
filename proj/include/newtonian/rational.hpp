#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace newtonian {

// Exact scalars. Every quantity in the library is an Int or a Rat;
// there is no floating-point mode.
using Int = mpz_class;
using Rat = mpq_class;

// Builds the canonical fraction num/den (gcd 1, positive denominator).
// Throws std::domain_error("division by zero") when den == 0.
Rat make_rational(const Int& num, const Int& den);

// Strict text form: optional leading sign, digits, optional "/digits".
// No whitespace. Returns nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rational(std::string_view text);

// Canonical text form `num/den`, denominator omitted when 1: "3/2", "-7", "0".
std::string to_string(const Rat& r);
std::string to_string(const Int& v);

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// A proof that some rational is exact of the given power: root^power == value.
struct ExactWitness {
  Rat root;
  unsigned long power = 1;
};

// Detects whether r has an nth root in Q. Sign convention: for even n only
// r >= 0 qualifies and the nonnegative root is returned; for odd n the root
// carries the sign of r. Zero counts as exact of every power.
std::optional<ExactWitness> nth_root_exact(const Rat& r, unsigned long n);

// gcd of three integers, nonnegative.
// Throws std::domain_error("gcd undefined") when all three are zero.
Int gcd3(const Int& a, const Int& b, const Int& c);

}  // namespace newtonian
