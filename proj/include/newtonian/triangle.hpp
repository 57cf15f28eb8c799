#pragma once

#include <string>
#include <vector>

#include "newtonian/rational.hpp"

namespace newtonian {

// Row n of the triangle T(y): entries[r] = C(n,r) * y^r, the coefficients of
// (x + y)^n in descending powers of x.
struct Row {
  Rat y;
  unsigned n = 0;
  std::vector<Rat> entries;
};

// Closed-form row construction from binomial coefficients.
Row row(const Rat& y, unsigned n);

// T(y) down to the given depth. Rows are produced by the build-up recurrence
//   y*C(n-1,r-1)*y^(r-1) + C(n-1,r)*y^r = C(n,r)*y^r
// starting from the single-entry row 0, which gives an algebraic route
// independent of the binomial closed form.
struct Triangle {
  Rat y;
  unsigned depth = 0;
  std::vector<Row> rows;
};

Triangle triangle(const Rat& y, unsigned depth);

// Positional digital correspondence: sum of entries[r] * base^(n-r).
// Equals (base + y)^n for every rational y and base.
Rat delta_positional(const Row& r, const Rat& base = Rat(10));

struct CarriedDigits {
  std::string digits;  // most-significant first
  Int value;
};

// Carry-based digital correspondence: entries are folded right to left into
// base-`base` digits, transferring overflow to the next position. Defined only
// for rows whose entries are nonnegative integers; base must be >= 2.
// Digits are rendered 0-9a-z up to base 36, and as ':'-separated decimal
// numbers beyond that.
CarriedDigits delta_carry(const Row& r, const Int& base = Int(10));

// Value of the digital correspondence of row n of T(y): (10 + y)^n.
Rat delta_value(unsigned n, const Rat& y);

}  // namespace newtonian
