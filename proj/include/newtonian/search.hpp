#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "newtonian/pythagoras.hpp"
#include "newtonian/rational.hpp"

namespace newtonian {

// Iteration order for the bounded scans. Results are returned in canonical
// (sorted) order either way, so the two directions must agree witness for
// witness; the knob exists to exercise that contract.
enum class ScanOrder { ascending, descending };

template <typename Witness>
struct SearchReport {
  std::string query;
  std::vector<std::pair<std::string, Int>> bounds;  // named bounds, in display order
  bool exhaustive = false;  // true only when the full bounded space was covered
  std::vector<Witness> witnesses;
  double elapsed_ms = 0.0;
};

struct IntegralTriple {
  Int alpha, beta, gamma;
  bool primitive = false;

  std::strong_ordering operator<=>(const IntegralTriple&) const = default;
};

// Every (alpha, beta, gamma) with 0 < alpha <= beta < gamma <= bound and
// alpha^2 + beta^2 = gamma^2, ordered by (gamma, alpha).
std::vector<IntegralTriple> enumerate_pythagorean(unsigned bound);

// Checks that diophantine_form(alpha, gamma - beta) reproduces every
// enumerated triple exactly. Witnesses are the failures (expected none).
SearchReport<IntegralTriple> coverage_check(unsigned bound);

struct FermatWitness {
  Int u, v, w;
  std::strong_ordering operator<=>(const FermatWitness&) const = default;
};

// Exhaustive scan for u^n + v^n = w^n over 1 <= u <= v < w <= bound.
SearchReport<FermatWitness> fermat_search(unsigned n, unsigned bound,
                                          ScanOrder order = ScanOrder::ascending);

struct QPowerWitness {
  Int y;
  Rat value;  // q_poly(n,a) at y
  Rat root;   // value == root^n
  std::strong_ordering operator<=>(const QPowerWitness&) const = default;
};

// Tests q_poly(n,a) at every integer y in [y_min, y_max] for being exact of
// power n. Arguments where any side of the power-sum identity vanishes
// (the value itself, delta_value(n,y) or delta_value(n,y+a)) are skipped.
// Witnesses exist for n = 2 and are expected empty for n >= 3.
SearchReport<QPowerWitness> q_power_scan(unsigned n, const Rat& a, long y_min, long y_max,
                                         ScanOrder order = ScanOrder::ascending);

struct CubicSquareWitness {
  Int u, v, w;     // u^3 - v^3 = w^2
  Int a;           // u - v
  bool in_family;  // whether a = k^2/3 for an integer k, i.e. 3a is a square
  std::strong_ordering operator<=>(const CubicSquareWitness&) const = default;
};

// All (u, v, w) with 1 <= v < u <= bound, w >= 1 and u^3 - v^3 = w^2,
// annotated with a = u - v and family membership.
SearchReport<CubicSquareWitness> cubic_square_search(unsigned bound,
                                                     ScanOrder order = ScanOrder::ascending);

// Exact check of sum(terms[i]^power) == rhs^power.
bool verify_sum_identity(const std::vector<Int>& terms, unsigned power, const Int& rhs);

struct R3Witness {
  Int y, a, b;
  Int t;  // r3_poly(a,b) at y equals t^3, t != 0
  Int c;  // t - 10 - y, the shift with delta_value(3, y+c) = t^3
  std::strong_ordering operator<=>(const R3Witness&) const = default;
};

// Integer (y, a, b) within the given closed ranges (a, b skipping zero) where
// r3_poly(a, b) evaluates to a nonzero perfect cube.
SearchReport<R3Witness> r3_exactness_search(long y_min, long y_max, long a_min, long a_max,
                                            long b_min, long b_max);

}  // namespace newtonian
