#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "newtonian/rational.hpp"

namespace newtonian {

enum class Ordering { alpha_min, beta_min };

// Generation parameters (p, q, x, a) with a != 0. alpha_min puts the
// generated leg px+q first; beta_min swaps the first two components.
struct TripleParams {
  Rat p, q, x, a;
  Ordering ordering = Ordering::alpha_min;
};

struct Triple {
  Rat alpha, beta, gamma;
  std::optional<TripleParams> provenance;
  bool degenerate = false;  // some component is zero

  friend bool operator==(const Triple& lhs, const Triple& rhs) {
    return lhs.alpha == rhs.alpha && lhs.beta == rhs.beta && lhs.gamma == rhs.gamma;
  }
  friend bool operator<(const Triple& lhs, const Triple& rhs) {
    if (lhs.gamma != rhs.gamma) return lhs.gamma < rhs.gamma;
    if (lhs.alpha != rhs.alpha) return lhs.alpha < rhs.alpha;
    return lhs.beta < rhs.beta;
  }
};

// The y making q_poly(2,a) evaluate to the perfect square (px+q)^2:
//   y = (p^2/2a)x^2 + (pq/a)x + (q^2 - a(20+a))/2a.
Rat y_solution(const TripleParams& params);

// The generated triple: with t = px+q, (t, (t^2-a^2)/2a, (t^2+a^2)/2a) under
// alpha_min. Satisfies alpha^2 + beta^2 = gamma^2 exactly; the middle leg is
// 10 + y_solution(params) and gamma exceeds it by a.
Triple triple_from_params(const TripleParams& params);

// Both x with px+q = ±alpha, i.e. the roots of p^2 x^2 + 2pq x + (q^2-alpha^2).
// Requires p != 0.
std::pair<Rat, Rat> invert_x(const Rat& alpha, const Rat& p, const Rat& q);

// Compact form (alpha, (alpha^2-a^2)/2a, (alpha^2+a^2)/2a). Requires a != 0.
Triple diophantine_form(const Rat& alpha, const Rat& a);

// A canonical triple with the given first element (p=1, x=0, q=alpha, a=1).
Triple triple_for_first_element(const Rat& alpha);

// gcd of the components of an integral triple, nonzero and nonnegative.
// Throws std::domain_error for non-integral input.
Int gcd_class(const Triple& t);

// Groups integral triples by gcd class. Classes are disjoint and cover the input.
std::map<Int, std::vector<Triple>> partition(const std::vector<Triple>& triples);

// gcd of the triple generated from integer parameters (alpha_min ordering).
// The generated triple must be integral.
Int vartheta(const Int& p, const Int& q, const Int& x, const Int& a);

// 4b(b-20), the discriminant (in a) of the quadratic 2a^2 - 2ba + 10b that
// controls which shift constants admit rational solutions.
Rat b_chain_discriminant(const Rat& b);

// The distinguished shift constant: the nonzero root of b_chain_discriminant.
Int b_constant();

}  // namespace newtonian
