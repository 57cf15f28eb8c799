#include "newtonian/pythagoras.hpp"

#include <cassert>
#include <stdexcept>

namespace newtonian {

namespace {

void require_nonzero_a(const Rat& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
}

}  // namespace

Rat y_solution(const TripleParams& params) {
  require_nonzero_a(params.a);
  const Rat& p = params.p;
  const Rat& q = params.q;
  const Rat& x = params.x;
  const Rat& a = params.a;
  return p * p / (2 * a) * x * x + p * q / a * x + (q * q - a * (20 + a)) / (2 * a);
}

Triple triple_from_params(const TripleParams& params) {
  require_nonzero_a(params.a);
  const Rat t = params.p * params.x + params.q;
  const Rat& a = params.a;
  Rat leg = t;
  Rat mid = (t * t - a * a) / (2 * a);
  Rat hyp = (t * t + a * a) / (2 * a);
  Triple triple;
  if (params.ordering == Ordering::beta_min) {
    triple = Triple{mid, leg, hyp, params};
  } else {
    triple = Triple{leg, mid, hyp, params};
  }
  triple.degenerate = triple.alpha == 0 || triple.beta == 0 || triple.gamma == 0;
  assert(triple.alpha * triple.alpha + triple.beta * triple.beta == triple.gamma * triple.gamma);
  return triple;
}

std::pair<Rat, Rat> invert_x(const Rat& alpha, const Rat& p, const Rat& q) {
  if (p == 0) throw std::invalid_argument("p must be nonzero");
  return {(-q + alpha) / p, (-q - alpha) / p};
}

Triple diophantine_form(const Rat& alpha, const Rat& a) {
  require_nonzero_a(a);
  Triple t{alpha, (alpha * alpha - a * a) / (2 * a), (alpha * alpha + a * a) / (2 * a)};
  t.degenerate = t.alpha == 0 || t.beta == 0 || t.gamma == 0;
  return t;
}

Triple triple_for_first_element(const Rat& alpha) {
  Triple t = diophantine_form(alpha, Rat(1));
  t.provenance = TripleParams{Rat(1), alpha, Rat(0), Rat(1)};
  return t;
}

Int gcd_class(const Triple& t) {
  if (!is_integral(t.alpha) || !is_integral(t.beta) || !is_integral(t.gamma))
    throw std::domain_error("gcd class defined only for integral triples");
  return gcd3(t.alpha.get_num(), t.beta.get_num(), t.gamma.get_num());
}

std::map<Int, std::vector<Triple>> partition(const std::vector<Triple>& triples) {
  std::map<Int, std::vector<Triple>> classes;
  for (const Triple& t : triples) classes[gcd_class(t)].push_back(t);
  return classes;
}

Int vartheta(const Int& p, const Int& q, const Int& x, const Int& a) {
  Triple t = triple_from_params({Rat(p), Rat(q), Rat(x), Rat(a)});
  return gcd_class(t);
}

Rat b_chain_discriminant(const Rat& b) {
  // Quadratic in a: 2a^2 - 2ba + 10b, so the discriminant is (2b)^2 - 4*2*10b.
  return (2 * b) * (2 * b) - 4 * 2 * (10 * b);
}

Int b_constant() {
  // 4b(b-20) vanishes at b = 0 and b = 20; only the nonzero root qualifies.
  Int b(20);
  assert(b_chain_discriminant(Rat(b)) == 0 && b != 0);
  return b;
}

}  // namespace newtonian
