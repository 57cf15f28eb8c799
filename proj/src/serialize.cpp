#include "newtonian/serialize.hpp"

namespace newtonian {

json to_json(const Rat& r) { return to_string(r); }
json to_json(const Int& v) { return to_string(v); }

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Rat& c : p.descending()) coeffs.push_back(to_string(c));
  return coeffs;
}

json to_json(const Row& r) {
  json entries = json::array();
  for (const Rat& entry : r.entries) entries.push_back(to_string(entry));
  return json{{"y", to_string(r.y)}, {"n", r.n}, {"entries", entries}};
}

json to_json(const Triple& t) {
  json out{{"alpha", to_string(t.alpha)},
           {"beta", to_string(t.beta)},
           {"gamma", to_string(t.gamma)}};
  if (is_integral(t.alpha) && is_integral(t.beta) && is_integral(t.gamma) &&
      !(t.alpha == 0 && t.beta == 0 && t.gamma == 0))
    out["gcd"] = to_string(gcd_class(t));
  if (t.degenerate) out["degenerate"] = true;
  return out;
}

json to_json(const IntegralTriple& t) {
  return json{{"alpha", to_string(t.alpha)},
              {"beta", to_string(t.beta)},
              {"gamma", to_string(t.gamma)},
              {"primitive", t.primitive}};
}

json to_json(const GroupPoint& pt) {
  return json{{"p", to_string(pt.p)}, {"q", to_string(pt.q)}, {"z", to_string(pt.z)},
              {"a", to_string(pt.a)}, {"x", to_string(pt.x())},
              {"y", to_string(pt.y())}};
}

json to_json(const ECurveCandidate& c) {
  return json{{"p", to_string(c.p)}, {"q", to_string(c.q)},
              {"z", to_string(c.z)}, {"a", to_string(c.a)},
              {"x", to_string(c.x)}, {"y", to_string(c.y)},
              {"residual", to_string(c.residual)}};
}

json to_json(const CurvePoint& pt) {
  return json{{"x", to_string(pt.x)}, {"y", to_string(pt.y)}};
}

json to_json(const FermatWitness& w) {
  return json{{"u", to_string(w.u)}, {"v", to_string(w.v)}, {"w", to_string(w.w)}};
}

json to_json(const QPowerWitness& w) {
  return json{{"y", to_string(w.y)}, {"value", to_string(w.value)}, {"root", to_string(w.root)}};
}

json to_json(const CubicSquareWitness& w) {
  return json{{"u", to_string(w.u)}, {"v", to_string(w.v)}, {"w", to_string(w.w)},
              {"a", to_string(w.a)}, {"in_family", w.in_family}};
}

json to_json(const R3Witness& w) {
  return json{{"y", to_string(w.y)}, {"a", to_string(w.a)}, {"b", to_string(w.b)},
              {"t", to_string(w.t)}, {"c", to_string(w.c)}};
}

}  // namespace newtonian
