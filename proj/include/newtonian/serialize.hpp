#pragma once

#include <json.hpp>

#include "newtonian/curve_group.hpp"
#include "newtonian/polynomial.hpp"
#include "newtonian/pythagoras.hpp"
#include "newtonian/search.hpp"
#include "newtonian/triangle.hpp"

namespace newtonian {

using json = nlohmann::json;

// Scalars serialize as canonical `num/den` strings ("3/2", "-7", "0").
json to_json(const Rat& r);
json to_json(const Int& v);

// Array of `num/den` strings in descending degree.
json to_json(const Poly& p);

// {"entries": [...], "n": ..., "y": ...}
json to_json(const Row& r);

// {alpha, beta, gamma, gcd?, degenerate?}; gcd present for integral triples,
// degenerate present only when true.
json to_json(const Triple& t);

json to_json(const IntegralTriple& t);

// {p, q, z, a, x, y}
json to_json(const GroupPoint& pt);

// {p, q, z, a, x, y, residual}
json to_json(const ECurveCandidate& c);

json to_json(const CurvePoint& pt);
json to_json(const FermatWitness& w);
json to_json(const QPowerWitness& w);
json to_json(const CubicSquareWitness& w);
json to_json(const R3Witness& w);

// {query, bounds, exhaustive, witnesses[], elapsed_ms}
template <typename Witness>
json to_json(const SearchReport<Witness>& report) {
  json bounds = json::object();
  for (const auto& [name, value] : report.bounds) bounds[name] = value.get_si();
  json witnesses = json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(to_json(w));
  return json{{"query", report.query},
              {"bounds", bounds},
              {"exhaustive", report.exhaustive},
              {"witnesses", witnesses},
              {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace newtonian
