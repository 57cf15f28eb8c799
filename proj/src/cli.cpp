#include "newtonian/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "newtonian/curve_group.hpp"
#include "newtonian/fermat_poly.hpp"
#include "newtonian/pythagoras.hpp"
#include "newtonian/search.hpp"
#include "newtonian/serialize.hpp"
#include "newtonian/triangle.hpp"
#include "newtonian/triangle_ring.hpp"
#include "newtonian/verify.hpp"

namespace newtonian {

namespace {

// Exact rational flag values: optional sign, digits, optional /digits.
Rat parse_flag(const std::string& text, const std::string& flag) {
  auto value = parse_rational(text);
  if (!value) throw CLI::ValidationError(flag, "expected an exact rational like 3, -7 or 3/2");
  return *value;
}

Int parse_int_flag(const std::string& text, const std::string& flag) {
  Rat value = parse_flag(text, flag);
  if (!is_integral(value)) throw CLI::ValidationError(flag, "expected an integer");
  return value.get_num();
}

long search_cap() {
  const char* cap = std::getenv("NEWTONIAN_MAX_BOUND");
  if (!cap) return -1;
  try {
    return std::stol(cap);
  } catch (...) {
    return -1;
  }
}

unsigned capped_bound(unsigned bound) {
  long cap = search_cap();
  if (cap >= 0 && bound > static_cast<unsigned long>(cap)) return static_cast<unsigned>(cap);
  return bound;
}

long clamp_to_cap(long value) {
  long cap = search_cap();
  if (cap < 0) return value;
  if (value > cap) return cap;
  if (value < -cap) return -cap;
  return value;
}

std::string plain_row(const Row& r) {
  std::string out;
  for (size_t i = 0; i < r.entries.size(); ++i) {
    if (i) out += ' ';
    out += to_string(r.entries[i]);
  }
  return out;
}

std::string plain_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto coeffs = p.descending();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ' ';
    out += to_string(coeffs[i]);
  }
  return out;
}

std::string plain_triple(const Triple& t) {
  std::string out = to_string(t.alpha) + " " + to_string(t.beta) + " " + to_string(t.gamma);
  if (t.degenerate) out += " (degenerate)";
  return out;
}

template <typename Witness>
void print_report(const SearchReport<Witness>& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(report).dump() << "\n";
    return;
  }
  out << report.query << "\n";
  out << "exhaustive: " << (report.exhaustive ? "yes" : "no")
      << ", witnesses: " << report.witnesses.size() << "\n";
  for (const Witness& w : report.witnesses) out << "  " << to_json(w).dump() << "\n";
}

std::vector<Triple> read_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
  std::vector<Triple> triples;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string a, b, c;
    if (!(fields >> a)) continue;  // blank line
    if (!(fields >> b >> c))
      throw CLI::ValidationError("--file", "line " + std::to_string(lineno) +
                                               ": expected three rationals");
    auto alpha = parse_rational(a), beta = parse_rational(b), gamma = parse_rational(c);
    if (!alpha || !beta || !gamma)
      throw CLI::ValidationError("--file", "line " + std::to_string(lineno) +
                                               ": malformed rational");
    triples.push_back(Triple{*alpha, *beta, *gamma});
  }
  return triples;
}

struct CliState {
  std::ostream& out;
  std::ostream& err;
  int exit_code = 0;
};

void add_row_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("row", "Print row n of the triangle T(y)");
  auto y = std::make_shared<std::string>();
  auto n = std::make_shared<unsigned>(0);
  auto base = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--y", *y, "row index y (rational)")->required();
  cmd->add_option("--n", *n, "row number")->required();
  cmd->add_option("--base", *base, "also print the positional correspondence in this base");
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, y, n, base, as_json] {
    Row r = row(parse_flag(*y, "--y"), *n);
    if (*as_json) {
      json j = to_json(r);
      if (!base->empty()) j["delta"] = to_string(delta_positional(r, parse_flag(*base, "--base")));
      state.out << j.dump() << "\n";
      return;
    }
    state.out << plain_row(r) << "\n";
    if (!base->empty())
      state.out << "delta = " << to_string(delta_positional(r, parse_flag(*base, "--base")))
                << "\n";
  });
}

void add_delta_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("delta", "Digital correspondence of row n of T(y)");
  auto y = std::make_shared<std::string>();
  auto n = std::make_shared<unsigned>(0);
  auto carry = std::make_shared<bool>(false);
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--y", *y, "row index y (rational)")->required();
  cmd->add_option("--n", *n, "row number")->required();
  cmd->add_flag("--carry", *carry, "carry entries into base-10 digits (integer rows only)");
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, y, n, carry, as_json] {
    Row r = row(parse_flag(*y, "--y"), *n);
    if (*carry) {
      CarriedDigits digits = delta_carry(r);
      if (*as_json)
        state.out << json{{"digits", digits.digits}, {"value", to_string(digits.value)}}.dump()
                  << "\n";
      else
        state.out << digits.digits << "\n";
      return;
    }
    Rat value = delta_positional(r);
    if (*as_json)
      state.out << json{{"value", to_string(value)}}.dump() << "\n";
    else
      state.out << to_string(value) << "\n";
  });
}

void add_qpoly_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("qpoly", "Difference polynomial of order n at shift a");
  auto n = std::make_shared<unsigned>(0);
  auto a = std::make_shared<std::string>();
  auto eval = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--n", *n, "power")->required();
  cmd->add_option("--a", *a, "shift (nonzero rational)")->required();
  cmd->add_option("--eval", *eval, "evaluate at this rational instead of printing coefficients");
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, n, a, eval, as_json] {
    Poly q = q_poly(*n, parse_flag(*a, "--a"));
    if (!eval->empty()) {
      Rat value = q(parse_flag(*eval, "--eval"));
      if (*as_json)
        state.out << json{{"value", to_string(value)}}.dump() << "\n";
      else
        state.out << to_string(value) << "\n";
      return;
    }
    if (*as_json)
      state.out << to_json(q).dump() << "\n";
    else
      state.out << plain_poly(q) << "\n";
  });
}

void add_triple_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("triple", "Generate a Pythagorean triple from (p,q,x,a)");
  auto p = std::make_shared<std::string>();
  auto q = std::make_shared<std::string>();
  auto x = std::make_shared<std::string>();
  auto a = std::make_shared<std::string>();
  auto order = std::make_shared<std::string>("alpha-min");
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--p", *p)->required();
  cmd->add_option("--q", *q)->required();
  cmd->add_option("--x", *x)->required();
  cmd->add_option("--a", *a, "nonzero rational")->required();
  cmd->add_option("--order", *order, "alpha-min or beta-min")
      ->check(CLI::IsMember({"alpha-min", "beta-min"}));
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, p, q, x, a, order, as_json] {
    TripleParams params{parse_flag(*p, "--p"), parse_flag(*q, "--q"), parse_flag(*x, "--x"),
                        parse_flag(*a, "--a"),
                        *order == "beta-min" ? Ordering::beta_min : Ordering::alpha_min};
    Triple t = triple_from_params(params);
    if (*as_json)
      state.out << to_json(t).dump() << "\n";
    else
      state.out << plain_triple(t) << "\n";
  });
}

void add_partition_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("partition", "Partition integral triples by gcd class");
  auto file = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--file", *file, "file with one triple per line: alpha beta gamma")->required();
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, file, as_json] {
    auto classes = partition(read_triples(*file));
    if (*as_json) {
      json j = json::object();
      for (const auto& [m, members] : classes) {
        json list = json::array();
        for (const Triple& t : members) list.push_back(to_json(t));
        j[to_string(m)] = list;
      }
      state.out << j.dump() << "\n";
      return;
    }
    for (const auto& [m, members] : classes) {
      state.out << to_string(m) << ":";
      for (const Triple& t : members)
        state.out << " (" << to_string(t.alpha) << "," << to_string(t.beta) << ","
                  << to_string(t.gamma) << ")";
      state.out << "\n";
    }
  });
}

void add_ring_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("ring", "Row ring operations on indices");
  auto op = std::make_shared<std::string>();
  auto n = std::make_shared<unsigned>(0);
  auto y1 = std::make_shared<std::string>();
  auto y2 = std::make_shared<std::string>();
  auto alpha = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--op", *op, "add, mul or scale")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "scale"}));
  cmd->add_option("--n", *n, "row number")->required();
  cmd->add_option("--y1", *y1, "first index")->required();
  cmd->add_option("--y2", *y2, "second index (add/mul)");
  cmd->add_option("--alpha", *alpha, "integer scalar (scale)");
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, op, n, y1, y2, alpha, as_json] {
    RingRow u{parse_flag(*y1, "--y1"), *n};
    RingRow result{Rat(0), *n};
    if (*op == "scale") {
      if (alpha->empty()) throw CLI::ValidationError("--alpha", "required for scale");
      result = scalar_mul(parse_int_flag(*alpha, "--alpha"), u);
    } else {
      if (y2->empty()) throw CLI::ValidationError("--y2", "required for add and mul");
      RingRow v{parse_flag(*y2, "--y2"), *n};
      result = *op == "add" ? add(u, v) : mul(u, v);
    }
    Row r = result.materialize();
    if (*as_json) {
      json j = to_json(r);
      state.out << j.dump() << "\n";
    } else {
      state.out << "N(" << to_string(result.y) << "," << result.n << "): " << plain_row(r)
                << "\n";
    }
  });
}

void add_group_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("group", "Arithmetic group of the Pythagorean curve");
  auto op = std::make_shared<std::string>();
  auto p = std::make_shared<std::string>("1");
  auto q = std::make_shared<std::string>("1");
  auto p2 = std::make_shared<std::string>();
  auto q2 = std::make_shared<std::string>();
  auto z = std::make_shared<std::string>();
  auto a = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--op", *op, "mul, inv or id")
      ->required()
      ->check(CLI::IsMember({"mul", "inv", "id"}));
  cmd->add_option("--p", *p, "first parameter (nonzero)");
  cmd->add_option("--q", *q, "second parameter (nonzero)");
  cmd->add_option("--p2", *p2, "second point p (mul)");
  cmd->add_option("--q2", *q2, "second point q (mul)");
  cmd->add_option("--z", *z, "fiber coordinate")->required();
  cmd->add_option("--a", *a, "curve parameter (nonzero)")->required();
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, op, p, q, p2, q2, z, a, as_json] {
    Rat zz = parse_flag(*z, "--z");
    Rat aa = parse_flag(*a, "--a");
    GroupPoint result = group_identity(zz, aa);
    if (*op != "id") {
      GroupPoint u = make_point(parse_flag(*p, "--p"), parse_flag(*q, "--q"), zz, aa);
      if (*op == "inv") {
        result = group_inverse(u);
      } else {
        if (p2->empty() || q2->empty())
          throw CLI::ValidationError("--p2", "mul needs --p2 and --q2");
        GroupPoint v = make_point(parse_flag(*p2, "--p2"), parse_flag(*q2, "--q2"), zz, aa);
        result = group_mul(u, v);
      }
    }
    if (*as_json)
      state.out << to_json(result).dump() << "\n";
    else
      state.out << "p=" << to_string(result.p) << " q=" << to_string(result.q)
                << " x=" << to_string(result.x()) << " y=" << to_string(result.y()) << "\n";
  });
}

void add_ea_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("ea", "Quadratic-curve candidate point and its residual");
  auto p = std::make_shared<std::string>();
  auto q = std::make_shared<std::string>();
  auto z = std::make_shared<std::string>();
  auto k = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--p", *p, "nonzero rational")->required();
  cmd->add_option("--q", *q, "nonzero rational")->required();
  cmd->add_option("--z", *z, "rational")->required();
  cmd->add_option("--k", *k, "nonzero integer; the curve parameter is k^2/3")->required();
  cmd->add_flag("--json", *as_json, "JSON output");
  cmd->callback([&state, p, q, z, k, as_json] {
    auto candidate = ea_candidate(parse_flag(*p, "--p"), parse_flag(*q, "--q"),
                                  parse_flag(*z, "--z"), parse_int_flag(*k, "--k"));
    if (*as_json)
      state.out << to_json(candidate).dump() << "\n";
    else
      state.out << "x=" << to_string(candidate.x) << " y=" << to_string(candidate.y)
                << " residual=" << to_string(candidate.residual) << "\n";
  });
}

void add_search_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("search", "Brute-force oracles");
  cmd->require_subcommand(1);

  auto* fermat = cmd->add_subcommand("fermat", "u^n + v^n = w^n over positive integers");
  auto fermat_n = std::make_shared<unsigned>(3);
  auto fermat_bound = std::make_shared<unsigned>(200);
  auto fermat_json = std::make_shared<bool>(false);
  fermat->add_option("--n", *fermat_n, "power (>= 3)");
  fermat->add_option("--bound", *fermat_bound, "largest side");
  fermat->add_flag("--json", *fermat_json, "JSON output");
  fermat->callback([&state, fermat_n, fermat_bound, fermat_json] {
    print_report(fermat_search(*fermat_n, capped_bound(*fermat_bound)), *fermat_json, state.out);
  });

  auto* pyth = cmd->add_subcommand("pyth", "integral Pythagorean triples and coverage");
  auto pyth_bound = std::make_shared<unsigned>(100);
  auto pyth_json = std::make_shared<bool>(false);
  pyth->add_option("--bound", *pyth_bound, "largest hypotenuse");
  pyth->add_flag("--json", *pyth_json, "JSON output");
  pyth->callback([&state, pyth_bound, pyth_json] {
    unsigned bound = capped_bound(*pyth_bound);
    auto coverage = coverage_check(bound);
    auto triples = enumerate_pythagorean(bound);
    if (*pyth_json) {
      json list = json::array();
      for (const auto& t : triples) list.push_back(to_json(t));
      json j{{"triples", list}, {"coverage", to_json(coverage)}};
      state.out << j.dump() << "\n";
      return;
    }
    for (const auto& t : triples)
      state.out << to_string(t.alpha) << " " << to_string(t.beta) << " " << to_string(t.gamma)
                << (t.primitive ? " primitive" : "") << "\n";
    state.out << "coverage failures: " << coverage.witnesses.size() << "\n";
  });

  auto* cubsq = cmd->add_subcommand("cubsq", "u^3 - v^3 = w^2 over positive integers");
  auto cubsq_bound = std::make_shared<unsigned>(100);
  auto cubsq_json = std::make_shared<bool>(false);
  cubsq->add_option("--bound", *cubsq_bound, "largest cube side");
  cubsq->add_flag("--json", *cubsq_json, "JSON output");
  cubsq->callback([&state, cubsq_bound, cubsq_json] {
    print_report(cubic_square_search(capped_bound(*cubsq_bound)), *cubsq_json, state.out);
  });

  auto* r3 = cmd->add_subcommand("r3", "cubic residual exact of power 3");
  auto ymin = std::make_shared<long>(-10), ymax = std::make_shared<long>(0);
  auto amin = std::make_shared<long>(1), amax = std::make_shared<long>(5);
  auto bmin = std::make_shared<long>(1), bmax = std::make_shared<long>(5);
  auto r3_json = std::make_shared<bool>(false);
  r3->add_option("--ymin", *ymin);
  r3->add_option("--ymax", *ymax);
  r3->add_option("--amin", *amin);
  r3->add_option("--amax", *amax);
  r3->add_option("--bmin", *bmin);
  r3->add_option("--bmax", *bmax);
  r3->add_flag("--json", *r3_json, "JSON output");
  r3->callback([&state, ymin, ymax, amin, amax, bmin, bmax, r3_json] {
    print_report(r3_exactness_search(clamp_to_cap(*ymin), clamp_to_cap(*ymax),
                                     clamp_to_cap(*amin), clamp_to_cap(*amax),
                                     clamp_to_cap(*bmin), clamp_to_cap(*bmax)),
                 *r3_json, state.out);
  });
}

void add_verify_command(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("verify", "Run every claim check and report the ledger");
  auto ledger_path = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  cmd->add_option("--ledger", *ledger_path, "write the ledger JSON to this file");
  cmd->add_flag("--json", *as_json, "print the ledger JSON to stdout");
  cmd->callback([&state, ledger_path, as_json] {
    auto results = run_verification();
    json ledger = ledger_json(results);
    if (!ledger_path->empty()) {
      std::ofstream file(*ledger_path);
      if (!file) throw CLI::ValidationError("--ledger", "cannot write " + *ledger_path);
      file << ledger.dump(2) << "\n";
    }
    if (*as_json) {
      state.out << ledger.dump() << "\n";
    } else {
      for (const ClaimResult& r : results)
        state.out << to_string(r.status) << "  " << r.claim_id << "  [" << r.reference << "]\n";
    }
    if (has_disagreement(results)) state.exit_code = 2;
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Newtonian triangles, Pythagorean triples and "
               "power-sum curves"};
  app.require_subcommand(1);
  CliState state{out, err};
  add_row_command(app, state);
  add_delta_command(app, state);
  add_qpoly_command(app, state);
  add_triple_command(app, state);
  add_partition_command(app, state);
  add_ring_command(app, state);
  add_group_command(app, state);
  add_ea_command(app, state);
  add_search_command(app, state);
  add_verify_command(app, state);

  std::vector<const char*> argv;
  argv.push_back("newtonian");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return state.exit_code;
}

}  // namespace newtonian
