#include "newtonian/search.hpp"

#include <algorithm>
#include <chrono>

#include "newtonian/fermat_poly.hpp"
#include "newtonian/triangle.hpp"

namespace newtonian {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Closed integer range iterated in either direction.
template <typename Fn>
void for_range(long lo, long hi, ScanOrder order, Fn&& fn) {
  if (lo > hi) return;
  if (order == ScanOrder::ascending) {
    for (long v = lo; v <= hi; ++v) fn(v);
  } else {
    for (long v = hi; v >= lo; --v) fn(v);
  }
}

}  // namespace

std::vector<IntegralTriple> enumerate_pythagorean(unsigned bound) {
  std::vector<IntegralTriple> triples;
  for (unsigned long gamma = 1; gamma <= bound; ++gamma) {
    const Int gamma_sq = Int(gamma) * Int(gamma);
    for (unsigned long alpha = 1;; ++alpha) {
      const Int alpha_sq = Int(alpha) * Int(alpha);
      if (2 * alpha_sq >= gamma_sq) break;  // past alpha <= beta
      Int beta_sq = gamma_sq - alpha_sq;
      auto root = nth_root_exact(Rat(beta_sq), 2);
      if (!root) continue;
      Int beta = root->root.get_num();
      IntegralTriple t{Int(alpha), beta, Int(gamma), false};
      t.primitive = gcd3(t.alpha, t.beta, t.gamma) == 1;
      triples.push_back(std::move(t));
    }
  }
  return triples;
}

SearchReport<IntegralTriple> coverage_check(unsigned bound) {
  Stopwatch timer;
  SearchReport<IntegralTriple> report;
  report.query = "diophantine-form coverage of integral triples";
  report.bounds = {{"hypotenuse", Int(bound)}};
  for (const IntegralTriple& t : enumerate_pythagorean(bound)) {
    const Rat alpha(t.alpha);
    const Rat a = Rat(t.gamma) - Rat(t.beta);
    Triple rebuilt = diophantine_form(alpha, a);
    if (rebuilt.alpha != t.alpha || rebuilt.beta != t.beta || rebuilt.gamma != t.gamma)
      report.witnesses.push_back(t);
  }
  report.exhaustive = true;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

SearchReport<FermatWitness> fermat_search(unsigned n, unsigned bound, ScanOrder order) {
  Stopwatch timer;
  SearchReport<FermatWitness> report;
  report.query = "u^" + std::to_string(n) + " + v^" + std::to_string(n) + " = w^" +
                 std::to_string(n) + " over positive integers";
  report.bounds = {{"side", Int(bound)}};
  // Precomputed powers make each pair a lookup in a sorted table.
  std::vector<Int> powers(bound + 1);
  for (unsigned long v = 0; v <= bound; ++v) powers[v] = pow_int(Int(v), n);
  for_range(1, static_cast<long>(bound), order, [&](long u) {
    for_range(u, static_cast<long>(bound), order, [&](long v) {
      const Int sum = powers[u] + powers[v];
      auto it = std::lower_bound(powers.begin(), powers.end(), sum);
      if (it != powers.end() && *it == sum) {
        long w = it - powers.begin();
        if (w <= static_cast<long>(bound) && w > v)
          report.witnesses.push_back(FermatWitness{Int(u), Int(v), Int(w)});
      }
    });
  });
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.exhaustive = true;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

SearchReport<QPowerWitness> q_power_scan(unsigned n, const Rat& a, long y_min, long y_max,
                                         ScanOrder order) {
  Stopwatch timer;
  SearchReport<QPowerWitness> report;
  report.query = "difference polynomial exact of power " + std::to_string(n) + " at a = " +
                 to_string(a);
  report.bounds = {{"y_min", Int(y_min)}, {"y_max", Int(y_max)}};
  const Poly q = q_poly(n, a);
  for_range(y_min, y_max, order, [&](long y_int) {
    const Rat y(y_int);
    const Rat value = q(y);
    // Skip arguments where a side of the power-sum identity vanishes.
    if (value == 0 || delta_value(n, y) == 0 || delta_value(n, y + a) == 0) return;
    auto witness = nth_root_exact(value, n);
    if (witness)
      report.witnesses.push_back(QPowerWitness{Int(y_int), value, witness->root});
  });
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.exhaustive = true;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

SearchReport<CubicSquareWitness> cubic_square_search(unsigned bound, ScanOrder order) {
  Stopwatch timer;
  SearchReport<CubicSquareWitness> report;
  report.query = "u^3 - v^3 = w^2 over positive integers";
  report.bounds = {{"side", Int(bound)}};
  std::vector<Int> cubes(bound + 1);
  for (unsigned long v = 0; v <= bound; ++v) cubes[v] = pow_int(Int(v), 3);
  for_range(2, static_cast<long>(bound), order, [&](long u) {
    for_range(1, u - 1, order, [&](long v) {
      const Int difference = cubes[u] - cubes[v];
      auto root = nth_root_exact(Rat(difference), 2);
      if (!root || root->root == 0) return;
      CubicSquareWitness witness{Int(u), Int(v), root->root.get_num(), Int(u - v), false};
      witness.in_family = nth_root_exact(Rat(3 * witness.a), 2).has_value();
      report.witnesses.push_back(std::move(witness));
    });
  });
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.exhaustive = true;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

bool verify_sum_identity(const std::vector<Int>& terms, unsigned power, const Int& rhs) {
  Int sum(0);
  for (const Int& term : terms) sum += pow_int(term, power);
  return sum == pow_int(rhs, power);
}

SearchReport<R3Witness> r3_exactness_search(long y_min, long y_max, long a_min, long a_max,
                                            long b_min, long b_max) {
  Stopwatch timer;
  SearchReport<R3Witness> report;
  report.query = "cubic residual exact of power 3";
  report.bounds = {{"y_min", Int(y_min)}, {"y_max", Int(y_max)}, {"a_min", Int(a_min)},
                   {"a_max", Int(a_max)}, {"b_min", Int(b_min)}, {"b_max", Int(b_max)}};
  for (long a = a_min; a <= a_max; ++a) {
    if (a == 0) continue;
    for (long b = b_min; b <= b_max; ++b) {
      if (b == 0) continue;
      const Poly residual = r3_poly(Rat(a), Rat(b));
      for (long y = y_min; y <= y_max; ++y) {
        auto witness = nth_root_exact(residual(Rat(y)), 3);
        if (!witness || witness->root == 0) continue;
        const Int t = witness->root.get_num();
        report.witnesses.push_back(R3Witness{Int(y), Int(a), Int(b), t, t - 10 - Int(y)});
      }
    }
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.exhaustive = true;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace newtonian
