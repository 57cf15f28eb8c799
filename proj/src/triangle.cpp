#include "newtonian/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace newtonian {

Row row(const Rat& y, unsigned n) {
  Row r{y, n, {}};
  r.entries.reserve(n + 1);
  Rat y_power(1);
  for (unsigned k = 0; k <= n; ++k) {
    r.entries.push_back(Rat(binomial(n, k)) * y_power);
    y_power *= y;
  }
  return r;
}

Triangle triangle(const Rat& y, unsigned depth) {
  Triangle t{y, depth, {}};
  t.rows.reserve(depth + 1);
  t.rows.push_back(Row{y, 0, {Rat(1)}});
  for (unsigned n = 1; n <= depth; ++n) {
    const Row& prev = t.rows.back();
    Row next{y, n, {}};
    next.entries.reserve(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
      Rat entry(0);
      if (r >= 1) entry += y * prev.entries[r - 1];
      if (r <= n - 1) entry += prev.entries[r];
      next.entries.push_back(entry);
    }
    t.rows.push_back(std::move(next));
  }
  return t;
}

Rat delta_positional(const Row& r, const Rat& base) {
  Rat value(0);
  for (const Rat& entry : r.entries) value = value * base + entry;
  return value;
}

namespace {

std::string render_digits(const std::vector<Int>& digits, const Int& base) {
  std::string out;
  bool alnum = base <= 36;
  for (size_t i = digits.size(); i-- > 0;) {
    unsigned long d = digits[i].get_ui();
    if (alnum) {
      out += d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
    } else {
      if (!out.empty()) out += ':';
      out += to_string(digits[i]);
    }
  }
  return out;
}

}  // namespace

CarriedDigits delta_carry(const Row& r, const Int& base) {
  if (base < 2) throw std::invalid_argument("carry base must be at least 2");
  for (const Rat& entry : r.entries) {
    if (!is_integral(entry) || sgn(entry) < 0)
      throw std::domain_error("carry undefined");
  }
  std::vector<Int> digits;  // least-significant first
  Int carry(0);
  for (size_t i = r.entries.size(); i-- > 0;) {
    Int t = r.entries[i].get_num() + carry;
    digits.push_back(t % base);
    carry = t / base;
  }
  while (carry > 0) {
    digits.push_back(carry % base);
    carry /= base;
  }
  while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  Int value(0);
  for (size_t i = digits.size(); i-- > 0;) value = value * base + digits[i];
  return CarriedDigits{render_digits(digits, base), value};
}

Rat delta_value(unsigned n, const Rat& y) { return pow_rat(Rat(10) + y, n); }

}  // namespace newtonian
