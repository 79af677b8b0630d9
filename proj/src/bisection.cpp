#include "gk/bisection.hpp"

#include <algorithm>

namespace gk {

namespace {

bool bijective_onto_units(const Groupoid& g, const std::vector<std::size_t>& b, bool left) {
  if (b.size() != g.unit_count()) return false;
  std::vector<char> hit(g.unit_count(), 0);
  for (std::size_t x : b) {
    if (x >= g.size()) return false;
    std::size_t p = g.unit_pos(left ? g.eL(x) : g.eR(x));
    if (hit[p]) return false;
    hit[p] = 1;
  }
  return true;
}

void require(const Groupoid& g, const Bisection& b) {
  if (!is_bisection(g, b)) throw CheckFailure("bisection: eL and eR must restrict to bijections onto the units, witness " + bisection_str(g, b));
}

}  // namespace

std::string bisection_str(const Groupoid& g, const Bisection& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + (b[i] < g.size() ? g.name(b[i]) : "?");
  return s + "}";
}

bool is_bisection(const Groupoid& g, const std::vector<std::size_t>& b) {
  return bijective_onto_units(g, b, true) && bijective_onto_units(g, b, false);
}

bool is_bisection_by_products(const Groupoid& g, const std::vector<std::size_t>& b) {
  for (std::size_t x : b)
    if (x >= g.size()) return false;
  auto prod_set = [&](const std::vector<std::size_t>& l, const std::vector<std::size_t>& r) {
    std::vector<std::size_t> out;
    for (std::size_t x : l)
      for (std::size_t y : r)
        if (g.composable(x, y)) out.push_back(g.mul(x, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<std::size_t> sb;
  for (std::size_t x : b) sb.push_back(g.inv(x));
  std::vector<std::size_t> units = g.units();
  std::sort(units.begin(), units.end());
  return prod_set(b, sb) == units && prod_set(sb, b) == units;
}

std::vector<Bisection> enumerate_bisections(const Groupoid& g, std::size_t max_units) {
  const std::size_t k = g.unit_count();
  if (k > max_units)
    throw CheckFailure("bisections: " + std::to_string(k) + " units exceed the enumeration guard of " + std::to_string(max_units) +
                       " (raise --max-enum)");
  std::vector<Bisection> out;
  std::vector<std::size_t> pick(k);
  std::vector<char> used(k, 0);
  // Depth i chooses the element of B starting at the i-th unit.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      Bisection b(pick);
      std::sort(b.begin(), b.end());
      out.push_back(std::move(b));
      return;
    }
    for (std::size_t x : g.left_fiber(g.units()[i])) {
      std::size_t r = g.unit_pos(g.eR(x));
      if (used[r]) continue;
      used[r] = 1;
      pick[i] = x;
      self(self, i + 1);
      used[r] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Bisection bis_product(const Groupoid& g, const Bisection& b, const Bisection& c) {
  require(g, b);
  require(g, c);
  Bisection out;
  for (std::size_t x : b)
    for (std::size_t y : c)
      if (g.composable(x, y)) out.push_back(g.mul(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

Bisection bis_inverse(const Groupoid& g, const Bisection& b) {
  require(g, b);
  Bisection out;
  for (std::size_t x : b) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

Bisection unit_bisection(const Groupoid& g) {
  Bisection b = g.units();
  std::sort(b.begin(), b.end());
  return b;
}

std::size_t act_left(const Groupoid& g, const Bisection& b, std::size_t x) {
  for (std::size_t y : b)
    if (g.eR(y) == g.eL(x)) return g.mul(y, x);
  throw CheckFailure("bisection: no element ending at eL(x), witness " + g.name(x));
}

std::size_t act_right(const Groupoid& g, std::size_t x, const Bisection& b) {
  for (std::size_t y : b)
    if (g.eL(y) == g.eR(x)) return g.mul(x, y);
  throw CheckFailure("bisection: no element starting at eR(x), witness " + g.name(x));
}

std::vector<std::size_t> left_permutation(const Groupoid& g, const Bisection& b) {
  require(g, b);
  std::vector<std::size_t> p(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) p[x] = act_left(g, b, x);
  return p;
}

}  // namespace gk
