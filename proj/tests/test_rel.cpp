#include <doctest.h>

#include <random>
#include <set>

#include "gk/groupoid.hpp"
#include "fixtures.hpp"

using namespace gk;

namespace {

Relation random_relation(std::mt19937_64& r, std::size_t t, std::size_t s, double p = 0.35) {
  std::bernoulli_distribution keep(p);
  std::vector<Pair> v;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (keep(r)) v.push_back({i, j});
  return Relation(t, s, v);
}

// Composition straight from the definition.
std::set<Pair> compose_oracle(const Relation& r, const Relation& s) {
  std::set<Pair> out;
  for (const auto& [z, y] : r.pairs())
    for (const auto& [y2, x] : s.pairs())
      if (y == y2) out.insert({z, x});
  return out;
}

std::set<Pair> as_set(const Relation& r) { return {r.pairs().begin(), r.pairs().end()}; }

}  // namespace

TEST_CASE("compose: identity and one-step chase") {
  Relation s(2, 2, {{0, 1}});
  CHECK(compose(Relation::identity(2), s) == s);
  Relation r(2, 2, {{1, 0}});
  CHECK(compose(r, s) == Relation(2, 2, {{1, 1}}));
}

TEST_CASE("compose: dimension mismatch is rejected") {
  CHECK_THROWS_AS(compose(Relation(2, 3, {}), Relation(2, 2, {})), std::invalid_argument);
}

TEST_CASE("relation: duplicates and out-of-range pairs are rejected") {
  CHECK_THROWS_AS(Relation(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Relation(2, 2, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Relation(2, 2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("associativity of the pair groupoid multiplication as relations") {
  const auto& d = fx::p2()->data();
  const std::size_t n = d.size();
  Relation m = mult_relation(d), id = Relation::identity(n);
  Relation lhs = compose(m, product(m, id)), rhs = compose(m, product(id, m));
  std::set<Pair> oracle;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (d.at(x, y) != kNone && d.at(y, z) != kNone) oracle.insert({d.at(d.at(x, y), z), (x * n + y) * n + z});
  CHECK(as_set(lhs) == oracle);
  CHECK(as_set(rhs) == oracle);
}

TEST_CASE("simplicity") {
  Relation r(1, 2, {{0, 0}, {0, 1}});
  Relation s(2, 1, {{0, 0}, {1, 0}});
  auto w = simplicity_witness(r, s);
  REQUIRE(w);
  CHECK(*w == Pair{0, 0});
  CHECK(is_simple(Relation::identity(2), s));
}

TEST_CASE("transpose, product, image") {
  std::mt19937_64 rng(7);
  Relation r = random_relation(rng, 4, 5);
  CHECK(transpose(transpose(r)) == r);
  CHECK(product(Relation::identity(2), Relation::identity(3)) == Relation::identity(6));
  CHECK(image(Relation(2, 2, {{1, 0}}), {0}) == std::vector<std::size_t>{1});
  Relation a(2, 2, {{0, 1}}), b(3, 2, {{2, 0}});
  CHECK(product(a, b).contains(0 * 3 + 2, 1 * 2 + 0));
  CHECK(product(a, b).size() == 1);
}

TEST_CASE("property: composition laws on random relations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int it = 0; it < 200; ++it) {
    std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    Relation r = random_relation(rng, a, b), s = random_relation(rng, b, c), t = random_relation(rng, c, d);
    CHECK(as_set(compose(r, s)) == compose_oracle(r, s));
    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(transpose(compose(r, s)) == compose(transpose(s), transpose(r)));
    if (it < 60) {
      std::size_t e = dim(rng) % 4 + 1, f = dim(rng) % 4 + 1, g = dim(rng) % 4 + 1;
      Relation u = random_relation(rng, e, f), v = random_relation(rng, f, g);
      Relation r2 = random_relation(rng, a % 4 + 1, b % 4 + 1), s2 = random_relation(rng, b % 4 + 1, c % 4 + 1);
      CHECK(compose(product(r2, u), product(s2, v)) == product(compose(r2, s2), compose(u, v)));
    }
  }
}

TEST_CASE("difference witness") {
  Relation a(2, 2, {{0, 0}, {1, 1}}), b(2, 2, {{0, 0}});
  auto w = difference_witness(a, b);
  REQUIRE(w);
  CHECK(*w == Pair{1, 1});
  CHECK_FALSE(difference_witness(a, a));
}
