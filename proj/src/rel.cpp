#include "gk/rel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gk {

Relation::Relation(std::size_t target_size, std::size_t source_size, std::vector<Pair> pairs)
    : target_size_(target_size), source_size_(source_size), pairs_(std::move(pairs)) {
  for (const auto& [t, s] : pairs_) {
    if (t >= target_size_ || s >= source_size_)
      throw std::invalid_argument("relation pair (" + std::to_string(t) + "," + std::to_string(s) +
                                  ") out of bounds");
  }
  std::sort(pairs_.begin(), pairs_.end());
  auto dup = std::adjacent_find(pairs_.begin(), pairs_.end());
  if (dup != pairs_.end())
    throw std::invalid_argument("duplicate relation pair (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
}

Relation Relation::identity(std::size_t n) {
  std::vector<Pair> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = {i, i};
  return Relation(n, n, std::move(p));
}

Relation Relation::from_map(std::size_t target_size, const std::vector<std::size_t>& map) {
  std::vector<Pair> p(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) p[i] = {map[i], i};
  return Relation(target_size, map.size(), std::move(p));
}

bool Relation::contains(std::size_t t, std::size_t s) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{t, s});
}

std::vector<std::size_t> Relation::targets_of(std::size_t s) const {
  std::vector<std::size_t> out;
  for (const auto& [t, x] : pairs_)
    if (x == s) out.push_back(t);
  return out;
}

namespace {

struct Triple {
  std::size_t z, x, y;
  bool operator<(const Triple& o) const {
    if (z != o.z) return z < o.z;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

void check_composable(const Relation& r, const Relation& s) {
  if (r.source_size() != s.target_size())
    throw std::invalid_argument("relation dimension mismatch: " + std::to_string(r.source_size()) +
                                " vs " + std::to_string(s.target_size()));
}

// All (z, x, y) with (z, y) in r and (y, x) in s, sorted.
std::vector<Triple> chase(const Relation& r, const Relation& s) {
  check_composable(r, s);
  std::vector<std::vector<std::size_t>> s_by_target(s.target_size());
  for (const auto& [y, x] : s.pairs()) s_by_target[y].push_back(x);
  std::vector<Triple> out;
  for (const auto& [z, y] : r.pairs())
    for (std::size_t x : s_by_target[y]) out.push_back({z, x, y});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Relation compose(const Relation& r, const Relation& s) {
  auto triples = chase(r, s);
  std::vector<Pair> p;
  p.reserve(triples.size());
  for (const auto& t : triples)
    if (p.empty() || p.back() != Pair{t.z, t.x}) p.push_back({t.z, t.x});
  return Relation(r.target_size(), s.source_size(), std::move(p));
}

std::optional<Pair> simplicity_witness(const Relation& r, const Relation& s) {
  auto triples = chase(r, s);
  for (std::size_t i = 1; i < triples.size(); ++i)
    if (triples[i].z == triples[i - 1].z && triples[i].x == triples[i - 1].x)
      return Pair{triples[i].z, triples[i].x};
  return std::nullopt;
}

Relation transpose(const Relation& r) {
  std::vector<Pair> p;
  p.reserve(r.size());
  for (const auto& [t, s] : r.pairs()) p.push_back({s, t});
  return Relation(r.source_size(), r.target_size(), std::move(p));
}

Relation product(const Relation& r, const Relation& s) {
  std::vector<Pair> p;
  p.reserve(r.size() * s.size());
  for (const auto& [y, x] : r.pairs())
    for (const auto& [t, z] : s.pairs())
      p.push_back({y * s.target_size() + t, x * s.source_size() + z});
  return Relation(r.target_size() * s.target_size(), r.source_size() * s.source_size(), std::move(p));
}

std::vector<std::size_t> image(const Relation& r, const std::vector<std::size_t>& a) {
  std::vector<char> in(r.source_size(), 0);
  for (std::size_t x : a) {
    if (x >= r.source_size()) throw std::invalid_argument("image: index out of bounds");
    in[x] = 1;
  }
  std::vector<std::size_t> out;
  for (const auto& [t, s] : r.pairs())
    if (in[s]) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Pair> difference_witness(const Relation& a, const Relation& b) {
  std::vector<Pair> d;
  std::set_symmetric_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(),
                                std::back_inserter(d));
  if (d.empty()) return std::nullopt;
  return d.front();
}

}  // namespace gk
