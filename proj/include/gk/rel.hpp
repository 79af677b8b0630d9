#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gk {

using Pair = std::pair<std::size_t, std::size_t>;

// Finite binary relation from a source set {0..source_size-1} to a target set
// {0..target_size-1}. Pairs are stored target first and kept sorted.
class Relation {
 public:
  Relation() = default;
  // Throws std::invalid_argument on out-of-range or duplicate pairs.
  Relation(std::size_t target_size, std::size_t source_size, std::vector<Pair> pairs);

  static Relation identity(std::size_t n);
  // Graph of a total map: pairs (map[x], x).
  static Relation from_map(std::size_t target_size, const std::vector<std::size_t>& map);

  std::size_t target_size() const { return target_size_; }
  std::size_t source_size() const { return source_size_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(std::size_t t, std::size_t s) const;

  // Targets related to one source point, ascending.
  std::vector<std::size_t> targets_of(std::size_t s) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.target_size_ == b.target_size_ && a.source_size_ == b.source_size_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

 private:
  std::size_t target_size_ = 0;
  std::size_t source_size_ = 0;
  std::vector<Pair> pairs_;
};

// r: Y -> Z after s: X -> Y.
Relation compose(const Relation& r, const Relation& s);

// Returns a pair (z, x) of r∘s reached through two different intermediates,
// or nothing when the composition is simple.
std::optional<Pair> simplicity_witness(const Relation& r, const Relation& s);
inline bool is_simple(const Relation& r, const Relation& s) { return !simplicity_witness(r, s); }

Relation transpose(const Relation& r);

// r: X -> Y, s: Z -> T gives X×Z -> Y×T; the point (a, b) of a product set
// A×B has index a * |B| + b.
Relation product(const Relation& r, const Relation& s);

std::vector<std::size_t> image(const Relation& r, const std::vector<std::size_t>& a);

// Some pair in exactly one of the two relations, if any.
std::optional<Pair> difference_witness(const Relation& a, const Relation& b);

}  // namespace gk
