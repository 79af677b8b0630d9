#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gk/rel.hpp"
#include "gk/report.hpp"

namespace gk {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Raw tables of a candidate groupoid. prod is row-major n×n with kNone
// marking non-composable pairs.
struct GroupoidData {
  std::vector<std::string> names;
  std::vector<std::size_t> units;
  std::vector<std::size_t> inv;
  std::vector<std::size_t> prod;

  std::size_t size() const { return names.size(); }
  std::size_t at(std::size_t x, std::size_t y) const { return prod[x * size() + y]; }
};

// Multiplication, unit and inverse as relations: m from Γ×Γ, e from a
// one-point set, s on Γ.
Relation mult_relation(const GroupoidData& d);
Relation unit_relation(const GroupoidData& d);
Relation inverse_relation(const GroupoidData& d);

// Checks the relational axioms (associativity, identity, inverse, strong
// positivity) by recomposing relations. Never throws.
Report validate(const GroupoidData& d);

// A validated groupoid with its structure maps.
class Groupoid {
 public:
  explicit Groupoid(GroupoidData d);  // throws CheckFailure with the report

  const GroupoidData& data() const { return d_; }
  std::size_t size() const { return d_.size(); }
  const std::string& name(std::size_t x) const { return d_.names[x]; }
  std::size_t index_of(const std::string& name) const;  // kNone if absent

  const std::vector<std::size_t>& units() const { return d_.units; }
  std::size_t unit_count() const { return d_.units.size(); }
  bool is_unit(std::size_t x) const { return unit_pos_[x] != kNone; }
  // Position of a unit inside units(); kNone for non-units.
  std::size_t unit_pos(std::size_t x) const { return unit_pos_[x]; }

  std::size_t inv(std::size_t x) const { return d_.inv[x]; }
  std::size_t mul(std::size_t x, std::size_t y) const { return d_.at(x, y); }
  bool composable(std::size_t x, std::size_t y) const { return d_.at(x, y) != kNone; }

  std::size_t eL(std::size_t x) const { return eL_[x]; }
  std::size_t eR(std::size_t x) const { return eR_[x]; }

  // Elements with eL = a (left fiber) or eR = a (right fiber), for a unit a.
  const std::vector<std::size_t>& left_fiber(std::size_t a) const { return left_[unit_pos_[a]]; }
  const std::vector<std::size_t>& right_fiber(std::size_t a) const { return right_[unit_pos_[a]]; }

  const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
  std::size_t orbit_of(std::size_t a) const { return orbit_of_[unit_pos_[a]]; }
  // Elements x with eL(x) = a and eR(x) = b.
  std::vector<std::size_t> between(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> isotropy(std::size_t a) const { return between(a, a); }

 private:
  GroupoidData d_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> unit_pos_, eL_, eR_, orbit_of_;
  std::vector<std::vector<std::size_t>> left_, right_, orbits_;
};

using GPtr = std::shared_ptr<const Groupoid>;

GPtr make_groupoid(GroupoidData d);

// Consequences of the axioms that are asserted as theorems: unit products,
// uniqueness of eL/eR, x s(x) = eL(x), composability iff eR(x) = eL(y),
// products landing in the units, translations bijective between fibers.
Report check_consequences(const Groupoid& g);

// Builders. Names are deterministic: points "0".."n-1", pairs "(i,j)".
GPtr build_pair(std::size_t n);
GPtr build_pair(const std::vector<std::string>& points);
GPtr build_set(std::size_t n);
GPtr build_set(const std::vector<std::string>& points);
// Throws CheckFailure naming the failing group law.
GPtr build_group(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names = {});
GPtr build_cyclic(std::size_t n);
GPtr build_symmetric(std::size_t n);
// labels[i] is the class of point i.
GPtr build_equivalence(const std::vector<std::size_t>& labels);
// action[g][p] is the image of point p under group element g.
GPtr build_transformation(const Groupoid& group, const std::vector<std::vector<std::size_t>>& action,
                          std::vector<std::string> points = {});
GPtr build_product(const Groupoid& a, const Groupoid& b);

// The induced structure on a subset; throws CheckFailure if it is not a
// subgroupoid. Elements keep their names and ascending order.
GPtr restrict_to(const Groupoid& g, const std::vector<std::size_t>& subset);

bool is_group(const Groupoid& g);

}  // namespace gk
