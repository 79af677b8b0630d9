#pragma once

#include <map>
#include <string>
#include <vector>

#include "gk/groupoid.hpp"

namespace gk {

// Relation-algebraic morphism check: hm = m'(h×h) with both compositions
// simple, hs = s'h, he = e'. The graph goes from dom to cod.
Report validate_morphism(const Groupoid& dom, const Groupoid& cod, const Relation& graph);

// A validated morphism together with its unit map and fiber maps.
class Morphism {
 public:
  Morphism(GPtr dom, GPtr cod, Relation graph);  // throws CheckFailure

  const GPtr& dom() const { return dom_; }
  const GPtr& cod() const { return cod_; }
  const Relation& graph() const { return graph_; }

  // Unit map from cod units to dom units.
  std::size_t f(std::size_t b) const { return f_[cod_->unit_pos(b)]; }
  // For x in F_r(f(b)), the unique y with (y, x) in the graph and eR(y) = b.
  std::size_t hR(std::size_t b, std::size_t x) const { return hR_[cod_->unit_pos(b) * dom_->size() + x]; }
  // For x in F_l(f(b)), the unique y with (y, x) in the graph and eL(y) = b.
  std::size_t hL(std::size_t b, std::size_t x) const { return hL_[cod_->unit_pos(b) * dom_->size() + x]; }

  // hR(eL(y), x) y, defined when eR(x) = f(eL(y)).
  std::size_t twist(std::size_t x, std::size_t y) const;

 private:
  GPtr dom_, cod_;
  Relation graph_;
  std::vector<std::size_t> f_, hR_, hL_;
};

// Checks that the unit map and fiber maps extracted from a valid graph are
// total and functional, and that the unit part of the graph is the same
// whether cut out by eR or eL. Failures here mean validate_morphism is wrong.
Report check_derived_maps(const Groupoid& dom, const Groupoid& cod, const Relation& graph);

// k after h.
Morphism compose(const Morphism& k, const Morphism& h);

// Mapping form: f from cod units to dom units, g on pairs (x, b) with
// eR(x) = f(b).
struct MappingForm {
  GPtr dom, cod;
  std::map<std::size_t, std::size_t> f;
  std::map<Pair, std::size_t> g;
};

MappingForm to_fg(const Morphism& h);
// Reports the first violated condition among: unit map well defined,
// saturation eL eR^-1(f(E')) = f(E'), eR g(x,b) = b, s'g(x,b) =
// g(s(x), eL g(x,b)), g(x1 x, b) = g(x1, eL g(x,b)) g(x,b).
Report check_fg(const MappingForm& fg);
Morphism from_fg(const MappingForm& fg);  // throws CheckFailure

struct Factorization {
  GPtr mid;
  std::vector<Pair> mid_points;  // element index -> (x, b)
  Morphism k, l;
};

// h = l k with mid = dom ×_f cod-units.
Factorization factorize(const Morphism& h);
Report check_factorization(const Morphism& h, const Factorization& fz);

// Left action of a groupoid on a finite set: mu maps points to units, phi[x
// * |Y| + y] is defined iff eR(x) = mu(y).
struct Action {
  std::vector<std::string> points;
  std::vector<std::size_t> mu;
  std::vector<std::size_t> phi;
};

Report check_action(const Groupoid& g, const Action& a);
Morphism action_to_morphism(const GPtr& g, const Action& a);  // cod is the pair groupoid on the points
bool is_pair_groupoid(const Groupoid& g);
Action morphism_to_action(const Morphism& h);  // cod must be a pair groupoid

// Canonical morphisms.
Morphism identity_morphism(const GPtr& g);
Morphism left_regular(const GPtr& g);    // to the pair groupoid on Γ
Morphism unit_pair(const GPtr& g);       // to the pair groupoid on the units
// For a map fn: X -> Y of sets, the transposed graph as a morphism from the
// set Y to the set X.
Morphism set_map(const GPtr& x_set, const GPtr& y_set, const std::vector<std::size_t>& fn);
Morphism wide_inclusion(const GPtr& g, const std::vector<std::size_t>& subset);
Morphism vertical_restriction(const GPtr& g, const std::vector<std::size_t>& subset);

// h(B) as the image of the graph; throws if B or the image is not a bisection.
std::vector<std::size_t> bisection_image(const Morphism& h, const std::vector<std::size_t>& b);

std::string morphism_witness(const Groupoid& dom, const Groupoid& cod, const Pair& p);

}  // namespace gk
