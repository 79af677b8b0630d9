#pragma once

#include <vector>

#include "gk/groupoid.hpp"
#include "gk/scalar.hpp"

namespace gk {

// Discrete Haar data on a groupoid: x weighs c(eR(x)) inside its left fiber
// and c(eL(x)) inside its right fiber; nu weighs the units.
class Haar {
 public:
  // c and nu are indexed by unit position; both strictly positive.
  Haar(GPtr g, std::vector<Q> c, std::vector<Q> nu);
  static Haar uniform(GPtr g);

  const GPtr& groupoid() const { return g_; }
  const Q& c(std::size_t unit) const { return c_[g_->unit_pos(unit)]; }
  const Q& nu(std::size_t unit) const { return nu_[g_->unit_pos(unit)]; }
  const std::vector<Q>& c_by_pos() const { return c_; }
  const std::vector<Q>& nu_by_pos() const { return nu_; }

  Q left_weight(std::size_t x) const { return c(g_->eR(x)); }
  Q right_weight(std::size_t x) const { return c(g_->eL(x)); }
  // Mass of x in the weighted L2 space: c(eL(x)) nu(eR(x)).
  Q mu(std::size_t x) const { return c(g_->eL(x)) * nu(g_->eR(x)); }

 private:
  GPtr g_;
  std::vector<Q> c_, nu_;
};

// Left invariance of per-element left-fiber weights: w(xz) = w(z) for every
// composable pair. Right invariance of per-element right-fiber weights:
// r(zx) = r(z).
Report check_left_invariance(const Groupoid& g, const std::vector<Q>& w);
Report check_right_invariance(const Groupoid& g, const std::vector<Q>& r);

// Builds Haar data from arbitrary per-element left weights, rejecting weights
// that are not induced by a function on the units.
Haar haar_from_left_weights(const GPtr& g, const std::vector<Q>& w, std::vector<Q> nu);

}  // namespace gk
