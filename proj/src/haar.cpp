#include "gk/haar.hpp"

namespace gk {

Haar::Haar(GPtr g, std::vector<Q> c, std::vector<Q> nu) : g_(std::move(g)), c_(std::move(c)), nu_(std::move(nu)) {
  if (c_.size() != g_->unit_count() || nu_.size() != g_->unit_count())
    throw CheckFailure("haar: one value of c and nu per unit required");
  Report r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) <= 0) r.add("positivity: c must be strictly positive", g_->name(g_->units()[i]));
    if (sgn(nu_[i]) <= 0) r.add("positivity: nu must be strictly positive", g_->name(g_->units()[i]));
  }
  if (!r.ok()) throw CheckFailure(r);
}

Haar Haar::uniform(GPtr g) {
  std::size_t k = g->unit_count();
  return Haar(std::move(g), std::vector<Q>(k, Q(1)), std::vector<Q>(k, Q(1)));
}

Report check_left_invariance(const Groupoid& g, const std::vector<Q>& w) {
  Report r;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t z : g.left_fiber(g.eR(x)))
      if (w[g.mul(x, z)] != w[z]) {
        r.add("left invariance: weight of xz in F_l(eL(x)) != weight of z in F_l(eR(x))",
              "(" + g.name(x) + ", " + g.name(z) + ")");
        return r;
      }
  return r;
}

Report check_right_invariance(const Groupoid& g, const std::vector<Q>& rw) {
  Report r;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t z : g.right_fiber(g.eL(x)))
      if (rw[g.mul(z, x)] != rw[z]) {
        r.add("right invariance: weight of zx in F_r(eR(x)) != weight of z in F_r(eL(x))",
              "(" + g.name(z) + ", " + g.name(x) + ")");
        return r;
      }
  return r;
}

Haar haar_from_left_weights(const GPtr& g, const std::vector<Q>& w, std::vector<Q> nu) {
  if (w.size() != g->size()) throw CheckFailure("haar: one weight per element required");
  Report r = check_left_invariance(*g, w);
  if (!r.ok()) throw CheckFailure(r);
  std::vector<Q> c(g->unit_count());
  for (std::size_t u : g->units()) c[g->unit_pos(u)] = w[u];
  return Haar(g, std::move(c), std::move(nu));
}

}  // namespace gk
