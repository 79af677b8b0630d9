#include "gk/algebra.hpp"

namespace gk {

Surd t_factor(const Morphism& h, const Haar& dom, const Haar& cod, std::size_t x, std::size_t y) {
  const Groupoid &g = *h.dom(), &gp = *h.cod();
  if (g.eR(x) != h.f(gp.eL(y)))
    throw CheckFailure("transport factor: (x, y) must satisfy eR(x) = f_h(eL(y)), witness " + g.name(x) + ", " + gp.name(y));
  const std::size_t z = h.twist(x, y);
  Q num = dom.c(g.eL(x)) * cod.c(gp.eL(y));
  Q den = dom.c(g.eR(x)) * cod.c(gp.eL(z));
  return Surd::root(num / den);
}

}  // namespace gk
