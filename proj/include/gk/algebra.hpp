#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gk/haar.hpp"
#include "gk/morphism.hpp"

namespace gk {

template <class S>
using Coef = std::vector<S>;

namespace detail {

inline void same_groupoid(const Haar& h, std::size_t n1, std::size_t n2) {
  if (n1 != h.groupoid()->size() || n2 != h.groupoid()->size())
    throw CheckFailure("algebra: coefficient vector does not match the groupoid");
}

template <class S>
std::vector<S> lifted_left_weights(const Haar& h) {
  const Groupoid& g = *h.groupoid();
  std::vector<S> w(g.size());
  for (std::size_t y = 0; y < g.size(); ++y) w[y] = lift<S>(h.left_weight(y));
  return w;
}

// One output entry of the left-fiber convolution sum, reduced in fiber order.
template <class S>
S conv_entry(const Groupoid& g, const std::vector<S>& w, const Coef<S>& f1, const Coef<S>& f2, std::size_t x) {
  S acc{};
  for (std::size_t y : g.left_fiber(g.eL(x))) {
    if (is_zero(f1[y])) continue;
    S term = w[y] * f1[y];
    term *= f2[g.mul(g.inv(y), x)];
    acc += term;
  }
  return acc;
}

}  // namespace detail

// (f1 * f2)(x) = sum over y in F_l(eL(x)) of c(eR(y)) f1(y) f2(s(y) x).
template <class S>
Coef<S> convolve_serial(const Haar& h, const Coef<S>& f1, const Coef<S>& f2) {
  detail::same_groupoid(h, f1.size(), f2.size());
  const Groupoid& g = *h.groupoid();
  const auto w = detail::lifted_left_weights<S>(h);
  Coef<S> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = detail::conv_entry(g, w, f1, f2, x);
  return out;
}

// Same sums with the outputs split across threads; each entry is reduced in
// the same order as the serial kernel, so results agree bit for bit.
template <class S>
Coef<S> convolve(const Haar& h, const Coef<S>& f1, const Coef<S>& f2) {
  detail::same_groupoid(h, f1.size(), f2.size());
  const Groupoid& g = *h.groupoid();
  const auto w = detail::lifted_left_weights<S>(h);
  const long n = static_cast<long>(g.size());
  Coef<S> out(g.size());
#pragma omp parallel for schedule(static)
  for (long x = 0; x < n; ++x) out[x] = detail::conv_entry(g, w, f1, f2, static_cast<std::size_t>(x));
  return out;
}

// Right-fiber form: sum over y in F_r(eR(x)) of c(eL(y)) f1(x s(y)) f2(y).
template <class S>
Coef<S> convolve_right_form(const Haar& h, const Coef<S>& f1, const Coef<S>& f2) {
  detail::same_groupoid(h, f1.size(), f2.size());
  const Groupoid& g = *h.groupoid();
  Coef<S> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y : g.right_fiber(g.eR(x))) {
      S term = lift<S>(h.right_weight(y)) * f1[g.mul(x, g.inv(y))];
      term *= f2[y];
      out[x] += term;
    }
  return out;
}

// f*(x) = conj(f(s(x))).
template <class S>
Coef<S> star(const Groupoid& g, const Coef<S>& f) {
  Coef<S> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = conj(f[g.inv(x)]);
  return out;
}

// 1/c on the units, 0 elsewhere.
template <class S>
Coef<S> unit_element(const Haar& h) {
  const Groupoid& g = *h.groupoid();
  Coef<S> out(g.size());
  for (std::size_t u : g.units()) out[u] = lift<S>(Q(1 / h.c(u)));
  return out;
}

template <class S>
Coef<S> add(const Coef<S>& a, const Coef<S>& b) {
  Coef<S> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

template <class S>
Coef<S> scale(const S& s, const Coef<S>& a) {
  Coef<S> out(a);
  for (auto& v : out) v *= s;
  return out;
}

template <class S>
Coef<cd> to_complex(const Coef<S>& a) {
  Coef<cd> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = to_cd(a[i]);
  return out;
}

struct Norms {
  double left = 0, right = 0;
  double max() const { return left > right ? left : right; }
};

// Largest fiber mass of |f| over left fibers (weights c(eR)) and over right
// fibers (weights c(eL)).
template <class S>
Norms norms(const Haar& h, const Coef<S>& f) {
  const Groupoid& g = *h.groupoid();
  Norms n;
  for (std::size_t a : g.units()) {
    double l = 0, r = 0;
    for (std::size_t x : g.left_fiber(a)) l += h.left_weight(x).get_d() * abs_d(f[x]);
    for (std::size_t x : g.right_fiber(a)) r += h.right_weight(x).get_d() * abs_d(f[x]);
    n.left = std::max(n.left, l);
    n.right = std::max(n.right, r);
  }
  return n;
}

// Per orbit O: sqrt(sum over a, b in O of c(a) c(b) (sum over x with eL = a,
// eR = b of |f(x)|)^2), maximized over the orbits.
template <class S>
double geometric_norm(const Haar& h, const Coef<S>& f) {
  const Groupoid& g = *h.groupoid();
  double best = 0;
  for (const auto& orbit : g.orbits()) {
    double total = 0;
    for (std::size_t a : orbit)
      for (std::size_t b : orbit) {
        double inner = 0;
        for (std::size_t x : g.between(a, b)) inner += abs_d(f[x]);
        total += h.c(a).get_d() * h.c(b).get_d() * inner * inner;
      }
    best = std::max(best, std::sqrt(total));
  }
  return best;
}

// Transport factor for (x, y) with eR(x) = f_h(eL(y)):
// sqrt(c(eL x) c'(eL y) / (c(eR x) c'(eL z))) with z = hR_{eL y}(x) y.
Surd t_factor(const Morphism& h, const Haar& dom, const Haar& cod, std::size_t x, std::size_t y);

namespace detail {

inline void check_hat_inputs(const Morphism& h, const Haar& dom, const Haar& cod) {
  if (dom.groupoid()->size() != h.dom()->size() || cod.groupoid()->size() != h.cod()->size())
    throw CheckFailure("hat action: Haar data does not match the morphism");
}

template <class S>
S hat_entry(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<S>& f, const Coef<S>& fp, std::size_t z) {
  const Groupoid &g = *h.dom(), &gp = *h.cod();
  const std::size_t b = gp.eL(z);
  S acc{};
  for (std::size_t x : g.left_fiber(h.f(b))) {
    if (is_zero(f[x])) continue;
    const std::size_t y = gp.mul(gp.inv(h.hL(b, x)), z);
    S term = lift<S>(dom.left_weight(x)) * f[x];
    term *= lift<S>(t_factor(h, dom, cod, x, y));
    term *= fp[y];
    acc += term;
  }
  return acc;
}

}  // namespace detail

// (f *_h f')(z) = sum over x in F_l(f_h(b)) of c(eR x) f(x) t_h(x, y) f'(y)
// with b = eL(z) and y = s'(hL_b(x)) z. Exact scalars require rational t_h.
template <class S>
Coef<S> hat_action_serial(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<S>& f, const Coef<S>& fp) {
  detail::check_hat_inputs(h, dom, cod);
  Coef<S> out(h.cod()->size());
  for (std::size_t z = 0; z < out.size(); ++z) out[z] = detail::hat_entry(h, dom, cod, f, fp, z);
  return out;
}

template <class S>
Coef<S> hat_action(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<S>& f, const Coef<S>& fp) {
  detail::check_hat_inputs(h, dom, cod);
  const long n = static_cast<long>(h.cod()->size());
  Coef<S> out(h.cod()->size());
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (long z = 0; z < n; ++z) {
    try {
      out[z] = detail::hat_entry(h, dom, cod, f, fp, static_cast<std::size_t>(z));
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

// (g f)(x) = g(eL(x)) f(x); g is indexed by unit position.
template <class S>
Coef<S> multiply_units(const Groupoid& gr, const std::vector<S>& g, const Coef<S>& f) {
  Coef<S> out(f);
  for (std::size_t x = 0; x < gr.size(); ++x) out[x] *= g[gr.unit_pos(gr.eL(x))];
  return out;
}

// g o f_h as a function on the codomain units.
template <class S>
std::vector<S> pull_units(const Morphism& h, const std::vector<S>& g) {
  std::vector<S> out;
  for (std::size_t b : h.cod()->units()) out.push_back(g[h.dom()->unit_pos(h.f(b))]);
  return out;
}

}  // namespace gk
