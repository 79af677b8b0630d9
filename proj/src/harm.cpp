#include "gk/harm.hpp"

#include <algorithm>
#include <cmath>

namespace gk {

namespace {

double coef_diff(const Coef<cd>& a, const Coef<cd>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double coef_max(const Coef<cd>& a) {
  double d = 0;
  for (const auto& v : a) d = std::max(d, std::abs(v));
  return d;
}

bool close(double diff, double scale, double tol) { return diff <= tol * (1 + scale); }

}  // namespace

Surd bisection_factor(const Haar& h, const Bisection& b, std::size_t z) {
  const Groupoid& g = *h.groupoid();
  const std::size_t w = act_left(g, bis_inverse(g, b), z);
  return Surd::root(h.c(g.eL(w)) / h.c(g.eL(z)));
}

Operator bisection_unitary(const Haar& h, const Bisection& b) {
  const Groupoid& g = *h.groupoid();
  const Bisection binv = bis_inverse(g, b);
  const auto n = static_cast<Eigen::Index>(g.size());
  Operator u{Eigen::MatrixXcd::Zero(n, n), l2_weights(h)};
  for (std::size_t z = 0; z < g.size(); ++z) u.m(z, act_left(g, binv, z)) = bisection_factor(h, b, z).value();
  return u;
}

Report bisection_multiplier_checks(const Morphism& h, const Haar& dom, const Haar& cod, const Bisection& b,
                                   const Coef<cd>& f1, const Coef<cd>& f2, const Coef<cd>& f3, double tol) {
  Report r;
  const Groupoid &g = *h.dom(), &gp = *h.cod();
  const Bisection hb = bisection_image(h, b);
  const std::string wb = bisection_str(g, b);

  Coef<cd> lhs = hat_action(h, dom, cod, act_on_algebra(dom, b, f1), f2);
  Coef<cd> rhs = act_on_algebra(cod, hb, hat_action(h, dom, cod, f1, f2));
  if (!close(coef_diff(lhs, rhs), coef_max(rhs), tol)) r.add("bisection multiplier: hat(B f1) f2 != h(B)(hat(f1) f2)", wb);

  Operator p1 = pi_h(h, dom, cod, act_on_algebra(dom, b, f1));
  Eigen::MatrixXcd p2 = bisection_unitary(cod, hb).m * pi_h(h, dom, cod, f1).m;
  if (!close(max_abs_diff(p1.m, p2), p2.cwiseAbs().maxCoeff(), tol)) r.add("bisection multiplier: pi_h(B f) != U_h(B) pi_h(f)", wb);

  const Bisection sb = bis_inverse(g, b);
  Coef<cd> a1 = convolve(dom, star(g, f1), act_on_algebra(dom, b, f3));
  Coef<cd> a2 = convolve(dom, star(g, act_on_algebra(dom, sb, f1)), f3);
  if (!close(coef_diff(a1, a2), coef_max(a2), tol)) r.add("bisection multiplier: f1*(B f3) != (s(B) f1)* f3", wb);

  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t bu : gp.units()) {
      if (g.eR(x) != h.f(bu)) continue;
      for (std::size_t y : gp.left_fiber(bu)) {
        const std::size_t bx = act_left(g, b, x);
        Surd left = bisection_factor(dom, b, bx) * t_factor(h, dom, cod, bx, y);
        Surd right = t_factor(h, dom, cod, x, y) * bisection_factor(cod, hb, act_left(gp, hb, h.twist(x, y)));
        if (left != right) {
          r.add("bisection transport: b(Bx) t_h(Bx, y) != t_h(x, y) b'(h(B) m_h(x, y))", wb + ", " + g.name(x) + ", " + gp.name(y));
          return r;
        }
      }
    }
  return r;
}

const Surd& Cochain::at(const std::vector<std::size_t>& s) const {
  auto it = val.find(s);
  if (it == val.end()) throw CheckFailure("cochain: value missing for a composable string");
  return it->second;
}

std::vector<std::vector<std::size_t>> strings(const Groupoid& g, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    for (std::size_t u = 0; u < g.size(); ++u)
      if (g.is_unit(u)) out.push_back({u});
    return out;
  }
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (!cur.empty() && g.eR(cur.back()) != g.eL(x)) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Cochain constant_cochain(const Groupoid& g, std::size_t n, const Surd& v) {
  Cochain c{n, {}};
  for (auto& s : strings(g, n)) {
    bool has_unit = n > 0 && std::any_of(s.begin(), s.end(), [&](std::size_t x) { return g.is_unit(x); });
    c.val[s] = has_unit ? Surd() : v;
  }
  return c;
}

Cochain unit_function(const Groupoid& g, const std::vector<Surd>& by_unit_pos) {
  Cochain c{0, {}};
  for (std::size_t u : g.units()) c.val[{u}] = by_unit_pos.at(g.unit_pos(u));
  return c;
}

Report check_cochain(const Groupoid& g, const Cochain& c) {
  Report r;
  auto all = strings(g, c.deg);
  auto witness = [&](const std::vector<std::size_t>& s) {
    std::string w;
    for (std::size_t x : s) w += (w.empty() ? "" : " ") + (x < g.size() ? g.name(x) : "?");
    return "(" + w + ")";
  };
  for (const auto& [s, v] : c.val) {
    bool composable = s.size() == std::max<std::size_t>(c.deg, 1);
    for (std::size_t i = 0; composable && i < s.size(); ++i) {
      if (s[i] >= g.size()) composable = false;
      else if (i > 0 && g.eR(s[i - 1]) != g.eL(s[i])) composable = false;
    }
    if (c.deg == 0 && composable && !g.is_unit(s[0])) composable = false;
    if (!composable) {
      r.add("cochain: value given for a string that is not composable", witness(s));
      return r;
    }
  }
  for (const auto& s : all) {
    auto it = c.val.find(s);
    if (it == c.val.end()) {
      r.add("cochain: value missing for a composable string", witness(s));
      continue;
    }
    if (sgn(it->second.sq) == 0) r.add("cochain: values must be nonzero", witness(s));
    bool has_unit = c.deg > 0 && std::any_of(s.begin(), s.end(), [&](std::size_t x) { return g.is_unit(x); });
    if (has_unit && it->second != Surd()) r.add("cochain normalization: value must be 1 when a slot is a unit", witness(s));
  }
  return r;
}

Cochain delta(const Groupoid& g, const Cochain& f) {
  Report rep = check_cochain(g, f);
  if (!rep.ok()) throw CheckFailure(rep);
  Cochain out{f.deg + 1, {}};
  if (f.deg == 0) {
    for (std::size_t x = 0; x < g.size(); ++x) out.val[{x}] = f.at({g.eL(x)}) / f.at({g.eR(x)});
    return out;
  }
  const std::size_t n = f.deg;
  for (const auto& s : strings(g, n + 1)) {
    Surd v = f.at(std::vector<std::size_t>(s.begin() + 1, s.end()));
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<std::size_t> t;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i) t.back() = g.mul(t.back(), s[j]);
        else t.push_back(s[j]);
      }
      v = i % 2 ? v / f.at(t) : v * f.at(t);
    }
    const Surd& last = f.at(std::vector<std::size_t>(s.begin(), s.end() - 1));
    v = (n + 1) % 2 ? v / last : v * last;
    out.val[s] = v;
  }
  return out;
}

bool is_trivial(const Cochain& c) {
  for (const auto& [s, v] : c.val)
    if (v != Surd()) return false;
  return true;
}

Cochain modular(const Haar& h) {
  const Groupoid& g = *h.groupoid();
  Cochain d{1, {}};
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::size_t l = g.eL(x), r = g.eR(x);
    d.val[{x}] = Surd::root(h.c(r) * h.nu(l) / (h.c(l) * h.nu(r)));
  }
  return d;
}

Report check_positive_cocycle(const Groupoid& g, const Cochain& sigma) {
  Report r;
  if (sigma.deg != 1) {
    r.add("cocycle: degree must be 1", std::to_string(sigma.deg));
    return r;
  }
  r = check_cochain(g, sigma);
  if (!r.ok()) return r;
  for (const auto& [s, v] : sigma.val)
    if (v.sign < 0) r.add("cocycle: values must be positive", g.name(s[0]));
  if (!r.ok()) return r;
  Cochain d = delta(g, sigma);
  for (const auto& [s, v] : d.val)
    if (v != Surd()) {
      r.add("cocycle: sigma(xy) != sigma(x) sigma(y)", g.name(s[0]) + ", " + g.name(s[1]));
      break;
    }
  return r;
}

Coef<cd> sigma_complex(const Cochain& sigma, cd z, const Coef<cd>& f) {
  Coef<cd> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    double lg = 0.5 * std::log(sigma.at({x}).sq.get_d());
    out[x] = std::exp(cd(0, 1) * z * lg) * f[x];
  }
  return out;
}

Coef<cd> sigma_t(const Cochain& sigma, double t, const Coef<cd>& f) { return sigma_complex(sigma, cd(t, 0), f); }

Coef<cd> analytic_generator(const Cochain& sigma, const Coef<cd>& f) {
  Coef<cd> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] / sigma.at({x}).value();
  return out;
}

cd phi(const Haar& h, const Coef<cd>& f) {
  cd s = 0;
  for (std::size_t a : h.groupoid()->units()) s += h.nu(a).get_d() * f[a];
  return s;
}

Operator gns_involution(const Haar& h) {
  const Groupoid& g = *h.groupoid();
  const auto n = static_cast<Eigen::Index>(g.size());
  Operator s{Eigen::MatrixXcd::Zero(n, n), l2_weights(h)};
  for (std::size_t x = 0; x < g.size(); ++x) s.m(x, g.inv(x)) = std::sqrt(Q(h.mu(g.inv(x)) / h.mu(x)).get_d());
  return s;
}

Coef<cd> sigma_half(const Haar& h, const Coef<cd>& f) {
  Cochain d = modular(h);
  Coef<cd> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] / std::abs(d.at({x}).value());
  return out;
}

Report kms_check(const Haar& h, const Coef<cd>& f, double tol, const std::vector<double>& times) {
  Report r;
  const Groupoid& g = *h.groupoid();
  const Cochain d = modular(h);
  const cd p = phi(h, f);
  for (double t : times) {
    cd q = phi(h, sigma_t(d, -2 * t, f));
    if (!close(std::abs(q - p), std::abs(p), tol)) r.add("modular invariance: phi(sigma_t f) != phi(f)", "t = " + std::to_string(t));
  }
  const auto mu = l2_weights(h);
  const Coef<cd> sh = sigma_half(h, f);
  double n1 = std::sqrt(inner(mu, star(g, sh), star(g, sh)).real());
  double n2 = std::sqrt(inner(mu, f, f).real());
  if (!close(std::abs(n1 - n2), n2, tol)) r.add("isometry: |phi_hat((sigma_i/2 f)*)| != |phi_hat(f)|", "-");
  cd k1 = phi(h, convolve(h, star(g, f), f));
  cd k2 = phi(h, convolve(h, sh, star(g, sh)));
  if (!close(std::abs(k1 - k2), std::abs(k1), tol)) r.add("KMS: phi(f* f) != phi(sigma_i/2(f) sigma_i/2(f)*)", "-");
  return r;
}

}  // namespace gk
