#include "gk/morphism.hpp"

#include <algorithm>
#include <set>

#include "gk/bisection.hpp"

namespace gk {

std::string morphism_witness(const Groupoid& dom, const Groupoid& cod, const Pair& p) {
  return "(" + cod.name(p.first) + ", " + dom.name(p.second) + ")";
}

namespace {

std::string square_witness(const Groupoid& dom, const Groupoid& cod, const Pair& p) {
  const std::size_t n = dom.size();
  return "(" + dom.name(p.second / n) + ", " + dom.name(p.second % n) + ") -> " + cod.name(p.first);
}

bool same_groupoid(const Groupoid& a, const Groupoid& b) {
  if (&a == &b) return true;
  const auto &x = a.data(), &y = b.data();
  return x.names == y.names && x.units == y.units && x.inv == y.inv && x.prod == y.prod;
}

}  // namespace

Report validate_morphism(const Groupoid& dom, const Groupoid& cod, const Relation& graph) {
  Report r;
  if (graph.source_size() != dom.size() || graph.target_size() != cod.size()) {
    r.add("morphism: graph dimensions do not match the groupoids",
          std::to_string(graph.target_size()) + "x" + std::to_string(graph.source_size()));
    return r;
  }
  const Relation m = mult_relation(dom.data()), m2 = mult_relation(cod.data());
  const Relation hh = product(graph, graph);
  const Relation lhs = compose(graph, m), rhs = compose(m2, hh);
  if (auto w = difference_witness(lhs, rhs))
    r.add(std::string("morphism: hm != m'(h x h), pair only in ") + (lhs.contains(w->first, w->second) ? "hm" : "m'(h x h)"),
          square_witness(dom, cod, *w));
  if (auto w = simplicity_witness(graph, m)) r.add("morphism: composition hm is not simple", square_witness(dom, cod, *w));
  if (auto w = simplicity_witness(m2, hh)) r.add("morphism: composition m'(h x h) is not simple", square_witness(dom, cod, *w));
  const Relation hs = compose(graph, inverse_relation(dom.data()));
  const Relation sh = compose(inverse_relation(cod.data()), graph);
  if (auto w = difference_witness(hs, sh)) r.add("morphism: hs != s'h", morphism_witness(dom, cod, *w));
  const Relation he = compose(graph, unit_relation(dom.data()));
  if (auto w = difference_witness(he, unit_relation(cod.data())))
    r.add("morphism: he != e'", cod.name(w->first));
  return r;
}

Report check_derived_maps(const Groupoid& dom, const Groupoid& cod, const Relation& graph) {
  Report r;
  std::set<Pair> h0, via_r, via_l;
  for (const auto& [y, x] : graph.pairs()) {
    if (cod.is_unit(y) && dom.is_unit(x)) h0.insert({y, x});
    via_r.insert({cod.eR(y), dom.eR(x)});
    via_l.insert({cod.eL(y), dom.eL(x)});
  }
  if (via_r != h0) r.add("unit part: (eR' x eR) Gr(h) != Gr(h0)", "-");
  if (via_l != h0) r.add("unit part: (eL' x eL) Gr(h) != Gr(h0)", "-");
  for (std::size_t b : cod.units()) {
    std::size_t count = 0, a = kNone;
    for (const auto& [y, x] : h0)
      if (y == b) ++count, a = x;
    if (count != 1) {
      r.add("unit map: f_h must be a total function", cod.name(b));
      continue;
    }
    for (std::size_t x : dom.right_fiber(a)) {
      std::size_t hits = 0;
      for (std::size_t y : graph.targets_of(x)) hits += cod.eR(y) == b;
      if (hits != 1) r.add("fiber map: hR_b must be a total function", cod.name(b) + ", " + dom.name(x));
    }
    for (std::size_t x : dom.left_fiber(a)) {
      std::size_t hits = 0;
      for (std::size_t y : graph.targets_of(x)) hits += cod.eL(y) == b;
      if (hits != 1) r.add("fiber map: hL_b must be a total function", cod.name(b) + ", " + dom.name(x));
    }
  }
  return r;
}

Morphism::Morphism(GPtr dom, GPtr cod, Relation graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  Report r = validate_morphism(*dom_, *cod_, graph_);
  if (!r.ok()) throw CheckFailure(r);
  r = check_derived_maps(*dom_, *cod_, graph_);
  if (!r.ok()) throw CheckFailure(r);
  const std::size_t n = dom_->size(), k = cod_->unit_count();
  f_.assign(k, kNone);
  hR_.assign(k * n, kNone);
  hL_.assign(k * n, kNone);
  for (const auto& [y, x] : graph_.pairs()) {
    if (cod_->is_unit(y) && dom_->is_unit(x)) f_[cod_->unit_pos(y)] = x;
  }
  for (const auto& [y, x] : graph_.pairs()) {
    std::size_t br = cod_->unit_pos(cod_->eR(y)), bl = cod_->unit_pos(cod_->eL(y));
    if (dom_->eR(x) == f_[br]) hR_[br * n + x] = y;
    if (dom_->eL(x) == f_[bl]) hL_[bl * n + x] = y;
  }
}

std::size_t Morphism::twist(std::size_t x, std::size_t y) const {
  std::size_t b = cod_->eL(y);
  if (dom_->eR(x) != f(b)) throw CheckFailure("twist: eR(x) != f(eL(y)), witness " + dom_->name(x) + ", " + cod_->name(y));
  return cod_->mul(hR(b, x), y);
}

Morphism compose(const Morphism& k, const Morphism& h) {
  if (!same_groupoid(*h.cod(), *k.dom())) throw CheckFailure("composition: codomain of h is not the domain of k");
  if (auto w = simplicity_witness(k.graph(), h.graph()))
    throw CheckFailure("composition: kh is not simple, witness " + morphism_witness(*h.dom(), *k.cod(), *w));
  return Morphism(h.dom(), k.cod(), compose(k.graph(), h.graph()));
}

MappingForm to_fg(const Morphism& h) {
  MappingForm fg{h.dom(), h.cod(), {}, {}};
  for (std::size_t b : h.cod()->units()) {
    fg.f[b] = h.f(b);
    for (std::size_t x : h.dom()->right_fiber(h.f(b))) fg.g[{x, b}] = h.hR(b, x);
  }
  return fg;
}

Report check_fg(const MappingForm& fg) {
  Report r;
  const Groupoid &dom = *fg.dom, &cod = *fg.cod;
  auto pt = [&](std::size_t x, std::size_t b) { return "(" + dom.name(x) + ", " + cod.name(b) + ")"; };
  for (std::size_t b : cod.units())
    if (!fg.f.count(b) || fg.f.at(b) >= dom.size() || !dom.is_unit(fg.f.at(b)))
      r.add("mapping form: f must send every unit of the codomain to a unit of the domain", cod.name(b));
  if (fg.f.size() != cod.unit_count()) r.add("mapping form: f defined off the units of the codomain", "-");
  if (!r.ok()) return r;
  std::size_t expected = 0;
  for (std::size_t b : cod.units())
    for (std::size_t x : dom.right_fiber(fg.f.at(b))) {
      ++expected;
      auto it = fg.g.find({x, b});
      if (it == fg.g.end() || it->second >= cod.size()) r.add("mapping form: g must be defined on every (x, b) with eR(x) = f(b)", pt(x, b));
    }
  if (fg.g.size() != expected) r.add("mapping form: g defined outside {(x, b) : eR(x) = f(b)}", "-");
  if (!r.ok()) return r;

  std::set<std::size_t> fe;
  for (const auto& [b, a] : fg.f) fe.insert(a);
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (fe.count(dom.eR(x)) && !fe.count(dom.eL(x))) {
      r.add("saturation: eL eR^-1(f(E')) != f(E')", dom.name(x));
      break;
    }
  for (const auto& [xb, y] : fg.g)
    if (cod.eR(y) != xb.second) {
      r.add("target: eR' g(x, b) != b", pt(xb.first, xb.second));
      break;
    }
  for (const auto& [xb, y] : fg.g) {
    auto it = fg.g.find({dom.inv(xb.first), cod.eL(y)});
    if (it == fg.g.end() || it->second != cod.inv(y)) {
      r.add("inverse: s' g(x, b) != g(s(x), eL' g(x, b))", pt(xb.first, xb.second));
      break;
    }
  }
  bool cocycle_ok = true;
  for (const auto& [xb, y] : fg.g) {
    auto [x, b] = xb;
    for (std::size_t x1 : dom.right_fiber(dom.eL(x))) {
      auto lhs = fg.g.find({dom.mul(x1, x), b});
      auto first = fg.g.find({x1, cod.eL(y)});
      std::size_t rhs = first == fg.g.end() ? kNone : cod.mul(first->second, y);
      if (lhs == fg.g.end() || rhs == kNone || lhs->second != rhs) {
        r.add("cocycle: g(x1 x, b) != g(x1, eL' g(x, b)) g(x, b)", "x1 = " + dom.name(x1) + ", (x, b) = " + pt(x, b));
        cocycle_ok = false;
        break;
      }
    }
    if (!cocycle_ok) break;
  }
  return r;
}

Morphism from_fg(const MappingForm& fg) {
  Report r = check_fg(fg);
  if (!r.ok()) throw CheckFailure(r);
  std::vector<Pair> p;
  for (const auto& [xb, y] : fg.g) p.push_back({y, xb.first});
  return Morphism(fg.dom, fg.cod, Relation(fg.cod->size(), fg.dom->size(), std::move(p)));
}

Factorization factorize(const Morphism& h) {
  const Groupoid &dom = *h.dom(), &cod = *h.cod();
  std::vector<Pair> pts;
  for (std::size_t x = 0; x < dom.size(); ++x)
    for (std::size_t b : cod.units())
      if (dom.eR(x) == h.f(b)) pts.push_back({x, b});
  std::map<Pair, std::size_t> pos;
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = i;
  const std::size_t n = pts.size();
  auto g = [&](const Pair& p) { return h.hR(p.second, p.first); };
  GroupoidData d;
  d.inv.resize(n);
  d.prod.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, b] = pts[i];
    d.names.push_back("(" + dom.name(x) + "," + cod.name(b) + ")");
    if (dom.is_unit(x)) d.units.push_back(i);
    d.inv[i] = pos.at({dom.inv(x), cod.eL(g(pts[i]))});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t b1 = cod.eL(g(pts[j]));
    for (std::size_t x1 : dom.right_fiber(dom.eL(pts[j].first)))
      d.prod[pos.at({x1, b1}) * n + j] = pos.at({dom.mul(x1, pts[j].first), pts[j].second});
  }
  GPtr mid = make_groupoid(std::move(d));
  std::vector<Pair> kp, lp;
  for (std::size_t i = 0; i < n; ++i) {
    kp.push_back({i, pts[i].first});
    lp.push_back({g(pts[i]), i});
  }
  Morphism k(h.dom(), mid, Relation(n, dom.size(), std::move(kp)));
  Morphism l(mid, h.cod(), Relation(cod.size(), n, std::move(lp)));
  return Factorization{mid, pts, std::move(k), std::move(l)};
}

Report check_factorization(const Morphism& h, const Factorization& fz) {
  Report r;
  if (compose(fz.l.graph(), fz.k.graph()) != h.graph()) r.add("factorization: l k != h", "-");
  const Groupoid &dom = *h.dom(), &mid = *fz.mid, &cod = *h.cod();
  for (std::size_t u : mid.units()) {
    std::vector<std::size_t> img_r, img_l;
    for (std::size_t x : dom.right_fiber(fz.k.f(u))) img_r.push_back(fz.k.hR(u, x));
    for (std::size_t x : dom.left_fiber(fz.k.f(u))) img_l.push_back(fz.k.hL(u, x));
    std::sort(img_r.begin(), img_r.end());
    std::sort(img_l.begin(), img_l.end());
    if (img_r != mid.right_fiber(u) || std::adjacent_find(img_r.begin(), img_r.end()) != img_r.end())
      r.add("factorization: right fiber maps of k are bijections", mid.name(u));
    if (img_l != mid.left_fiber(u) || std::adjacent_find(img_l.begin(), img_l.end()) != img_l.end())
      r.add("factorization: left fiber maps of k are bijections", mid.name(u));
  }
  for (std::size_t i = 0; i < mid.size(); ++i)
    if (fz.l.graph().targets_of(i).size() != 1) r.add("factorization: l is a mapping", mid.name(i));
  std::vector<std::size_t> unit_img;
  for (std::size_t u : mid.units()) {
    auto t = fz.l.graph().targets_of(u);
    if (t.size() == 1) unit_img.push_back(t[0]);
  }
  std::sort(unit_img.begin(), unit_img.end());
  if (unit_img != cod.units()) r.add("factorization: l is bijective on units", "-");
  return r;
}

Report check_action(const Groupoid& g, const Action& a) {
  Report r;
  const std::size_t m = a.points.size(), n = g.size();
  if (a.mu.size() != m || a.phi.size() != n * m) {
    r.add("action: table sizes", "-");
    return r;
  }
  for (std::size_t y = 0; y < m; ++y)
    if (a.mu[y] >= n || !g.is_unit(a.mu[y])) r.add("action: mu must take unit values", a.points[y]);
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      bool defined = a.phi[x * m + y] != kNone;
      if (defined != (g.eR(x) == a.mu[y])) r.add("action: phi(x, y) defined iff eR(x) = mu(y)", g.name(x) + ", " + a.points[y]);
      else if (defined && a.phi[x * m + y] >= m) r.add("action: phi value out of range", g.name(x) + ", " + a.points[y]);
    }
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t p = a.phi[x * m + y];
      if (p == kNone) continue;
      if (a.mu[p] != g.eL(x)) r.add("action: mu(phi(x, y)) != eL(x)", g.name(x) + ", " + a.points[y]);
      for (std::size_t x1 : g.right_fiber(g.eL(x)))
        if (a.phi[g.mul(x1, x) * m + y] != a.phi[x1 * m + p])
          r.add("action: phi(x1 x2, y) != phi(x1, phi(x2, y))", g.name(x1) + ", " + g.name(x) + ", " + a.points[y]);
    }
  for (std::size_t y = 0; y < m; ++y)
    if (a.phi[a.mu[y] * m + y] != y) r.add("action: phi(mu(y), y) != y", a.points[y]);
  return r;
}

Morphism action_to_morphism(const GPtr& g, const Action& a) {
  Report r = check_action(*g, a);
  if (!r.ok()) throw CheckFailure(r);
  const std::size_t m = a.points.size();
  GPtr cod = build_pair(a.points);
  std::vector<Pair> p;
  for (std::size_t x = 0; x < g->size(); ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (a.phi[x * m + y] != kNone) p.push_back({a.phi[x * m + y] * m + y, x});
  return Morphism(g, cod, Relation(cod->size(), g->size(), std::move(p)));
}

bool is_pair_groupoid(const Groupoid& g) {
  const std::size_t k = g.unit_count();
  if (g.size() != k * k) return false;
  std::set<Pair> seen;
  for (std::size_t x = 0; x < g.size(); ++x) seen.insert({g.eL(x), g.eR(x)});
  return seen.size() == g.size();
}

Action morphism_to_action(const Morphism& h) {
  const Groupoid &dom = *h.dom(), &cod = *h.cod();
  if (!is_pair_groupoid(cod)) throw CheckFailure("action: codomain is not a pair groupoid");
  const std::size_t m = cod.unit_count(), n = dom.size();
  Action a;
  for (std::size_t b : cod.units()) {
    a.points.push_back(cod.name(b));
    a.mu.push_back(h.f(b));
  }
  a.phi.assign(n * m, kNone);
  for (std::size_t y = 0; y < m; ++y) {
    std::size_t b = cod.units()[y];
    for (std::size_t x : dom.right_fiber(h.f(b))) a.phi[x * m + y] = cod.unit_pos(cod.eL(h.hR(b, x)));
  }
  return a;
}

Morphism identity_morphism(const GPtr& g) { return Morphism(g, g, Relation::identity(g->size())); }

Morphism left_regular(const GPtr& g) {
  const std::size_t n = g->size();
  GPtr cod = build_pair(g->data().names);
  std::vector<Pair> p;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y : g->left_fiber(g->eR(z))) p.push_back({g->mul(z, y) * n + y, z});
  return Morphism(g, cod, Relation(cod->size(), n, std::move(p)));
}

Morphism unit_pair(const GPtr& g) {
  std::vector<std::string> pts;
  for (std::size_t u : g->units()) pts.push_back(g->name(u));
  GPtr cod = build_pair(pts);
  const std::size_t k = g->unit_count();
  std::vector<Pair> p;
  for (std::size_t x = 0; x < g->size(); ++x) p.push_back({g->unit_pos(g->eL(x)) * k + g->unit_pos(g->eR(x)), x});
  return Morphism(g, cod, Relation(cod->size(), g->size(), std::move(p)));
}

Morphism set_map(const GPtr& x_set, const GPtr& y_set, const std::vector<std::size_t>& fn) {
  if (x_set->unit_count() != x_set->size() || y_set->unit_count() != y_set->size())
    throw CheckFailure("set map: both groupoids must be sets");
  if (fn.size() != x_set->size()) throw CheckFailure("set map: map must be defined on every point");
  std::vector<Pair> p;
  for (std::size_t x = 0; x < fn.size(); ++x) {
    if (fn[x] >= y_set->size()) throw CheckFailure("set map: value out of range");
    p.push_back({x, fn[x]});
  }
  return Morphism(y_set, x_set, Relation(x_set->size(), y_set->size(), std::move(p)));
}

Morphism wide_inclusion(const GPtr& g, const std::vector<std::size_t>& subset) {
  GPtr sub = restrict_to(*g, subset);
  if (sub->unit_count() != g->unit_count()) throw CheckFailure("inclusion: subgroupoid is not wide");
  std::vector<Pair> p;
  for (std::size_t i = 0; i < sub->size(); ++i) p.push_back({g->index_of(sub->name(i)), i});
  return Morphism(sub, g, Relation(g->size(), sub->size(), std::move(p)));
}

Morphism vertical_restriction(const GPtr& g, const std::vector<std::size_t>& subset) {
  GPtr sub = restrict_to(*g, subset);
  std::vector<Pair> p;
  for (std::size_t i = 0; i < sub->size(); ++i) p.push_back({i, g->index_of(sub->name(i))});
  Relation graph(sub->size(), g->size(), std::move(p));
  Report r = validate_morphism(*g, *sub, graph);
  if (!r.ok()) throw CheckFailure("restriction: subgroupoid is not vertical\n" + r.str());
  return Morphism(g, sub, std::move(graph));
}

std::vector<std::size_t> bisection_image(const Morphism& h, const std::vector<std::size_t>& b) {
  if (!is_bisection(*h.dom(), b)) throw CheckFailure("bisection image: input is not a bisection");
  auto img = image(h.graph(), b);
  if (!is_bisection(*h.cod(), img)) throw CheckFailure("bisection image: image is not a bisection");
  return img;
}

}  // namespace gk
