#include "gk/homog.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace gk {

namespace {

void check_subgroup(const Groupoid& g, const std::vector<std::size_t>& h, const std::string& label) {
  const std::set<std::size_t> s(h.begin(), h.end());
  if (s.size() != h.size()) throw CheckFailure("double group: " + label + " lists an element twice");
  for (std::size_t x : h)
    if (x >= g.size()) throw CheckFailure("double group: " + label + " element out of range");
  if (!s.count(g.units()[0])) throw CheckFailure("double group: " + label + " must contain the identity");
  for (std::size_t x : h) {
    if (!s.count(g.inv(x))) throw CheckFailure("double group: " + label + " not closed under inverse, witness " + g.name(x));
    for (std::size_t y : h)
      if (!s.count(g.mul(x, y)))
        throw CheckFailure("double group: " + label + " not closed under products, witness " + g.name(x) + ", " + g.name(y));
  }
}

}  // namespace

DoubleGroup build_double(const GPtr& group, std::vector<std::size_t> a, std::vector<std::size_t> b) {
  const Groupoid& g = *group;
  if (!is_group(g)) throw CheckFailure("double group: the base groupoid is not a group");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  check_subgroup(g, a, "A");
  check_subgroup(g, b, "B");
  const std::size_t e = g.units()[0], n = g.size();
  for (std::size_t x : a)
    if (x != e && std::binary_search(b.begin(), b.end(), x))
      throw CheckFailure("double group: A and B must intersect only in the identity, witness " + g.name(x));
  DoubleGroup dg{group, a, b, std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone),
                 std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone), nullptr, nullptr};
  for (std::size_t x : a)
    for (std::size_t y : b) {
      std::size_t ab = g.mul(x, y), ba = g.mul(y, x);
      dg.aL[ab] = x, dg.bR[ab] = y;
      dg.bL[ba] = y, dg.aR[ba] = x;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (dg.aL[x] == kNone || dg.bL[x] == kNone)
      throw CheckFailure("double group: AB must cover the group, witness " + g.name(x));

  GroupoidData da, db;
  da.names = db.names = g.data().names;
  da.units = a;
  db.units = b;
  da.inv.resize(n);
  db.inv.resize(n);
  da.prod.assign(n * n, kNone);
  db.prod.assign(n * n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    da.inv[x] = g.mul(g.inv(dg.bL[x]), dg.aL[x]);
    db.inv[x] = g.mul(dg.bR[x], g.inv(dg.aR[x]));
    for (std::size_t y = 0; y < n; ++y) {
      if (dg.aR[x] == dg.aL[y]) da.prod[x * n + y] = g.mul(x, dg.bR[y]);
      if (dg.bR[x] == dg.bL[y]) db.prod[x * n + y] = g.mul(x, dg.aR[y]);
    }
  }
  dg.ga = make_groupoid(std::move(da));
  dg.gb = make_groupoid(std::move(db));
  return dg;
}

Morphism comultiplication(const DoubleGroup& dg) {
  const Groupoid& gb = *dg.gb;
  const std::size_t n = gb.size();
  GPtr cod = build_product(*dg.ga, *dg.ga);
  std::vector<Pair> p;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (gb.composable(x, y)) p.push_back({x * n + y, gb.mul(x, y)});
  return Morphism(dg.ga, cod, Relation(cod->size(), n, std::move(p)));
}

bool is_coassociative(const Morphism& comult) {
  const Relation& d = comult.graph();
  const Relation id = Relation::identity(comult.dom()->size());
  return compose(product(d, id), d) == compose(product(id, d), d);
}

std::vector<std::size_t> pentagon_map(const DoubleGroup& dg) {
  const Groupoid& g = *dg.group;
  const std::size_t n = g.size();
  std::vector<std::size_t> psi(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t u = g.mul(x, g.inv(dg.aL[y]));
      psi[x * n + y] = u * n + g.mul(dg.bR[u], y);
    }
  return psi;
}

namespace {

using Triple = std::array<std::size_t, 3>;

Triple apply_on(const std::vector<std::size_t>& psi, std::size_t n, Triple t, int i, int j) {
  std::size_t r = psi[t[i] * n + t[j]];
  t[i] = r / n;
  t[j] = r % n;
  return t;
}

bool pentagon_at(const std::vector<std::size_t>& psi, std::size_t n, const Triple& t) {
  Triple lhs = apply_on(psi, n, apply_on(psi, n, t, 0, 1), 1, 2);
  Triple rhs = apply_on(psi, n, apply_on(psi, n, apply_on(psi, n, t, 1, 2), 0, 2), 0, 1);
  return lhs == rhs;
}

bool is_permutation(const std::vector<std::size_t>& p) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

PentagonResult check_pentagon_serial(const DoubleGroup& dg) {
  const auto psi = pentagon_map(dg);
  const std::size_t n = dg.group->size();
  PentagonResult r;
  r.bijective = is_permutation(psi);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++r.checked;
        if (pentagon_at(psi, n, {x, y, z})) ++r.passed;
        else if (r.first_failure.empty()) r.first_failure = {x, y, z};
      }
  return r;
}

PentagonResult check_pentagon(const DoubleGroup& dg) {
  const auto psi = pentagon_map(dg);
  const std::size_t n = dg.group->size();
  std::vector<std::size_t> passed(n, 0), fail(n, kNone);
#pragma omp parallel for schedule(static)
  for (long xi = 0; xi < static_cast<long>(n); ++xi) {
    const auto x = static_cast<std::size_t>(xi);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (pentagon_at(psi, n, {x, y, z})) ++passed[x];
        else if (fail[x] == kNone) fail[x] = y * n + z;
      }
  }
  PentagonResult r;
  r.bijective = is_permutation(psi);
  r.checked = n * n * n;
  for (std::size_t x = 0; x < n; ++x) {
    r.passed += passed[x];
    if (r.first_failure.empty() && fail[x] != kNone) r.first_failure = {x, fail[x] / n, fail[x] % n};
  }
  return r;
}

Operator permutation_operator(const std::vector<std::size_t>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Operator u{Eigen::MatrixXcd::Zero(n, n), std::vector<double>(perm.size(), 1.0)};
  for (std::size_t p = 0; p < perm.size(); ++p) u.m(perm[p], p) = 1;
  return u;
}

SubgroupoidInfo classify_subgroupoid(const GPtr& parent, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  const Groupoid& g = *parent;
  SubgroupoidInfo info;
  info.sub = restrict_to(g, subset);
  info.subset = subset;
  std::set<std::size_t> s(subset.begin(), subset.end());
  info.wide = std::all_of(g.units().begin(), g.units().end(), [&](std::size_t u) { return s.count(u) > 0; });
  info.vertical = true;
  for (std::size_t x : subset)
    for (std::size_t y : g.left_fiber(g.eL(x)))
      if (!s.count(y)) info.vertical = false;
  std::vector<Pair> inc;
  for (std::size_t i = 0; i < subset.size(); ++i) inc.push_back({subset[i], i});
  Relation incl(g.size(), subset.size(), inc);
  info.inclusion_is_morphism = validate_morphism(*info.sub, g, incl).ok();
  info.transpose_is_morphism = validate_morphism(g, *info.sub, transpose(incl)).ok();
  return info;
}

std::vector<std::vector<std::size_t>> wide_subgroupoids(const Groupoid& g, std::size_t max_elems) {
  if (g.size() > max_elems)
    throw CheckFailure("subgroupoid search: " + std::to_string(g.size()) + " elements exceed the guard of " + std::to_string(max_elems) +
                       " (raise --max-enum or pass an explicit subset)");
  std::vector<std::size_t> free;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (!g.is_unit(x)) free.push_back(x);
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> in(g.size());
  for (unsigned long mask = 0; mask < (1ul << free.size()); ++mask) {
    for (std::size_t x = 0; x < g.size(); ++x) in[x] = g.is_unit(x);
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) in[free[i]] = 1;
    bool closed = true;
    for (std::size_t x = 0; x < g.size() && closed; ++x) {
      if (!in[x]) continue;
      if (!in[g.inv(x)]) closed = false;
      for (std::size_t y : g.left_fiber(g.eR(x)))
        if (in[y] && !in[g.mul(x, y)]) closed = false;
    }
    if (!closed) continue;
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < g.size(); ++x)
      if (in[x]) s.push_back(x);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Quotient quotient(const GPtr& parent, const std::vector<std::size_t>& wide_subset) {
  SubgroupoidInfo info = classify_subgroupoid(parent, wide_subset);
  if (!info.wide) throw CheckFailure("quotient: subgroupoid is not wide (it must contain every unit)");
  const Groupoid& g = *parent;
  std::set<std::size_t> s(info.subset.begin(), info.subset.end());
  const std::size_t n = g.size();
  std::vector<std::size_t> cls(n, kNone);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != kNone) continue;
    std::vector<std::size_t> members;
    for (std::size_t y : g.left_fiber(g.eL(x)))
      if (s.count(g.mul(g.inv(x), y))) {
        if (cls[y] != kNone) throw CheckFailure("quotient: relation is not an equivalence, witness " + g.name(x) + ", " + g.name(y));
        cls[y] = classes.size();
        members.push_back(y);
      }
    classes.push_back(std::move(members));
  }
  const std::size_t m = classes.size();
  Action act;
  for (const auto& c : classes) {
    act.points.push_back("[" + g.name(c.front()) + "]");
    std::size_t u = g.eL(c.front());
    for (std::size_t y : c)
      if (g.eL(y) != u) throw CheckFailure("quotient: f([x]) = eL(x) is not well defined, witness " + g.name(y));
    act.mu.push_back(u);
  }
  act.phi.assign(n * m, kNone);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < m; ++c) {
      if (g.eR(x) != act.mu[c]) continue;
      std::size_t v = cls[g.mul(x, classes[c].front())];
      for (std::size_t y : classes[c])
        if (cls[g.mul(x, y)] != v)
          throw CheckFailure("quotient: [x y] depends on the representative, witness " + g.name(x) + ", " + g.name(y));
      act.phi[x * m + c] = v;
    }
  Morphism h = action_to_morphism(parent, act);
  return Quotient{cls, classes, act.points, std::move(act), std::move(h)};
}

std::vector<Probe> builtin_probes(const GPtr& g, std::size_t max_elems) {
  std::vector<Probe> out;
  auto add = [&](Morphism h) {
    Haar c = Haar::uniform(h.cod());
    out.push_back(Probe{std::move(h), std::move(c)});
  };
  add(identity_morphism(g));
  add(unit_pair(g));
  if (g->size() <= max_elems)
    for (const auto& s : wide_subgroupoids(*g, max_elems)) add(quotient(g, s).h);
  return out;
}

}  // namespace gk
