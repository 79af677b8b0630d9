#include "gk/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gk {

namespace {

std::string tuple_str(const GroupoidData& d, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) s += ", ";
    s += d.names[x];
    first = false;
  }
  return s + ")";
}

bool bad_name(const std::string& s) {
  if (s.empty()) return true;
  for (unsigned char c : s)
    if (c <= ' ' || c >= 127) return true;
  return false;
}

Report check_tables(const GroupoidData& d) {
  Report r;
  const std::size_t n = d.size();
  if (n == 0) {
    r.add("tables: a groupoid needs at least one element", "-");
    return r;
  }
  std::set<std::string> seen;
  for (const auto& nm : d.names) {
    if (bad_name(nm)) r.add("tables: element names must be non-empty printable ASCII without spaces", "'" + nm + "'");
    if (!seen.insert(nm).second) r.add("tables: duplicate element name", nm);
  }
  if (d.inv.size() != n) r.add("tables: inverse table has wrong length", std::to_string(d.inv.size()));
  if (d.prod.size() != n * n) r.add("tables: product table has wrong size", std::to_string(d.prod.size()));
  if (d.units.empty()) r.add("tables: no units", "-");
  for (std::size_t i = 0; i < d.units.size(); ++i) {
    if (d.units[i] >= n) r.add("tables: unit index out of range", std::to_string(d.units[i]));
    if (i > 0 && d.units[i] <= d.units[i - 1]) r.add("tables: units must be ascending and distinct", std::to_string(d.units[i]));
  }
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < n; ++x)
    if (d.inv[x] >= n) r.add("tables: inverse out of range", d.names[x]);
  for (std::size_t i = 0; i < n * n; ++i)
    if (d.prod[i] != kNone && d.prod[i] >= n) r.add("tables: product out of range", tuple_str(d, {i / n, i % n}));
  return r;
}

// Unique unit u with u x = x (left) or x u = x (right); kNone if absent or
// ambiguous.
std::size_t loose_unit(const GroupoidData& d, std::size_t x, bool left) {
  std::size_t found = kNone;
  for (std::size_t u : d.units) {
    std::size_t p = left ? d.at(u, x) : d.at(x, u);
    if (p == x) {
      if (found != kNone) return kNone;
      found = u;
    }
  }
  return found;
}

}  // namespace

Relation mult_relation(const GroupoidData& d) {
  const std::size_t n = d.size();
  std::vector<Pair> p;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d.at(x, y) != kNone) p.push_back({d.at(x, y), x * n + y});
  return Relation(n, n * n, std::move(p));
}

Relation unit_relation(const GroupoidData& d) {
  std::vector<Pair> p;
  for (std::size_t u : d.units) p.push_back({u, 0});
  return Relation(d.size(), 1, std::move(p));
}

Relation inverse_relation(const GroupoidData& d) { return Relation::from_map(d.size(), d.inv); }

Report validate(const GroupoidData& d) {
  Report r = check_tables(d);
  if (!r.ok()) return r;
  const std::size_t n = d.size();
  const Relation m = mult_relation(d), e = unit_relation(d), s = inverse_relation(d);
  const Relation id = Relation::identity(n);

  const Relation assoc_l = compose(m, product(m, id));
  const Relation assoc_r = compose(m, product(id, m));
  if (auto w = difference_witness(assoc_l, assoc_r)) {
    std::size_t t = w->second;
    std::string side = assoc_l.contains(w->first, w->second) ? "m(m x id)" : "m(id x m)";
    r.add("associativity: m(m x id) != m(id x m)",
          tuple_str(d, {t / (n * n), (t / n) % n, t % n}) + " -> " + d.names[w->first] + " only under " + side);
  }
  const Relation left_id = compose(m, product(e, id));
  if (auto w = difference_witness(left_id, id))
    r.add("left identity: m(e x id) != id", "x = " + d.names[w->second] + ", image " + d.names[w->first]);
  const Relation right_id = compose(m, product(id, e));
  if (auto w = difference_witness(right_id, id))
    r.add("right identity: m(id x e) != id", "x = " + d.names[w->second] + ", image " + d.names[w->first]);

  std::vector<Pair> sw;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) sw.push_back({y * n + x, x * n + y});
  const Relation swap(n * n, n * n, std::move(sw));
  const Relation inv_l = compose(s, m);
  const Relation inv_r = compose(m, compose(product(s, s), swap));
  if (auto w = difference_witness(inv_l, inv_r))
    r.add("inverse: s m != m (s x s) swap",
          tuple_str(d, {w->second / n, w->second % n}) + " -> " + d.names[w->first]);

  std::vector<char> is_unit(n, 0);
  for (std::size_t u : d.units) is_unit[u] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    auto img = image(m, {d.inv[x] * n + x});
    if (img.empty())
      r.add("positivity: m(s(x), x) is empty", "x = " + d.names[x]);
    else
      for (std::size_t z : img)
        if (!is_unit[z]) r.add("positivity: m(s(x), x) not inside the units", "x = " + d.names[x] + ", value " + d.names[z]);
  }

  // Composability against the (possibly ill-defined) structure maps.
  std::vector<std::size_t> eL(n), eR(n);
  bool maps_ok = true;
  for (std::size_t x = 0; x < n; ++x) {
    eL[x] = loose_unit(d, x, true);
    eR[x] = loose_unit(d, x, false);
    maps_ok = maps_ok && eL[x] != kNone && eR[x] != kNone;
  }
  if (maps_ok) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((d.at(x, y) != kNone) != (eR[x] == eL[y])) {
          r.add("composability: product defined iff eR(x) = eL(y)", tuple_str(d, {x, y}));
          goto done;
        }
  done:;
  }
  return r;
}

Groupoid::Groupoid(GroupoidData d) : d_(std::move(d)) {
  Report r = validate(d_);
  if (!r.ok()) throw CheckFailure(r);
  const std::size_t n = d_.size();
  for (std::size_t i = 0; i < n; ++i) index_[d_.names[i]] = i;
  unit_pos_.assign(n, kNone);
  for (std::size_t i = 0; i < d_.units.size(); ++i) unit_pos_[d_.units[i]] = i;
  eL_.resize(n);
  eR_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    eL_[x] = loose_unit(d_, x, true);
    eR_[x] = loose_unit(d_, x, false);
  }
  const std::size_t k = d_.units.size();
  left_.assign(k, {});
  right_.assign(k, {});
  for (std::size_t x = 0; x < n; ++x) {
    left_[unit_pos_[eL_[x]]].push_back(x);
    right_[unit_pos_[eR_[x]]].push_back(x);
  }
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t a = find(unit_pos_[eL_[x]]), b = find(unit_pos_[eR_[x]]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  orbit_of_.assign(k, kNone);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t root = find(i);
    if (orbit_of_[root] == kNone) {
      orbit_of_[root] = orbits_.size();
      orbits_.push_back({});
    }
    orbit_of_[i] = orbit_of_[root];
    orbits_[orbit_of_[i]].push_back(d_.units[i]);
  }
}

std::size_t Groupoid::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? kNone : it->second;
}

std::vector<std::size_t> Groupoid::between(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t x : left_fiber(a))
    if (eR_[x] == b) out.push_back(x);
  return out;
}

GPtr make_groupoid(GroupoidData d) { return std::make_shared<const Groupoid>(std::move(d)); }

Report check_consequences(const Groupoid& g) {
  Report r;
  const auto& d = g.data();
  const std::size_t n = g.size();
  for (std::size_t a : g.units())
    for (std::size_t b : g.units()) {
      bool defined = g.composable(a, b);
      if (defined != (a == b)) r.add("unit products: m(a, b) nonempty iff a = b", tuple_str(d, {a, b}));
      if (a == b && g.mul(a, a) != a) r.add("unit products: m(a, a) = a", tuple_str(d, {a}));
    }
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t left = 0, right = 0;
    for (std::size_t u : g.units()) {
      left += g.mul(u, x) == x;
      right += g.mul(x, u) == x;
    }
    if (left != 1 || right != 1) r.add("structure maps: eL, eR unique", tuple_str(d, {x}));
    if (g.mul(x, g.inv(x)) != g.eL(x)) r.add("inverse products: x s(x) = eL(x)", tuple_str(d, {x}));
    if (g.mul(g.inv(x), x) != g.eR(x)) r.add("inverse products: s(x) x = eR(x)", tuple_str(d, {x}));
    if (g.inv(g.inv(x)) != x) r.add("inverse: s is an involution", tuple_str(d, {x}));
    for (std::size_t y = 0; y < n; ++y) {
      if (g.composable(x, y) != (g.eR(x) == g.eL(y)))
        r.add("composability: product defined iff eR(x) = eL(y)", tuple_str(d, {x, y}));
      std::size_t z = g.mul(x, y);
      if (z != kNone && g.is_unit(z) && y != g.inv(x))
        r.add("unit results: m(x, y) in the units forces y = s(x)", tuple_str(d, {x, y}));
    }
    // Left translation F_l(eR x) -> F_l(eL x) and right translation
    // F_r(eL x) -> F_r(eR x) are bijections.
    std::vector<std::size_t> img;
    for (std::size_t y : g.left_fiber(g.eR(x))) img.push_back(g.mul(x, y));
    std::sort(img.begin(), img.end());
    if (img != g.left_fiber(g.eL(x))) r.add("translations: left translation is a bijection of fibers", tuple_str(d, {x}));
    img.clear();
    for (std::size_t y : g.right_fiber(g.eL(x))) img.push_back(g.mul(y, x));
    std::sort(img.begin(), img.end());
    if (img != g.right_fiber(g.eR(x))) r.add("translations: right translation is a bijection of fibers", tuple_str(d, {x}));
  }
  for (std::size_t a : g.units()) {
    auto iso = g.isotropy(a);
    for (std::size_t x : iso) {
      if (!std::binary_search(iso.begin(), iso.end(), g.inv(x))) r.add("isotropy: closed under inverse", tuple_str(d, {x}));
      for (std::size_t y : iso)
        if (!std::binary_search(iso.begin(), iso.end(), g.mul(x, y)))
          r.add("isotropy: closed under products", tuple_str(d, {x, y}));
    }
  }
  return r;
}

GPtr build_pair(const std::vector<std::string>& points) {
  const std::size_t k = points.size();
  GroupoidData d;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d.names.push_back("(" + points[i] + "," + points[j] + ")");
  const std::size_t n = k * k;
  for (std::size_t i = 0; i < k; ++i) d.units.push_back(i * k + i);
  d.inv.resize(n);
  d.prod.assign(n * n, kNone);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      d.inv[i * k + j] = j * k + i;
      for (std::size_t l = 0; l < k; ++l) d.prod[(i * k + j) * n + (j * k + l)] = i * k + l;
    }
  return make_groupoid(std::move(d));
}

static std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::to_string(i);
  return v;
}

GPtr build_pair(std::size_t n) { return build_pair(numbered(n)); }

GPtr build_set(const std::vector<std::string>& points) {
  GroupoidData d;
  const std::size_t n = points.size();
  d.names = points;
  d.units.resize(n);
  std::iota(d.units.begin(), d.units.end(), 0);
  d.inv = d.units;
  d.prod.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i) d.prod[i * n + i] = i;
  return make_groupoid(std::move(d));
}

GPtr build_set(std::size_t n) { return build_set(numbered(n)); }

GPtr build_group(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (names.empty()) names = numbered(n);
  if (n == 0 || names.size() != n) throw CheckFailure("group: table and names must be non-empty and of equal size");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw CheckFailure("group: table is not square");
    for (std::size_t v : table[i])
      if (v >= n) throw CheckFailure("group: entry out of range in row " + names[i]);
  }
  std::size_t e = kNone;
  for (std::size_t c = 0; c < n && e == kNone; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e == kNone) throw CheckFailure("group: no identity element");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw CheckFailure("group: associativity fails, witness (" + names[x] + ", " + names[y] + ", " + names[z] + ")");
  GroupoidData d;
  d.names = names;
  d.units = {e};
  d.inv.assign(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] == e && table[y][x] == e) d.inv[x] = y;
    if (d.inv[x] == kNone) throw CheckFailure("group: element without inverse, witness " + names[x]);
  }
  d.prod.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d.prod[x * n + y] = table[x][y];
  return make_groupoid(std::move(d));
}

GPtr build_cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return build_group(t);
}

GPtr build_symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::map<std::vector<std::size_t>, std::size_t> pos;
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    pos[perms[i]] = i;
    names[i] = "[";
    for (std::size_t j = 0; j < n; ++j) names[i] += (j ? "," : "") + std::to_string(perms[i][j]);
    names[i] += "]";
  }
  // (pq)(i) = p(q(i))
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = pos[c];
    }
  return build_group(t, names);
}

GPtr build_equivalence(const std::vector<std::size_t>& labels) {
  const std::size_t k = labels.size();
  GroupoidData d;
  std::map<Pair, std::size_t> idx;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (labels[i] == labels[j]) {
        idx[{i, j}] = d.names.size();
        d.names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  const std::size_t n = d.names.size();
  d.inv.resize(n);
  d.prod.assign(n * n, kNone);
  for (const auto& [ij, x] : idx) {
    auto [i, j] = ij;
    if (i == j) d.units.push_back(x);
    d.inv[x] = idx.at({j, i});
    for (std::size_t l = 0; l < k; ++l)
      if (labels[l] == labels[j]) d.prod[x * n + idx.at({j, l})] = idx.at({i, l});
  }
  std::sort(d.units.begin(), d.units.end());
  return make_groupoid(std::move(d));
}

GPtr build_transformation(const Groupoid& group, const std::vector<std::vector<std::size_t>>& action,
                          std::vector<std::string> points) {
  if (!is_group(group)) throw CheckFailure("action: acting groupoid is not a group");
  const std::size_t ng = group.size();
  if (action.size() != ng) throw CheckFailure("action: one permutation per group element required");
  const std::size_t m = action.empty() ? 0 : action[0].size();
  if (points.empty()) points = numbered(m);
  if (points.size() != m || m == 0) throw CheckFailure("action: point count mismatch");
  for (const auto& row : action) {
    if (row.size() != m) throw CheckFailure("action: rows of unequal length");
    for (std::size_t v : row)
      if (v >= m) throw CheckFailure("action: point out of range");
  }
  const std::size_t e = group.units()[0];
  for (std::size_t p = 0; p < m; ++p)
    if (action[e][p] != p) throw CheckFailure("action: identity moves point " + points[p]);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      for (std::size_t p = 0; p < m; ++p)
        if (action[group.mul(g, h)][p] != action[g][action[h][p]])
          throw CheckFailure("action: (gh)p != g(hp), witness (" + group.name(g) + ", " + group.name(h) + ", " +
                             points[p] + ")");
  GroupoidData d;
  const std::size_t n = ng * m;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t p = 0; p < m; ++p) d.names.push_back("(" + group.name(g) + "," + points[p] + ")");
  for (std::size_t p = 0; p < m; ++p) d.units.push_back(e * m + p);
  std::sort(d.units.begin(), d.units.end());
  d.inv.resize(n);
  d.prod.assign(n * n, kNone);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t p = 0; p < m; ++p) {
      d.inv[g * m + p] = group.inv(g) * m + action[g][p];
      // (g1, g2 p)(g2, p) = (g1 g2, p)
      for (std::size_t g1 = 0; g1 < ng; ++g1) d.prod[(g1 * m + action[g][p]) * n + g * m + p] = group.mul(g1, g) * m + p;
    }
  return make_groupoid(std::move(d));
}

GPtr build_product(const Groupoid& a, const Groupoid& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  GroupoidData d;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) d.names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  for (std::size_t u : a.units())
    for (std::size_t v : b.units()) d.units.push_back(u * nb + v);
  d.inv.resize(n);
  d.prod.assign(n * n, kNone);
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1) {
      d.inv[x1 * nb + y1] = a.inv(x1) * nb + b.inv(y1);
      for (std::size_t x2 = 0; x2 < na; ++x2) {
        std::size_t px = a.mul(x1, x2);
        if (px == kNone) continue;
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          std::size_t py = b.mul(y1, y2);
          if (py != kNone) d.prod[(x1 * nb + y1) * n + x2 * nb + y2] = px * nb + py;
        }
      }
    }
  return make_groupoid(std::move(d));
}

GPtr restrict_to(const Groupoid& g, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  std::vector<std::size_t> pos(g.size(), kNone);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] >= g.size()) throw CheckFailure("subgroupoid: index out of range");
    pos[sub[i]] = i;
  }
  GroupoidData d;
  const std::size_t n = sub.size();
  for (std::size_t x : sub) {
    d.names.push_back(g.name(x));
    if (g.is_unit(x)) d.units.push_back(pos[x]);
    if (pos[g.inv(x)] == kNone) throw CheckFailure("subgroupoid: not closed under inverse, witness " + g.name(x));
    d.inv.push_back(pos[g.inv(x)]);
  }
  d.prod.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t z = g.mul(sub[i], sub[j]);
      if (z != kNone && pos[z] != kNone) d.prod[i * n + j] = pos[z];
    }
  Report r = validate(d);
  if (!r.ok()) {
    Report wrapped;
    for (const auto& v : r.items) wrapped.add("subgroupoid: " + v.law, v.witness);
    throw CheckFailure(wrapped);
  }
  return make_groupoid(std::move(d));
}

bool is_group(const Groupoid& g) { return g.unit_count() == 1; }

}  // namespace gk
