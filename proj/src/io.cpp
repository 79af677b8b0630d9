#include "gk/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gk {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, "cannot write file");
  out << text;
}

std::string dir_of(const std::string& path) {
  fs::path p(path);
  return p.has_parent_path() ? p.parent_path().string() : std::string(".");
}

std::string join_path(const std::string& dir, const std::string& rel) {
  fs::path r(rel);
  if (r.is_absolute() || dir.empty()) return rel;
  return (fs::path(dir) / r).string();
}

namespace {

struct Line {
  int no;
  std::vector<std::string> tok;
};

// Splits into tokenized lines and checks the header.
std::vector<Line> lex(const std::string& text, const std::string& header, const std::string& where) {
  std::istringstream in(text);
  std::string raw;
  std::vector<Line> out;
  int no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!seen_header) {
      if (raw != header) throw ParseError(where, no, "expected header '" + header + "'");
      seen_header = true;
      continue;
    }
    if (tok[0][0] == '#') continue;
    out.push_back({no, std::move(tok)});
  }
  if (!seen_header) throw ParseError(where, no, "empty file, expected header '" + header + "'");
  return out;
}

void arity(const Line& l, std::size_t n, const std::string& where) {
  if (l.tok.size() != n)
    throw ParseError(where, l.no, "'" + l.tok[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
}

void arity_at_least(const Line& l, std::size_t n, const std::string& where) {
  if (l.tok.size() < n) throw ParseError(where, l.no, "'" + l.tok[0] + "' needs at least " + std::to_string(n - 1) + " argument(s)");
}

std::size_t lookup(const Groupoid& g, const std::string& name, const Line& l, const std::string& where) {
  std::size_t i = g.index_of(name);
  if (i == kNone) throw ParseError(where, l.no, "unknown element '" + name + "'");
  return i;
}

Q rational(const std::string& tok, const Line& l, const std::string& where) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, l.no, e.what());
  }
}

void unknown(const Line& l, const std::string& where) { throw ParseError(where, l.no, "unknown directive '" + l.tok[0] + "'"); }

void once(std::string& slot, const Line& l, const std::string& where) {
  if (!slot.empty()) throw ParseError(where, l.no, "'" + l.tok[0] + "' given twice");
  arity(l, 2, where);
  slot = l.tok[1];
}

void require(const std::string& slot, const std::string& key, const std::string& where) {
  if (slot.empty()) throw ParseError(where, 0, "missing '" + key + "' line");
}

}  // namespace

GroupoidData parse_groupoid_data(const std::string& text, const std::string& where) {
  GroupoidData d;
  std::map<std::string, std::size_t> idx;
  std::vector<Line> rest;
  for (auto& l : lex(text, "#groupoid v1", where)) {
    if (l.tok[0] == "element") {
      arity(l, 2, where);
      if (!rest.empty()) throw ParseError(where, l.no, "element lines must precede unit, inv and mul lines");
      if (!idx.emplace(l.tok[1], d.names.size()).second) throw ParseError(where, l.no, "duplicate element '" + l.tok[1] + "'");
      d.names.push_back(l.tok[1]);
    } else if (l.tok[0] == "unit" || l.tok[0] == "inv" || l.tok[0] == "mul") {
      rest.push_back(std::move(l));
    } else {
      unknown(l, where);
    }
  }
  const std::size_t n = d.names.size();
  auto find = [&](const std::string& name, const Line& l) {
    auto it = idx.find(name);
    if (it == idx.end()) throw ParseError(where, l.no, "unknown element '" + name + "'");
    return it->second;
  };
  d.inv.assign(n, kNone);
  d.prod.assign(n * n, kNone);
  std::set<std::size_t> units;
  for (const auto& l : rest) {
    if (l.tok[0] == "unit") {
      arity(l, 2, where);
      if (!units.insert(find(l.tok[1], l)).second) throw ParseError(where, l.no, "duplicate unit");
    } else if (l.tok[0] == "inv") {
      arity(l, 3, where);
      std::size_t x = find(l.tok[1], l);
      if (d.inv[x] != kNone) throw ParseError(where, l.no, "inverse of '" + l.tok[1] + "' given twice");
      d.inv[x] = find(l.tok[2], l);
    } else {
      arity(l, 4, where);
      std::size_t x = find(l.tok[1], l), y = find(l.tok[2], l);
      if (d.prod[x * n + y] != kNone) throw ParseError(where, l.no, "product given twice");
      d.prod[x * n + y] = find(l.tok[3], l);
    }
  }
  d.units.assign(units.begin(), units.end());
  for (std::size_t x = 0; x < n; ++x)
    if (d.inv[x] == kNone) throw CheckFailure("tables: inverse missing, witness " + d.names[x]);
  return d;
}

std::string serialize_groupoid(const GroupoidData& d) {
  std::ostringstream o;
  const std::size_t n = d.size();
  o << "#groupoid v1\n";
  for (const auto& nm : d.names) o << "element " << nm << '\n';
  for (std::size_t u : d.units) o << "unit " << d.names[u] << '\n';
  for (std::size_t x = 0; x < n; ++x) o << "inv " << d.names[x] << ' ' << d.names[d.inv[x]] << '\n';
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d.at(x, y) != kNone) o << "mul " << d.names[x] << ' ' << d.names[y] << ' ' << d.names[d.at(x, y)] << '\n';
  return o.str();
}

GPtr load_groupoid(const std::string& path) { return make_groupoid(parse_groupoid_data(read_file(path), path)); }

Haar parse_haar(const std::string& text, const GPtr& g, const std::string& where) {
  const std::size_t k = g->unit_count();
  std::vector<Q> c(k), nu(k);
  std::vector<char> has_c(k, 0), has_nu(k, 0);
  for (const auto& l : lex(text, "#haar v1", where)) {
    if (l.tok[0] != "c" && l.tok[0] != "nu") unknown(l, where);
    arity(l, 3, where);
    std::size_t u = lookup(*g, l.tok[1], l, where);
    if (!g->is_unit(u)) throw ParseError(where, l.no, "'" + l.tok[1] + "' is not a unit");
    std::size_t p = g->unit_pos(u);
    auto& seen = l.tok[0] == "c" ? has_c : has_nu;
    if (seen[p]) throw ParseError(where, l.no, "value for '" + l.tok[1] + "' given twice");
    seen[p] = 1;
    (l.tok[0] == "c" ? c : nu)[p] = rational(l.tok[2], l, where);
  }
  for (std::size_t u : g->units()) {
    if (!has_c[g->unit_pos(u)]) throw ParseError(where, 0, "missing 'c' for unit " + g->name(u));
    if (!has_nu[g->unit_pos(u)]) throw ParseError(where, 0, "missing 'nu' for unit " + g->name(u));
  }
  return Haar(g, std::move(c), std::move(nu));
}

std::string serialize_haar(const Haar& h) {
  std::ostringstream o;
  const Groupoid& g = *h.groupoid();
  o << "#haar v1\n";
  for (std::size_t u : g.units()) o << "c " << g.name(u) << ' ' << format_rational(h.c(u)) << '\n';
  for (std::size_t u : g.units()) o << "nu " << g.name(u) << ' ' << format_rational(h.nu(u)) << '\n';
  return o.str();
}

Haar load_haar(const std::string& path, const GPtr& g) { return parse_haar(read_file(path), g, path); }

MorphismFile parse_morphism(const std::string& text, const std::string& base_dir, const std::string& where) {
  MorphismFile m;
  std::vector<Line> pairs;
  for (auto& l : lex(text, "#morphism v1", where)) {
    if (l.tok[0] == "dom") once(m.dom_path, l, where);
    else if (l.tok[0] == "cod") once(m.cod_path, l, where);
    else if (l.tok[0] == "pair") {
      arity(l, 3, where);
      pairs.push_back(std::move(l));
    } else unknown(l, where);
  }
  require(m.dom_path, "dom", where);
  require(m.cod_path, "cod", where);
  m.dom = load_groupoid(join_path(base_dir, m.dom_path));
  m.cod = load_groupoid(join_path(base_dir, m.cod_path));
  std::vector<Pair> p;
  std::set<Pair> seen;
  for (const auto& l : pairs) {
    Pair q{lookup(*m.cod, l.tok[1], l, where), lookup(*m.dom, l.tok[2], l, where)};
    if (!seen.insert(q).second) throw ParseError(where, l.no, "duplicate pair");
    p.push_back(q);
  }
  m.graph = Relation(m.cod->size(), m.dom->size(), std::move(p));
  return m;
}

std::string serialize_morphism(const MorphismFile& m) {
  std::ostringstream o;
  o << "#morphism v1\ndom " << m.dom_path << "\ncod " << m.cod_path << '\n';
  for (const auto& [y, x] : m.graph.pairs()) o << "pair " << m.cod->name(y) << ' ' << m.dom->name(x) << '\n';
  return o.str();
}

MorphismFile load_morphism_file(const std::string& path) { return parse_morphism(read_file(path), dir_of(path), path); }

Morphism load_morphism(const std::string& path) {
  MorphismFile m = load_morphism_file(path);
  return Morphism(m.dom, m.cod, m.graph);
}

ElementFile parse_element(const std::string& text, const std::string& base_dir, const std::string& where) {
  ElementFile e;
  std::vector<Line> coefs;
  for (auto& l : lex(text, "#elt v1", where)) {
    if (l.tok[0] == "over") once(e.over_path, l, where);
    else if (l.tok[0] == "coef") {
      arity(l, 4, where);
      coefs.push_back(std::move(l));
    } else unknown(l, where);
  }
  require(e.over_path, "over", where);
  e.g = load_groupoid(join_path(base_dir, e.over_path));
  e.coef.assign(e.g->size(), QC());
  std::vector<char> seen(e.g->size(), 0);
  for (const auto& l : coefs) {
    std::size_t x = lookup(*e.g, l.tok[1], l, where);
    if (seen[x]) throw ParseError(where, l.no, "coefficient for '" + l.tok[1] + "' given twice");
    seen[x] = 1;
    e.coef[x] = QC(rational(l.tok[2], l, where), rational(l.tok[3], l, where));
  }
  return e;
}

std::string serialize_element(const ElementFile& e) {
  std::ostringstream o;
  o << "#elt v1\nover " << e.over_path << '\n';
  for (std::size_t x = 0; x < e.coef.size(); ++x)
    if (!e.coef[x].is_zero()) o << "coef " << e.g->name(x) << ' ' << format_qc(e.coef[x]) << '\n';
  return o.str();
}

ElementFile load_element(const std::string& path) { return parse_element(read_file(path), dir_of(path), path); }

CochainFile parse_cochain(const std::string& text, const std::string& base_dir, const std::string& where) {
  CochainFile c;
  std::string deg;
  std::vector<Line> vals;
  for (auto& l : lex(text, "#cochain v1", where)) {
    if (l.tok[0] == "over") once(c.over_path, l, where);
    else if (l.tok[0] == "deg") once(deg, l, where);
    else if (l.tok[0] == "val") vals.push_back(std::move(l));
    else unknown(l, where);
  }
  require(c.over_path, "over", where);
  require(deg, "deg", where);
  if (deg.find_first_not_of("0123456789") != std::string::npos || deg.size() > 2) throw ParseError(where, 0, "bad degree '" + deg + "'");
  c.c.deg = std::stoul(deg);
  c.g = load_groupoid(join_path(base_dir, c.over_path));
  const std::size_t slots = std::max<std::size_t>(c.c.deg, 1);
  for (const auto& l : vals) {
    arity(l, slots + 2, where);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < slots; ++i) s.push_back(lookup(*c.g, l.tok[1 + i], l, where));
    Surd v;
    try {
      v = parse_surd(l.tok.back());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, l.no, e.what());
    }
    if (!c.c.val.emplace(s, v).second) throw ParseError(where, l.no, "value given twice");
  }
  Report r = check_cochain(*c.g, c.c);
  if (!r.ok()) throw CheckFailure(r);
  return c;
}

std::string serialize_cochain(const CochainFile& c) {
  std::ostringstream o;
  o << "#cochain v1\nover " << c.over_path << "\ndeg " << c.c.deg << '\n';
  for (const auto& [s, v] : c.c.val) {
    o << "val";
    for (std::size_t x : s) o << ' ' << c.g->name(x);
    o << ' ' << v.str() << '\n';
  }
  return o.str();
}

CochainFile load_cochain(const std::string& path) { return parse_cochain(read_file(path), dir_of(path), path); }

DoubleFile parse_double(const std::string& text, const std::string& base_dir, const std::string& where) {
  DoubleFile d;
  std::vector<Line> subs;
  bool has_a = false, has_b = false;
  for (auto& l : lex(text, "#double v1", where)) {
    if (l.tok[0] == "group") once(d.group_path, l, where);
    else if (l.tok[0] == "suba" || l.tok[0] == "subb") {
      arity_at_least(l, 2, where);
      bool& has = l.tok[0] == "suba" ? has_a : has_b;
      if (has) throw ParseError(where, l.no, "'" + l.tok[0] + "' given twice");
      has = true;
      subs.push_back(std::move(l));
    } else unknown(l, where);
  }
  require(d.group_path, "group", where);
  if (!has_a) throw ParseError(where, 0, "missing 'suba' line");
  if (!has_b) throw ParseError(where, 0, "missing 'subb' line");
  d.group = load_groupoid(join_path(base_dir, d.group_path));
  for (const auto& l : subs) {
    auto& dst = l.tok[0] == "suba" ? d.a : d.b;
    for (std::size_t i = 1; i < l.tok.size(); ++i) dst.push_back(lookup(*d.group, l.tok[i], l, where));
  }
  return d;
}

std::string serialize_double(const DoubleFile& d) {
  std::ostringstream o;
  o << "#double v1\ngroup " << d.group_path << '\n';
  for (int k = 0; k < 2; ++k) {
    auto s = k == 0 ? d.a : d.b;
    std::sort(s.begin(), s.end());
    o << (k == 0 ? "suba" : "subb");
    for (std::size_t x : s) o << ' ' << d.group->name(x);
    o << '\n';
  }
  return o.str();
}

DoubleFile load_double(const std::string& path) { return parse_double(read_file(path), dir_of(path), path); }

FgFile parse_fg(const std::string& text, const std::string& base_dir, const std::string& where) {
  FgFile f;
  std::vector<Line> body;
  for (auto& l : lex(text, "#fg v1", where)) {
    if (l.tok[0] == "dom") once(f.dom_path, l, where);
    else if (l.tok[0] == "cod") once(f.cod_path, l, where);
    else if (l.tok[0] == "f") {
      arity(l, 3, where);
      body.push_back(std::move(l));
    } else if (l.tok[0] == "g") {
      arity(l, 4, where);
      body.push_back(std::move(l));
    } else unknown(l, where);
  }
  require(f.dom_path, "dom", where);
  require(f.cod_path, "cod", where);
  f.fg.dom = load_groupoid(join_path(base_dir, f.dom_path));
  f.fg.cod = load_groupoid(join_path(base_dir, f.cod_path));
  const Groupoid &dom = *f.fg.dom, &cod = *f.fg.cod;
  for (const auto& l : body) {
    if (l.tok[0] == "f") {
      std::size_t b = lookup(cod, l.tok[1], l, where), a = lookup(dom, l.tok[2], l, where);
      if (!f.fg.f.emplace(b, a).second) throw ParseError(where, l.no, "f given twice");
    } else {
      Pair xb{lookup(dom, l.tok[1], l, where), lookup(cod, l.tok[2], l, where)};
      if (!f.fg.g.emplace(xb, lookup(cod, l.tok[3], l, where)).second) throw ParseError(where, l.no, "g given twice");
    }
  }
  return f;
}

std::string serialize_fg(const FgFile& f) {
  std::ostringstream o;
  const Groupoid &dom = *f.fg.dom, &cod = *f.fg.cod;
  o << "#fg v1\ndom " << f.dom_path << "\ncod " << f.cod_path << '\n';
  for (const auto& [b, a] : f.fg.f) o << "f " << cod.name(b) << ' ' << dom.name(a) << '\n';
  for (const auto& [xb, y] : f.fg.g) o << "g " << dom.name(xb.first) << ' ' << cod.name(xb.second) << ' ' << cod.name(y) << '\n';
  return o.str();
}

FgFile load_fg(const std::string& path) { return parse_fg(read_file(path), dir_of(path), path); }

std::string serialize_operator(const Operator& t) {
  std::ostringstream o;
  o << "#matrix v1\nsize " << t.m.rows() << "\nmu";
  for (double w : t.mu) o << ' ' << format_real(w);
  o << '\n';
  for (Eigen::Index i = 0; i < t.m.rows(); ++i) {
    o << "row";
    for (Eigen::Index j = 0; j < t.m.cols(); ++j) o << ' ' << format_real(t.m(i, j).real()) << ' ' << format_real(t.m(i, j).imag());
    o << '\n';
  }
  return o.str();
}

}  // namespace gk
