// gkw: command-line front end for the finite groupoid workbench.
#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "gk/io.hpp"

using namespace gk;
namespace fs = std::filesystem;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  double tol = 1e-9;
  std::size_t max_enum = 0;
  std::string out, haar, cod_haar, cochain;
  std::vector<std::string> args, bis, probes;
  double t = 1.0;
  bool generator = false;
};

void nargs(const Ctx& c, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (c.args.size() < lo || c.args.size() > hi) throw Usage("usage: " + usage);
}

std::size_t to_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) throw Usage("expected a count, got '" + s + "'");
  return std::stoul(s);
}

void emit(const Ctx& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else write_file(c.out, text);
}

// A path as seen from the directory the output is written to (the working
// directory when printing).
std::string rebase(const std::string& path, const std::string& out) {
  fs::path target = out.empty() ? fs::current_path() : fs::absolute(fs::path(dir_of(out)));
  return fs::relative(fs::absolute(path), target).generic_string();
}

std::string sibling(const std::string& out, const std::string& suffix) {
  fs::path p(out);
  return (p.parent_path() / (p.stem().string() + suffix)).string();
}

std::string leaf(const std::string& path) { return fs::path(path).filename().string(); }

Haar haar_for(const std::string& path, const GPtr& g) { return path.empty() ? Haar::uniform(g) : load_haar(path, g); }

std::string yes(bool b) { return b ? "yes" : "no"; }

void fail_on(const Report& r) {
  if (!r.ok()) throw CheckFailure(r);
}

std::string element_text(const std::string& over, const Groupoid& g, const Coef<QC>& f) {
  std::ostringstream o;
  o << "#elt v1\nover " << over << '\n';
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!f[x].is_zero()) o << "coef " << g.name(x) << ' ' << format_qc(f[x]) << '\n';
  return o.str();
}

std::string element_text(const std::string& over, const Groupoid& g, const Coef<cd>& f) {
  std::ostringstream o;
  o << "#elt v1\nover " << over << '\n';
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != cd(0, 0)) o << "coef " << g.name(x) << ' ' << format_real(f[x].real()) << ' ' << format_real(f[x].imag()) << '\n';
  return o.str();
}

Coef<cd> complex_of(const ElementFile& e) { return to_complex(e.coef); }

std::vector<std::size_t> names_to_indices(const Groupoid& g, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    std::size_t i = g.index_of(n);
    if (i == kNone) throw Usage("unknown element '" + n + "'");
    out.push_back(i);
  }
  return out;
}

std::string subset_str(const Groupoid& g, const std::vector<std::size_t>& s) {
  std::string o = "{";
  for (std::size_t i = 0; i < s.size(); ++i) o += (i ? " " : "") + g.name(s[i]);
  return o + "}";
}

// Writes a morphism whose codomain (or domain) is a freshly built groupoid.
void write_morphism_with(const Ctx& c, const Morphism& h, const std::string& dom_path, const std::string& cod_path) {
  MorphismFile mf{dom_path, cod_path, h.dom(), h.cod(), h.graph()};
  emit(c, serialize_morphism(mf));
}

std::string require_out(const Ctx& c, const std::string& what) {
  if (c.out.empty()) throw Usage(what + " builds a new groupoid file; pass --out PATH");
  return c.out;
}

// ---------------------------------------------------------------- gpd

void gpd_validate(Ctx& c) {
  nargs(c, 1, 1, "gpd validate FILE");
  GroupoidData d = parse_groupoid_data(read_file(c.args[0]), c.args[0]);
  Report r = validate(d);
  fail_on(r);
  Groupoid g(d);
  fail_on(check_consequences(g));
  std::cout << "valid groupoid: " << g.size() << " elements, " << g.unit_count() << " units, " << g.orbits().size() << " orbits\n";
}

void gpd_build(Ctx& c) {
  if (c.args.empty()) throw Usage("usage: gpd build pair|set|cyclic|symmetric|equivalence|rotation|product|double-a|double-b ARGS...");
  const std::string kind = c.args[0];
  GPtr g;
  auto one = [&]() {
    nargs(c, 2, 2, "gpd build " + kind + " N");
    return to_count(c.args[1]);
  };
  if (kind == "pair") g = build_pair(one());
  else if (kind == "set") g = build_set(one());
  else if (kind == "cyclic") g = build_cyclic(one());
  else if (kind == "symmetric") {
    std::size_t n = one();
    if (n > 5) throw Usage("symmetric groups are limited to n <= 5");
    g = build_symmetric(n);
  } else if (kind == "equivalence") {
    nargs(c, 2, 4096, "gpd build equivalence LABEL...");
    std::vector<std::size_t> labels;
    for (std::size_t i = 1; i < c.args.size(); ++i) labels.push_back(to_count(c.args[i]));
    g = build_equivalence(labels);
  } else if (kind == "rotation") {
    nargs(c, 3, 3, "gpd build rotation N M   (Z_N rotating M points, M dividing N)");
    std::size_t n = to_count(c.args[1]), m = to_count(c.args[2]);
    if (n == 0 || m == 0 || n % m) throw Usage("rotation: M must divide N");
    GPtr z = build_cyclic(n);
    std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < m; ++p) act[k][p] = (p + k) % m;
    g = build_transformation(*z, act);
  } else if (kind == "product") {
    nargs(c, 3, 3, "gpd build product FILE1 FILE2");
    g = build_product(*load_groupoid(c.args[1]), *load_groupoid(c.args[2]));
  } else if (kind == "double-a" || kind == "double-b") {
    nargs(c, 2, 2, "gpd build " + kind + " DOUBLEFILE");
    DoubleFile df = load_double(c.args[1]);
    DoubleGroup dg = build_double(df.group, df.a, df.b);
    g = kind == "double-a" ? dg.ga : dg.gb;
  } else {
    throw Usage("unknown groupoid kind '" + kind + "'");
  }
  emit(c, serialize_groupoid(g->data()));
}

void gpd_derive(Ctx& c) {
  nargs(c, 1, 1, "gpd derive FILE");
  GPtr g = load_groupoid(c.args[0]);
  std::ostringstream o;
  for (std::size_t x = 0; x < g->size(); ++x) o << "ends " << g->name(x) << ' ' << g->name(g->eL(x)) << ' ' << g->name(g->eR(x)) << '\n';
  for (std::size_t u : g->units()) {
    o << "left_fiber " << g->name(u) << ' ' << subset_str(*g, g->left_fiber(u)) << '\n';
    o << "right_fiber " << g->name(u) << ' ' << subset_str(*g, g->right_fiber(u)) << '\n';
    o << "isotropy " << g->name(u) << ' ' << subset_str(*g, g->isotropy(u)) << '\n';
  }
  for (const auto& orb : g->orbits()) o << "orbit " << subset_str(*g, orb) << '\n';
  emit(c, o.str());
}

// ---------------------------------------------------------------- mor

void mor_validate(Ctx& c) {
  nargs(c, 1, 1, "mor validate FILE");
  MorphismFile mf = load_morphism_file(c.args[0]);
  Report r = validate_morphism(*mf.dom, *mf.cod, mf.graph);
  fail_on(r);
  fail_on(check_derived_maps(*mf.dom, *mf.cod, mf.graph));
  std::cout << "valid morphism: " << mf.graph.size() << " pairs\n";
}

void mor_compose(Ctx& c) {
  nargs(c, 2, 2, "mor compose K H   (K after H)");
  MorphismFile kf = load_morphism_file(c.args[0]), hf = load_morphism_file(c.args[1]);
  Morphism k(kf.dom, kf.cod, kf.graph), h(hf.dom, hf.cod, hf.graph);
  Morphism kh = compose(k, h);
  write_morphism_with(c, kh, rebase(join_path(dir_of(c.args[1]), hf.dom_path), c.out),
                      rebase(join_path(dir_of(c.args[0]), kf.cod_path), c.out));
}

void mor_factor(Ctx& c) {
  nargs(c, 1, 1, "mor factor FILE [--out PREFIX]");
  MorphismFile mf = load_morphism_file(c.args[0]);
  Morphism h(mf.dom, mf.cod, mf.graph);
  Factorization fz = factorize(h);
  fail_on(check_factorization(h, fz));
  if (!c.out.empty()) {
    const std::string mid = sibling(c.out, ".mid.g"), kp = sibling(c.out, ".k.m"), lp = sibling(c.out, ".l.m");
    write_file(mid, serialize_groupoid(fz.mid->data()));
    const std::string dom = rebase(join_path(dir_of(c.args[0]), mf.dom_path), kp);
    const std::string cod = rebase(join_path(dir_of(c.args[0]), mf.cod_path), lp);
    write_file(kp, serialize_morphism({dom, leaf(mid), fz.k.dom(), fz.k.cod(), fz.k.graph()}));
    write_file(lp, serialize_morphism({leaf(mid), cod, fz.l.dom(), fz.l.cod(), fz.l.graph()}));
  }
  std::cout << "factorization verified: middle groupoid has " << fz.mid->size() << " elements and " << fz.mid->unit_count()
            << " units; l k = h\n";
}

void mor_tofg(Ctx& c) {
  nargs(c, 1, 1, "mor tofg FILE");
  MorphismFile mf = load_morphism_file(c.args[0]);
  Morphism h(mf.dom, mf.cod, mf.graph);
  FgFile f{rebase(join_path(dir_of(c.args[0]), mf.dom_path), c.out), rebase(join_path(dir_of(c.args[0]), mf.cod_path), c.out), to_fg(h)};
  emit(c, serialize_fg(f));
}

void mor_fromfg(Ctx& c) {
  nargs(c, 1, 1, "mor fromfg FILE");
  FgFile f = load_fg(c.args[0]);
  Morphism h = from_fg(f.fg);
  write_morphism_with(c, h, rebase(join_path(dir_of(c.args[0]), f.dom_path), c.out), rebase(join_path(dir_of(c.args[0]), f.cod_path), c.out));
}

void mor_canonical(Ctx& c) {
  if (c.args.size() < 2) throw Usage("usage: mor canonical identity|left_regular|unit_pair|wide_inclusion|vertical_restriction GFILE [ELEMENT...] | set_map XFILE YFILE Y-NAME...");
  const std::string kind = c.args[0];
  if (kind == "set_map") {
    GPtr xs = load_groupoid(c.args[1]);
    nargs(c, 3 + xs->size(), 3 + xs->size(), "mor canonical set_map XFILE YFILE followed by one Y point per X point");
    GPtr ys = load_groupoid(c.args[2]);
    Morphism h = set_map(xs, ys, names_to_indices(*ys, {c.args.begin() + 3, c.args.end()}));
    write_morphism_with(c, h, rebase(c.args[2], c.out), rebase(c.args[1], c.out));
    return;
  }
  GPtr g = load_groupoid(c.args[1]);
  const std::string gpath = rebase(c.args[1], c.out);
  if (kind == "identity") {
    nargs(c, 2, 2, "mor canonical identity GFILE");
    write_morphism_with(c, identity_morphism(g), gpath, gpath);
    return;
  }
  if (kind == "left_regular" || kind == "unit_pair") {
    nargs(c, 2, 2, "mor canonical " + kind + " GFILE --out PATH");
    std::string out = require_out(c, kind);
    Morphism h = kind == "left_regular" ? left_regular(g) : unit_pair(g);
    std::string cod = sibling(out, ".cod.g");
    write_file(cod, serialize_groupoid(h.cod()->data()));
    write_morphism_with(c, h, gpath, leaf(cod));
    return;
  }
  if (kind == "wide_inclusion" || kind == "vertical_restriction") {
    nargs(c, 3, 4096, "mor canonical " + kind + " GFILE ELEMENT... --out PATH");
    std::string out = require_out(c, kind);
    auto subset = names_to_indices(*g, {c.args.begin() + 2, c.args.end()});
    std::string sub = sibling(out, ".sub.g");
    if (kind == "wide_inclusion") {
      Morphism h = wide_inclusion(g, subset);
      write_file(sub, serialize_groupoid(h.dom()->data()));
      write_morphism_with(c, h, leaf(sub), gpath);
    } else {
      Morphism h = vertical_restriction(g, subset);
      write_file(sub, serialize_groupoid(h.cod()->data()));
      write_morphism_with(c, h, gpath, leaf(sub));
    }
    return;
  }
  throw Usage("unknown canonical morphism '" + kind + "'");
}

// ---------------------------------------------------------------- alg

void alg_conv(Ctx& c) {
  nargs(c, 2, 2, "alg conv E1 E2 [--haar H]");
  ElementFile a = load_element(c.args[0]), b = load_element(c.args[1]);
  if (a.g->data().prod != b.g->data().prod || a.g->data().names != b.g->data().names)
    throw CheckFailure("algebra: elements live over different groupoids");
  Haar h = haar_for(c.haar, a.g);
  emit(c, element_text(rebase(join_path(dir_of(c.args[0]), a.over_path), c.out), *a.g, convolve(h, a.coef, b.coef)));
}

void alg_star(Ctx& c) {
  nargs(c, 1, 1, "alg star E");
  ElementFile a = load_element(c.args[0]);
  emit(c, element_text(rebase(join_path(dir_of(c.args[0]), a.over_path), c.out), *a.g, star(*a.g, a.coef)));
}

void alg_unit(Ctx& c) {
  nargs(c, 1, 1, "alg unit GFILE [--haar H]");
  GPtr g = load_groupoid(c.args[0]);
  Haar h = haar_for(c.haar, g);
  emit(c, element_text(rebase(c.args[0], c.out), *g, unit_element<QC>(h)));
}

void alg_norm(Ctx& c) {
  nargs(c, 1, 1, "alg norm E [--haar H]");
  ElementFile a = load_element(c.args[0]);
  Haar h = haar_for(c.haar, a.g);
  Norms n = norms(h, a.coef);
  std::ostringstream o;
  o << "left " << format_real(n.left) << "\nright " << format_real(n.right) << "\nnorm " << format_real(n.max()) << "\ngeometric "
    << format_real(geometric_norm(h, a.coef)) << '\n';
  emit(c, o.str());
}

void alg_hat(Ctx& c) {
  nargs(c, 3, 3, "alg hat M E E' [--haar H] [--cod-haar H']");
  Morphism m = load_morphism(c.args[0]);
  ElementFile a = load_element(c.args[1]), b = load_element(c.args[2]);
  if (a.g->size() != m.dom()->size() || b.g->size() != m.cod()->size()) throw CheckFailure("hat action: elements do not match the morphism");
  Haar hd = haar_for(c.haar, m.dom()), hc = haar_for(c.cod_haar, m.cod());
  const std::string over = rebase(join_path(dir_of(c.args[2]), b.over_path), c.out);
  try {
    emit(c, element_text(over, *b.g, hat_action(m, hd, hc, a.coef, b.coef)));
  } catch (const std::domain_error&) {
    emit(c, element_text(over, *b.g, hat_action(m, hd, hc, complex_of(a), complex_of(b))));
  }
}

void alg_tfactor(Ctx& c) {
  nargs(c, 3, 3, "alg tfactor M X Y [--haar H] [--cod-haar H']");
  Morphism m = load_morphism(c.args[0]);
  std::size_t x = names_to_indices(*m.dom(), {c.args[1]})[0], y = names_to_indices(*m.cod(), {c.args[2]})[0];
  Surd t = t_factor(m, haar_for(c.haar, m.dom()), haar_for(c.cod_haar, m.cod()), x, y);
  emit(c, "exact " + t.str() + "\nvalue " + format_real(t.value()) + "\n");
}

// ---------------------------------------------------------------- rep

void rep_pih(Ctx& c) {
  nargs(c, 2, 2, "rep pih M E [--haar H] [--cod-haar H']");
  Morphism m = load_morphism(c.args[0]);
  ElementFile a = load_element(c.args[1]);
  emit(c, serialize_operator(pi_h(m, haar_for(c.haar, m.dom()), haar_for(c.cod_haar, m.cod()), complex_of(a))));
}

void rep_norm(Ctx& c) {
  nargs(c, 2, 2, "rep norm M E [--haar H] [--cod-haar H']");
  Morphism m = load_morphism(c.args[0]);
  ElementFile a = load_element(c.args[1]);
  emit(c, format_real(operator_norm(pi_h(m, haar_for(c.haar, m.dom()), haar_for(c.cod_haar, m.cod()), complex_of(a)))) + "\n");
}

void rep_reduced(Ctx& c) {
  nargs(c, 1, 1, "rep reduced E [--haar H]");
  ElementFile a = load_element(c.args[0]);
  emit(c, format_real(reduced_norm(haar_for(c.haar, a.g), complex_of(a))) + "\n");
}

void rep_probe(Ctx& c) {
  nargs(c, 1, 1, "rep probe E [--haar H] [--probe M]...");
  ElementFile a = load_element(c.args[0]);
  Haar h = haar_for(c.haar, a.g);
  std::vector<Probe> probes = builtin_probes(a.g, c.max_enum ? c.max_enum : 12);
  std::vector<std::string> labels{"identity", "unit_pair"};
  while (labels.size() < probes.size()) labels.push_back("quotient#" + std::to_string(labels.size() - 2));
  for (const auto& p : c.probes) {
    Morphism m = load_morphism(p);
    probes.push_back(Probe{m, Haar::uniform(m.cod())});
    labels.push_back(p);
  }
  Coef<cd> f = complex_of(a);
  ProbeResult r = probe_norm(h, f, probes);
  const double bound = norms(h, a.coef).max();
  std::ostringstream o;
  for (std::size_t i = 0; i < probes.size(); ++i) o << "probe " << labels[i] << ' ' << format_real(r.per_probe[i]) << '\n';
  o << "reduced " << format_real(reduced_norm(h, f)) << "\nprobe_max " << format_real(r.norm) << "\nbound " << format_real(bound) << '\n';
  emit(c, o.str());
  if (r.norm > bound * (1 + c.tol) + c.tol) throw CheckFailure("representation bound: |pi_h(f)| <= |f| violated");
}

// ---------------------------------------------------------------- harm

void harm_bisections(Ctx& c) {
  nargs(c, 1, 1, "harm bisections GFILE [--max-enum K]");
  GPtr g = load_groupoid(c.args[0]);
  auto all = enumerate_bisections(*g, c.max_enum ? c.max_enum : 8);
  std::ostringstream o;
  for (const auto& b : all) o << "bisection " << bisection_str(*g, b) << '\n';
  o << "count " << all.size() << '\n';
  emit(c, o.str());
}

void harm_act(Ctx& c) {
  nargs(c, 1, 1, "harm act E --bis X... [--haar H]");
  ElementFile a = load_element(c.args[0]);
  Bisection b = names_to_indices(*a.g, c.bis);
  std::sort(b.begin(), b.end());
  if (!is_bisection(*a.g, b)) throw CheckFailure("bisection: eL and eR must restrict to bijections onto the units, witness " + bisection_str(*a.g, b));
  Haar h = haar_for(c.haar, a.g);
  const std::string over = rebase(join_path(dir_of(c.args[0]), a.over_path), c.out);
  try {
    emit(c, element_text(over, *a.g, act_on_algebra(h, b, a.coef)));
  } catch (const std::domain_error&) {
    emit(c, element_text(over, *a.g, act_on_algebra(h, b, complex_of(a))));
  }
}

void harm_delta(Ctx& c) {
  nargs(c, 1, 1, "harm delta COCHAIN");
  CochainFile f = load_cochain(c.args[0]);
  CochainFile out{rebase(join_path(dir_of(c.args[0]), f.over_path), c.out), f.g, delta(*f.g, f.c)};
  emit(c, serialize_cochain(out));
}

void harm_modular(Ctx& c) {
  nargs(c, 1, 1, "harm modular GFILE [--haar H]");
  GPtr g = load_groupoid(c.args[0]);
  CochainFile out{rebase(c.args[0], c.out), g, modular(haar_for(c.haar, g))};
  emit(c, serialize_cochain(out));
}

void harm_sigma(Ctx& c) {
  nargs(c, 1, 1, "harm sigma E --cochain C [--t T | --generator]");
  if (c.cochain.empty()) throw Usage("harm sigma needs --cochain");
  ElementFile a = load_element(c.args[0]);
  CochainFile s = load_cochain(c.cochain);
  if (s.g->data().names != a.g->data().names) throw CheckFailure("sigma: cochain and element live over different groupoids");
  fail_on(check_positive_cocycle(*a.g, s.c));
  Coef<cd> f = complex_of(a);
  Coef<cd> r = c.generator ? analytic_generator(s.c, f) : sigma_t(s.c, c.t, f);
  emit(c, element_text(rebase(join_path(dir_of(c.args[0]), a.over_path), c.out), *a.g, r));
}

void harm_weight(Ctx& c) {
  nargs(c, 1, 1, "harm weight E [--haar H]");
  ElementFile a = load_element(c.args[0]);
  Haar h = haar_for(c.haar, a.g);
  Coef<cd> f = complex_of(a);
  cd p = phi(h, f);
  cd pp = phi(h, convolve(h, star(*a.g, f), f));
  double n2 = inner(l2_weights(h), f, f).real();
  std::ostringstream o;
  o << "phi " << format_real(p.real()) << ' ' << format_real(p.imag()) << "\nphi_star " << format_real(pp.real()) << ' '
    << format_real(pp.imag()) << "\nl2_norm_squared " << format_real(n2) << '\n';
  emit(c, o.str());
  if (std::abs(pp - n2) > c.tol * (1 + n2)) throw CheckFailure("GNS: phi(f* f) != |phi_hat(f)|^2");
}

void harm_kms(Ctx& c) {
  nargs(c, 1, 1, "harm kms E [--haar H]");
  ElementFile a = load_element(c.args[0]);
  Haar h = haar_for(c.haar, a.g);
  fail_on(kms_check(h, complex_of(a), c.tol));
  std::cout << "KMS verified: modular invariance, isometry and KMS identity hold\n";
}

// ---------------------------------------------------------------- homog

void homog_double(Ctx& c) {
  nargs(c, 1, 1, "homog double DFILE [--out PREFIX]");
  DoubleFile df = load_double(c.args[0]);
  DoubleGroup dg = build_double(df.group, df.a, df.b);
  if (!c.out.empty()) {
    write_file(sibling(c.out, ".ga.g"), serialize_groupoid(dg.ga->data()));
    write_file(sibling(c.out, ".gb.g"), serialize_groupoid(dg.gb->data()));
  }
  std::cout << "double group: |G| = " << dg.group->size() << ", |A| = " << dg.a.size() << ", |B| = " << dg.b.size() << "; G_A has "
            << dg.ga->unit_count() << " units, G_B has " << dg.gb->unit_count() << " units\n";
}

void homog_comult(Ctx& c) {
  nargs(c, 1, 1, "homog comult DFILE");
  DoubleFile df = load_double(c.args[0]);
  DoubleGroup dg = build_double(df.group, df.a, df.b);
  Morphism d = comultiplication(dg);
  if (!is_coassociative(d)) throw CheckFailure("coassociativity: (D x id) D != (id x D) D");
  std::cout << "comultiplication valid: " << d.graph().size() << " pairs, coassociative\n";
}

void homog_pentagon(Ctx& c) {
  nargs(c, 1, 1, "homog pentagon DFILE");
  DoubleFile df = load_double(c.args[0]);
  DoubleGroup dg = build_double(df.group, df.a, df.b);
  PentagonResult r = check_pentagon(dg);
  if (!r.bijective) throw CheckFailure("pentagon: the operator is not a bijection of G x G");
  if (!r.ok()) {
    const Groupoid& g = *dg.group;
    throw CheckFailure("pentagon: Psi23 Psi12 != Psi12 Psi13 Psi23 on " + std::to_string(r.checked - r.passed) + " triples, witness (" +
                       g.name(r.first_failure[0]) + ", " + g.name(r.first_failure[1]) + ", " + g.name(r.first_failure[2]) + ")");
  }
  std::cout << "pentagon verified: " << r.passed << "/" << r.checked << " triples\n";
}

void homog_subgpd(Ctx& c) {
  nargs(c, 1, 4096, "homog subgpd GFILE [ELEMENT...]");
  GPtr g = load_groupoid(c.args[0]);
  std::ostringstream o;
  if (c.args.size() == 1) {
    auto all = wide_subgroupoids(*g, c.max_enum ? c.max_enum : 12);
    for (const auto& s : all) o << "wide " << subset_str(*g, s) << '\n';
    o << "count " << all.size() << '\n';
  } else {
    SubgroupoidInfo info = classify_subgroupoid(g, names_to_indices(*g, {c.args.begin() + 1, c.args.end()}));
    o << "subgroupoid " << subset_str(*g, info.subset) << "\nwide " << yes(info.wide) << "\nvertical " << yes(info.vertical)
      << "\ninclusion_is_morphism " << yes(info.inclusion_is_morphism) << "\ntranspose_is_morphism " << yes(info.transpose_is_morphism)
      << '\n';
    if (info.wide != info.inclusion_is_morphism || info.vertical != info.transpose_is_morphism) {
      emit(c, o.str());
      throw CheckFailure("subgroupoid: wide/vertical flags disagree with the morphism tests");
    }
  }
  emit(c, o.str());
}

void homog_quotient(Ctx& c) {
  nargs(c, 2, 4096, "homog quotient GFILE ELEMENT... [--out PATH]");
  GPtr g = load_groupoid(c.args[0]);
  Quotient q = quotient(g, names_to_indices(*g, {c.args.begin() + 1, c.args.end()}));
  if (!c.out.empty()) {
    std::string cod = sibling(c.out, ".cod.g");
    write_file(cod, serialize_groupoid(q.h.cod()->data()));
    write_morphism_with(c, q.h, rebase(c.args[0], c.out), leaf(cod));
  }
  std::ostringstream o;
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    o << "class " << q.names[i] << ' ' << subset_str(*g, q.classes[i]) << " over " << g->name(q.action.mu[i]) << '\n';
  o << "quotient valid: " << q.classes.size() << " points, morphism to the pair groupoid with " << q.h.graph().size() << " pairs\n";
  std::cout << o.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkw: finite groupoid convolution algebra workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  Ctx ctx;
  app.add_option("--tol", ctx.tol, "relative tolerance for floating checks")->capture_default_str();
  app.add_option("--max-enum", ctx.max_enum, "enumeration guard (bisections: units, subgroupoids: elements)");
  app.add_option("--out", ctx.out, "output path");
  app.add_option("--haar", ctx.haar, "Haar file for the (domain) groupoid; uniform if omitted");
  app.add_option("--cod-haar", ctx.cod_haar, "Haar file for the codomain groupoid; uniform if omitted");

  std::function<void(Ctx&)> action;
  auto group = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->require_subcommand(1);
    return s;
  };
  auto leaf_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help, void (*fn)(Ctx&)) {
    auto* s = parent->add_subcommand(name, help);
    s->add_option("args", ctx.args, "positional arguments");
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* gpd = group("gpd", "groupoids");
  leaf_cmd(gpd, "validate", "check the groupoid axioms", gpd_validate);
  leaf_cmd(gpd, "build", "build a standard groupoid", gpd_build);
  leaf_cmd(gpd, "derive", "structure maps, fibers, orbits", gpd_derive);

  auto* mor = group("mor", "morphisms");
  leaf_cmd(mor, "validate", "check the morphism laws", mor_validate);
  leaf_cmd(mor, "compose", "compose two morphisms", mor_compose);
  leaf_cmd(mor, "factor", "factor through the fibered groupoid", mor_factor);
  leaf_cmd(mor, "tofg", "mapping form of a morphism", mor_tofg);
  leaf_cmd(mor, "fromfg", "morphism from a mapping form", mor_fromfg);
  leaf_cmd(mor, "canonical", "identity, left regular, unit pair, set map, inclusions", mor_canonical);

  auto* alg = group("alg", "convolution algebra");
  leaf_cmd(alg, "conv", "convolution product", alg_conv);
  leaf_cmd(alg, "star", "involution", alg_star);
  leaf_cmd(alg, "unit", "unit element", alg_unit);
  leaf_cmd(alg, "norm", "fiber norms and geometric norm", alg_norm);
  leaf_cmd(alg, "hat", "action of a morphism", alg_hat);
  leaf_cmd(alg, "tfactor", "transport factor t_h(x, y)", alg_tfactor);

  auto* rep = group("rep", "representations");
  leaf_cmd(rep, "pih", "matrix of pi_h(f)", rep_pih);
  leaf_cmd(rep, "norm", "operator norm of pi_h(f)", rep_norm);
  leaf_cmd(rep, "reduced", "reduced C*-norm", rep_reduced);
  leaf_cmd(rep, "probe", "norms over probe morphisms", rep_probe)->add_option("--probe", ctx.probes, "extra probe morphism file");

  auto* harm = group("harm", "bisections, cochains, modular theory");
  leaf_cmd(harm, "bisections", "enumerate bisections", harm_bisections);
  leaf_cmd(harm, "act", "bisection acting on an element", harm_act)->add_option("--bis", ctx.bis, "bisection elements")->required();
  leaf_cmd(harm, "delta", "coboundary of a cochain", harm_delta);
  leaf_cmd(harm, "modular", "modular function", harm_modular);
  auto* sig = leaf_cmd(harm, "sigma", "one-parameter group", harm_sigma);
  sig->add_option("--cochain", ctx.cochain, "positive 1-cocycle file");
  sig->add_option("--t", ctx.t, "time");
  sig->add_flag("--generator", ctx.generator, "apply the analytic generator instead");
  leaf_cmd(harm, "weight", "GNS weight", harm_weight);
  leaf_cmd(harm, "kms", "KMS condition", harm_kms);

  auto* homog = group("homog", "double groups and homogeneous spaces");
  leaf_cmd(homog, "double", "build and check a double group", homog_double);
  leaf_cmd(homog, "comult", "comultiplication morphism", homog_comult);
  leaf_cmd(homog, "pentagon", "pentagon equation", homog_pentagon);
  leaf_cmd(homog, "subgpd", "classify or enumerate subgroupoids", homog_subgpd);
  leaf_cmd(homog, "quotient", "quotient by a wide subgroupoid", homog_quotient);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (!action) throw Usage("no command given");
    action(ctx);
    return 0;
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Usage& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
