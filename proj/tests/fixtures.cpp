#include "fixtures.hpp"

namespace fx {

GPtr p2() {
  static GPtr g = build_pair(2);
  return g;
}

GPtr z2() {
  static GPtr g = build_cyclic(2);
  return g;
}

GPtr s3() {
  static GPtr g = build_symmetric(3);
  return g;
}

GPtr t2() {
  static GPtr g = build_transformation(*z2(), {{0, 1}, {1, 0}});
  return g;
}

GPtr pair3() {
  static GPtr g = build_pair(3);
  return g;
}

GPtr set2() {
  static GPtr g = build_set(2);
  return g;
}

GPtr equiv() {
  static GPtr g = build_equivalence({0, 0, 1});
  return g;
}

GPtr z2_x_p2() {
  static GPtr g = build_product(*z2(), *p2());
  return g;
}

DoubleGroup s3f() {
  static DoubleGroup d = build_double(s3(), idxs(*s3(), {"[0,1,2]", "[1,0,2]"}), idxs(*s3(), {"[0,1,2]", "[1,2,0]", "[2,0,1]"}));
  return d;
}

DoubleGroup z6f() {
  static GPtr z6 = build_cyclic(6);
  static DoubleGroup d = build_double(z6, {0, 3}, {0, 2, 4});
  return d;
}

Haar w() { return Haar(p2(), {Q(1), Q(4)}, {Q(1), Q(1)}); }

std::vector<Named> all() {
  return {{"P2", p2()},       {"Z2", z2()},          {"S3", s3()},           {"T2", t2()},
          {"pair3", pair3()}, {"set2", set2()},      {"equiv", equiv()},     {"Z2xP2", z2_x_p2()},
          {"S3F", s3f().ga},  {"S3F_B", s3f().gb},   {"Z6F", z6f().ga},      {"Z6F_B", z6f().gb}};
}

std::size_t idx(const Groupoid& g, const std::string& name) {
  std::size_t i = g.index_of(name);
  if (i == kNone) throw std::invalid_argument("fixture: no element " + name);
  return i;
}

std::vector<std::size_t> idxs(const Groupoid& g, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(idx(g, n));
  return out;
}

Q random_q(Rng& r, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Q q(num(r), den(r));
  q.canonicalize();
  return q;
}

Q random_positive(Rng& r) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  Q q(num(r), den(r));
  q.canonicalize();
  return q;
}

Coef<QC> random_element(Rng& r, const Groupoid& g, double density) {
  std::bernoulli_distribution keep(density);
  Coef<QC> f(g.size());
  for (auto& v : f)
    if (keep(r)) v = QC(random_q(r), random_q(r));
  return f;
}

Coef<cd> random_complex(Rng& r, const Groupoid& g) {
  std::uniform_real_distribution<double> u(-1, 1);
  Coef<cd> f(g.size());
  for (auto& v : f) v = cd(u(r), u(r));
  return f;
}

Haar random_haar(Rng& r, const GPtr& g) {
  std::vector<Q> c, nu;
  for (std::size_t i = 0; i < g->unit_count(); ++i) {
    c.push_back(random_positive(r));
    nu.push_back(random_positive(r));
  }
  return Haar(g, c, nu);
}

Haar random_square_haar(Rng& r, const GPtr& g) {
  std::vector<Q> c, nu;
  for (std::size_t i = 0; i < g->unit_count(); ++i) {
    Q a = random_positive(r), b = random_positive(r);
    c.push_back(a * a);
    nu.push_back(b * b);
  }
  return Haar(g, c, nu);
}

}  // namespace fx
