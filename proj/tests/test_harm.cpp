#include "doctest.h"
#include "fixtures.hpp"
#include "laws.hpp"

using namespace gk;
using fx::idx;
using fx::idxs;

TEST_CASE("bisection enumeration") {
  CHECK(enumerate_bisections(*fx::p2()).size() == 2);
  CHECK(enumerate_bisections(*fx::pair3()).size() == 6);
  CHECK(enumerate_bisections(*fx::z2()).size() == 2);
  CHECK(enumerate_bisections(*fx::s3()).size() == 6);
  CHECK(enumerate_bisections(*fx::set2()).size() == 1);
  CHECK(enumerate_bisections(*fx::equiv()).size() == 2);
  CHECK(enumerate_bisections(*fx::t2()).size() == 2);
  // A permutation of the two points plus a group label per point.
  CHECK(enumerate_bisections(*fx::z2_x_p2()).size() == 8);
  CHECK_THROWS_AS(enumerate_bisections(*build_pair(9)), CheckFailure);
  CHECK(enumerate_bisections(*build_pair(5), 5).size() == 120);
}

TEST_CASE("bisection predicates") {
  const Groupoid& p2 = *fx::p2();
  CHECK(is_bisection(p2, idxs(p2, {"(0,1)", "(1,0)"})));
  CHECK(is_bisection(p2, p2.units()));
  CHECK_FALSE(is_bisection(p2, idxs(p2, {"(0,1)", "(0,0)"})));
  CHECK_FALSE(is_bisection_by_products(p2, idxs(p2, {"(0,1)", "(0,0)"})));
  CHECK_FALSE(is_bisection(p2, idxs(p2, {"(0,1)"})));
  CHECK_THROWS_AS(bis_inverse(p2, idxs(p2, {"(0,1)"})), CheckFailure);
}

TEST_CASE("swap bisection on P2 under W") {
  const Groupoid& p2 = *fx::p2();
  const Haar w = fx::w();
  Bisection b = idxs(p2, {"(0,1)", "(1,0)"});
  std::sort(b.begin(), b.end());
  CHECK(bis_inverse(p2, b) == b);
  CHECK(act_left(p2, b, idx(p2, "(0,0)")) == idx(p2, "(1,0)"));
  CHECK(act_right(p2, idx(p2, "(0,0)"), b) == idx(p2, "(0,1)"));
  // z = (0,0): B^-1 z = (1,0), so b(z) = sqrt(c(1) / c(0)) = 2.
  CHECK(bisection_factor(w, b, idx(p2, "(0,0)")) == Surd::rational(Q(2)));
  CHECK(bisection_factor(w, b, idx(p2, "(1,1)")) == Surd::rational(Q(1, 2)));

  Coef<QC> f(4);
  f[idx(p2, "(1,0)")] = QC(3);
  auto bf = act_on_algebra(w, b, f);
  CHECK(bf[idx(p2, "(0,0)")] == QC(6));
  CHECK(act_on_algebra(w, unit_bisection(p2), f) == f);

  Operator u = bisection_unitary(w, b);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
  CHECK(max_abs_diff(adjoint(u).m * u.m, id) < 1e-12);
  CHECK(operator_norm(u) == doctest::Approx(1));
}

TEST_CASE("bisection laws") {
  fx::Rng rng(31);
  auto t = laws::bisection_laws(rng);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("composable strings") {
  const Groupoid& p2 = *fx::p2();
  CHECK(strings(p2, 0).size() == 2);
  CHECK(strings(p2, 1).size() == 4);
  CHECK(strings(p2, 2).size() == 8);
  CHECK(strings(p2, 3).size() == 16);
  CHECK(strings(*fx::s3(), 2).size() == 36);
}

TEST_CASE("cochain validation") {
  const Groupoid& p2 = *fx::p2();
  Cochain c = constant_cochain(p2, 2, Surd::rational(Q(3)));
  CHECK(check_cochain(p2, c).ok());
  CHECK(c.at(idxs(p2, {"(0,0)", "(0,1)"})) == Surd());
  CHECK(c.at(idxs(p2, {"(0,1)", "(1,0)"})) == Surd::rational(Q(3)));

  Cochain bad = c;
  bad.val[idxs(p2, {"(0,0)", "(0,1)"})] = Surd::rational(Q(2));
  CHECK_FALSE(check_cochain(p2, bad).ok());
  CHECK_THROWS_AS(delta(p2, bad), CheckFailure);

  Cochain missing = c;
  missing.val.erase(idxs(p2, {"(0,1)", "(1,0)"}));
  CHECK_FALSE(check_cochain(p2, missing).ok());

  Cochain stray = c;
  stray.val[idxs(p2, {"(0,1)", "(0,1)"})] = Surd();
  CHECK_FALSE(check_cochain(p2, stray).ok());
}

TEST_CASE("coboundaries on P2") {
  const Groupoid& p2 = *fx::p2();
  Cochain g = unit_function(p2, {Surd::rational(Q(1)), Surd::rational(Q(3))});
  Cochain d = delta(p2, g);
  CHECK(d.deg == 1);
  CHECK(d.at({idx(p2, "(0,1)")}) == Surd::rational(Q(1, 3)));
  CHECK(d.at({idx(p2, "(1,0)")}) == Surd::rational(Q(3)));
  CHECK(d.at({idx(p2, "(0,0)")}) == Surd());
  CHECK(is_trivial(delta(p2, d)));
  CHECK(check_positive_cocycle(p2, d).ok());

  // Not multiplicative: (0,1)(1,0) = (0,0) but 2 * 2 != 1.
  Cochain f = constant_cochain(p2, 1, Surd::rational(Q(2)));
  CHECK_FALSE(is_trivial(delta(p2, f)));
  CHECK_FALSE(check_positive_cocycle(p2, f).ok());
  Cochain neg = d;
  neg.val[{idx(p2, "(0,1)")}] = Surd::rational(Q(-1, 3));
  CHECK_FALSE(check_positive_cocycle(p2, neg).ok());
}

TEST_CASE("delta of delta: hand computation in degree 1 on Z2") {
  const Groupoid& z2 = *fx::z2();
  // f(g) = 5: (delta f)(g, g) = f(g) f(e)^-1 f(g) = 25.
  Cochain f = constant_cochain(z2, 1, Surd::rational(Q(5)));
  Cochain d = delta(z2, f);
  CHECK(d.at({1, 1}) == Surd::rational(Q(25)));
  CHECK(d.at({0, 1}) == Surd());
  CHECK(is_trivial(delta(z2, d)));
}

TEST_CASE("modular function under W") {
  const Groupoid& p2 = *fx::p2();
  const Haar w = fx::w();
  Cochain d = modular(w);
  CHECK(d.at({idx(p2, "(0,1)")}) == Surd::rational(Q(2)));
  CHECK(d.at({idx(p2, "(1,0)")}) == Surd::rational(Q(1, 2)));
  CHECK(d.at({idx(p2, "(1,1)")}) == Surd());
  CHECK(check_positive_cocycle(p2, d).ok());

  // Unit pair morphism with codomain weights nu: the transport factor is the
  // reciprocal of the modular function.
  Morphism e = unit_pair(fx::p2());
  Haar cod(e.cod(), w.nu_by_pos(), {Q(1), Q(1)});
  const Groupoid& pe = *e.cod();
  std::size_t x = idx(p2, "(0,1)");
  std::size_t y = idx(pe, "((1,1),(0,0))");
  CHECK(t_factor(e, w, cod, x, y) == Surd::rational(Q(1, 2)));
  CHECK(d.at({x}) * t_factor(e, w, cod, x, y) == Surd());
}

TEST_CASE("modular flow") {
  const Haar w = fx::w();
  const Groupoid& p2 = *fx::p2();
  Cochain d = modular(w);
  fx::Rng rng(32);
  auto f = fx::random_complex(rng, p2);
  CHECK(laws::coef_diff(sigma_t(d, 0, f), f) == 0);
  auto st = sigma_t(d, 0.3, sigma_t(d, 0.4, f));
  CHECK(laws::coef_diff(st, sigma_t(d, 0.7, f)) < 1e-12);
  for (std::size_t x = 0; x < 4; ++x) CHECK(std::abs(sigma_t(d, 1.7, f)[x]) == doctest::Approx(std::abs(f[x])));
  // sigma at z = i is division by the cocycle.
  CHECK(laws::coef_diff(sigma_complex(d, cd(0, 1), f), analytic_generator(d, f)) < 1e-12);
  auto g = analytic_generator(d, f);
  CHECK(std::abs(g[idx(p2, "(0,1)")] - f[idx(p2, "(0,1)")] / 2.0) < 1e-15);
  auto half = sigma_half(w, f);
  CHECK(std::abs(half[idx(p2, "(1,0)")] - f[idx(p2, "(1,0)")] * 2.0) < 1e-15);
}

TEST_CASE("GNS data") {
  const Haar w = fx::w();
  const Groupoid& p2 = *fx::p2();
  Coef<cd> f(4);
  f[idx(p2, "(0,0)")] = 2;
  f[idx(p2, "(1,1)")] = cd(0, 3);
  f[idx(p2, "(0,1)")] = 7;
  CHECK(std::abs(phi(w, f) - cd(2, 3)) < 1e-15);

  Operator s = gns_involution(w);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
  CHECK(max_abs_diff(s.m * s.m, id) < 1e-12);
  CHECK(max_abs_diff(adjoint(s).m * s.m, id) < 1e-12);
  // S(x, s x) = sqrt(mu(s x) / mu(x)) equals the modular function at x.
  std::size_t x = idx(p2, "(0,1)");
  CHECK(s.m(x, p2.inv(x)).real() == doctest::Approx(2));

  fx::Rng rng(33);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    Report r = kms_check(h, fx::random_complex(rng, *g), 1e-9);
    INFO(r.str());
    CHECK(r.ok());
  }
}

TEST_CASE("cohomology and weight laws") {
  fx::Rng rng(34);
  auto t = laws::cohomology_laws(rng, 3);
  INFO(t.summary());
  CHECK(t.ok());
}
