#include "doctest.h"
#include "fixtures.hpp"
#include "laws.hpp"

using namespace gk;
using fx::idx;

namespace {

Coef<QC> delta_at(const Groupoid& g, std::size_t x, QC v = QC(1)) {
  Coef<QC> f(g.size());
  f[x] = v;
  return f;
}

}  // namespace

TEST_CASE("convolution on P2 matches weighted matrix product") {
  const GPtr g = fx::p2();
  fx::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Haar h = fx::random_haar(rng, g);
    auto f1 = fx::random_element(rng, *g), f2 = fx::random_element(rng, *g);
    auto out = convolve(h, f1, f2);
    // Oracle: (F1 C F2)(i, k) with C = diag(c).
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        QC acc;
        for (std::size_t j = 0; j < 2; ++j) {
          auto nm = [](std::size_t r, std::size_t s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; };
          acc += f1[idx(*g, nm(a, j))] * h.c_by_pos()[j] * f2[idx(*g, nm(j, b))];
        }
        CHECK(out[idx(*g, "(" + std::to_string(a) + "," + std::to_string(b) + ")")] == acc);
      }
  }
}

TEST_CASE("convolution of point masses") {
  const GPtr z2 = fx::z2();
  Haar hz = Haar::uniform(z2);
  CHECK(convolve(hz, delta_at(*z2, 1), delta_at(*z2, 1)) == delta_at(*z2, 0));

  const Haar w = fx::w();
  const Groupoid& p2 = *fx::p2();
  // c(eR (0,1)) = c(1) = 4.
  CHECK(convolve(w, delta_at(p2, idx(p2, "(0,1)")), delta_at(p2, idx(p2, "(1,0)"))) == delta_at(p2, idx(p2, "(0,0)"), QC(4)));
  CHECK(convolve(w, delta_at(p2, idx(p2, "(1,0)")), delta_at(p2, idx(p2, "(1,0)"))) == Coef<QC>(4));
}

TEST_CASE("serial, parallel and right-fiber convolution agree exactly") {
  fx::Rng rng(12);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    auto f1 = fx::random_element(rng, *g), f2 = fx::random_element(rng, *g);
    auto s = convolve_serial(h, f1, f2);
    CHECK(convolve(h, f1, f2) == s);
    CHECK(convolve_right_form(h, f1, f2) == s);
    auto c1 = fx::random_complex(rng, *g), c2 = fx::random_complex(rng, *g);
    CHECK(convolve(h, c1, c2) == convolve_serial(h, c1, c2));
  }
}

TEST_CASE("unit element") {
  const Haar w = fx::w();
  const Groupoid& p2 = *fx::p2();
  auto u = unit_element<QC>(w);
  CHECK(u[idx(p2, "(0,0)")] == QC(1));
  CHECK(u[idx(p2, "(1,1)")] == QC(Q(1, 4)));
  CHECK(u[idx(p2, "(0,1)")] == QC());
  fx::Rng rng(13);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    auto f = fx::random_element(rng, *g);
    auto e = unit_element<QC>(h);
    CHECK(convolve(h, e, f) == f);
    CHECK(convolve(h, f, e) == f);
  }
}

TEST_CASE("fiber norms") {
  const Groupoid& p2 = *fx::p2();
  Coef<QC> ones(4, QC(1));
  Norms n = norms(Haar::uniform(fx::p2()), ones);
  CHECK(n.left == doctest::Approx(2));
  CHECK(n.right == doctest::Approx(2));
  Norms d = norms(fx::w(), delta_at(p2, idx(p2, "(0,1)")));
  CHECK(d.left == doctest::Approx(4));   // weight c(eR) = c(1)
  CHECK(d.right == doctest::Approx(1));  // weight c(eL) = c(0)
  CHECK(norms(fx::w(), star(p2, delta_at(p2, idx(p2, "(0,1)")))).left == doctest::Approx(1));
}

TEST_CASE("geometric norm values") {
  const GPtr g = fx::p2();
  Haar h = Haar::uniform(g);
  CHECK(geometric_norm(h, delta_at(*g, idx(*g, "(0,1)"))) == doctest::Approx(1));
  CHECK(geometric_norm(h, Coef<QC>(4, QC(1))) == doctest::Approx(2));
  // The unit element has fiber norm 1 but geometric norm sqrt(2): the bound
  // by the fiber norm does not hold in general.
  auto u = unit_element<QC>(h);
  CHECK(norms(h, u).max() == doctest::Approx(1));
  CHECK(geometric_norm(h, u) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("transport factor values") {
  const GPtr p2 = fx::p2();
  const Haar w = fx::w();
  Morphism id = identity_morphism(p2);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y : p2->left_fiber(p2->eR(x))) CHECK(t_factor(id, w, w, x, y) == Surd());

  // Unit pair morphism, codomain weights nu = 1: t = sqrt(c(eL x) / c(eR x)).
  Morphism e = unit_pair(p2);
  Haar cod = Haar::uniform(e.cod());
  const Groupoid& pe = *e.cod();
  std::size_t x = idx(*p2, "(0,1)");
  for (std::size_t y = 0; y < pe.size(); ++y)
    if (e.f(pe.eL(y)) == p2->eR(x)) CHECK(t_factor(e, w, cod, x, y) == Surd::rational(Q(1, 2)));
  CHECK_THROWS_AS(t_factor(e, w, cod, x, pe.units()[0]), CheckFailure);

  Haar uni = Haar::uniform(p2);
  for (std::size_t y = 0; y < pe.size(); ++y)
    for (std::size_t z = 0; z < 4; ++z)
      if (e.f(pe.eL(y)) == p2->eR(z)) CHECK(t_factor(e, uni, cod, z, y) == Surd());
}

TEST_CASE("hat action of the identity is convolution") {
  fx::Rng rng(14);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    Morphism id = identity_morphism(g);
    auto f1 = fx::random_element(rng, *g), f2 = fx::random_element(rng, *g);
    CHECK(hat_action(id, h, h, f1, f2) == convolve(h, f1, f2));
    CHECK(hat_action_serial(id, h, h, f1, f2) == convolve(h, f1, f2));
  }
}

TEST_CASE("hat action of a wide inclusion of the units multiplies by f(eL)") {
  const GPtr p2 = fx::p2();
  Morphism inc = wide_inclusion(p2, p2->units());
  fx::Rng rng(15);
  Haar d = fx::random_square_haar(rng, inc.dom()), c = fx::random_square_haar(rng, p2);
  // Same unit weights on both sides make every transport factor 1.
  Haar c2(p2, d.c_by_pos(), c.nu_by_pos());
  auto f = fx::random_element(rng, *inc.dom()), fp = fx::random_element(rng, *p2);
  auto out = hat_action(inc, d, c2, f, fp);
  for (std::size_t z = 0; z < p2->size(); ++z) {
    std::size_t a = inc.f(p2->eL(z));
    CHECK(out[z] == d.c(a) * f[a] * fp[z]);
  }
}

TEST_CASE("hat action: parallel agrees with serial") {
  fx::Rng rng(16);
  for (const auto& [name, h] : laws::canonical_morphisms()) {
    INFO(name);
    Haar d = fx::random_haar(rng, h.dom()), c = fx::random_haar(rng, h.cod());
    auto f = fx::random_complex(rng, *h.dom()), fp = fx::random_complex(rng, *h.cod());
    CHECK(hat_action(h, d, c, f, fp) == hat_action_serial(h, d, c, f, fp));
  }
}

TEST_CASE("exact hat action needs rational transport factors") {
  Morphism e = unit_pair(fx::p2());
  Haar d(fx::p2(), {Q(1), Q(2)}, {Q(1), Q(1)});
  Haar c = Haar::uniform(e.cod());
  Coef<QC> f(4, QC(1)), fp(4, QC(1));
  CHECK_THROWS_AS(hat_action(e, d, c, f, fp), std::domain_error);
  CHECK_NOTHROW(hat_action(e, d, c, to_complex(f), to_complex(fp)));
}

TEST_CASE("algebra identities on random elements") {
  fx::Rng rng(17);
  auto t = laws::algebra(rng, 10);
  INFO(t.identities.summary());
  CHECK(t.identities.ok());
}

TEST_CASE("transport factor laws") {
  fx::Rng rng(18);
  auto t = laws::t_laws(rng, 1);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("morphism action laws") {
  fx::Rng rng(19);
  auto t = laws::action_laws(rng, 1);
  INFO(t.summary());
  CHECK(t.ok());
}
