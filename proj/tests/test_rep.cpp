#include "doctest.h"
#include "fixtures.hpp"
#include "laws.hpp"

using namespace gk;
using fx::idx;

TEST_CASE("l2 weights") {
  const Haar w = fx::w();
  const Groupoid& p2 = *fx::p2();
  auto mu = l2_weights(w);
  CHECK(mu[idx(p2, "(0,1)")] == 1.0);  // c(0) nu(1)
  CHECK(mu[idx(p2, "(1,0)")] == 4.0);  // c(1) nu(0)
}

TEST_CASE("identity representation is left convolution") {
  fx::Rng rng(21);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    auto f = fx::random_complex(rng, *g), psi = fx::random_complex(rng, *g);
    Operator t = pi_h(identity_morphism(g), h, h, f);
    CHECK(laws::coef_diff(gk::apply(t, psi), convolve(h, f, psi)) < 1e-12);
  }
}

TEST_CASE("parallel and serial representation matrices agree exactly") {
  fx::Rng rng(22);
  for (const auto& [name, h] : laws::canonical_morphisms()) {
    INFO(name);
    Haar d = fx::random_haar(rng, h.dom()), c = fx::random_haar(rng, h.cod());
    auto f = fx::random_complex(rng, *h.dom());
    CHECK(pi_h(h, d, c, f).m == pi_h_serial(h, d, c, f).m);
  }
}

TEST_CASE("reduced norms with closed forms") {
  const GPtr p2 = fx::p2(), z2 = fx::z2();
  Coef<cd> ones(4, cd(1, 0));
  CHECK(reduced_norm(Haar::uniform(p2), ones) == doctest::Approx(2));
  // W: C^1/2 F C^1/2 = [[1, 2], [2, 4]], rank one with singular value 5.
  CHECK(reduced_norm(fx::w(), ones) == doctest::Approx(5));
  Haar hz = Haar::uniform(z2);
  CHECK(reduced_norm(hz, Coef<cd>{cd(1, 0), cd(1, 0)}) == doctest::Approx(2));
  CHECK(reduced_norm(hz, Coef<cd>{cd(1, 0), cd(-1, 0)}) == doctest::Approx(2));
  CHECK(reduced_norm(hz, Coef<cd>{cd(1, 0), cd(0, 1)}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(reduced_norm(hz, Coef<cd>{cd(0, 0), cd(0, 0)}) == 0.0);
}

TEST_CASE("adjoint for the weighted inner product") {
  fx::Rng rng(23);
  for (const auto& [name, h] : laws::canonical_morphisms()) {
    INFO(name);
    Haar d = fx::random_haar(rng, h.dom()), c = fx::random_haar(rng, h.cod());
    Operator t = pi_h(h, d, c, fx::random_complex(rng, *h.dom()));
    auto a = fx::random_complex(rng, *h.cod()), b = fx::random_complex(rng, *h.cod());
    cd lhs = inner(t.mu, gk::apply(t, a), b), rhs = inner(t.mu, a, gk::apply(adjoint(t), b));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("operator norm is the weighted norm") {
  fx::Rng rng(24);
  Haar d = fx::random_haar(rng, fx::s3f().ga);
  Operator t = pi_h(identity_morphism(fx::s3f().ga), d, d, fx::random_complex(rng, *fx::s3f().ga));
  double n = operator_norm(t);
  // No vector is stretched by more than the norm, and power iteration on
  // T^dagger T approaches it.
  Coef<cd> v = fx::random_complex(rng, *fx::s3f().ga);
  for (int i = 0; i < 200; ++i) {
    v = gk::apply(adjoint(t), gk::apply(t, v));
    double s = std::sqrt(inner(t.mu, v, v).real());
    for (auto& x : v) x /= s;
  }
  double stretch = std::sqrt(inner(t.mu, gk::apply(t, v), gk::apply(t, v)).real());
  CHECK(stretch <= n * (1 + 1e-12));
  CHECK(stretch == doctest::Approx(n).epsilon(1e-6));
}

TEST_CASE("probe norms") {
  fx::Rng rng(25);
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    Haar h = fx::random_haar(rng, g);
    auto f = fx::random_complex(rng, *g);
    auto probes = builtin_probes(g);
    ProbeResult r = probe_norm(h, f, probes);
    CHECK(r.per_probe.size() == probes.size());
    CHECK(r.per_probe[0] == doctest::Approx(reduced_norm(h, f)));
    CHECK(r.norm <= norms(h, f).max() * (1 + 1e-9));
  }
  CHECK_THROWS_AS(probe_norm(Haar::uniform(fx::p2()), Coef<cd>(4), builtin_probes(fx::z2())), CheckFailure);
}

TEST_CASE("representation laws") {
  fx::Rng rng(26);
  auto t = laws::rep_laws(rng, 1);
  INFO(t.summary());
  CHECK(t.ok());
}
