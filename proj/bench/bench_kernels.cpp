// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "gk/algebra.hpp"
#include "gk/homog.hpp"
#include "gk/rep.hpp"

using namespace gk;

namespace {

Coef<cd> random_coef(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Coef<cd> f(n);
  for (auto& v : f) v = cd(u(r), u(r));
  return f;
}

GPtr rotation(std::size_t n, std::size_t m) {
  GPtr z = build_cyclic(n);
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < m; ++p) act[k][p] = (p + k) % m;
  return build_transformation(*z, act);
}

// Z_N with A = multiples of N/a and B = multiples of N/b, gcd(a, b) = 1.
DoubleGroup cyclic_double(std::size_t a, std::size_t b) {
  const std::size_t n = a * b;
  GPtr g = build_cyclic(n);
  std::vector<std::size_t> sa, sb;
  for (std::size_t k = 0; k < n; k += b) sa.push_back(k);
  for (std::size_t k = 0; k < n; k += a) sb.push_back(k);
  return build_double(g, sa, sb);
}

template <bool Serial>
void conv_pair(benchmark::State& st) {
  Haar h = Haar::uniform(build_pair(st.range(0)));
  Coef<cd> f1 = random_coef(h.groupoid()->size(), 1), f2 = random_coef(h.groupoid()->size(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(Serial ? convolve_serial(h, f1, f2) : convolve(h, f1, f2));
}

template <bool Serial>
void conv_rotation(benchmark::State& st) {
  Haar h = Haar::uniform(rotation(st.range(0), st.range(0) / 4));
  Coef<cd> f1 = random_coef(h.groupoid()->size(), 1), f2 = random_coef(h.groupoid()->size(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(Serial ? convolve_serial(h, f1, f2) : convolve(h, f1, f2));
}

template <bool Serial>
void pih_left_regular(benchmark::State& st) {
  GPtr g = build_pair(st.range(0));
  Morphism m = left_regular(g);
  Haar dom = Haar::uniform(m.dom()), cod = Haar::uniform(m.cod());
  Coef<cd> f = random_coef(g->size(), 3);
  for (auto _ : st) benchmark::DoNotOptimize(Serial ? pi_h_serial(m, dom, cod, f) : pi_h(m, dom, cod, f));
}

template <bool Serial>
void pentagon(benchmark::State& st) {
  DoubleGroup dg = cyclic_double(st.range(0), st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(Serial ? check_pentagon_serial(dg) : check_pentagon(dg));
}

}  // namespace

BENCHMARK(conv_pair<true>)->Name("convolve_serial/pair")->Arg(20)->Arg(40);
BENCHMARK(conv_pair<false>)->Name("convolve_omp/pair")->Arg(20)->Arg(40);
BENCHMARK(conv_rotation<true>)->Name("convolve_serial/rotation")->Arg(32)->Arg(64);
BENCHMARK(conv_rotation<false>)->Name("convolve_omp/rotation")->Arg(32)->Arg(64);
BENCHMARK(pih_left_regular<true>)->Name("pi_h_serial/left_regular")->Arg(4)->Arg(6);
BENCHMARK(pih_left_regular<false>)->Name("pi_h_omp/left_regular")->Arg(4)->Arg(6);
BENCHMARK(pentagon<true>)->Name("pentagon_serial/cyclic")->Args({3, 4})->Args({4, 15});
BENCHMARK(pentagon<false>)->Name("pentagon_omp/cyclic")->Args({3, 4})->Args({4, 15});

BENCHMARK_MAIN();
