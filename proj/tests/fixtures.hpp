#pragma once

#include <random>
#include <string>
#include <vector>

#include "gk/harm.hpp"
#include "gk/homog.hpp"

namespace fx {

using namespace gk;

GPtr p2();
GPtr z2();
GPtr s3();
GPtr t2();          // Z2 swapping two points
GPtr pair3();
GPtr set2();
GPtr equiv();       // classes {0,1} {2}
GPtr z2_x_p2();
DoubleGroup s3f();  // (S3; <(01)>, <(012)>)
DoubleGroup z6f();  // (Z6; {0,3}, {0,2,4})
Haar w();           // P2 with c = (1, 4), nu = 1

struct Named {
  std::string name;
  GPtr g;
};
// Every fixture groupoid, including G_A and G_B of both double groups.
std::vector<Named> all();

std::size_t idx(const Groupoid& g, const std::string& name);
std::vector<std::size_t> idxs(const Groupoid& g, const std::vector<std::string>& names);

using Rng = std::mt19937_64;

Q random_q(Rng& r, int lo = -3, int hi = 3, int max_den = 3);
Q random_positive(Rng& r);
Coef<QC> random_element(Rng& r, const Groupoid& g, double density = 0.7);
Coef<cd> random_complex(Rng& r, const Groupoid& g);
Haar random_haar(Rng& r, const GPtr& g);
// Weights that are perfect squares, so every transport factor is rational.
Haar random_square_haar(Rng& r, const GPtr& g);

}  // namespace fx
