#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gk/algebra.hpp"

namespace gk {

// A dense operator on l2(Γ', mu), acting on coefficient vectors.
struct Operator {
  Eigen::MatrixXcd m;
  std::vector<double> mu;
};

// mu(z) = c'(eL z) nu'(eR z).
std::vector<double> l2_weights(const Haar& h);
cd inner(const std::vector<double>& mu, const Coef<cd>& a, const Coef<cd>& b);

// (π_h(ω)ψ)(z) = sum over x in F_l(f_h(b)) of c(eR x) f(x) t_h(x, y) ψ(y),
// b = eL(z), y = s'(hL_b(x)) z. Rows are assembled in parallel, each in a
// fixed order.
Operator pi_h(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f);
Operator pi_h_serial(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f);

// Largest singular value of D^{1/2} M D^{-1/2}, D = diag(mu).
double operator_norm(const Operator& t);
// Adjoint for the weighted inner product: D^{-1} M^† D.
Operator adjoint(const Operator& t);
Coef<cd> apply(const Operator& t, const Coef<cd>& psi);
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

double reduced_norm(const Haar& h, const Coef<cd>& f);

struct Probe {
  Morphism h;
  Haar cod;
};

struct ProbeResult {
  double norm = 0;
  std::vector<double> per_probe;
};

ProbeResult probe_norm(const Haar& dom, const Coef<cd>& f, const std::vector<Probe>& probes);

}  // namespace gk
