#include "gk/rep.hpp"

#include <cmath>

namespace gk {

std::vector<double> l2_weights(const Haar& h) {
  std::vector<double> mu(h.groupoid()->size());
  for (std::size_t z = 0; z < mu.size(); ++z) mu[z] = h.mu(z).get_d();
  return mu;
}

cd inner(const std::vector<double>& mu, const Coef<cd>& a, const Coef<cd>& b) {
  cd s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * std::conj(a[i]) * b[i];
  return s;
}

namespace {

void check_inputs(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f) {
  if (dom.groupoid()->size() != h.dom()->size() || cod.groupoid()->size() != h.cod()->size())
    throw CheckFailure("representation: Haar data does not match the morphism");
  if (f.size() != h.dom()->size()) throw CheckFailure("representation: coefficient vector does not match the groupoid");
}

void fill_row(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f, Eigen::MatrixXcd& m, std::size_t z) {
  const Groupoid &g = *h.dom(), &gp = *h.cod();
  const std::size_t b = gp.eL(z);
  for (std::size_t x : g.left_fiber(h.f(b))) {
    if (f[x] == cd(0, 0)) continue;
    const std::size_t y = gp.mul(gp.inv(h.hL(b, x)), z);
    m(z, y) += dom.left_weight(x).get_d() * f[x] * t_factor(h, dom, cod, x, y).value();
  }
}

}  // namespace

Operator pi_h_serial(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f) {
  check_inputs(h, dom, cod, f);
  const std::size_t n = h.cod()->size();
  Operator t{Eigen::MatrixXcd::Zero(n, n), l2_weights(cod)};
  for (std::size_t z = 0; z < n; ++z) fill_row(h, dom, cod, f, t.m, z);
  return t;
}

Operator pi_h(const Morphism& h, const Haar& dom, const Haar& cod, const Coef<cd>& f) {
  check_inputs(h, dom, cod, f);
  const long n = static_cast<long>(h.cod()->size());
  Operator t{Eigen::MatrixXcd::Zero(n, n), l2_weights(cod)};
#pragma omp parallel for schedule(static)
  for (long z = 0; z < n; ++z) fill_row(h, dom, cod, f, t.m, static_cast<std::size_t>(z));
  return t;
}

double operator_norm(const Operator& t) {
  const Eigen::Index n = t.m.rows();
  if (n == 0) return 0;
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = std::sqrt(t.mu[i]);
  Eigen::MatrixXcd a = d.asDiagonal() * t.m * d.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

Operator adjoint(const Operator& t) {
  const Eigen::Index n = t.m.rows();
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = t.mu[i];
  return Operator{d.cwiseInverse().asDiagonal() * t.m.adjoint() * d.asDiagonal(), t.mu};
}

Coef<cd> apply(const Operator& t, const Coef<cd>& psi) {
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(psi.data(), static_cast<Eigen::Index>(psi.size()));
  Eigen::VectorXcd r = t.m * v;
  return Coef<cd>(r.data(), r.data() + r.size());
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  if (a.size() == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff();
}

double reduced_norm(const Haar& h, const Coef<cd>& f) {
  return operator_norm(pi_h(identity_morphism(h.groupoid()), h, h, f));
}

ProbeResult probe_norm(const Haar& dom, const Coef<cd>& f, const std::vector<Probe>& probes) {
  ProbeResult r;
  for (const auto& p : probes) {
    if (p.h.dom()->size() != dom.groupoid()->size()) throw CheckFailure("probe: morphism domain does not match the algebra");
    double v = operator_norm(pi_h(p.h, dom, p.cod, f));
    r.per_probe.push_back(v);
    r.norm = std::max(r.norm, v);
  }
  return r;
}

}  // namespace gk
