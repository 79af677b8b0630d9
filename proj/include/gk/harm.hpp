#pragma once

#include <map>
#include <vector>

#include "gk/algebra.hpp"
#include "gk/bisection.hpp"
#include "gk/rep.hpp"

namespace gk {

// ---- bisections acting on the algebra

// b(z) = sqrt(c(eL(B^-1 z)) / c(eL(z))).
Surd bisection_factor(const Haar& h, const Bisection& b, std::size_t z);

// (B f)(z) = f(B^-1 z) b(z).
template <class S>
Coef<S> act_on_algebra(const Haar& h, const Bisection& b, const Coef<S>& f) {
  const Groupoid& g = *h.groupoid();
  const Bisection binv = bis_inverse(g, b);
  Coef<S> out(g.size());
  for (std::size_t z = 0; z < g.size(); ++z) {
    S v = f[act_left(g, binv, z)];
    v *= lift<S>(bisection_factor(h, b, z));
    out[z] = v;
  }
  return out;
}

// U_B ψ(z) = b(z) ψ(B^-1 z) on l2(Γ, mu); unitary.
Operator bisection_unitary(const Haar& h, const Bisection& b);

// Multiplier identities for a bisection B of dom and a morphism h, evaluated on
// f1, f3 in A(dom) and f2 in A(cod): hat(B f1) f2 = h(B)(hat(f1) f2),
// π_h(B f1) = U_{h(B)} π_h(f1), the adjoint pair f1*(B f3) = (s(B) f1)* f3,
// and the transport identity b(Bx) t(Bx, y) = t(x, y) b'(h(B) m_h(x, y)).
Report bisection_multiplier_checks(const Morphism& h, const Haar& dom, const Haar& cod, const Bisection& b,
                                   const Coef<cd>& f1, const Coef<cd>& f2, const Coef<cd>& f3, double tol);

// ---- cochains

// Degree-n cochain. Degree 0 is a function on the units, keyed by one-slot
// strings; degree n > 0 is keyed by composable strings x0 ... x(n-1).
struct Cochain {
  std::size_t deg = 0;
  std::map<std::vector<std::size_t>, Surd> val;

  const Surd& at(const std::vector<std::size_t>& s) const;
  bool operator==(const Cochain& o) const { return deg == o.deg && val == o.val; }
};

// Composable strings of length n (units for n = 0), lexicographic.
std::vector<std::vector<std::size_t>> strings(const Groupoid& g, std::size_t n);

Cochain constant_cochain(const Groupoid& g, std::size_t n, const Surd& v);
Cochain unit_function(const Groupoid& g, const std::vector<Surd>& by_unit_pos);

// Totality, nonvanishing and normalization (value 1 whenever a slot is a unit).
Report check_cochain(const Groupoid& g, const Cochain& c);

Cochain delta(const Groupoid& g, const Cochain& f);
bool is_trivial(const Cochain& c);  // every value is 1

Cochain modular(const Haar& h);
// Positive multiplicative function on Γ, trivial on units.
Report check_positive_cocycle(const Groupoid& g, const Cochain& sigma);

// σ_t(f)(x) = σ(x)^{it} f(x); the continuation z -> σ^{iz} f, and σ^{-1} f.
Coef<cd> sigma_t(const Cochain& sigma, double t, const Coef<cd>& f);
Coef<cd> sigma_complex(const Cochain& sigma, cd z, const Coef<cd>& f);
Coef<cd> analytic_generator(const Cochain& sigma, const Coef<cd>& f);

// ---- GNS weight

cd phi(const Haar& h, const Coef<cd>& f);
// φ̂(f) = f viewed in l2(Γ, mu).
inline Coef<cd> phi_hat(const Coef<cd>& f) { return f; }
// (Sψ)(x) = sqrt(mu(s x) / mu(x)) ψ(s x).
Operator gns_involution(const Haar& h);
// σ_{i/2}(f) = |Δ|^{-1} f.
Coef<cd> sigma_half(const Haar& h, const Coef<cd>& f);

// Modular invariance of φ at the given times, the isometry
// |φ̂((σ_{i/2} f)*)| = |φ̂(f)| and the KMS identity
// φ(f* f) = φ(σ_{i/2}(f) σ_{i/2}(f)*).
Report kms_check(const Haar& h, const Coef<cd>& f, double tol, const std::vector<double>& times = {0.5, 1.0, -2.0});

}  // namespace gk
