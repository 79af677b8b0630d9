#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace gk {

using Q = mpq_class;
using cd = std::complex<double>;

// Accepts "P", "P/Q" and decimals such as "-1.25e-3"; decimals are converted
// exactly. Throws std::invalid_argument on anything else.
Q parse_rational(const std::string& tok);
std::string format_rational(const Q& q);

// 12 significant digits, trailing zeros kept.
std::string format_real(double v);

// Exact complex rational.
struct QC {
  Q re, im;

  QC() : re(0), im(0) {}
  QC(const Q& r) : re(r), im(0) {}
  QC(const Q& r, const Q& i) : re(r), im(i) {}
  QC(long r) : re(r), im(0) {}

  QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
  QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
  QC& operator*=(const QC& o) {
    Q r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  QC& operator*=(const Q& q) { re *= q; im *= q; return *this; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline QC operator+(QC a, const QC& b) { return a += b; }
inline QC operator-(QC a, const QC& b) { return a -= b; }
inline QC operator*(QC a, const QC& b) { return a *= b; }
inline QC operator*(QC a, const Q& b) { return a *= b; }
inline QC operator*(const Q& b, QC a) { return a *= b; }
inline QC operator-(const QC& a) { return QC(-a.re, -a.im); }
inline bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const QC& a, const QC& b) { return !(a == b); }
inline QC conj(const QC& a) { return QC(a.re, -a.im); }
inline Q norm2(const QC& a) { return a.re * a.re + a.im * a.im; }
inline cd to_cd(const QC& a) { return cd(a.re.get_d(), a.im.get_d()); }
inline cd to_cd(const cd& a) { return a; }

// sign * sqrt(sq) with sq > 0. Products and quotients stay exact, which is all
// the cochain and transport code needs.
struct Surd {
  int sign = 1;
  Q sq = 1;

  Surd() = default;
  Surd(int s, Q q) : sign(s), sq(std::move(q)) { sq.canonicalize(); }
  static Surd rational(const Q& q);
  static Surd root(const Q& q) { return Surd(1, q); }

  double value() const;
  bool is_rational() const;
  Q to_rational() const;  // throws std::domain_error if irrational
  Surd inverse() const { return Surd(sign, 1 / sq); }
  std::string str() const;
};

inline Surd operator*(const Surd& a, const Surd& b) { return Surd(a.sign * b.sign, a.sq * b.sq); }
inline Surd operator/(const Surd& a, const Surd& b) { return Surd(a.sign * b.sign, a.sq / b.sq); }
inline bool operator==(const Surd& a, const Surd& b) { return a.sign == b.sign && a.sq == b.sq; }
inline bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
Surd pow(const Surd& a, int k);

// Parses "P/Q", decimals, or "sqrt(P/Q)" with an optional leading minus.
Surd parse_surd(const std::string& tok);

// Lifting rationals and surds into a coefficient field.
template <class S> S lift(const Q& q);
template <> inline QC lift<QC>(const Q& q) { return QC(q); }
template <> inline cd lift<cd>(const Q& q) { return cd(q.get_d(), 0.0); }

template <class S> S lift(const Surd& s);
template <> inline QC lift<QC>(const Surd& s) { return QC(s.to_rational()); }
template <> inline cd lift<cd>(const Surd& s) { return cd(s.value(), 0.0); }

inline double abs_d(const QC& a) { return std::abs(to_cd(a)); }
inline double abs_d(const cd& a) { return std::abs(a); }
inline bool is_zero(const QC& a) { return a.is_zero(); }
inline bool is_zero(const cd& a) { return a == cd(0.0, 0.0); }
inline cd conj(const cd& a) { return std::conj(a); }

std::string format_qc(const QC& a);

}  // namespace gk
