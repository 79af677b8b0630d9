#include "gk/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace gk {

namespace {

const std::regex& decimal_re() {
  static const std::regex re(R"(^([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?$)");
  return re;
}

const std::regex& fraction_re() {
  static const std::regex re(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  return re;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Q parse_rational(const std::string& tok) {
  if (std::regex_match(tok, fraction_re())) {
    std::string t = tok[0] == '+' ? tok.substr(1) : tok;
    Q q;
    auto slash = t.find('/');
    mpz_class num(t.substr(0, slash), 10);
    mpz_class den = 1;
    if (slash != std::string::npos) den = mpz_class(t.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + tok + "'");
    q = Q(num, den);
    q.canonicalize();
    return q;
  }
  std::smatch m;
  if (!std::regex_match(tok, m, decimal_re()) || (m[2].length() == 0 && m[3].length() == 0))
    throw std::invalid_argument("not a number: '" + tok + "'");
  std::string digits = m[2].str() + m[3].str();
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) {
    try {
      exp10 += std::stol(m[4].str());
    } catch (const std::exception&) {
      throw std::invalid_argument("exponent out of range in '" + tok + "'");
    }
  }
  if (exp10 > 4096 || exp10 < -4096) throw std::invalid_argument("exponent out of range in '" + tok + "'");
  mpz_class num(digits.empty() ? "0" : digits, 10);
  if (m[1] == "-") num = -num;
  Q q;
  if (exp10 >= 0)
    q = Q(num * pow10(static_cast<unsigned long>(exp10)));
  else
    q = Q(num, pow10(static_cast<unsigned long>(-exp10)));
  q.canonicalize();
  return q;
}

std::string format_rational(const Q& q) { return q.get_str(10); }

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

std::string format_qc(const QC& a) { return format_rational(a.re) + " " + format_rational(a.im); }

Surd Surd::rational(const Q& q) {
  if (sgn(q) == 0) throw std::domain_error("surd of zero");
  return Surd(sgn(q) < 0 ? -1 : 1, q * q);
}

double Surd::value() const { return sign * std::sqrt(sq.get_d()); }

bool Surd::is_rational() const {
  return mpz_perfect_square_p(sq.get_num_mpz_t()) && mpz_perfect_square_p(sq.get_den_mpz_t());
}

Q Surd::to_rational() const {
  if (!is_rational()) throw std::domain_error("irrational value sqrt(" + format_rational(sq) + ")");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), sq.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), sq.get_den_mpz_t());
  Q r(n, d);
  r.canonicalize();
  return sign < 0 ? Q(-r) : r;
}

std::string Surd::str() const {
  if (is_rational()) return format_rational(to_rational());
  return std::string(sign < 0 ? "-" : "") + "sqrt(" + format_rational(sq) + ")";
}

Surd pow(const Surd& a, int k) {
  Surd r;
  Surd b = k < 0 ? a.inverse() : a;
  for (int i = 0; i < std::abs(k); ++i) r = r * b;
  return r;
}

Surd parse_surd(const std::string& tok) {
  std::string t = tok;
  int sign = 1;
  if (!t.empty() && t[0] == '-' && t.rfind("-sqrt(", 0) == 0) {
    sign = -1;
    t = t.substr(1);
  }
  if (t.rfind("sqrt(", 0) == 0 && t.back() == ')') {
    Q q = parse_rational(t.substr(5, t.size() - 6));
    if (sgn(q) <= 0) throw std::invalid_argument("sqrt argument must be positive in '" + tok + "'");
    return Surd(sign, q);
  }
  Q q = parse_rational(tok);
  if (sgn(q) == 0) throw std::invalid_argument("zero is not a valid cochain value");
  return Surd::rational(q);
}

}  // namespace gk
