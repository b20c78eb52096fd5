#include "opquad/rational.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>

namespace opquad {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const std::string& text) {
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits before and after the point, exact
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac_len = text.size() - dot - 1;
    mpz_class num(digits.empty() || digits == "-" ? "0" : digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    v_ = mpq_class(num, den);
  } else {
    v_ = mpq_class(text);
  }
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class v) {
  Rational r;
  v.canonicalize();
  r.v_ = std::move(v);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return from_mpq(r);
}

double Rational::to_double() const {
  // mpq_get_d truncates; go through MPFR for a correctly rounded result
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace opquad
