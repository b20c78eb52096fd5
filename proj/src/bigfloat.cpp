#include "opquad/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace opquad {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, kRnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& a, mpfr_prec_t prec) {
  if (prec < 53) throw std::invalid_argument("BigFloat: precision below 53 bits");
  BigFloat r(0.0, prec);
  mpfr_set_q(r.v_, a.mpq().get_mpq_t(), kRnd);
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(0.0, prec);
  mpfr_set_ui_2exp(r.v_, 1, e, kRnd);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(0.0, precision());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0.0, join_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0.0, join_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0.0, join_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0.0, join_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat: sqrt of negative value");
  BigFloat r(0.0, precision());
  mpfr_sqrt(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(0.0, precision());
  mpfr_abs(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(0.0, precision());
  mpfr_exp(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::log1p() const {
  if (mpfr_cmp_si(v_, -1) <= 0) {
    throw std::domain_error("BigFloat: log1p argument <= -1");
  }
  BigFloat r(0.0, precision());
  mpfr_log1p(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::pow(double y) const {
  BigFloat r(0.0, precision());
  BigFloat e(y, precision());
  mpfr_pow(r.v_, v_, e.v_, kRnd);
  return r;
}

std::string BigFloat::str(size_t digits) const {
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
  return std::string(buf.data());
}

}  // namespace opquad
