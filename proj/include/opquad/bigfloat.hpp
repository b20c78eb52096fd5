#ifndef OPQUAD_BIGFLOAT_HPP
#define OPQUAD_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "opquad/rational.hpp"

namespace opquad {

/// Default working precision in bits. The Gram matrices of mixed
/// fractional-power bases are severely ill-conditioned; 512 bits keeps
/// well over 100 accurate bits through the Cholesky stage at the sizes
/// used here.
inline constexpr mpfr_prec_t kDefaultPrecision = 512;

/// Binary floating-point value with an explicit precision in bits.
/// All operations round to nearest-even at the precision of the result,
/// which is the larger of the operand precisions.
class BigFloat {
 public:
  BigFloat() : BigFloat(0.0, kDefaultPrecision) {}
  explicit BigFloat(double x, mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& a, mpfr_prec_t prec);
  /// 2^e at the given precision (exact).
  static BigFloat pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);

  /// Correctly rounded square root; throws std::domain_error for negative input.
  BigFloat sqrt() const;
  BigFloat abs() const;
  BigFloat exp() const;
  BigFloat log1p() const;  // throws for arguments <= -1
  BigFloat pow(double y) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(size_t digits = 25) const;

 private:
  mpfr_t v_;
};

inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace opquad

#endif
