#ifndef OPQUAD_SYMFUNC_HPP
#define OPQUAD_SYMFUNC_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "opquad/rational.hpp"

namespace opquad {

/// Raised when a requested moment ∫ x^q diverges (some exponent <= -1).
class DivergentMomentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// coeff * x_0^{e_0} * ... * x_{d-1}^{e_{d-1}} with rational exponents.
struct Monomial {
  Rational coeff;
  std::vector<Rational> exponents;
};

/// Finite linear combination of monomials with rational exponents over
/// d variables, kept in collected form (no two terms share an exponent
/// vector, zero terms dropped, deterministic term order).
class SymFunc {
 public:
  explicit SymFunc(int dim) : dim_(dim) {}

  static SymFunc constant(const Rational& c, int dim);
  /// x_index as a function of dim variables (0-based index).
  static SymFunc variable(int index, int dim);
  /// Single monomial; every exponent must be > -1.
  static SymFunc monomial(const Rational& coeff, std::vector<Rational> exponents);

  int dim() const { return dim_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc scaled(const Rational& c) const;
  SymFunc pow_int(unsigned k) const;

  bool operator==(const SymFunc& o) const;

  /// Value at a point of the unit box (0^0 taken as 1).
  double value_at(std::span<const double> x) const;

  std::string str() const;

 private:
  void add_term(const Rational& coeff, std::vector<Rational> exps);
  void normalize();

  int dim_;
  std::vector<Monomial> terms_;
};

/// Moments of the integration weight over the domain. Currently the unit
/// box [0,1]^d with w = 1, normalized so that moment(0,...,0) = 1; this
/// is the single extension point for other product weights.
class MomentOracle {
 public:
  explicit MomentOracle(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  /// ∫_{[0,1]^d} ∏ x_i^{q_i} dx = ∏ 1/(q_i + 1), exactly.
  /// Throws DivergentMomentError if any exponent is <= -1.
  Rational moment(std::span<const Rational> exponents) const;

 private:
  int dim_;
};

/// Exact ∫ f w over the oracle's domain.
Rational sf_integrate(const SymFunc& f, const MomentOracle& m);

/// Exact inner product ⟨a, b⟩ = ∫ a b w.
Rational sf_inner(const SymFunc& a, const SymFunc& b, const MomentOracle& m);

enum class BasisKind {
  kFractionalPowers13,  // 1, x^(1/3), x, x^(4/3), x^2, ...   (d = 1)
  kMonomials,           // 1, x, x^2, ...                     (d = 1)
  kSumProductPowers,    // 1, x+y, xy, (x+y)^2, (xy)^2, ...   (d = 2)
};

BasisKind basis_kind_from_string(const std::string& name);
std::string to_string(BasisKind kind);

/// First n functions of the named family; the constant 1 always comes first.
std::vector<SymFunc> basis_family(BasisKind kind, int n, int dim);

/// Parses a function source like "x", "x^(1/3)", "x*y", "x+y", "(x+y)^2",
/// "3/4*x^2*y". Variables are x, y, z or x1..x9; '^' takes an integer or a
/// parenthesized rational exponent. Throws std::invalid_argument with a
/// position on bad input.
SymFunc parse_symfunc(const std::string& src, int dim);

/// [inf g, sup g] over the unit box for functions that are monotone
/// nondecreasing in every variable (all non-constant terms have
/// nonnegative coefficients and exponents); nullopt otherwise.
std::optional<std::pair<double, double>> monotone_box_range(const SymFunc& g);

}  // namespace opquad

#endif
