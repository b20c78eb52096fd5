#include "opquad/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace opquad {

namespace {

bool exp_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_exponents(std::span<const Rational> exps) {
  const Rational minus_one(-1);
  for (const auto& e : exps) {
    if (e <= minus_one) {
      throw DivergentMomentError("monomial exponent " + e.str() +
                                 " is not > -1; moment diverges on the unit box");
    }
  }
}

std::string var_name(int index, int dim) {
  if (dim <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[index];
  }
  return "x" + std::to_string(index + 1);
}

}  // namespace

SymFunc SymFunc::constant(const Rational& c, int dim) {
  SymFunc f(dim);
  f.add_term(c, std::vector<Rational>(dim, Rational(0)));
  f.normalize();
  return f;
}

SymFunc SymFunc::variable(int index, int dim) {
  if (index < 0 || index >= dim)
    throw std::invalid_argument("SymFunc: variable index out of range");
  std::vector<Rational> exps(dim, Rational(0));
  exps[index] = Rational(1);
  return monomial(Rational(1), std::move(exps));
}

SymFunc SymFunc::monomial(const Rational& coeff, std::vector<Rational> exponents) {
  check_exponents(exponents);
  SymFunc f(static_cast<int>(exponents.size()));
  f.add_term(coeff, std::move(exponents));
  f.normalize();
  return f;
}

void SymFunc::add_term(const Rational& coeff, std::vector<Rational> exps) {
  terms_.push_back(Monomial{coeff, std::move(exps)});
}

void SymFunc::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) {
              return exp_less(a.exponents, b.exponents);
            });
  std::vector<Monomial> collected;
  for (auto& t : terms_) {
    if (!collected.empty() && collected.back().exponents == t.exponents) {
      collected.back().coeff += t.coeff;
    } else {
      collected.push_back(std::move(t));
    }
  }
  std::erase_if(collected, [](const Monomial& t) { return t.coeff.is_zero(); });
  terms_ = std::move(collected);
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("SymFunc: dimension mismatch");
  SymFunc r(dim_);
  r.terms_ = terms_;
  for (const auto& t : o.terms_) r.add_term(t.coeff, t.exponents);
  r.normalize();
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  return *this + o.scaled(Rational(-1));
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("SymFunc: dimension mismatch");
  SymFunc r(dim_);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<Rational> exps(dim_);
      for (int k = 0; k < dim_; ++k) exps[k] = a.exponents[k] + b.exponents[k];
      r.add_term(a.coeff * b.coeff, std::move(exps));
    }
  }
  r.normalize();
  return r;
}

SymFunc SymFunc::scaled(const Rational& c) const {
  SymFunc r(dim_);
  for (const auto& t : terms_) r.add_term(t.coeff * c, t.exponents);
  r.normalize();
  return r;
}

SymFunc SymFunc::pow_int(unsigned k) const {
  SymFunc r = constant(Rational(1), dim_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].coeff == o.terms_[i].coeff) ||
        terms_[i].exponents != o.terms_[i].exponents)
      return false;
  }
  return true;
}

double SymFunc::value_at(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.to_double();
    for (int k = 0; k < dim_; ++k) {
      if (t.exponents[k].is_zero()) continue;  // 0^0 = 1
      v *= std::pow(x[k], t.exponents[k].to_double());
    }
    sum += v;
  }
  return sum;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;

    std::vector<std::string> parts;
    for (int k = 0; k < dim_; ++k) {
      const Rational& e = t.exponents[k];
      if (e.is_zero()) continue;
      std::string p = var_name(k, dim_);
      if (!(e == Rational(1))) {
        if (e.den() == 1) {
          p += "^" + e.str();
        } else {
          p += "^(" + e.str() + ")";
        }
      }
      parts.push_back(p);
    }
    if (parts.empty()) {
      os << c.str();
    } else {
      if (!(c == Rational(1))) os << c.str() << "*";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

Rational MomentOracle::moment(std::span<const Rational> exponents) const {
  if (static_cast<int>(exponents.size()) != dim_)
    throw std::invalid_argument("MomentOracle: exponent count != dim");
  check_exponents(exponents);
  // product weight: the moment factorizes across dimensions
  Rational m(1);
  for (const auto& q : exponents) m *= (q + Rational(1)).reciprocal();
  return m;
}

Rational sf_integrate(const SymFunc& f, const MomentOracle& m) {
  if (f.dim() != m.dim())
    throw std::invalid_argument("sf_integrate: dimension mismatch");
  Rational s(0);
  for (const auto& t : f.terms()) s += t.coeff * m.moment(t.exponents);
  return s;
}

Rational sf_inner(const SymFunc& a, const SymFunc& b, const MomentOracle& m) {
  return sf_integrate(a * b, m);
}

BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "fractional_powers_13") return BasisKind::kFractionalPowers13;
  if (name == "monomials") return BasisKind::kMonomials;
  if (name == "sum_product_powers") return BasisKind::kSumProductPowers;
  throw std::invalid_argument("unknown basis kind: " + name);
}

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::kFractionalPowers13: return "fractional_powers_13";
    case BasisKind::kMonomials: return "monomials";
    case BasisKind::kSumProductPowers: return "sum_product_powers";
  }
  return "?";
}

std::vector<SymFunc> basis_family(BasisKind kind, int n, int dim) {
  if (n < 1) throw std::invalid_argument("basis_family: need at least one function");
  std::vector<SymFunc> basis;
  basis.reserve(n);
  switch (kind) {
    case BasisKind::kFractionalPowers13: {
      if (dim != 1)
        throw std::invalid_argument("fractional_powers_13 basis requires dim = 1");
      // 1, x^(1/3), x, x^(4/3), x^2, x^(7/3), ...
      const Rational third(1, 3);
      for (int i = 0; i < n; ++i) {
        Rational e(i / 2);
        if (i % 2 == 1) e += third;
        basis.push_back(SymFunc::monomial(Rational(1), {e}));
      }
      break;
    }
    case BasisKind::kMonomials: {
      if (dim != 1)
        throw std::invalid_argument("monomials basis requires dim = 1");
      for (int i = 0; i < n; ++i)
        basis.push_back(SymFunc::monomial(Rational(1), {Rational(i)}));
      break;
    }
    case BasisKind::kSumProductPowers: {
      if (dim != 2)
        throw std::invalid_argument("sum_product_powers basis requires dim = 2");
      // 1, x+y, xy, (x+y)^2, (xy)^2, ...
      const SymFunc sum = SymFunc::variable(0, 2) + SymFunc::variable(1, 2);
      const SymFunc prod = SymFunc::variable(0, 2) * SymFunc::variable(1, 2);
      for (int i = 0; i < n; ++i) {
        if (i == 0) {
          basis.push_back(SymFunc::constant(Rational(1), 2));
        } else if (i % 2 == 1) {
          basis.push_back(sum.pow_int(static_cast<unsigned>((i + 1) / 2)));
        } else {
          basis.push_back(prod.pow_int(static_cast<unsigned>(i / 2)));
        }
      }
      break;
    }
  }
  return basis;
}

std::optional<std::pair<double, double>> monotone_box_range(const SymFunc& g) {
  Rational at_zero(0), at_one(0);
  for (const auto& t : g.terms()) {
    bool constant_term = true;
    for (const auto& e : t.exponents) {
      if (!e.is_zero()) constant_term = false;
      if (e.sign() < 0) return std::nullopt;
    }
    if (!constant_term && t.coeff.sign() < 0) return std::nullopt;
    if (constant_term) at_zero += t.coeff;
    at_one += t.coeff;
  }
  return std::make_pair(at_zero.to_double(), at_one.to_double());
}

// ---------------------------------------------------------------------------
// function-source parser

namespace {

struct SfParser {
  const std::string& src;
  size_t pos = 0;
  int dim;

  explicit SfParser(const std::string& s, int d) : src(s), dim(d) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("function source error at position " +
                                std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  std::string read_number() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected a number");
    return src.substr(start, pos - start);
  }

  // integer or integer/integer, optionally negative
  Rational read_rational(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign) {
      if (eat('-'))
        neg = true;
      else
        eat('+');
    }
    Rational r(read_number());
    if (peek() == '/') {
      ++pos;
      Rational d(read_number());
      if (d.is_zero()) fail("zero denominator");
      r /= d;
    }
    return neg ? -r : r;
  }

  int var_index() {
    skip_ws();
    const char c = src[pos];
    if (c == 'x' && pos + 1 < src.size() &&
        std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
      ++pos;
      int idx = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        idx = idx * 10 + (src[pos++] - '0');
      return idx - 1;
    }
    ++pos;
    switch (c) {
      case 'x': return 0;
      case 'y': return 1;
      case 'z': return 2;
      default: break;
    }
    --pos;
    fail(std::string("unknown variable '") + c + "'");
  }

  SymFunc parse_expr() {
    SymFunc r = parse_term();
    while (true) {
      if (eat('+')) {
        r = r + parse_term();
      } else if (eat('-')) {
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }

  SymFunc parse_term() {
    SymFunc r = parse_factor();
    while (eat('*')) r = r * parse_factor();
    return r;
  }

  SymFunc parse_factor() {
    if (eat('-')) return parse_factor().scaled(Rational(-1));
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");

    const char c = src[pos];
    SymFunc base(dim);
    bool base_is_var = false;
    int base_var = -1;

    if (c == '(') {
      ++pos;
      base = parse_expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      base = SymFunc::constant(read_rational(false), dim);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      base_var = var_index();
      if (base_var < 0 || base_var >= dim)
        fail("variable out of range for dimension " + std::to_string(dim));
      base = SymFunc::variable(base_var, dim);
      base_is_var = true;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }

    if (eat('^')) {
      Rational e(0);
      if (eat('(')) {
        e = read_rational(true);
        if (!eat(')')) fail("expected ')' after exponent");
      } else {
        bool neg = eat('-');
        e = Rational(read_number());
        if (neg) e = -e;
      }
      if (base_is_var) {
        std::vector<Rational> exps(dim, Rational(0));
        exps[base_var] = e;
        return SymFunc::monomial(Rational(1), std::move(exps));
      }
      if (e.den() != 1 || e.sign() < 0)
        fail("only nonnegative integer exponents are allowed on compound expressions");
      return base.pow_int(static_cast<unsigned>(e.num().get_ui()));
    }
    return base;
  }
};

}  // namespace

SymFunc parse_symfunc(const std::string& src, int dim) {
  if (dim < 1) throw std::invalid_argument("parse_symfunc: dim must be >= 1");
  SfParser p(src, dim);
  p.skip_ws();
  if (p.pos >= src.size()) throw std::invalid_argument("empty function source");
  SymFunc f = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return f;
}

}  // namespace opquad
