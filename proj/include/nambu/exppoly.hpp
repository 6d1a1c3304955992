#ifndef NAMBU_EXPPOLY_HPP
#define NAMBU_EXPPOLY_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

/// Coordinate axes are 0-based internally; surface syntax x1..x8.
constexpr int kMaxAxes = 8;

/// Bindings of named parameters (a, b, q1..q4, alpha, ...) to exact rationals.
using ParamEnv = std::map<std::string, Rat>;

/// Affine form c0 + sum lin[p]*p over parameter names. Used for exponential
/// frequencies so parameterized families stay exact before substitution.
struct AffForm {
  GaussRat c0;
  std::vector<std::pair<std::string, GaussRat>> lin;  // sorted, coeffs nonzero

  AffForm() = default;
  explicit AffForm(const GaussRat& c) : c0(c) {}

  bool is_zero() const { return c0.is_zero() && lin.empty(); }
  bool is_constant() const { return lin.empty(); }
  AffForm conj() const;

  friend AffForm operator+(const AffForm& a, const AffForm& b);
  friend AffForm operator-(const AffForm& a);
  friend AffForm operator*(const AffForm& a, const GaussRat& s);
  friend bool operator==(const AffForm& a, const AffForm& b);
};

int compare(const AffForm& a, const AffForm& b);

/// One normal-form term: coeff * (param monomial) * x^powers * e^{freq.x}.
struct ExpPolyTerm {
  GaussRat coeff;                                         // nonzero
  std::vector<std::pair<std::string, unsigned>> params;   // sorted, exp > 0
  std::vector<std::pair<int, unsigned>> powers;           // sorted, exp > 0
  std::vector<std::pair<int, AffForm>> freq;              // sorted, form != 0

  unsigned degree() const;
  unsigned power(int axis) const;
  const AffForm* freq_of(int axis) const;
};

/// Key identity (everything but the coefficient).
int compare_key(const ExpPolyTerm& a, const ExpPolyTerm& b);

/// Exact scalar functions closed under +, *, d/dx: spans of
/// c * params * x^k * e^{lambda.x} with Gaussian-rational c, lambda.
/// Canonically ordered and merged; equality is structural.
class ExpPoly {
 public:
  ExpPoly() = default;

  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly constant(const GaussRat& c);
  static ExpPoly constant(const Rat& c) { return constant(GaussRat(c)); }
  static ExpPoly constant(long c) { return constant(GaussRat(c)); }
  static ExpPoly coordinate(int axis);
  static ExpPoly parameter(const std::string& name);
  /// e^{form * x_axis}
  static ExpPoly exponential(int axis, const AffForm& form);
  static ExpPoly from_terms(std::vector<ExpPolyTerm> terms);

  const std::vector<ExpPolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True when closed under term conjugation (real-valued on real points).
  bool is_real() const;

  ExpPoly conj() const;

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly& operator+=(const ExpPoly& b) { return *this = *this + b; }
  ExpPoly& operator-=(const ExpPoly& b) { return *this = *this - b; }
  ExpPoly& operator*=(const ExpPoly& b) { return *this = *this * b; }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b);
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) {
    return !(a == b);
  }

  ExpPoly pow(unsigned k) const;

  /// Exact partial derivative; the class is closed under d/dx.
  ExpPoly differentiate(int axis) const;

  /// True iff a unit of the class: a single term, constant coefficient,
  /// no monomial part (c * e^{lambda.x}, c != 0).
  bool is_unit() const;
  /// Exact division by a unit (also used for division by nonzero constants).
  ExpPoly div_unit(const ExpPoly& unit) const;

  /// Exact value at the origin: coordinates drop out, parameters remain.
  ExpPoly at_origin() const;

  /// Substitute bound parameters; unbound ones remain. Result is normal form
  /// (degenerate exponents collapse and like terms merge).
  ExpPoly substitute_params(const ParamEnv& env) const;

  /// Names of parameters occurring anywhere in the expression.
  std::set<std::string> params_used() const;
  /// Coordinate axes occurring anywhere (powers or frequencies).
  std::set<int> axes_used() const;

  /// Numeric evaluation; all parameters must be bound and the expression
  /// must be real (imaginary residue below 1e-12 is enforced).
  double evaluate(std::span<const double> point, const ParamEnv& env) const;

  /// Grammar-conformant deterministic printer; throws NonRealResult for
  /// expressions that are not conjugate-closed. parse(print(e)) == e.
  std::string str() const;

  /// Raw term dump (debugging; not grammar-conformant).
  std::string repr() const;

 private:
  std::vector<ExpPolyTerm> terms_;  // canonical: sorted by key, merged
  static ExpPoly normalized(std::vector<ExpPolyTerm> raw);
};

}  // namespace nambu

#endif
