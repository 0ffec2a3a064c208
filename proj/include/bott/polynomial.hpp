#ifndef BOTT_POLYNOMIAL_HPP
#define BOTT_POLYNOMIAL_HPP

#include "bott/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace bott {

/// Group parameter slots, in the fixed evaluation order used everywhere.
enum class Var : int { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3, Eta = 4 };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::Alpha: return "alpha";
    case Var::Beta: return "beta";
    case Var::Gamma: return "gamma";
    case Var::Delta: return "delta";
    case Var::Eta: return "eta";
  }
  return "?";
}

using ParamValues = std::array<Rational, 5>;

/// Sparse multivariate polynomial in the five group parameters, with exact
/// rational coefficients. Used for the catalog's reference tables and the
/// theorem-case constraints, so comparisons against recomputation are exact.
class Poly {
public:
  using Exponents = std::array<int, 5>;

  Poly() = default;
  Poly(const Rational& constant) { if (!constant.is_zero()) terms_[{0, 0, 0, 0, 0}] = constant; }
  Poly(int constant) : Poly(Rational(constant)) {}

  static Poly var(Var v) {
    Poly p;
    Exponents e{0, 0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    p.terms_[e] = Rational(1);
    return p;
  }
  static Poly c(long long num, long long den = 1) { return Poly(Rational(num, den)); }

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Rational eval(const ParamValues& values) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Rendering like "-3/2*alpha^2*delta + beta*gamma", for diagnostics.
  std::string to_string() const;

private:
  std::map<Exponents, Rational> terms_;
  void prune();
};

/// Quotient of two polynomials; denominators arise in claimed basis vectors.
struct RationalFn {
  Poly num;
  Poly den = Poly(1);

  /// Evaluates exactly; throws DenominatorVanished when den(values) = 0.
  Rational eval(const ParamValues& values) const;
  std::string to_string() const;
};

} // namespace bott

#endif
