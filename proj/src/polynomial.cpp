#include "bott/polynomial.hpp"

#include "bott/errors.hpp"

#include <sstream>

namespace bott {

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

int Poly::total_degree() const {
  int deg = -1; // zero polynomial
  for (const auto& [e, coeff] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (d > deg) deg = d;
  }
  return deg;
}

Rational Poly::eval(const ParamValues& values) const {
  Rational out(0);
  for (const auto& [e, coeff] : terms_) {
    Rational term = coeff;
    for (int v = 0; v < 5; ++v) {
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k)
        term = term * values[static_cast<std::size_t>(v)];
    }
    out = out + term;
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [e, coeff] : terms_) out.terms_[e] = -coeff;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, coeff] : b.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end())
      out.terms_[e] = coeff;
    else
      it->second = it->second + coeff;
  }
  out.prune();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e;
      for (int v = 0; v < 5; ++v)
        e[static_cast<std::size_t>(v)] =
            ea[static_cast<std::size_t>(v)] + eb[static_cast<std::size_t>(v)];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end())
        out.terms_[e] = ca * cb;
      else
        it->second = it->second + ca * cb;
    }
  }
  out.prune();
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    if (!first) os << (coeff.signum() < 0 ? " - " : " + ");
    if (first && coeff.signum() < 0) os << "-";
    first = false;
    Rational mag = abs(coeff);
    bool has_vars = false;
    for (int x : e)
      if (x > 0) has_vars = true;
    if (mag != Rational(1) || !has_vars) os << mag.to_string();
    bool star = mag != Rational(1) || !has_vars;
    for (int v = 0; v < 5; ++v) {
      int exp = e[static_cast<std::size_t>(v)];
      if (exp == 0) continue;
      if (star) os << "*";
      star = true;
      os << var_name(static_cast<Var>(v));
      if (exp > 1) os << "^" << exp;
    }
  }
  return os.str();
}

Rational RationalFn::eval(const ParamValues& values) const {
  Rational d = den.eval(values);
  if (d.is_zero())
    throw DenominatorVanished(den.to_string() + " = 0 at the sampled parameters");
  return num.eval(values) / d;
}

std::string RationalFn::to_string() const {
  if (den == Poly(1)) return num.to_string();
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

} // namespace bott
