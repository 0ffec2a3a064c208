#include "bott/connection.hpp"

namespace bott {

Rational metric(const Vec3& u, const Vec3& v) {
  return u(0) * v(0) + u(1) * v(1) - u(2) * v(2);
}

std::array<int, 2> Distribution::f_indices() const {
  switch (tag) {
    case Tag::B1: return {0, 1};
    case Tag::B2: return {0, 2};
    case Tag::B3: return {1, 2};
  }
  return {0, 1};
}

int Distribution::fperp_index() const {
  switch (tag) {
    case Tag::B1: return 2;
    case Tag::B2: return 1;
    case Tag::B3: return 0;
  }
  return 2;
}

Vec3 Distribution::project_f(const Vec3& v) const {
  Vec3 out = v;
  out(fperp_index()) = Rational(0);
  return out;
}

Vec3 Distribution::project_fperp(const Vec3& v) const {
  Vec3 out = Vec3::Zero();
  out(fperp_index()) = v(fperp_index());
  return out;
}

std::string Distribution::name() const {
  switch (tag) {
    case Tag::B1: return "B1";
    case Tag::B2: return "B2";
    case Tag::B3: return "B3";
  }
  return "?";
}

std::optional<Distribution> parse_distribution(const std::string& name) {
  if (name.size() == 2 && (name[0] == 'b' || name[0] == 'B') && name[1] >= '1' && name[1] <= '3')
    return Distribution{static_cast<Distribution::Tag>(name[1] - '0')};
  return std::nullopt;
}

Vec3 Connection::derive(int i, const Vec3& w) const {
  Vec3 out = Vec3::Zero();
  for (int j = 0; j < 3; ++j) {
    if (w(j).is_zero()) continue;
    out += w(j) * gamma_[i][j];
  }
  return out;
}

Vec3 Connection::derive_along(const Vec3& u, const Vec3& w) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    if (u(i).is_zero()) continue;
    out += u(i) * derive(i, w);
  }
  return out;
}

bool operator==(const Connection& a, const Connection& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!exactly_equal(a.gamma_[i][j], b.gamma_[i][j])) return false;
  return true;
}

Connection levi_civita(const StructureConstants& sc) {
  Connection conn;
  const Rational half(1, 2);
  auto g_bracket = [&](int i, int j, int k) {
    // g([e_i, e_j], e_k)
    return sc.c(i, j, k) * metric_sign(k);
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vec3 coeffs = Vec3::Zero();
      for (int k = 0; k < 3; ++k) {
        Rational koszul = g_bracket(i, j, k) - g_bracket(j, k, i) + g_bracket(k, i, j);
        // coefficient along e_k: divide by g(e_k, e_k)
        coeffs(k) = half * koszul * metric_sign(k);
      }
      conn.coeffs(i, j) = coeffs;
    }
  }
  return conn;
}

Connection bott(const StructureConstants& sc, const Distribution& dist) {
  Connection lc = levi_civita(sc);
  Connection out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      bool i_in_f = dist.in_f(i);
      bool j_in_f = dist.in_f(j);
      if (i_in_f && j_in_f)
        out.coeffs(i, j) = dist.project_f(lc.coeffs(i, j));
      else if (!i_in_f && j_in_f)
        out.coeffs(i, j) = dist.project_f(sc.bracket_basis(i, j));
      else if (i_in_f && !j_in_f)
        out.coeffs(i, j) = dist.project_fperp(sc.bracket_basis(i, j));
      else
        out.coeffs(i, j) = dist.project_fperp(lc.coeffs(i, j));
    }
  }
  return out;
}

} // namespace bott
