#ifndef BOTT_EIGEN_SUPPORT_HPP
#define BOTT_EIGEN_SUPPORT_HPP

#include "bott/rational.hpp"

#include <Eigen/Core>

namespace Eigen {

/// Makes bott::Rational a first-class Eigen scalar (exact: epsilon is 0).
template <>
struct NumTraits<bott::Rational> : GenericNumTraits<bott::Rational> {
  typedef bott::Rational Real;
  typedef bott::Rational NonInteger;
  typedef bott::Rational Nested;
  typedef bott::Rational Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };

  static inline Real epsilon() { return bott::Rational(0); }
  static inline Real dummy_precision() { return bott::Rational(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace bott {

using Vec3 = Eigen::Matrix<Rational, 3, 1>;
using Mat3 = Eigen::Matrix<Rational, 3, 3>;
using MatX = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

inline Vec3 basis_vector(int i) {
  Vec3 v = Vec3::Zero();
  v(i) = Rational(1);
  return v;
}

template <typename Derived, typename Other>
bool exactly_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool exactly_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

} // namespace bott

#endif
