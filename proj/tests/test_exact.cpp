#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bott/bigint.hpp"
#include "bott/linalg.hpp"
#include "bott/polynomial.hpp"
#include "bott/rational.hpp"
#include "bott/sampling.hpp"

#include <random>

using namespace bott;

TEST_SUITE("bigint") {
  TEST_CASE("construction and printing") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789LL).to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-00042").to_string() == "-42");
    CHECK(BigInt::from_string("+7") == BigInt(7));
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
  }

  TEST_CASE("arithmetic against 64-bit oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
      long long a = static_cast<long long>(rng() % 2000001) - 1000000;
      long long b = static_cast<long long>(rng() % 2000001) - 1000000;
      CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
      CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
      CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
      if (b != 0) {
        CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
        CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
      }
      CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
  }

  TEST_CASE("multi-limb magnitudes") {
    BigInt two_pow_200 = BigInt(1);
    for (int i = 0; i < 200; ++i) two_pow_200 *= BigInt(2);
    BigInt two_pow_100 = BigInt(1);
    for (int i = 0; i < 100; ++i) two_pow_100 *= BigInt(2);
    CHECK(two_pow_200 / two_pow_100 == two_pow_100);
    CHECK((two_pow_200 % two_pow_100).is_zero());
    CHECK(two_pow_200.to_string() ==
          "1606938044258990275541962092341162602522202993782792835301376");
    CHECK(BigInt::from_string(two_pow_200.to_string()) == two_pow_200);
    CHECK(!two_pow_200.fits_int64());

    // (a*b)/b == a with uneven limbs
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321987654321");
    CHECK((a * b) / b == a);
    CHECK((a * b) / a == b);
    CHECK((a * b.abs() + BigInt(17)) % b.abs() == BigInt(17));
    // divmod identity across signs
    for (const BigInt& x : {a * b, a * b + BigInt(17), -(a * b) - BigInt(5)})
      CHECK((x / b) * b + x % b == x);
  }

  TEST_CASE("division truncates toward zero") {
    CHECK((BigInt(7) / BigInt(2)) == BigInt(3));
    CHECK((BigInt(-7) / BigInt(2)) == BigInt(-3));
    CHECK((BigInt(7) / BigInt(-2)) == BigInt(-3));
    CHECK((BigInt(-7) % BigInt(2)) == BigInt(-1));
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
  }

  TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
  }
}

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("string round-trip") {
    for (const char* s : {"0", "1", "-1", "2/3", "-7/9", "123456789123456789123/7"}) {
      Rational r = Rational::from_string(s);
      CHECK(r.to_string() == s);
      CHECK(Rational::from_string(r.to_string()) == r);
    }
    CHECK(Rational::from_string("4/6").to_string() == "2/3"); // canonicalized on input
    CHECK(Rational::from_string("-4/-6").to_string() == "2/3");
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("a"), std::invalid_argument);
  }

  TEST_CASE("arithmetic round-trip (a/b + c/d) - c/d == a/b") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
      Rational a = rng.rational(), b = rng.rational();
      CHECK((a + b) - b == a);
      CHECK(a + b == b + a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a * (b + Rational(1)) == a * b + a);
    }
  }

  TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("evaluation and algebra") {
    Poly a = Poly::var(Var::Alpha), b = Poly::var(Var::Beta);
    Poly p = a * a * Poly::c(2) - b * Poly::c(1, 2) + Poly(3);
    ParamValues v{Rational(2), Rational(4), Rational(0), Rational(0), Rational(0)};
    CHECK(p.eval(v) == Rational(9)); // 8 - 2 + 3
    CHECK((a - a).is_zero());
    CHECK((a * b) == (b * a));
    CHECK(p.total_degree() == 2);
    CHECK(Poly(0).total_degree() == -1);
  }

  TEST_CASE("rational function denominators") {
    RationalFn f{Poly::var(Var::Beta), Poly::var(Var::Gamma)};
    ParamValues v{Rational(0), Rational(3), Rational(6), Rational(0), Rational(0)};
    CHECK(f.eval(v) == Rational(1, 2));
    v[2] = Rational(0);
    CHECK_THROWS(f.eval(v));
  }
}

namespace {

MatX from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  MatX m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

// System of equations for G1/B1 evaluated by hand at alpha=1, beta=b:
// rows (11,12,13,22,23,33), columns lambda_1..lambda_3.
MatX g1_b1_system(long long beta) {
  Rational b(beta);
  MatX m(6, 3);
  m.setConstant(Rational(0));
  m(0, 1) = -(Rational(2) + b * b);
  m(0, 2) = Rational(2);
  m(1, 0) = Rational(1) + b * b / Rational(2);
  m(1, 1) = b / Rational(2);
  m(1, 2) = -b / Rational(2);
  m(2, 0) = Rational(-1);
  m(2, 1) = b * b * b;
  m(3, 0) = -b;
  m(3, 2) = Rational(-1);
  m(4, 0) = b * (Rational(1, 2) - b * b);
  m(4, 1) = Rational(1, 2);
  m(4, 2) = (Rational(1) - b * b) / Rational(2);
  m(5, 1) = b * b - Rational(1);
  return m;
}

} // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rref of zero and identity") {
    MatX zero(3, 3);
    zero.setConstant(Rational(0));
    RrefResult rz = rref(zero);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());

    MatX id(3, 3);
    id.setConstant(Rational(0));
    for (int i = 0; i < 3; ++i) id(i, i) = Rational(1);
    RrefResult ri = rref(id);
    CHECK(ri.rank == 3);
    CHECK(ri.pivots == std::vector<Index>{0, 1, 2});
  }

  TEST_CASE("rref of the G1/B1 system at alpha=1, beta=1 has rank 3") {
    // eliminating by hand: -3 l2 + 2 l3 = 0, 3 l1 + l2 - l3 = 0,
    // -l1 + l2 = 0, l1 + l3 = 0 force l1 = l2 = l3 = 0
    CHECK(rref(g1_b1_system(1)).rank == 3);
  }

  TEST_CASE("rref is idempotent") {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
      MatX m(4, 3);
      for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 3; ++j) m(i, j) = rng.rational();
      RrefResult first = rref(m);
      RrefResult second = rref(first.matrix);
      CHECK(exactly_equal(first.matrix, second.matrix));
      CHECK(first.rank == second.rank);
    }
  }

  TEST_CASE("nullspace of the zero map is the whole space") {
    MatX zero(6, 3);
    zero.setConstant(Rational(0));
    SubspaceBasis basis = nullspace(zero);
    CHECK(basis.dim == 3);
    for (int i = 0; i < 3; ++i) CHECK(exactly_equal(basis.vectors[static_cast<std::size_t>(i)], basis_vector(i)));
  }

  TEST_CASE("nullspace of the G3/B1 system at alpha=beta=gamma=1") {
    // two effective equations: lambda_2 = 0 and lambda_1 = 0
    MatX m = from_rows({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 0}, {-1, 0, 0}, {0, 0, 0}});
    SubspaceBasis basis = nullspace(m);
    REQUIRE(basis.dim == 1);
    CHECK(exactly_equal(basis.vectors[0], basis_vector(2)));
  }

  TEST_CASE("nullspace of the G1/B1 system at alpha=1, beta=2 is trivial") {
    CHECK(nullspace(g1_b1_system(2)).dim == 0);
  }

  TEST_CASE("rank-nullity and exactness on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      Index rows = 1 + (t % 6);
      MatX m(rows, 3);
      for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < 3; ++j) m(i, j) = rng.rational();
      if (t % 3 == 0 && rows >= 2) m.row(1) = m.row(0); // force rank deficiency sometimes
      SubspaceBasis basis = nullspace(m);
      CHECK(rank(m) + basis.dim == 3);
      for (const Vec3& v : basis.vectors) CHECK(exactly_zero(MatX(m * v)));
    }
  }

  TEST_CASE("basis normal form") {
    // x + 2y - z = 0: free columns y, z
    MatX m = from_rows({{1, 2, -1}});
    SubspaceBasis basis = nullspace(m);
    REQUIRE(basis.dim == 2);
    // pivot rows strictly increasing, pivot entries 1, zeros crosswise
    Vec3 v0 = basis.vectors[0], v1 = basis.vectors[1];
    CHECK(v0(1) == Rational(1));
    CHECK(v0(2) == Rational(0));
    CHECK(v1(1) == Rational(0));
    CHECK(v1(2) == Rational(1));
    CHECK(v0(0) == Rational(-2));
    CHECK(v1(0) == Rational(1));
    // recomputing from a row-scaled matrix gives the identical basis
    MatX scaled = m;
    for (Index j = 0; j < 3; ++j) scaled(0, j) = scaled(0, j) * Rational(-7, 3);
    CHECK(nullspace(scaled) == basis);
  }

  TEST_CASE("linear independence check") {
    CHECK(linearly_independent({basis_vector(0), basis_vector(1)}));
    Vec3 sum = basis_vector(0) + basis_vector(1);
    CHECK(!linearly_independent({basis_vector(0), basis_vector(1), sum}));
    CHECK(linearly_independent({}));
  }
}
