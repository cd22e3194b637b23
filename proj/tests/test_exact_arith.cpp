#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chered/cyclotomic.hpp"
#include "chered/error.hpp"
#include "chered/matrix.hpp"
#include "chered/poly.hpp"
#include "chered/ratfunc.hpp"
#include "chered/rational.hpp"

using namespace chered;

TEST_CASE("cyclotomic roots of unity") {
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(i * i * i * i == Cyclotomic(1));

  const Cyclotomic z6 = Cyclotomic::zeta(6);
  CHECK(z6 * z6 == Cyclotomic::zeta(3));
  CHECK(z6 * z6 * z6 == Cyclotomic(-1));

  CHECK(Cyclotomic::root_of_unity(6, 7) == Cyclotomic::zeta(6));
  CHECK(Cyclotomic::root_of_unity(6, -1) == Cyclotomic::root_of_unity(6, 5));
  CHECK(Cyclotomic::root_of_unity(5, 0) == Cyclotomic(1));
}

TEST_CASE("rational detection and reduction") {
  // 2 cos(pi/4) squares to 2.
  const Cyclotomic z8 = Cyclotomic::zeta(8);
  const Cyclotomic sqrt2 = z8 + Cyclotomic::root_of_unity(8, -1);
  CHECK(!sqrt2.is_rational());
  CHECK(sqrt2 * sqrt2 == Cyclotomic(2));

  Cyclotomic s;
  for (long p = 1; p <= 4; ++p) s += Cyclotomic::root_of_unity(5, p);
  CHECK(s.is_rational());
  REQUIRE(s.as_rational().has_value());
  CHECK(*s.as_rational() == Rational(-1));

  const Cyclotomic half{Rational(1, 2)};
  CHECK((half + half) == Cyclotomic(1));
  CHECK(half.conductor() == 1);
}

TEST_CASE("cyclotomic field operations") {
  const Cyclotomic z7 = Cyclotomic::zeta(7);
  CHECK(z7 * z7.inverse() == Cyclotomic(1));
  const Cyclotomic a = Cyclotomic(3) + z7 * Rational(2, 5);
  CHECK(a / a == Cyclotomic(1));
  CHECK((a - a).is_zero());

  // Mixed conductors land in the compositum.
  const Cyclotomic mix = Cyclotomic::zeta(3) + Cyclotomic::zeta(4);
  CHECK(mix.conductor() == 12);
  CHECK(mix - Cyclotomic::zeta(4) == Cyclotomic::zeta(3));
}

TEST_CASE("conductor cap rejects oversized compositums") {
  const unsigned saved = Cyclotomic::conductor_cap();
  Cyclotomic::set_conductor_cap(10);
  CHECK_THROWS_AS(Cyclotomic::zeta(11), ConductorError);
  CHECK_THROWS_AS(Cyclotomic::zeta(3) + Cyclotomic::zeta(8), ConductorError);
  Cyclotomic::set_conductor_cap(saved);
  CHECK(Cyclotomic::zeta(3) + Cyclotomic::zeta(8) != Cyclotomic(0));
}

TEST_CASE("integer binomials") {
  CHECK(binomial(0, 0) == Integer(1));
  CHECK(binomial(5, 2) == Integer(10));
  CHECK(binomial(10, 5) == Integer(252));
  CHECK(binomial(4, 7) == Integer(0));
}

TEST_CASE("matrix arithmetic over the cyclotomics") {
  const Cyclotomic w = Cyclotomic::zeta(3);
  CycMatrix m = CycMatrix::from_rows({{w, Cyclotomic(1)}, {Cyclotomic(0), w * w}});
  CHECK(m.det() == Cyclotomic(1));
  CHECK(m.rank() == 2);

  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * m == CycMatrix::identity(2));
  CHECK(m.pow(3).is_identity());

  CycMatrix sing = CycMatrix::from_rows(
      {{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(2), Cyclotomic(4)}});
  CHECK(sing.rank() == 1);
  CHECK(sing.det().is_zero());
  auto ker = sing.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(sing.apply(ker[0]) == CycVector{Cyclotomic(0), Cyclotomic(0)});
  CHECK(!sing.inverse().has_value());

  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("line normalization and the canonical pairing") {
  CycVector v{Cyclotomic(0), Cyclotomic::zeta(3) * Rational(2, 3)};
  REQUIRE(normalize_line(v));
  CHECK(v == CycVector{Cyclotomic(0), Cyclotomic(1)});

  CycVector zero{Cyclotomic(0), Cyclotomic(0)};
  CHECK(!normalize_line(zero));

  CycVector x{Cyclotomic(1), Cyclotomic(2)};
  CycVector y{Cyclotomic(3), Cyclotomic::zeta(4)};
  CHECK(pair(x, y) == Cyclotomic(3) + Cyclotomic::zeta(4) * Rational(2));
}

TEST_CASE("polynomial division by linear forms") {
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const CycVector form{Cyclotomic(1), Cyclotomic(1)};

  const Poly p = (x + y) * (x - y) * (x + y);
  auto q = p.try_divide_linear(form);
  REQUIRE(q.has_value());
  CHECK(*q == (x + y) * (x - y));

  CHECK(!(x * x + y).try_divide_linear(form).has_value());
}

TEST_CASE("rational functions with hyperplane denominators") {
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const CycVector form{Cyclotomic(1), Cyclotomic(1)};
  LinearFormTable T{2, {form}};

  RatFunc inv(&T, Poly::constant(2, Cyclotomic(1)), {{0, 1}});
  RatFunc xy(&T, x + y);

  // d/dx 1/(x+y) = -1/(x+y)^2, and multiplying back cancels one power.
  const RatFunc d = inv.derivative(0);
  CHECK((xy * d + inv).is_zero());
  CHECK(xy * inv == RatFunc::constant(&T, Cyclotomic(1)));

  // x/(x+y) + y/(x+y) = 1.
  RatFunc fx(&T, x, {{0, 1}});
  RatFunc fy(&T, y, {{0, 1}});
  CHECK(fx + fy == RatFunc::constant(&T, Cyclotomic(1)));
}
