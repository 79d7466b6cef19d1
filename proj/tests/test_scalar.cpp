#include <doctest.h>

#include <random>

#include "gwa/scalar.hpp"

using namespace gwa;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  auto coeff = [&] { return static_cast<long>(rng() % 7) - 3; };
  QPoly num, den;
  for (int i = 0; i < 3; ++i) num = num + QPoly::monomial(coeff(), rng() % 4);
  while (den.is_zero()) den = QPoly::monomial(coeff(), rng() % 3) + QPoly(coeff());
  if (num.is_zero()) num = QPoly(1);
  return Scalar(num, den);
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_integer(0) == Scalar(0));
  CHECK(q_integer(1) == Scalar(1));
  // [3] = 1 + q^2 + q^4
  Scalar expected = Scalar(1) + Scalar::q_power(2) + Scalar::q_power(4);
  CHECK(q_integer(3) == expected);
  // [l] agrees with the rational-function form (1 - q^{2l})/(1 - q^2)
  for (unsigned l = 1; l <= 8; ++l) {
    Scalar num = Scalar(1) - Scalar::q_power(2 * l);
    Scalar den = Scalar(1) - Scalar::q_power(2);
    CHECK(q_integer(l) == num / den);
  }
}

TEST_CASE("specialization") {
  Scalar s = (Scalar::q_power(2) + Scalar(1)) / Scalar::q();
  CHECK(s.specialize(Rational(2)) == Rational(5, 2));
  Scalar pole = Scalar(1) / (Scalar::q_power(2) - Scalar(1));
  CHECK_THROWS_WITH_AS(pole.specialize(Rational(1)), "pole at specialization point",
                       std::domain_error);
  CHECK(q_integer(3).specialize(Rational(2)) == Rational(21));
  CHECK_THROWS_AS(s.specialize(Rational(0)), std::domain_error);
  CHECK_NOTHROW(check_not_root_of_unity(Rational(2), 10));
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("conj is the identity involution") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(a.conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  CHECK(Scalar::q().conj() == Scalar::q());
}

TEST_CASE("lowest terms") {
  // (q^4 - 1)/(q^2 - 1) reduces to q^2 + 1
  QPoly q4m1 = QPoly::monomial(1, 4) + QPoly(-1);
  QPoly q2m1 = QPoly::monomial(1, 2) + QPoly(-1);
  CHECK(Scalar(q4m1, q2m1) == Scalar::q_power(2) + Scalar(1));
  // common q powers and integer content are stripped, denominator kept positive
  CHECK(Scalar(QPoly::monomial(4, 3), QPoly::monomial(-2, 1)) ==
        Scalar(-2) * Scalar::q_power(2));
  CHECK(Scalar() == Scalar(QPoly(), QPoly(5)));
  CHECK_THROWS_AS(Scalar(QPoly(1), QPoly()), std::domain_error);
}

TEST_CASE("power and inverse") {
  Scalar s = Scalar(2) * Scalar::q_power(-3);
  CHECK(s.pow(0) == Scalar(1));
  CHECK(s.pow(3) == s * s * s);
  CHECK(s.pow(-2) == (s * s).inverse());
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("sign on the unit interval") {
  CHECK(sign_on_unit_interval(-Scalar::q_power(-3)) == IntervalSign::Negative);
  CHECK(sign_on_unit_interval(Scalar::q_power(2) + Scalar(1)) == IntervalSign::Positive);
  // 2q - 1 changes sign at q = 1/2
  Scalar mixed = Scalar(2) * Scalar::q() - Scalar(1);
  CHECK(sign_on_unit_interval(mixed) == IntervalSign::Mixed);
  // q - 1 is negative on the whole open interval
  CHECK(sign_on_unit_interval(Scalar::q() - Scalar(1)) == IntervalSign::Negative);
  CHECK(sign_on_unit_interval((Scalar::q() - Scalar(1)).inverse()) == IntervalSign::Negative);
}

TEST_CASE("rational detection") {
  CHECK(Scalar(Rational(3, 4)).is_rational());
  CHECK(Scalar(Rational(3, 4)).as_rational() == Rational(3, 4));
  CHECK_FALSE(Scalar::q().is_rational());
  CHECK(Scalar().is_rational());
}
