#include <doctest.h>

#include <random>

#include "gwa/parse.hpp"

using namespace gwa;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

CtxPtr quadratic_ctx() {
  static CtxPtr ctx = AlgebraCtx::make(zp({-1, 0, 1}));
  return ctx;
}

}  // namespace

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("0") == Scalar());
  CHECK(parse_scalar("42") == Scalar(42));
  CHECK(parse_scalar("3/4") == Scalar(Rational(3, 4)));
  CHECK(parse_scalar("q^2") == Scalar::q_power(2));
  CHECK(parse_scalar("(q^2-1)/(q^2+1)") ==
        (Scalar::q_power(2) - Scalar(1)) / (Scalar::q_power(2) + Scalar(1)));
  CHECK(parse_scalar("-q") == -Scalar::q());
  CHECK(parse_scalar("1/q^3") == Scalar::q_power(-3));
  CHECK(parse_scalar("2*q - q") == Scalar::q());
}

TEST_CASE("z polynomials") {
  CHECK(parse_zpoly("z^2-1") == zp({-1, 0, 1}));
  CHECK(parse_zpoly("(z-1)^2") == zp({1, -2, 1}));
  CHECK(parse_zpoly("1-z") == zp({1, -1}));
  CHECK(parse_zpoly("q^2*z") == ZPoly::monomial(Scalar::q_power(2), 1));
  CHECK_THROWS_AS(parse_zpoly("x+1"), ParseError);
}

TEST_CASE("A-algebra expressions") {
  auto ctx = quadratic_ctx();
  // z+ * x+ normalizes to q x+ z+
  CHECK(parse_a_expr("z+*x+", ctx) ==
        AlgElem::monomial(ctx, {XSign::Plus, 1, 1, 0}, Scalar::q()));
  CHECK(parse_a_expr("1", ctx) == AlgElem::unit(ctx));
  CHECK(parse_a_expr("x+^2*(q^2-1)", ctx) ==
        AlgElem::monomial(ctx, {XSign::Plus, 2, 0, 0}, Scalar::q_power(2) - Scalar(1)));
  CHECK(parse_a_expr("x+*x-", ctx) == AlgElem::from_zpoly(ctx, ctx->p()));
  CHECK(parse_a_expr("z-*z+ - z+*z-", ctx).is_zero());
  CHECK(parse_a_expr("x+/2", ctx) ==
        AlgElem::monomial(ctx, {XSign::Plus, 1, 0, 0}, Scalar(Rational(1, 2))));
  CHECK_THROWS_AS(parse_a_expr("x+/z+", ctx), ParseError);
  CHECK_THROWS_AS(parse_a_expr("y", ctx), ParseError);
  CHECK_THROWS_AS(parse_a_expr("z+ z-", ctx), ParseError);  // no implicit product
  CHECK_THROWS_AS(parse_a_expr("x+^(2)", ctx), ParseError);
}

TEST_CASE("B-algebra expressions") {
  auto ctx = quadratic_ctx();
  CHECK(parse_b_expr("x*y", ctx) ==
        BElem::generator(ctx, BGen::X) * BElem::generator(ctx, BGen::Y));
  // x+y is a sum here, not a generator token
  CHECK(parse_b_expr("x+y", ctx) ==
        BElem::generator(ctx, BGen::X) + BElem::generator(ctx, BGen::Y));
  CHECK(parse_b_expr("z^3*q", ctx) ==
        BElem::monomial(ctx, BMonomial{BSign::None, 0, 3}, Scalar::q()));
  CHECK_THROWS_AS(parse_b_expr("z+", ctx), ParseError);  // trailing operator
}

TEST_CASE("spinor expressions") {
  auto ctx = quadratic_ctx();
  Spinor s = parse_spinor("z-*s+ + z+*s-", ctx);
  CHECK(s.plus() == AlgElem::generator(ctx, Gen::Zm));
  CHECK(s.minus() == AlgElem::generator(ctx, Gen::Zp));
  CHECK(parse_spinor("0", ctx).is_zero());
  CHECK(parse_spinor("q^2*x+*s-", ctx) ==
        Spinor::minus_section(AlgElem::generator(ctx, Gen::Xp) * Scalar::q_power(2)));
  // scaling from the right by a scalar is fine; anything else is not
  CHECK(parse_spinor("z-*s+*2", ctx).plus() ==
        AlgElem::generator(ctx, Gen::Zm) * Scalar(2));
  CHECK_THROWS_AS(parse_spinor("s+*z-", ctx), ParseError);
  CHECK_THROWS_AS(parse_spinor("z- + z+*s-", ctx), ParseError);
  CHECK_THROWS_AS(parse_spinor("s+*s-", ctx), ParseError);
  // degree constraints surface as domain errors
  CHECK_THROWS_AS(parse_spinor("s+", ctx), std::domain_error);
}

TEST_CASE("one-form expressions") {
  auto ctx = quadratic_ctx();
  OmegaElem w = parse_omega("z+^2*w- + x-^2*w+", ctx);
  CHECK(w.minus == AlgElem::generator(ctx, Gen::Zp).pow(2));
  CHECK(w.plus == AlgElem::generator(ctx, Gen::Xm).pow(2));
  CHECK(w.zero.is_zero());
  // the twisted right action is available in the grammar
  CHECK(parse_omega("w0*x-", ctx) ==
        left_mul(AlgElem::generator(ctx, Gen::Xm) * Scalar::q_power(-2),
                 OmegaElem::basis(ctx, OmegaIndex::Zero)));
  CHECK(parse_omega("-w0", ctx) == -OmegaElem::basis(ctx, OmegaIndex::Zero));
  CHECK_THROWS_AS(parse_omega("w+*w-", ctx), ParseError);
}

TEST_CASE("parse errors carry positions") {
  auto ctx = quadratic_ctx();
  try {
    parse_a_expr("z+ * ", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scalar("@"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(q"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("print-parse round trips") {
  auto ctx = quadratic_ctx();
  std::mt19937_64 rng(61);
  auto coeff = [&] {
    Scalar s = Scalar(static_cast<long>(rng() % 9) - 4) * Scalar::q_power(rng() % 5);
    if (rng() % 3 == 0) s = s / (Scalar::q_power(2) + Scalar(static_cast<long>(rng() % 3)));
    return s;
  };
  for (int i = 0; i < 150; ++i) {
    AlgElem a(ctx);
    for (int t = 0; t < 4; ++t) {
      AMonomial m;
      m.xexp = static_cast<uint32_t>(rng() % 3);
      m.zplus = static_cast<uint32_t>(rng() % 3);
      m.zminus = static_cast<uint32_t>(rng() % 3);
      m.xsign = m.xexp ? (rng() % 2 ? XSign::Plus : XSign::Minus) : XSign::None;
      a.add_term(m, coeff());
    }
    CHECK(parse_a_expr(a.to_string(), ctx) == a);

    BElem b(ctx);
    for (int t = 0; t < 3; ++t) {
      BMonomial m;
      m.xyexp = static_cast<uint32_t>(rng() % 3);
      m.zexp = static_cast<uint32_t>(rng() % 3);
      m.sign = m.xyexp ? (rng() % 2 ? BSign::X : BSign::Y) : BSign::None;
      b.add_term(m, coeff());
    }
    CHECK(parse_b_expr(b.to_string(), ctx) == b);

    Scalar s = coeff() + coeff();
    CHECK(parse_scalar(s.to_string()) == s);
  }
  // spinor and one-form round trips
  for (int i = 0; i < 50; ++i) {
    AlgElem plus(ctx), minus(ctx);
    uint32_t t = rng() % 2;
    plus.add_term({XSign::Minus, 1, t, t}, coeff());
    minus.add_term({XSign::Plus, 1, 0, 0}, coeff());
    Spinor s(plus, minus);
    CHECK(parse_spinor(s.to_string(), ctx) == s);

    OmegaElem w(ctx);
    w.minus.add_term({XSign::None, 0, static_cast<uint32_t>(rng() % 3), static_cast<uint32_t>(rng() % 3)}, coeff());
    w.zero.add_term({XSign::Plus, static_cast<uint32_t>(rng() % 2), 0, 0}, coeff());
    CHECK(parse_omega(w.to_string(), ctx) == w);
  }
}
