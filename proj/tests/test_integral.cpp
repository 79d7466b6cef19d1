#include <doctest.h>

#include <random>

#include "gwa/integral.hpp"
#include "gwa/linalg.hpp"

using namespace gwa;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

CtxPtr quadratic_ctx() {
  static CtxPtr ctx = AlgebraCtx::make(zp({-1, 0, 1}));  // z^2 - 1
  return ctx;
}

CtxPtr squared_ctx() {
  static CtxPtr ctx = AlgebraCtx::make(zp({1, -2, 1}));  // (z-1)^2
  return ctx;
}

AlgElem zpow(const CtxPtr& ctx, unsigned k) {
  AMonomial m;
  m.zplus = m.zminus = k;
  return AlgElem::monomial(ctx, m);
}

AlgElem random_elem(const CtxPtr& ctx, std::mt19937_64& rng, unsigned maxlen) {
  AlgElem e(ctx);
  for (int t = 0; t < 2; ++t) {
    AMonomial m;
    unsigned len = rng() % (maxlen + 1);
    m.xexp = static_cast<uint32_t>(rng() % (len + 1));
    m.zplus = static_cast<uint32_t>(rng() % (len - m.xexp + 1));
    m.zminus = len - m.xexp - m.zplus;
    m.xsign = m.xexp ? (rng() % 2 ? XSign::Plus : XSign::Minus) : XSign::None;
    e.add_term(m, Scalar(static_cast<long>(rng() % 5) - 2) * Scalar::q_power(rng() % 3));
  }
  return e;
}

}  // namespace

TEST_CASE("beta recurrence reproduces the two worked polynomial families") {
  // p = z^2 - 1: beta^0 = (1,0), beta^1 = (0,1), beta^k = beta^{k-2}
  BetaTable t = beta_table(quadratic_ctx(), 10);
  CHECK(t.n == 2);
  CHECK(t.at(0, 0) == Scalar(1));
  CHECK(t.at(0, 1) == Scalar(0));
  CHECK(t.at(1, 0) == Scalar(0));
  CHECK(t.at(1, 1) == Scalar(1));
  for (unsigned k = 2; k <= 10; ++k) {
    CHECK(t.at(k, 0) == t.at(k - 2, 0));
    CHECK(t.at(k, 1) == t.at(k - 2, 1));
  }
  CHECK(t.q_independent());

  // p = (z-1)^2: beta_0^k = -(k+1), beta_1^k = k+2
  BetaTable s = beta_table(squared_ctx(), 20);
  for (unsigned k = 0; k <= 20; ++k) {
    CHECK(s.at(k, 0) == Scalar(-(static_cast<long>(k) + 1)));
    CHECK(s.at(k, 1) == Scalar(static_cast<long>(k) + 2));
  }
  CHECK(s.at(5, 0) == Scalar(-6));
  CHECK(s.at(5, 1) == Scalar(7));
  CHECK(s.q_independent());
}

TEST_CASE("integral values for p = z^2 - 1") {
  auto ctx = quadratic_ctx();
  for (unsigned k = 0; k <= 20; ++k) {
    IntegralValue v = integral(zpow(ctx, k));
    REQUIRE(v.coeffs.size() == 2);
    if (k % 2 == 0) {
      CHECK(v.coeffs[0] == q_integer(k + 1).inverse());
      CHECK(v.coeffs[1] == Scalar(0));
    } else {
      CHECK(v.coeffs[0] == Scalar(0));
      CHECK(v.coeffs[1] == q_integer(2) / q_integer(k + 1));
    }
  }
  // vanishing off K[z]
  CHECK(integral(AlgElem::monomial(ctx, {XSign::Plus, 1, 1, 0})).is_zero());
  CHECK(integral(AlgElem::monomial(ctx, {XSign::None, 0, 2, 1})).is_zero());
}

TEST_CASE("integral values for p = (z-1)^2") {
  auto ctx = squared_ctx();
  for (unsigned k = 0; k <= 20; ++k) {
    IntegralValue v = integral(zpow(ctx, k));
    long kk = static_cast<long>(k);
    CHECK(v.coeffs[0] == Scalar(-(kk - 1)) / q_integer(k + 1));
    CHECK(v.coeffs[1] == q_integer(2) * Scalar(kk) / q_integer(k + 1));
  }
}

TEST_CASE("the closed combination agrees with the direct recurrence") {
  for (auto ctx : {quadratic_ctx(), squared_ctx(), AlgebraCtx::make(zp({-1, -1, 0, 1}))}) {
    for (unsigned k = 0; k <= 30; ++k)
      CHECK(integral(zpow(ctx, k)) == integral_by_recurrence(zpow(ctx, k)));
  }
  CHECK(integral_by_recurrence(AlgElem::unit(quadratic_ctx())).coeffs[0] == Scalar(1));
}

TEST_CASE("functional equation of the integral") {
  CHECK(check_lambda_functional(quadratic_ctx(), zp({0, 0, 0, 1})));  // f = z^3
  CHECK(check_lambda_functional(quadratic_ctx(), ZPoly()));
  std::mt19937_64 rng(51);
  for (int i = 0; i < 40; ++i) {
    std::vector<Scalar> cs(rng() % 7);
    for (auto& c : cs) c = Scalar(static_cast<long>(rng() % 9) - 4);
    CHECK(check_lambda_functional(squared_ctx(), ZPoly(std::move(cs))));
  }
}

TEST_CASE("divergence of the dual basis vanishes") {
  Calculus calc(quadratic_ctx());
  for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus})
    CHECK(divergence(calc, CoVector::dual_basis(quadratic_ctx(), i)).is_zero());
}

TEST_CASE("worked divergence values") {
  auto ctx = quadratic_ctx();
  Calculus calc(ctx);
  const DerivParams& pr = calc.params();

  // xi_0 . x+ has value sigma_0^{-1}(x+) on w0; its divergence is q^{-2} alpha0 x+
  CoVector xi = CoVector::dual_basis(ctx, OmegaIndex::Zero).acted(AlgElem::generator(ctx, Gen::Xp));
  CHECK(xi.zero == AlgElem::generator(ctx, Gen::Xp) * Scalar::q_power(-2));
  CHECK(divergence(calc, xi) ==
        AlgElem::generator(ctx, Gen::Xp) * (pr.alpha0 * Scalar::q_power(-2)));

  // val_minus = x- z-, f = 1: div = q^{-2} (alpha-/(q^2-1)) (q^2 p(q^2 z) - p(z))
  CoVector eta(ctx);
  eta.minus = AlgElem::monomial(ctx, {XSign::Minus, 1, 0, 1});
  ZPoly expect_poly = (ctx->p().scaled_argument(Scalar::q_power(2)) * Scalar::q_power(2) -
                       ctx->p()) *
                      (pr.alpha_minus / (Scalar::q_power(2) - Scalar(1))) * Scalar::q_power(-2);
  CHECK(divergence(calc, eta) == AlgElem::from_zpoly(ctx, expect_poly));
}

TEST_CASE("divergence contract and kernel property") {
  auto ctx = quadratic_ctx();
  Calculus calc(ctx);
  std::mt19937_64 rng(52);
  for (int i = 0; i < 80; ++i) {
    CoVector xi(ctx);
    xi.minus = random_elem(ctx, rng, 4);
    xi.zero = random_elem(ctx, rng, 4);
    xi.plus = random_elem(ctx, rng, 4);
    AlgElem a = random_elem(ctx, rng, 4);
    CHECK(divergence(calc, xi.acted(a)) ==
          divergence(calc, xi) * a + xi.evaluate(calc.d(a)));
    CHECK(integral(divergence(calc, xi)).is_zero());
  }
}

TEST_CASE("covector evaluation is right-linear through the twist") {
  auto ctx = quadratic_ctx();
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    CoVector xi(ctx);
    xi.minus = random_elem(ctx, rng, 3);
    xi.zero = random_elem(ctx, rng, 3);
    xi.plus = random_elem(ctx, rng, 3);
    AlgElem a = random_elem(ctx, rng, 3);
    OmegaElem w(random_elem(ctx, rng, 3), random_elem(ctx, rng, 3), random_elem(ctx, rng, 3));
    // xi(w . a) = xi(w) a
    CHECK(xi.evaluate(right_act(w, a)) == xi.evaluate(w) * a);
    // (xi . a)(w) = xi(a . w)
    CHECK(xi.acted(a).evaluate(w) == xi.evaluate(left_mul(a, w)));
  }
}

TEST_CASE("vanishing families from the degree argument") {
  auto ctx = quadratic_ctx();
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned l = 0; l <= 3; ++l) {
      CHECK(integral(theta(BElem::monomial(ctx, BMonomial{BSign::X, k + 1, l}))).is_zero());
      CHECK(integral(theta(BElem::monomial(ctx, BMonomial{BSign::Y, k + 1, l}))).is_zero());
    }
  }
}

TEST_CASE("integral space has dimension n on a bounded slice") {
  for (auto ctx : {quadratic_ctx(), squared_ctx()}) {
    int n = ctx->degree();
    ScalarMatrix m;
    for (unsigned k = 0; k <= static_cast<unsigned>(n) + 6; ++k)
      m.push_back(integral(zpow(ctx, k)).coeffs);
    CHECK(matrix_rank(std::move(m)) == static_cast<unsigned>(n));
  }
}

TEST_CASE("constant and non-separable polynomials are rejected") {
  auto constant = AlgebraCtx::make(ZPoly(Scalar(5)));
  CHECK_THROWS_WITH_AS(integral(AlgElem::unit(constant)),
                       "constant p has trivial integral space", std::domain_error);
  CHECK_THROWS_AS(beta_table(constant, 3), std::domain_error);
  auto nonsep = AlgebraCtx::make(zp({0, 1}));
  CHECK_THROWS_AS(integral(AlgElem::unit(nonsep)), std::domain_error);
}
