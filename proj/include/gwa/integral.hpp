// The divergence (hom-connection) attached to the calculus, the integral
// Lambda with its n-dimensional integral space, and the beta-coefficient
// recurrence that expresses Lambda(z^{n+k}) over the basis v_i = Lambda(z^i).
#pragma once

#include "gwa/calculus.hpp"

namespace gwa {

// A right A-linear map Omega -> A, stored by its values on the basis
// one-forms: evaluation uses xi(a w_i) = xi(w_i) sigma_i^{-1}(a).
struct CoVector {
  AlgElem minus, zero, plus;

  explicit CoVector(const CtxPtr& ctx)
      : minus(AlgElem::zero(ctx)), zero(AlgElem::zero(ctx)), plus(AlgElem::zero(ctx)) {}
  CoVector(AlgElem m, AlgElem z, AlgElem p);

  static CoVector dual_basis(const CtxPtr& ctx, OmegaIndex i);

  const CtxPtr& ctx() const { return minus.ctx(); }
  const AlgElem& val(OmegaIndex i) const;
  AlgElem& val(OmegaIndex i);

  AlgElem evaluate(const OmegaElem& w) const;
  CoVector acted(const AlgElem& a) const;  // the right action xi . a
  bool operator==(const CoVector& o) const;
};

// div(xi) = q^{-2} d-(xi(w-)) + d0(xi(w0)) + q^2 d+(xi(w+))
AlgElem divergence(const Calculus& calc, const CoVector& xi);

// Coordinates over the basis v_0 = Lambda(1), ..., v_{n-1} = Lambda(z^{n-1}).
struct IntegralValue {
  std::vector<Scalar> coeffs;

  bool is_zero() const;
  IntegralValue operator+(const IntegralValue& o) const;
  IntegralValue operator*(const Scalar& s) const;
  bool operator==(const IntegralValue& o) const = default;
  std::string to_string() const;
};

// mu_i from the monic form of p and the recurrence
// beta_i^k = sum_{j=1..n} mu_{n-j} beta_i^{k-j} + mu_{i-k}.
struct BetaTable {
  int n = 0;
  std::vector<Scalar> mu;
  std::vector<std::vector<Scalar>> beta;  // beta[k][i]

  const Scalar& at(unsigned k, unsigned i) const;
  bool q_independent() const;  // every entry lies in Q
};

BetaTable beta_table(const CtxPtr& ctx, unsigned kmax);

// Lambda via the closed combination [i+1]/[n+k+1] beta_i^k v_i; zero on all
// basis monomials that are not powers of z = z+ z-.
IntegralValue integral(const AlgElem& a);

// Independent oracle: Lambda computed by direct iteration of the order-n
// recurrence Lambda(z^{n+k}) = sum_i [i+k+1]/[n+k+1] mu_i Lambda(z^{k+i}).
IntegralValue integral_by_recurrence(const AlgElem& a);

// Lambda(q^2 p(q^2 z) f(q^2 z)) = Lambda(p(z) f(z)); exposed for the verifier.
bool check_lambda_functional(const CtxPtr& ctx, const ZPoly& f);

}  // namespace gwa
