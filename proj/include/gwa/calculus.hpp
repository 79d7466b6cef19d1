// The free bimodule Omega of one-forms with twisted right action, the
// exterior derivative d, the star structure on Omega, density witnesses for
// the basis one-forms, the horizontal projection, and the restriction of the
// calculus to B(p;q).
#pragma once

#include "gwa/derivations.hpp"

namespace gwa {

enum class OmegaIndex { Minus, Zero, Plus };
const char* omega_name(OmegaIndex i);
SigmaTag omega_twist(OmegaIndex i);

// a_- w_- + a_0 w_0 + a_+ w_+ in the free left basis; the right action is
// always rewritten to this left-normal form.
struct OmegaElem {
  AlgElem minus, zero, plus;

  explicit OmegaElem(const CtxPtr& ctx)
      : minus(AlgElem::zero(ctx)), zero(AlgElem::zero(ctx)), plus(AlgElem::zero(ctx)) {}
  OmegaElem(AlgElem m, AlgElem z, AlgElem p);

  static OmegaElem basis(const CtxPtr& ctx, OmegaIndex i);

  const CtxPtr& ctx() const { return minus.ctx(); }
  const AlgElem& comp(OmegaIndex i) const;
  AlgElem& comp(OmegaIndex i);
  bool is_zero() const { return minus.is_zero() && zero.is_zero() && plus.is_zero(); }

  OmegaElem operator+(const OmegaElem& o) const;
  OmegaElem operator-(const OmegaElem& o) const;
  OmegaElem operator-() const;
  OmegaElem operator*(const Scalar& s) const;
  bool operator==(const OmegaElem& o) const;

  std::string to_string() const;
};

// left module action a.w and the twisted right action w.a = sigma_i(a) w_i
OmegaElem left_mul(const AlgElem& a, const OmegaElem& w);
OmegaElem right_act(const OmegaElem& w, const AlgElem& a);

// zero the vertical component; projection onto horizontal forms
OmegaElem horizontal(const OmegaElem& w);

// A witness that the basis one-form `target` lies in A d(A): evaluating
// sum_i pairs[i].first * d(pairs[i].second) reproduces it exactly.
struct DensityWitness {
  OmegaIndex target;
  std::vector<std::pair<AlgElem, AlgElem>> pairs;
};

// The six generating one-forms of the restricted calculus on B(p;q).
enum class BarTarget { ZpSqWm, XpSqWm, ZpXpWm, ZmSqWp, XmSqWp, ZmXmWp };
const char* bar_target_name(BarTarget t);

// A B-bimodule combination sum_i u_i d(g_i) v_i with u_i, v_i in B and g_i
// a generator of B, evaluating exactly to the requested generator one-form.
struct BarWitness {
  BarTarget target;
  std::vector<std::tuple<BElem, BGen, BElem>> triples;
};

// The first-order differential calculus (Omega, d) attached to a parameter
// choice for the three skew derivations.
class Calculus {
public:
  explicit Calculus(CtxPtr ctx, DerivParams params = DerivParams::defaults());

  const CtxPtr& ctx() const { return ctx_; }
  const DerivParams& params() const { return params_; }
  const SkewDerivation& partial(DerivTag t) const;

  OmegaElem d(const AlgElem& a) const;
  OmegaElem d_of_b(BGen g) const;  // d(theta(g))

  // anti-linear star on Omega; requires star-compatible parameters
  OmegaElem star(const OmegaElem& w) const;

  // split of a restricted-calculus element into (A_2, A_-2) coefficients
  std::pair<AlgElem, AlgElem> restrict_to_B(const OmegaElem& w) const;

  DensityWitness density_witness(OmegaIndex target) const;
  // independent degree-bounded linear-algebra construction of a witness
  DensityWitness density_witness_by_solve(OmegaIndex target, unsigned degree_bound) const;
  OmegaElem evaluate(const DensityWitness& w) const;

  BarWitness bar_omega_witness(BarTarget target) const;
  OmegaElem evaluate(const BarWitness& w) const;
  OmegaElem bar_target_form(BarTarget t) const;

private:
  CtxPtr ctx_;
  DerivParams params_;
  SkewDerivation d0_, dplus_, dminus_;
};

}  // namespace gwa
