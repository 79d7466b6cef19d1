// The grading automorphisms sigma_+, sigma_0, sigma_- and the three skew
// derivations d0, d+, d- of A(p;q), extended from their generator values by
// the twisted Leibniz rule d(ab) = d(a) sigma(b) + a d(b).
#pragma once

#include "gwa/algebra.hpp"

namespace gwa {

// alpha_0, alpha_+, alpha_- scaling the three derivation families; all
// nonzero. Star compatibility means conj(alpha_0) = alpha_0 and
// conj(alpha_-) = q alpha_+.
struct DerivParams {
  Scalar alpha0;
  Scalar alpha_plus;
  Scalar alpha_minus;

  DerivParams(Scalar a0, Scalar ap, Scalar am);
  static DerivParams defaults();  // (1, 1, q)
  bool star_compatible() const;
};

enum class SigmaTag { Plus, Zero, Minus };

// sigma_+-(a) = q^{|a|} a, sigma_0(a) = q^{2|a|} a, per homogeneous component.
AlgElem sigma(SigmaTag tag, const AlgElem& a);
AlgElem sigma_inverse(SigmaTag tag, const AlgElem& a);

enum class DerivTag { D0, DPlus, DMinus };
SigmaTag twist_of(DerivTag tag);

// One of the three skew derivations, given by a generator table and the
// positional expansion over canonical words.
class SkewDerivation {
public:
  SkewDerivation(DerivTag tag, CtxPtr ctx, DerivParams params);

  DerivTag tag() const { return tag_; }
  SigmaTag twist() const { return twist_of(tag_); }
  const DerivParams& params() const { return params_; }
  const CtxPtr& ctx() const { return ctx_; }

  AlgElem operator()(const AlgElem& a) const;
  const AlgElem& generator_value(Gen g) const { return table_[static_cast<size_t>(g)]; }

private:
  DerivTag tag_;
  DerivParams params_;
  CtxPtr ctx_;
  std::array<AlgElem, 4> table_;
};

// delta_+- = (d_+-) o theta: ordinary derivations on B(p;q) with values in
// the degree -+2 part of A(p;q).
AlgElem delta(const SkewDerivation& d, const BElem& b);

}  // namespace gwa
