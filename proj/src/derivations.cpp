#include "gwa/derivations.hpp"

namespace gwa {

DerivParams::DerivParams(Scalar a0, Scalar ap, Scalar am)
    : alpha0(std::move(a0)), alpha_plus(std::move(ap)), alpha_minus(std::move(am)) {
  if (alpha0.is_zero() || alpha_plus.is_zero() || alpha_minus.is_zero())
    throw std::invalid_argument("derivation parameters must be nonzero");
}

DerivParams DerivParams::defaults() { return DerivParams(Scalar(1), Scalar(1), Scalar::q()); }

bool DerivParams::star_compatible() const {
  return alpha0.conj() == alpha0 && alpha_minus.conj() == Scalar::q() * alpha_plus;
}

AlgElem sigma(SigmaTag tag, const AlgElem& a) {
  return a.graded_scale(tag == SigmaTag::Zero ? 2 : 1);
}

AlgElem sigma_inverse(SigmaTag tag, const AlgElem& a) {
  return a.graded_scale(tag == SigmaTag::Zero ? -2 : -1);
}

SigmaTag twist_of(DerivTag tag) {
  switch (tag) {
    case DerivTag::D0: return SigmaTag::Zero;
    case DerivTag::DPlus: return SigmaTag::Plus;
    case DerivTag::DMinus: return SigmaTag::Minus;
  }
  return SigmaTag::Zero;
}

SkewDerivation::SkewDerivation(DerivTag tag, CtxPtr ctx, DerivParams params)
    : tag_(tag), params_(std::move(params)), ctx_(std::move(ctx)) {
  AlgElem zero = AlgElem::zero(ctx_);
  auto gen = [&](Gen g) { return AlgElem::generator(ctx_, g); };
  AlgElem cz = AlgElem::from_zpoly(ctx_, ctx_->c());
  switch (tag_) {
    case DerivTag::D0:
      table_[static_cast<size_t>(Gen::Xp)] = gen(Gen::Xp) * params_.alpha0;
      table_[static_cast<size_t>(Gen::Xm)] = gen(Gen::Xm) * (-(params_.alpha0 * Scalar::q_power(-2)));
      table_[static_cast<size_t>(Gen::Zp)] = gen(Gen::Zp) * params_.alpha0;
      table_[static_cast<size_t>(Gen::Zm)] = gen(Gen::Zm) * (-(params_.alpha0 * Scalar::q_power(-2)));
      break;
    case DerivTag::DMinus:
      table_[static_cast<size_t>(Gen::Xp)] = zero;
      table_[static_cast<size_t>(Gen::Zp)] = zero;
      table_[static_cast<size_t>(Gen::Xm)] = cz * gen(Gen::Zp) * params_.alpha_minus;
      table_[static_cast<size_t>(Gen::Zm)] = gen(Gen::Xp) * params_.alpha_minus;
      break;
    case DerivTag::DPlus:
      table_[static_cast<size_t>(Gen::Xm)] = zero;
      table_[static_cast<size_t>(Gen::Zm)] = zero;
      table_[static_cast<size_t>(Gen::Xp)] = cz * gen(Gen::Zm) * params_.alpha_plus;
      table_[static_cast<size_t>(Gen::Zp)] = gen(Gen::Xm) * params_.alpha_plus;
      break;
  }
}

AlgElem SkewDerivation::operator()(const AlgElem& a) const {
  AlgElem out(ctx_);
  long twist_scale = twist() == SigmaTag::Zero ? 2 : 1;
  for (const auto& [m, c] : a.terms()) {
    // d(g_1 ... g_k) = sum_j g_1..g_{j-1} d(g_j) sigma(g_{j+1}..g_k), with the
    // suffix's sigma a plain power of q by homogeneity
    std::vector<Gen> w = m.word();
    long suffix_degree = 0;
    // walk from the right so suffix degrees accumulate cheaply
    std::vector<AlgElem> contributions;
    for (size_t j = w.size(); j-- > 0;) {
      const AlgElem& dg = table_[static_cast<size_t>(w[j])];
      if (!dg.is_zero()) {
        AMonomial prefix;
        for (size_t i = 0; i < j; ++i) {
          switch (w[i]) {
            case Gen::Xp: prefix.xsign = XSign::Plus; prefix.xexp++; break;
            case Gen::Xm: prefix.xsign = XSign::Minus; prefix.xexp++; break;
            case Gen::Zp: prefix.zplus++; break;
            case Gen::Zm: prefix.zminus++; break;
          }
        }
        AMonomial suffix;
        for (size_t i = j + 1; i < w.size(); ++i) {
          switch (w[i]) {
            case Gen::Xp: suffix.xsign = XSign::Plus; suffix.xexp++; break;
            case Gen::Xm: suffix.xsign = XSign::Minus; suffix.xexp++; break;
            case Gen::Zp: suffix.zplus++; break;
            case Gen::Zm: suffix.zminus++; break;
          }
        }
        Scalar factor = c * Scalar::q_power(twist_scale * suffix_degree);
        AlgElem term = AlgElem::monomial(ctx_, prefix, factor) * dg *
                       AlgElem::monomial(ctx_, suffix);
        contributions.push_back(std::move(term));
      }
      suffix_degree += gen_degree(w[j]);
    }
    for (const auto& t : contributions) out += t;
  }
  return out;
}

AlgElem delta(const SkewDerivation& d, const BElem& b) {
  if (d.tag() == DerivTag::D0)
    throw std::invalid_argument("delta is defined for the degree-shifting derivations");
  return d(theta(b));
}

}  // namespace gwa
