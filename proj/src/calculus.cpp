#include "gwa/calculus.hpp"

#include <sstream>

#include "gwa/linalg.hpp"

namespace gwa {

const char* omega_name(OmegaIndex i) {
  switch (i) {
    case OmegaIndex::Minus: return "w-";
    case OmegaIndex::Zero: return "w0";
    case OmegaIndex::Plus: return "w+";
  }
  return "?";
}

SigmaTag omega_twist(OmegaIndex i) {
  switch (i) {
    case OmegaIndex::Minus: return SigmaTag::Minus;
    case OmegaIndex::Zero: return SigmaTag::Zero;
    case OmegaIndex::Plus: return SigmaTag::Plus;
  }
  return SigmaTag::Zero;
}

OmegaElem::OmegaElem(AlgElem m, AlgElem z, AlgElem p)
    : minus(std::move(m)), zero(std::move(z)), plus(std::move(p)) {
  if (!same_ctx(minus.ctx(), zero.ctx()) || !same_ctx(zero.ctx(), plus.ctx()))
    throw std::invalid_argument("mismatched ctx");
}

OmegaElem OmegaElem::basis(const CtxPtr& ctx, OmegaIndex i) {
  OmegaElem w(ctx);
  w.comp(i) = AlgElem::unit(ctx);
  return w;
}

const AlgElem& OmegaElem::comp(OmegaIndex i) const {
  switch (i) {
    case OmegaIndex::Minus: return minus;
    case OmegaIndex::Zero: return zero;
    case OmegaIndex::Plus: return plus;
  }
  return zero;
}

AlgElem& OmegaElem::comp(OmegaIndex i) {
  switch (i) {
    case OmegaIndex::Minus: return minus;
    case OmegaIndex::Zero: return zero;
    case OmegaIndex::Plus: return plus;
  }
  return zero;
}

OmegaElem OmegaElem::operator+(const OmegaElem& o) const {
  return OmegaElem(minus + o.minus, zero + o.zero, plus + o.plus);
}

OmegaElem OmegaElem::operator-(const OmegaElem& o) const {
  return OmegaElem(minus - o.minus, zero - o.zero, plus - o.plus);
}

OmegaElem OmegaElem::operator-() const { return OmegaElem(-minus, -zero, -plus); }

OmegaElem OmegaElem::operator*(const Scalar& s) const {
  return OmegaElem(minus * s, zero * s, plus * s);
}

bool OmegaElem::operator==(const OmegaElem& o) const {
  return minus == o.minus && zero == o.zero && plus == o.plus;
}

std::string OmegaElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus}) {
    const AlgElem& a = comp(i);
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string s = a.to_string();
    bool wrap = a.term_count() > 1 || s.find('*') != std::string::npos ||
                s.find('/') != std::string::npos || s[0] == '-';
    if (s == "1") {
      os << omega_name(i);
    } else {
      os << (wrap ? "(" + s + ")" : s) << "*" << omega_name(i);
    }
  }
  return os.str();
}

OmegaElem left_mul(const AlgElem& a, const OmegaElem& w) {
  return OmegaElem(a * w.minus, a * w.zero, a * w.plus);
}

OmegaElem right_act(const OmegaElem& w, const AlgElem& a) {
  // w_i a = sigma_i(a) w_i componentwise
  return OmegaElem(w.minus * sigma(SigmaTag::Minus, a), w.zero * sigma(SigmaTag::Zero, a),
                   w.plus * sigma(SigmaTag::Plus, a));
}

OmegaElem horizontal(const OmegaElem& w) {
  OmegaElem r = w;
  r.zero = AlgElem::zero(r.ctx());
  return r;
}

const char* bar_target_name(BarTarget t) {
  switch (t) {
    case BarTarget::ZpSqWm: return "z+^2*w-";
    case BarTarget::XpSqWm: return "x+^2*w-";
    case BarTarget::ZpXpWm: return "z+*x+*w-";
    case BarTarget::ZmSqWp: return "z-^2*w+";
    case BarTarget::XmSqWp: return "x-^2*w+";
    case BarTarget::ZmXmWp: return "z-*x-*w+";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Calculus

Calculus::Calculus(CtxPtr ctx, DerivParams params)
    : ctx_(std::move(ctx)),
      params_(params),
      d0_(DerivTag::D0, ctx_, params),
      dplus_(DerivTag::DPlus, ctx_, params),
      dminus_(DerivTag::DMinus, ctx_, params) {}

const SkewDerivation& Calculus::partial(DerivTag t) const {
  switch (t) {
    case DerivTag::D0: return d0_;
    case DerivTag::DPlus: return dplus_;
    case DerivTag::DMinus: return dminus_;
  }
  return d0_;
}

OmegaElem Calculus::d(const AlgElem& a) const {
  return OmegaElem(dminus_(a), d0_(a), dplus_(a));
}

OmegaElem Calculus::d_of_b(BGen g) const { return d(theta(BElem::generator(ctx_, g))); }

OmegaElem Calculus::star(const OmegaElem& w) const {
  if (!params_.star_compatible())
    throw std::domain_error("derivation parameters are not star-compatible");
  // (a w_+-)^* = w_-+ a^* = sigma_-+(a^*) w_-+ and (a w_0)^* = -sigma_0(a^*) w_0
  return OmegaElem(sigma(SigmaTag::Minus, w.plus.star()), -sigma(SigmaTag::Zero, w.zero.star()),
                   sigma(SigmaTag::Plus, w.minus.star()));
}

std::pair<AlgElem, AlgElem> Calculus::restrict_to_B(const OmegaElem& w) const {
  long dm = 0, dp = 0;
  if (!w.zero.is_zero() || !w.minus.is_homogeneous(&dm) || !w.plus.is_homogeneous(&dp) ||
      (!w.minus.is_zero() && dm != 2) || (!w.plus.is_zero() && dp != -2))
    throw std::domain_error("not in restricted calculus");
  return {w.minus, w.plus};
}

OmegaElem Calculus::evaluate(const DensityWitness& w) const {
  OmegaElem acc(ctx_);
  for (const auto& [a, b] : w.pairs) acc = acc + left_mul(a, d(b));
  return acc;
}

namespace {

// linear combination of pairs (a_i, b_i) standing for sum a_i d(b_i)
struct PairCombo {
  std::vector<std::pair<AlgElem, AlgElem>> pairs;

  PairCombo& add(AlgElem a, AlgElem b) {
    pairs.emplace_back(std::move(a), std::move(b));
    return *this;
  }
  PairCombo scaled(const Scalar& s) const {
    PairCombo r;
    for (const auto& [a, b] : pairs) r.pairs.emplace_back(a * s, b);
    return r;
  }
  PairCombo left(const AlgElem& m) const {
    PairCombo r;
    for (const auto& [a, b] : pairs) r.pairs.emplace_back(m * a, b);
    return r;
  }
  PairCombo operator+(const PairCombo& o) const {
    PairCombo r = *this;
    r.pairs.insert(r.pairs.end(), o.pairs.begin(), o.pairs.end());
    return r;
  }
  void drop_zero() {
    std::erase_if(pairs, [](const auto& pr) { return pr.first.is_zero(); });
  }
};

}  // namespace

DensityWitness Calculus::density_witness(OmegaIndex target) const {
  ctx_->require_regular();
  const auto& cert = ctx_->certificate();
  const ZPoly& p = ctx_->p();
  const ZPoly& c = ctx_->c();
  const Scalar& a0 = params_.alpha0;
  const Scalar& ap = params_.alpha_plus;
  const Scalar& am = params_.alpha_minus;
  Scalar q = Scalar::q();
  auto gen = [&](Gen g) { return AlgElem::generator(ctx_, g); };
  auto zp = [&](const ZPoly& f) { return AlgElem::from_zpoly(ctx_, f); };
  AlgElem one = AlgElem::unit(ctx_);

  // w0 first; both other witnesses consume it.
  PairCombo w0;
  if (p.degree() <= 1) {
    // p = lambda z + mu with mu != 0: alpha_0 mu w0 = x- d(x+) - q^2 lambda z- d(z+)
    Scalar lambda = p.coeff(1), mu = p.coeff(0);
    w0.add(gen(Gen::Xm), gen(Gen::Xp));
    if (!lambda.is_zero())
      w0.add(gen(Gen::Zm) * (-(Scalar::q_power(2) * lambda)), gen(Gen::Zp));
    w0 = w0.scaled((a0 * mu).inverse());
  } else {
    // z w0 from z- d(z+) + z+ d(z-) - d(z+ z-)
    PairCombo zw0;
    zw0.add(gen(Gen::Zm), gen(Gen::Zp));
    zw0.add(gen(Gen::Zp), gen(Gen::Zm));
    zw0.add(-one, gen(Gen::Zp) * gen(Gen::Zm));
    zw0 = zw0.scaled(((Scalar(1) - Scalar::q_power(-2)) * a0).inverse());
    // p(z) w0 from d(p(z)) + (q^2-1) x+ d(x-) - q^{-1} c(z) z- d(z+)
    //            - q z+ d(z- c(z)) + q z d(c(z))
    PairCombo pw0;
    pw0.add(one, zp(p));
    pw0.add(gen(Gen::Xp) * (Scalar::q_power(2) - Scalar(1)), gen(Gen::Xm));
    pw0.add(zp(c) * gen(Gen::Zm) * (-q.inverse()), gen(Gen::Zp));
    pw0.add(gen(Gen::Zp) * (-q), gen(Gen::Zm) * zp(c));
    pw0.add(zp(ZPoly::variable()) * q, zp(c));
    pw0 = pw0.scaled(((Scalar::q_power(-2) - Scalar(1)) * a0).inverse());
    // f0 z + g0 p = 1
    w0 = zw0.left(zp(cert.f0)) + pw0.left(zp(cert.g0));
  }

  PairCombo result;
  if (target == OmegaIndex::Zero) {
    result = w0;
  } else if (target == OmegaIndex::Plus) {
    // x- w+ = (1/a+) (d(z+) - a0 z+ w0)
    PairCombo xmwp;
    xmwp.add(one, gen(Gen::Zp));
    xmwp = (xmwp + w0.left(gen(Gen::Zp) * (-a0))).scaled(ap.inverse());
    // c z- w+ = (1/a+) (d(x+) - a0 x+ w0)
    PairCombo czmwp;
    czmwp.add(one, gen(Gen::Xp));
    czmwp = (czmwp + w0.left(gen(Gen::Xp) * (-a0))).scaled(ap.inverse());
    // p w+ = x+ (x- w+); z c w+ = z+ (c z- w+)
    PairCombo pwp = xmwp.left(gen(Gen::Xp));
    PairCombo zcwp = czmwp.left(gen(Gen::Zp));
    // f p + (g/q) (z c) = 1
    result = pwp.left(zp(cert.f)) + zcwp.left(zp(cert.g) * q.inverse());
  } else {
    // x+ w- = (1/a-) (d(z-) + q^{-2} a0 z- w0)
    PairCombo xpwm;
    xpwm.add(one, gen(Gen::Zm));
    xpwm = (xpwm + w0.left(gen(Gen::Zm) * (a0 * Scalar::q_power(-2)))).scaled(am.inverse());
    // c z+ w- = (1/a-) (d(x-) + q^{-2} a0 x- w0)
    PairCombo czpwm;
    czpwm.add(one, gen(Gen::Xm));
    czpwm = (czpwm + w0.left(gen(Gen::Xm) * (a0 * Scalar::q_power(-2)))).scaled(am.inverse());
    // p(q^2 z) w- = x- (x+ w-); z c w- = z- (c z+ w-)
    PairCombo pq2wm = xpwm.left(gen(Gen::Xm));
    PairCombo zcwm = czpwm.left(gen(Gen::Zm));
    // f p(q^2 z) + ((g - (q^2-1) f)/q) (z c) = 1
    ZPoly f2 = cert.f;
    ZPoly g2 = (cert.g - cert.f * (Scalar::q_power(2) - Scalar(1))) * q.inverse();
    result = pq2wm.left(zp(f2)) + zcwm.left(zp(g2));
  }

  result.drop_zero();
  DensityWitness w{target, std::move(result.pairs)};
  if (!(evaluate(w) == OmegaElem::basis(ctx_, target)))
    throw std::logic_error("density witness failed its evaluation check");
  return w;
}

DensityWitness Calculus::density_witness_by_solve(OmegaIndex target, unsigned degree_bound) const {
  ctx_->require_regular();
  long tdeg = target == OmegaIndex::Plus ? 2 : target == OmegaIndex::Minus ? -2 : 0;
  // candidates m d(g) with |m| + |g| = tdeg and |m| bounded by word length
  std::vector<std::pair<AMonomial, Gen>> candidates;
  std::vector<OmegaElem> values;
  std::map<std::pair<int, AMonomial>, size_t> row_of;
  for (unsigned len = 0; len <= degree_bound; ++len) {
    for (unsigned a = 0; a <= len; ++a) {
      for (unsigned b = 0; a + b <= len; ++b) {
        unsigned cz = len - a - b;
        for (XSign s : {XSign::Minus, XSign::None, XSign::Plus}) {
          if ((s == XSign::None) != (a == 0)) continue;
          AMonomial m{s, a, b, cz};
          for (Gen g : {Gen::Xp, Gen::Xm, Gen::Zp, Gen::Zm}) {
            if (m.degree() + gen_degree(g) != tdeg) continue;
            OmegaElem v = left_mul(AlgElem::monomial(ctx_, m), d(AlgElem::generator(ctx_, g)));
            if (v.is_zero()) continue;
            candidates.emplace_back(m, g);
            values.push_back(std::move(v));
          }
        }
      }
    }
  }
  for (const auto& v : values) {
    for (int ci = 0; ci < 3; ++ci) {
      for (const auto& [m, s] : v.comp(static_cast<OmegaIndex>(ci)).terms())
        row_of.try_emplace({ci, m}, row_of.size());
    }
  }
  OmegaElem tgt = OmegaElem::basis(ctx_, target);
  for (int ci = 0; ci < 3; ++ci)
    for (const auto& [m, s] : tgt.comp(static_cast<OmegaIndex>(ci)).terms())
      row_of.try_emplace({ci, m}, row_of.size());

  ScalarMatrix mat(row_of.size(), std::vector<Scalar>(values.size(), Scalar()));
  std::vector<Scalar> rhs(row_of.size(), Scalar());
  for (size_t j = 0; j < values.size(); ++j)
    for (int ci = 0; ci < 3; ++ci)
      for (const auto& [m, s] : values[j].comp(static_cast<OmegaIndex>(ci)).terms())
        mat[row_of.at({ci, m})][j] = s;
  for (int ci = 0; ci < 3; ++ci)
    for (const auto& [m, s] : tgt.comp(static_cast<OmegaIndex>(ci)).terms())
      rhs[row_of.at({ci, m})] = s;

  auto sol = solve_linear(std::move(mat), std::move(rhs));
  if (!sol) throw std::domain_error("no density witness within the degree bound");
  DensityWitness w{target, {}};
  for (size_t j = 0; j < values.size(); ++j) {
    if ((*sol)[j].is_zero()) continue;
    w.pairs.emplace_back(AlgElem::monomial(ctx_, candidates[j].first, (*sol)[j]),
                         AlgElem::generator(ctx_, candidates[j].second));
  }
  if (!(evaluate(w) == OmegaElem::basis(ctx_, target)))
    throw std::logic_error("solved density witness failed its evaluation check");
  return w;
}

// ---------------------------------------------------------------------------
// Restricted-calculus witnesses

OmegaElem Calculus::bar_target_form(BarTarget t) const {
  auto gen = [&](Gen g) { return AlgElem::generator(ctx_, g); };
  OmegaElem w(ctx_);
  switch (t) {
    case BarTarget::ZpSqWm: w.minus = gen(Gen::Zp).pow(2); break;
    case BarTarget::XpSqWm: w.minus = gen(Gen::Xp).pow(2); break;
    case BarTarget::ZpXpWm: w.minus = gen(Gen::Zp) * gen(Gen::Xp); break;
    case BarTarget::ZmSqWp: w.plus = gen(Gen::Zm).pow(2); break;
    case BarTarget::XmSqWp: w.plus = gen(Gen::Xm).pow(2); break;
    case BarTarget::ZmXmWp: w.plus = gen(Gen::Zm) * gen(Gen::Xm); break;
  }
  return w;
}

OmegaElem Calculus::evaluate(const BarWitness& w) const {
  OmegaElem acc(ctx_);
  for (const auto& [u, g, v] : w.triples)
    acc = acc + left_mul(theta(u), right_act(d_of_b(g), theta(v)));
  return acc;
}

namespace {

struct TripleCombo {
  std::vector<std::tuple<BElem, BGen, BElem>> triples;

  TripleCombo& add(BElem u, BGen g, BElem v) {
    triples.emplace_back(std::move(u), g, std::move(v));
    return *this;
  }
  TripleCombo scaled(const Scalar& s) const {
    TripleCombo r;
    for (const auto& [u, g, v] : triples) r.triples.emplace_back(u * s, g, v);
    return r;
  }
  TripleCombo left(const BElem& m) const {
    TripleCombo r;
    for (const auto& [u, g, v] : triples) r.triples.emplace_back(m * u, g, v);
    return r;
  }
  TripleCombo operator+(const TripleCombo& o) const {
    TripleCombo r = *this;
    r.triples.insert(r.triples.end(), o.triples.begin(), o.triples.end());
    return r;
  }
  void drop_zero() {
    std::erase_if(triples, [](const auto& t) { return std::get<0>(t).is_zero(); });
  }
};

}  // namespace

BarWitness Calculus::bar_omega_witness(BarTarget target) const {
  ctx_->require_regular();
  const auto& cert = ctx_->certificate();
  const ZPoly& p = ctx_->p();
  const ZPoly& c = ctx_->c();
  const Scalar& ap = params_.alpha_plus;
  const Scalar& am = params_.alpha_minus;
  Scalar q = Scalar::q();
  BElem one = BElem::unit(ctx_);
  BElem bz = BElem::generator(ctx_, BGen::Z);
  BElem bx = BElem::generator(ctx_, BGen::X);
  BElem by = BElem::generator(ctx_, BGen::Y);
  auto zp = [&](const ZPoly& f) { return BElem::from_zpoly(ctx_, f); };

  TripleCombo zpsq_wm, zmsq_wp, zpxp_wm, zmxm_wp, xpsq_wm, xmsq_wp;

  if (p.degree() <= 1) {
    // p = lambda z + mu, mu != 0
    Scalar lambda = p.coeff(1), mu = p.coeff(0);
    // a- mu z+^2 w- = d(z) x - q^{-2} d(x) z
    zpsq_wm.add(one, BGen::Z, bx).add(one * (-Scalar::q_power(-2)), BGen::X, bz);
    zpsq_wm = zpsq_wm.scaled((am * mu).inverse());
    // a+ mu z-^2 w+ = q y d(z) - q^{-1} z d(y)
    zmsq_wp.add(by * q, BGen::Z, one).add(bz * (-q.inverse()), BGen::Y, one);
    zmsq_wp = zmsq_wp.scaled((ap * mu).inverse());
    // a- mu z+ x+ w- = q^{-2} x d(y) - q^2 lambda z d(z)
    zpxp_wm.add(bx * Scalar::q_power(-2), BGen::Y, one);
    if (!lambda.is_zero()) zpxp_wm.add(bz * (-(Scalar::q_power(2) * lambda)), BGen::Z, one);
    zpxp_wm = zpxp_wm.scaled((am * mu).inverse());
  } else {
    // z x-^2 w+ = (z d(x) - d(x) z) / ((1-q^4) a+)
    TripleCombo zxm2;
    zxm2.add(bz, BGen::X, one).add(-one, BGen::X, bz);
    zxm2 = zxm2.scaled(((Scalar(1) - Scalar::q_power(4)) * ap).inverse());
    // z c z+^2 w- = (z d(x) - a+ [z x-^2 w+]) / (q a-)
    TripleCombo zczp2 = (TripleCombo().add(bz, BGen::X, one) + zxm2.scaled(-ap))
                            .scaled((q * am).inverse());
    // p z+^2 w- = (d(z) x - q^2 a+ [z x-^2 w+]) / a-
    TripleCombo pzp2 = (TripleCombo().add(one, BGen::Z, bx) +
                        zxm2.scaled(-(Scalar::q_power(2) * ap)))
                           .scaled(am.inverse());
    // f p + (g/q) z c = 1
    zpsq_wm = pzp2.left(zp(cert.f)) + zczp2.left(zp(cert.g) * q.inverse());
    // x-^2 w+ = (d(x) - q a- c [z+^2 w-]) / a+
    xmsq_wp = (TripleCombo().add(one, BGen::X, one) + zpsq_wm.left(zp(c) * (-(q * am))))
                  .scaled(ap.inverse());

    // z x+^2 w- = (z d(y) - d(y) z) / ((q - q^{-3}) a-)
    TripleCombo zxp2;
    zxp2.add(bz, BGen::Y, one).add(-one, BGen::Y, bz);
    zxp2 = zxp2.scaled(((q - Scalar::q_power(-3)) * am).inverse());
    // p z-^2 w+ = (q y d(z) - a- [z x+^2 w-]) / a+
    TripleCombo pzm2 = (TripleCombo().add(by * q, BGen::Z, one) + zxp2.scaled(-am))
                           .scaled(ap.inverse());
    // z c z-^2 w+ = (z d(y) - q a- [z x+^2 w-]) / a+
    TripleCombo zczm2 = (TripleCombo().add(bz, BGen::Y, one) + zxp2.scaled(-(q * am)))
                            .scaled(ap.inverse());
    zmsq_wp = pzm2.left(zp(cert.f)) + zczm2.left(zp(cert.g) * q.inverse());
    // x+^2 w- = (d(y) - a+ c [z-^2 w+]) / (q a-)
    xpsq_wm = (TripleCombo().add(one, BGen::Y, one) + zmsq_wp.left(zp(c) * (-ap)))
                  .scaled((q * am).inverse());

    // z z- x- w+ = (z d(z) - q^2 d(z) z) / ((1-q^4) a+)
    TripleCombo zzmxm;
    zzmxm.add(bz, BGen::Z, one).add(one * (-Scalar::q_power(2)), BGen::Z, bz);
    zzmxm = zzmxm.scaled(((Scalar(1) - Scalar::q_power(4)) * ap).inverse());
    // p z- x- w+ = (y d(x) - h (z d(z) - q^{-2} d(z) z)) / a+,
    // h = q^{-1} c(q^{-2} z) / (1 - q^{-4})
    ZPoly cshift = c.scaled_argument(Scalar::q_power(-2));
    BElem h = zp(cshift) * (q.inverse() / (Scalar(1) - Scalar::q_power(-4)));
    TripleCombo inner;
    inner.add(bz, BGen::Z, one).add(one * (-Scalar::q_power(-2)), BGen::Z, bz);
    TripleCombo pzmxm = (TripleCombo().add(by, BGen::X, one) + inner.left(-h))
                            .scaled(ap.inverse());
    // f0 z + g0 p = 1
    zmxm_wp = zzmxm.left(zp(cert.f0)) + pzmxm.left(zp(cert.g0));
  }

  if (p.degree() <= 1) {
    Scalar lambda = p.coeff(1), mu = p.coeff(0);
    (void)mu;
    // x-^2 w+ = (d(x) - q^2 lambda a- [z+^2 w-]) / a+
    xmsq_wp = (TripleCombo().add(one, BGen::X, one) +
               zpsq_wm.scaled(-(Scalar::q_power(2) * lambda * am)))
                  .scaled(ap.inverse());
    // x+^2 w- = (d(y) - q lambda a+ [z-^2 w+]) / (q a-)
    xpsq_wm = (TripleCombo().add(one, BGen::Y, one) + zmsq_wp.scaled(-(q * lambda * ap)))
                  .scaled((q * am).inverse());
    // z- x- w+ = (d(z) - a- [z+ x+ w-]) / a+
    zmxm_wp = (TripleCombo().add(one, BGen::Z, one) + zpxp_wm.scaled(-am)).scaled(ap.inverse());
  } else {
    // z+ x+ w- = (d(z) - a+ [z- x- w+]) / a-
    zpxp_wm = (TripleCombo().add(one, BGen::Z, one) + zmxm_wp.scaled(-ap)).scaled(am.inverse());
  }

  TripleCombo* chosen = nullptr;
  switch (target) {
    case BarTarget::ZpSqWm: chosen = &zpsq_wm; break;
    case BarTarget::XpSqWm: chosen = &xpsq_wm; break;
    case BarTarget::ZpXpWm: chosen = &zpxp_wm; break;
    case BarTarget::ZmSqWp: chosen = &zmsq_wp; break;
    case BarTarget::XmSqWp: chosen = &xmsq_wp; break;
    case BarTarget::ZmXmWp: chosen = &zmxm_wp; break;
  }
  chosen->drop_zero();
  BarWitness w{target, std::move(chosen->triples)};
  if (!(evaluate(w) == bar_target_form(target)))
    throw std::logic_error("restricted-calculus witness failed its evaluation check");
  return w;
}

}  // namespace gwa
