#include "gwa/algebra.hpp"

#include <deque>
#include <sstream>

namespace gwa {

// ---------------------------------------------------------------------------
// AlgebraCtx

CtxPtr AlgebraCtx::make(ZPoly p) {
  if (p.is_zero()) throw std::domain_error("defining polynomial p must be nonzero");
  auto ctx = std::shared_ptr<AlgebraCtx>(new AlgebraCtx());
  ctx->p_ = std::move(p);
  ctx->c_ = c_poly(ctx->p_);
  ctx->cert_ = is_q2_separable(ctx->p_);
  ctx->p0_ = ctx->p_.coeff(0);
  ctx->p_hat_ = ctx->p_.monic();
  int n = ctx->p_hat_.degree();
  ctx->mu_.resize(std::max(n, 0));
  for (int i = 0; i < n; ++i) ctx->mu_[i] = -ctx->p_hat_.coeff(i);
  if (ctx->cert_.separable) {
    // re-multiply the certificates; they must reproduce 1 exactly
    ZPoly zpq2 = ZPoly::variable() * q_derivative(ctx->p_, Scalar::q_power(2));
    ZPoly one(Scalar(1));
    if (!(ctx->cert_.f * ctx->p_ + ctx->cert_.g * zpq2 == one))
      throw std::logic_error("bezout certificate failed to re-multiply");
    if (!(ctx->cert_.f0 * ZPoly::variable() + ctx->cert_.g0 * ctx->p_ == one))
      throw std::logic_error("bezout certificate failed to re-multiply");
  }
  return ctx;
}

void AlgebraCtx::require_regular() const {
  if (!regular()) throw std::domain_error("p not q^2-separable");
}

bool same_ctx(const CtxPtr& a, const CtxPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p() == b->p();
}

static void check_ctx(const CtxPtr& a, const CtxPtr& b) {
  if (!same_ctx(a, b)) throw std::invalid_argument("mismatched ctx");
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Xp: return "x+";
    case Gen::Xm: return "x-";
    case Gen::Zp: return "z+";
    case Gen::Zm: return "z-";
  }
  return "?";
}

int gen_degree(Gen g) {
  switch (g) {
    case Gen::Xp: case Gen::Zp: return 1;
    case Gen::Xm: case Gen::Zm: return -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// AMonomial

std::string AMonomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, uint32_t e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  };
  emit(xsign == XSign::Plus ? "x+" : "x-", xexp);
  emit("z+", zplus);
  emit("z-", zminus);
  return os.str();
}

std::vector<Gen> AMonomial::word() const {
  std::vector<Gen> w;
  w.reserve(word_length());
  for (uint32_t i = 0; i < xexp; ++i) w.push_back(xsign == XSign::Plus ? Gen::Xp : Gen::Xm);
  for (uint32_t i = 0; i < zplus; ++i) w.push_back(Gen::Zp);
  for (uint32_t i = 0; i < zminus; ++i) w.push_back(Gen::Zm);
  return w;
}

// ---------------------------------------------------------------------------
// AlgElem basics

AlgElem AlgElem::unit(CtxPtr ctx) { return scalar(std::move(ctx), Scalar(1)); }

AlgElem AlgElem::scalar(CtxPtr ctx, Scalar s) {
  AlgElem e(std::move(ctx));
  e.add_term(AMonomial{}, s);
  return e;
}

AlgElem AlgElem::generator(CtxPtr ctx, Gen g) {
  AMonomial m;
  switch (g) {
    case Gen::Xp: m.xsign = XSign::Plus; m.xexp = 1; break;
    case Gen::Xm: m.xsign = XSign::Minus; m.xexp = 1; break;
    case Gen::Zp: m.zplus = 1; break;
    case Gen::Zm: m.zminus = 1; break;
  }
  return monomial(std::move(ctx), m);
}

AlgElem AlgElem::monomial(CtxPtr ctx, AMonomial m, Scalar coeff) {
  AlgElem e(std::move(ctx));
  e.add_term(m, coeff);
  return e;
}

AlgElem AlgElem::from_zpoly(CtxPtr ctx, const ZPoly& f) {
  AlgElem e(std::move(ctx));
  for (int k = 0; k <= f.degree(); ++k) {
    AMonomial m;
    m.zplus = m.zminus = static_cast<uint32_t>(k);
    e.add_term(m, f.coeff(k));
  }
  return e;
}

void AlgElem::add_term(const AMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  AMonomial key = m;
  if (key.xexp == 0) key.xsign = XSign::None;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::operator-() const {
  AlgElem r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  check_ctx(ctx_, o.ctx_);
  AlgElem r = *this;
  if (!r.ctx_) r.ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  check_ctx(ctx_, o.ctx_);
  AlgElem r = *this;
  if (!r.ctx_) r.ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) { return *this = *this + o; }
AlgElem& AlgElem::operator-=(const AlgElem& o) { return *this = *this - o; }

AlgElem AlgElem::operator*(const Scalar& s) const {
  AlgElem r(ctx_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

bool AlgElem::operator==(const AlgElem& o) const {
  return same_ctx(ctx_, o.ctx_) ? terms_ == o.terms_ : false;
}

AlgElem AlgElem::pow(unsigned k) const {
  AlgElem acc = unit(ctx_);
  AlgElem base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::map<long, AlgElem> AlgElem::grade_decompose() const {
  std::map<long, AlgElem> out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.try_emplace(m.degree(), AlgElem(ctx_));
    it->second.terms_.emplace(m, c);
  }
  return out;
}

bool AlgElem::is_homogeneous(long* deg) const {
  bool have = false;
  long d = 0;
  for (const auto& [m, c] : terms_) {
    long md = m.degree();
    if (have && md != d) return false;
    d = md;
    have = true;
  }
  if (deg) *deg = have ? d : 0;
  return true;
}

AlgElem AlgElem::graded_scale(long power_per_degree) const {
  AlgElem r(ctx_);
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, c * Scalar::q_power(power_per_degree * m.degree()));
  return r;
}

// ---------------------------------------------------------------------------
// Product
//
// The closed-form route: exponent bookkeeping for moving an x-block past a
// z-block (each pass contributes q^{+-1}) and repeated substitution of the
// defining relations x+ x- = p(z), x- x+ = p(q^2 z) for collapsing opposite
// x-blocks. The literal word rewriter below serves as a cross-check.

AlgElem AlgElem::operator*(const AlgElem& o) const {
  check_ctx(ctx_, o.ctx_);
  AlgElem out(ctx_ ? ctx_ : o.ctx_);
  if (is_zero() || o.is_zero()) return out;
  const ZPoly& p = out.ctx_->p();

  // the polynomial produced by collapsing x_s^a against x_{-s}^d, already
  // shifted past the surviving x-block; keyed by (sign, a, d) for reuse
  // across the pair loop
  std::map<std::array<uint32_t, 3>, ZPoly> middle_cache;
  auto collapse = [&](XSign s, uint32_t a, uint32_t d) -> const ZPoly& {
    std::array<uint32_t, 3> key{s == XSign::Plus ? 1u : 0u, a, d};
    auto it = middle_cache.find(key);
    if (it != middle_cache.end()) return it->second;
    uint32_t mcount = std::min(a, d);
    ZPoly middle(Scalar(1));
    if (s == XSign::Plus) {
      // x+^a x-^d: factors p(q^{-2(a-1)} z) ... p(q^{-2(a-m)} z)
      for (uint32_t j = 0; j < mcount; ++j)
        middle = middle * p.scaled_argument(Scalar::q_power(-2 * (static_cast<long>(a) - 1 - j)));
    } else {
      // x-^a x+^d: factors p(q^{2a} z) ... p(q^{2(a-m+1)} z)
      for (uint32_t j = 0; j < mcount; ++j)
        middle = middle * p.scaled_argument(Scalar::q_power(2 * (static_cast<long>(a) - j)));
    }
    if (a != d) {
      // middle(z) * x_u^rem = x_u^rem * middle(q^{2u rem} z)
      long u = (a > d) == (s == XSign::Plus) ? 1 : -1;
      long rem = static_cast<long>(a > d ? a - d : d - a);
      middle = middle.scaled_argument(Scalar::q_power(2 * u * rem));
    }
    return middle_cache.emplace(key, std::move(middle)).first->second;
  };

  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Scalar coeff = ca * cb;
      // move the right factor's x-block past the left factor's z-block
      long t = static_cast<long>(mb.xsign);
      if (t != 0 && ma.zplus + ma.zminus > 0)
        coeff *= Scalar::q_power(t * static_cast<long>(mb.xexp) *
                                 static_cast<long>(ma.zplus + ma.zminus));
      uint32_t zp = ma.zplus + mb.zplus;
      uint32_t zm = ma.zminus + mb.zminus;

      if (ma.xsign == XSign::None || mb.xsign == XSign::None || ma.xsign == mb.xsign) {
        AMonomial m;
        m.xexp = ma.xexp + mb.xexp;
        m.xsign = m.xexp == 0 ? XSign::None : (ma.xsign != XSign::None ? ma.xsign : mb.xsign);
        m.zplus = zp;
        m.zminus = zm;
        out.add_term(m, coeff);
        continue;
      }

      // opposite signs: collapse min(a, d) adjacent pairs into a polynomial in z
      uint32_t a = ma.xexp, d = mb.xexp;
      const ZPoly& middle = collapse(ma.xsign, a, d);
      uint32_t rem = a > d ? a - d : d - a;
      XSign remsign = rem == 0 ? XSign::None : (a > d ? ma.xsign : mb.xsign);
      for (int k = 0; k <= middle.degree(); ++k) {
        const Scalar& mk = middle.coeff(k);
        if (mk.is_zero()) continue;
        AMonomial m;
        m.xsign = remsign;
        m.xexp = rem;
        m.zplus = zp + static_cast<uint32_t>(k);
        m.zminus = zm + static_cast<uint32_t>(k);
        out.add_term(m, coeff * mk);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star

AlgElem AlgElem::star() const {
  // (x_s^a z+^b z-^c)^* = z+^c z-^b x_{-s}^a, normalized
  AlgElem r(ctx_);
  for (const auto& [m, c] : terms_) {
    AMonomial sm;
    sm.xexp = m.xexp;
    sm.xsign = m.xsign == XSign::Plus ? XSign::Minus
               : m.xsign == XSign::Minus ? XSign::Plus
                                         : XSign::None;
    sm.zplus = m.zminus;
    sm.zminus = m.zplus;
    long s = static_cast<long>(m.xsign);
    Scalar coeff = c.conj() * Scalar::q_power(-s * static_cast<long>(m.xexp) *
                                              static_cast<long>(m.zplus + m.zminus));
    r.add_term(sm, coeff);
  }
  return r;
}

std::string AlgElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      first = false;
      if (a.is_negative_leading() && !a.needs_parens()) {
        os << "-";
        a = -a;
      }
    } else {
      if (a.is_negative_leading() && !a.needs_parens()) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    bool unit_mono = m.is_unit();
    if (a.is_one() && !unit_mono) {
      os << m.to_string();
    } else {
      std::string s = a.to_string();
      os << (a.needs_parens() ? "(" + s + ")" : s);
      if (!unit_mono) os << "*" << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Word rewriting

namespace {

struct WordTerm {
  Scalar coeff;
  std::vector<Gen> word;
};

bool is_z(Gen g) { return g == Gen::Zp || g == Gen::Zm; }

// A redex is an adjacent pair that violates the canonical order
// x-block < z+-block < z--block, or an adjacent opposite x-pair.
bool is_redex(Gen a, Gen b) {
  if (is_z(a) && !is_z(b)) return true;                 // z before x
  if (a == Gen::Zm && b == Gen::Zp) return true;        // z- before z+
  if (a == Gen::Xp && b == Gen::Xm) return true;
  if (a == Gen::Xm && b == Gen::Xp) return true;
  return false;
}

// Contract the redex at position i; may split the term into several.
std::vector<WordTerm> contract(const WordTerm& t, size_t i, const ZPoly& p) {
  Gen a = t.word[i], b = t.word[i + 1];
  std::vector<WordTerm> out;
  auto swapped = [&](Scalar factor) {
    WordTerm r = t;
    std::swap(r.word[i], r.word[i + 1]);
    r.coeff *= factor;
    out.push_back(std::move(r));
  };
  if (is_z(a) && b == Gen::Xp) {
    swapped(Scalar::q());  // z x+ -> q x+ z
  } else if (is_z(a) && b == Gen::Xm) {
    swapped(Scalar::q_power(-1));  // z x- -> q^{-1} x- z
  } else if (a == Gen::Zm && b == Gen::Zp) {
    swapped(Scalar(1));
  } else {
    // opposite x-pair: substitute p(z) or p(q^2 z)
    ZPoly subst = (a == Gen::Xp) ? p : p.scaled_argument(Scalar::q_power(2));
    for (int k = 0; k <= subst.degree(); ++k) {
      if (subst.coeff(k).is_zero()) continue;
      WordTerm r;
      r.coeff = t.coeff * subst.coeff(k);
      r.word.assign(t.word.begin(), t.word.begin() + i);
      for (int j = 0; j < k; ++j) {
        r.word.push_back(Gen::Zp);
        r.word.push_back(Gen::Zm);
      }
      r.word.insert(r.word.end(), t.word.begin() + i + 2, t.word.end());
      out.push_back(std::move(r));
    }
    if (out.empty()) {
      WordTerm r;  // p had no terms at all (impossible for nonzero p), keep zero
      r.coeff = Scalar();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::optional<size_t> find_redex(const std::vector<Gen>& w, RewriteStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RewriteStrategy::Leftmost) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (is_redex(w[i], w[i + 1])) return i;
  } else {
    for (size_t i = w.size() - 1; i-- > 0;)
      if (is_redex(w[i], w[i + 1])) return i;
  }
  return std::nullopt;
}

}  // namespace

AlgElem normalize_word(const CtxPtr& ctx, std::span<const Gen> word, const Scalar& prefactor,
                       RewriteStrategy strategy) {
  AlgElem out(ctx);
  std::deque<WordTerm> work;
  work.push_back(WordTerm{prefactor, std::vector<Gen>(word.begin(), word.end())});
  while (!work.empty()) {
    WordTerm t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero()) continue;
    auto redex = find_redex(t.word, strategy);
    if (!redex) {
      AMonomial m;
      for (Gen g : t.word) {
        switch (g) {
          case Gen::Xp: m.xsign = XSign::Plus; m.xexp++; break;
          case Gen::Xm: m.xsign = XSign::Minus; m.xexp++; break;
          case Gen::Zp: m.zplus++; break;
          case Gen::Zm: m.zminus++; break;
        }
      }
      out.add_term(m, t.coeff);
      continue;
    }
    for (auto& nt : contract(t, *redex, ctx->p())) work.push_back(std::move(nt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// B(p;q)

const char* bgen_name(BGen g) {
  switch (g) {
    case BGen::X: return "x";
    case BGen::Y: return "y";
    case BGen::Z: return "z";
  }
  return "?";
}

std::string BMonomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, uint32_t e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  };
  emit(sign == BSign::X ? "x" : "y", xyexp);
  emit("z", zexp);
  return os.str();
}

BElem BElem::unit(CtxPtr ctx) { return scalar(std::move(ctx), Scalar(1)); }

BElem BElem::scalar(CtxPtr ctx, Scalar s) {
  BElem e(std::move(ctx));
  e.add_term(BMonomial{}, s);
  return e;
}

BElem BElem::generator(CtxPtr ctx, BGen g) {
  BMonomial m;
  switch (g) {
    case BGen::X: m.sign = BSign::X; m.xyexp = 1; break;
    case BGen::Y: m.sign = BSign::Y; m.xyexp = 1; break;
    case BGen::Z: m.zexp = 1; break;
  }
  return monomial(std::move(ctx), m);
}

BElem BElem::monomial(CtxPtr ctx, BMonomial m, Scalar coeff) {
  BElem e(std::move(ctx));
  e.add_term(m, coeff);
  return e;
}

BElem BElem::from_zpoly(CtxPtr ctx, const ZPoly& f) {
  BElem e(std::move(ctx));
  for (int k = 0; k <= f.degree(); ++k) {
    BMonomial m;
    m.zexp = static_cast<uint32_t>(k);
    e.add_term(m, f.coeff(k));
  }
  return e;
}

void BElem::add_term(const BMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  BMonomial key = m;
  if (key.xyexp == 0) key.sign = BSign::None;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BElem BElem::operator-() const {
  BElem r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BElem BElem::operator+(const BElem& o) const {
  check_ctx(ctx_, o.ctx_);
  BElem r = *this;
  if (!r.ctx_) r.ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

BElem BElem::operator-(const BElem& o) const { return *this + (-o); }
BElem& BElem::operator+=(const BElem& o) { return *this = *this + o; }
BElem& BElem::operator-=(const BElem& o) { return *this = *this - o; }

BElem BElem::operator*(const Scalar& s) const {
  BElem r(ctx_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

bool BElem::operator==(const BElem& o) const {
  return same_ctx(ctx_, o.ctx_) ? terms_ == o.terms_ : false;
}

BElem BElem::pow(unsigned k) const {
  BElem acc = unit(ctx_);
  BElem base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

BElem BElem::operator*(const BElem& o) const {
  check_ctx(ctx_, o.ctx_);
  BElem out(ctx_ ? ctx_ : o.ctx_);
  if (is_zero() || o.is_zero()) return out;
  const CtxPtr& cx = out.ctx_;
  const ZPoly& p = cx->p();
  // xy = q^2 z p(q^2 z), yx = z p(z)
  const ZPoly wxy = p.scaled_argument(Scalar::q_power(2)) * ZPoly::variable() * Scalar::q_power(2);
  const ZPoly wyx = p * ZPoly::variable();

  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Scalar coeff = ca * cb;
      // move the right factor's xy-block left past the left factor's z-block:
      // z^b x^d = q^{-2bd} x^d z^b and z^b y^d = q^{2bd} y^d z^b
      long t = static_cast<long>(mb.sign);
      if (t != 0 && ma.zexp > 0)
        coeff *= Scalar::q_power(-2 * t * static_cast<long>(mb.xyexp) *
                                 static_cast<long>(ma.zexp));
      uint32_t ze = ma.zexp + mb.zexp;

      if (ma.sign == BSign::None || mb.sign == BSign::None || ma.sign == mb.sign) {
        BMonomial m;
        m.xyexp = ma.xyexp + mb.xyexp;
        m.sign = m.xyexp == 0 ? BSign::None : (ma.sign != BSign::None ? ma.sign : mb.sign);
        m.zexp = ze;
        out.add_term(m, coeff);
        continue;
      }

      // opposite blocks: collapse pairwise through the middle polynomial
      uint32_t a = ma.xyexp, d = mb.xyexp;
      uint32_t mcount = std::min(a, d);
      ZPoly middle(Scalar(1));
      if (ma.sign == BSign::X) {
        // x^a M(z) y^d: M <- M(q^2 z) * xy
        for (uint32_t j = 0; j < mcount; ++j)
          middle = middle.scaled_argument(Scalar::q_power(2)) * wxy;
      } else {
        // y^a M(z) x^d: M <- M(q^{-2} z) * yx
        for (uint32_t j = 0; j < mcount; ++j)
          middle = middle.scaled_argument(Scalar::q_power(-2)) * wyx;
      }
      uint32_t rem = a + d - 2 * mcount;
      BSign remsign = BSign::None;
      if (rem > 0) {
        remsign = (a > d) ? ma.sign : mb.sign;
        if (d > a) {
          // remainder sits to the right of the middle: M(z) g^r = g^r M(q^{-+2r} z)
          long u = static_cast<long>(remsign);
          middle = middle.scaled_argument(Scalar::q_power(-2 * u * static_cast<long>(rem)));
        }
      }
      for (int k = 0; k <= middle.degree(); ++k) {
        const Scalar& mk = middle.coeff(k);
        if (mk.is_zero()) continue;
        BMonomial m;
        m.sign = remsign;
        m.xyexp = rem;
        m.zexp = ze + static_cast<uint32_t>(k);
        out.add_term(m, coeff * mk);
      }
    }
  }
  return out;
}

BElem BElem::star() const {
  // (x^e z^m)^* = z^m y^e = q^{2em} y^e z^m; (y^e z^m)^* = q^{-2em} x^e z^m
  BElem r(ctx_);
  for (const auto& [m, c] : terms_) {
    BMonomial sm;
    sm.xyexp = m.xyexp;
    sm.sign = m.sign == BSign::X ? BSign::Y : m.sign == BSign::Y ? BSign::X : BSign::None;
    sm.zexp = m.zexp;
    long s = static_cast<long>(m.sign);
    Scalar coeff = c.conj() * Scalar::q_power(2 * s * static_cast<long>(m.xyexp) *
                                              static_cast<long>(m.zexp));
    r.add_term(sm, coeff);
  }
  return r;
}

std::string BElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      first = false;
      if (a.is_negative_leading() && !a.needs_parens()) {
        os << "-";
        a = -a;
      }
    } else {
      if (a.is_negative_leading() && !a.needs_parens()) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    bool unit_mono = m.is_unit();
    if (a.is_one() && !unit_mono) {
      os << m.to_string();
    } else {
      std::string s = a.to_string();
      os << (a.needs_parens() ? "(" + s + ")" : s);
      if (!unit_mono) os << "*" << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// theta

AlgElem theta(const BElem& b) {
  const CtxPtr& ctx = b.ctx();
  AlgElem out(ctx);
  if (b.is_zero()) return out;
  AlgElem tx = AlgElem::generator(ctx, Gen::Xm) * AlgElem::generator(ctx, Gen::Zp);
  AlgElem ty = AlgElem::generator(ctx, Gen::Zm) * AlgElem::generator(ctx, Gen::Xp);
  AlgElem tz = AlgElem::generator(ctx, Gen::Zm) * AlgElem::generator(ctx, Gen::Zp);
  for (const auto& [m, c] : b.terms()) {
    AlgElem term = AlgElem::scalar(ctx, c);
    if (m.xyexp > 0) term = term * (m.sign == BSign::X ? tx : ty).pow(m.xyexp);
    if (m.zexp > 0) term = term * tz.pow(m.zexp);
    out += term;
  }
  return out;
}

BElem theta_inverse(const AlgElem& a) {
  const CtxPtr& ctx = a.ctx();
  BElem out(ctx);
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != 0) throw std::domain_error("theta inverse requires a degree-0 element");
    BMonomial bm;
    if (m.xsign == XSign::Minus) {
      bm.sign = BSign::X;
      bm.xyexp = m.xexp;
      bm.zexp = m.zminus;  // x- block: x^n z^l maps onto x-^n z+^{n+l} z-^l
    } else if (m.xsign == XSign::Plus) {
      bm.sign = BSign::Y;
      bm.xyexp = m.xexp;
      bm.zexp = m.zplus;  // x+ block: y^n z^m maps onto x+^n z+^m z-^{n+m}
    } else {
      bm.zexp = m.zplus;
    }
    // theta of the candidate monomial is a single monomial; divide out its scalar
    AlgElem image = theta(BElem::monomial(ctx, bm));
    if (image.term_count() != 1) throw std::logic_error("theta image of a monomial not a monomial");
    const auto& [im, ic] = *image.terms().begin();
    if (!(im == m)) throw std::logic_error("theta inverse candidate mismatch");
    out.add_term(bm, c / ic);
  }
  return out;
}

}  // namespace gwa
