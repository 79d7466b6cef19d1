#include "gwa/spin.hpp"

#include <sstream>

namespace gwa {

SpinParams SpinParams::defaults() {
  SpinParams p;
  p.beta_plus = Scalar(1);
  p.beta_minus = -Scalar::q_power(-3);
  p.nu = Scalar(1);
  p.orientation = Orientation::NegativeRatio;
  return p;
}

Scalar SpinParams::ratio() const { return beta_minus.conj() / beta_plus; }

bool SpinParams::constraint_holds() const {
  Scalar target = Scalar::q_power(3) * ratio();
  if (orientation == Orientation::NegativeRatio) target = -target;
  return nu * nu == target;
}

void SpinParams::validate() const {
  if (beta_plus.is_zero() || beta_minus.is_zero() || nu.is_zero())
    throw std::invalid_argument("spin parameters must be nonzero");
  IntervalSign s = sign_on_unit_interval(ratio());
  if (s == IntervalSign::Mixed)
    throw std::domain_error("conj(beta-)/beta+ changes sign on 0 < q < 1");
  bool negative = s == IntervalSign::Negative;
  if (negative != (orientation == Orientation::NegativeRatio))
    throw std::domain_error("declared orientation contradicts the sign of conj(beta-)/beta+");
  if (!constraint_holds())
    throw std::domain_error("nu^2 does not match -+ q^3 conj(beta-)/beta+");
}

// ---------------------------------------------------------------------------
// Spinor

static void check_spinor_degrees(const AlgElem& plus_part, const AlgElem& minus_part) {
  long d = 0;
  if (!plus_part.is_homogeneous(&d) || (!plus_part.is_zero() && d != -1))
    throw std::domain_error("s+ coefficient must be homogeneous of degree -1");
  if (!minus_part.is_homogeneous(&d) || (!minus_part.is_zero() && d != 1))
    throw std::domain_error("s- coefficient must be homogeneous of degree 1");
}

Spinor::Spinor(const CtxPtr& ctx) : plus_(AlgElem::zero(ctx)), minus_(AlgElem::zero(ctx)) {}

Spinor::Spinor(AlgElem plus_part, AlgElem minus_part)
    : plus_(std::move(plus_part)), minus_(std::move(minus_part)) {
  if (!same_ctx(plus_.ctx(), minus_.ctx())) throw std::invalid_argument("mismatched ctx");
  check_spinor_degrees(plus_, minus_);
}

Spinor Spinor::plus_section(AlgElem a) {
  AlgElem z = AlgElem::zero(a.ctx());
  return Spinor(std::move(a), std::move(z));
}

Spinor Spinor::minus_section(AlgElem b) {
  AlgElem z = AlgElem::zero(b.ctx());
  return Spinor(std::move(z), std::move(b));
}

Spinor Spinor::operator+(const Spinor& o) const { return Spinor(plus_ + o.plus_, minus_ + o.minus_); }
Spinor Spinor::operator-(const Spinor& o) const { return Spinor(plus_ - o.plus_, minus_ - o.minus_); }
Spinor Spinor::operator-() const { return Spinor(-plus_, -minus_); }
Spinor Spinor::operator*(const Scalar& s) const { return Spinor(plus_ * s, minus_ * s); }

bool Spinor::operator==(const Spinor& o) const {
  return plus_ == o.plus_ && minus_ == o.minus_;
}

std::string Spinor::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const AlgElem& a, const char* marker) {
    if (a.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    std::string s = a.to_string();
    bool wrap = a.term_count() > 1 || s.find('*') != std::string::npos ||
                s.find('/') != std::string::npos || s[0] == '-';
    if (s == "1") {
      os << marker;
    } else {
      os << (wrap ? "(" + s + ")" : s) << "*" << marker;
    }
  };
  emit(plus_, "s+");
  emit(minus_, "s-");
  return os.str();
}

Spinor left_mul(const BElem& u, const Spinor& s) {
  AlgElem tu = theta(u);
  return Spinor(tu * s.plus(), tu * s.minus());
}

// ---------------------------------------------------------------------------
// BMatrix2

BMatrix2 BMatrix2::identity(const CtxPtr& ctx) {
  BMatrix2 m{{{{BElem::unit(ctx), BElem::zero(ctx)}, {BElem::zero(ctx), BElem::unit(ctx)}}}};
  return m;
}

BMatrix2 BMatrix2::operator*(const BMatrix2& o) const {
  BMatrix2 r = *this;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at[i][j] = at[i][0] * o.at[0][j] + at[i][1] * o.at[1][j];
  return r;
}

BMatrix2 BMatrix2::operator+(const BMatrix2& o) const {
  BMatrix2 r = *this;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at[i][j] = at[i][j] + o.at[i][j];
  return r;
}

bool BMatrix2::operator==(const BMatrix2& o) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(at[i][j] == o.at[i][j])) return false;
  return true;
}

std::string BMatrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << at[0][0].to_string() << ", " << at[0][1].to_string() << "], ["
     << at[1][0].to_string() << ", " << at[1][1].to_string() << "]]";
  return os.str();
}

// ---------------------------------------------------------------------------
// SpinGeometry

SpinGeometry::SpinGeometry(CtxPtr ctx, DerivParams deriv, SpinParams spin)
    : calc_(std::move(ctx), std::move(deriv)), spin_(std::move(spin)) {}

std::vector<std::pair<AlgElem, AlgElem>> SpinGeometry::strong_connection(int n) const {
  const CtxPtr& cx = ctx();
  cx->require_regular();
  if (n != 1 && n != -1) throw std::invalid_argument("strong connection legs exist for n = +-1");
  if (cx->p_at_zero().is_zero()) throw std::domain_error("p(0) = 0");
  Scalar inv_p0 = cx->p_at_zero().inverse();
  auto gen = [&](Gen g) { return AlgElem::generator(cx, g); };
  std::vector<std::pair<AlgElem, AlgElem>> legs;
  if (n == -1) {
    // l(-1) = (1/p(0)) ( z+ (x) ((p(0)-p(z))/z) z- + x+ (x) x- )
    ZPoly num = (ZPoly(cx->p_at_zero()) - cx->p()).divided_by_z();
    legs.emplace_back(gen(Gen::Zp), AlgElem::from_zpoly(cx, num) * gen(Gen::Zm) * inv_p0);
    legs.emplace_back(gen(Gen::Xp), gen(Gen::Xm) * inv_p0);
  } else {
    // l(1) = (1/p(0)) ( ((p(0)-p(q^2 z))/z) z- (x) z+ + (-q x-) (x) (-q^{-1} x+) )
    ZPoly num = (ZPoly(cx->p_at_zero()) - cx->p().scaled_argument(Scalar::q_power(2))).divided_by_z();
    legs.emplace_back(AlgElem::from_zpoly(cx, num) * gen(Gen::Zm), gen(Gen::Zp) * inv_p0);
    legs.emplace_back(gen(Gen::Xm) * (-Scalar::q()),
                      gen(Gen::Xp) * (-(Scalar::q_power(-1) * inv_p0)));
  }
  return legs;
}

std::pair<BMatrix2, BMatrix2> SpinGeometry::idempotents() const {
  const CtxPtr& cx = ctx();
  cx->require_regular();
  Scalar inv_p0 = cx->p_at_zero().inverse();
  const ZPoly& p = cx->p();
  ZPoly pq2 = p.scaled_argument(Scalar::q_power(2));
  ZPoly gz = (ZPoly(cx->p_at_zero()) - p).divided_by_z();  // (p(0) - p(z))/z
  auto zp = [&](const ZPoly& f) { return BElem::from_zpoly(cx, f); };
  BElem bx = BElem::generator(cx, BGen::X);
  BElem by = BElem::generator(cx, BGen::Y);

  BMatrix2 e1{{{{(zp(ZPoly(cx->p_at_zero())) - zp(pq2)) * inv_p0, (-bx) * inv_p0},
                {(-(zp(gz) * by)) * inv_p0, zp(p) * inv_p0}}}};
  BMatrix2 em1{{{{zp(pq2) * inv_p0, bx * inv_p0},
                 {(zp(gz) * by) * inv_p0, (zp(ZPoly(cx->p_at_zero())) - zp(p)) * inv_p0}}}};
  return {e1, em1};
}

std::vector<std::pair<OmegaElem, Spinor>> SpinGeometry::connection(const Spinor& s) const {
  ctx()->require_regular();
  std::vector<std::pair<OmegaElem, Spinor>> out;
  auto expand = [&](const AlgElem& coeff, int leg_sign, bool to_plus) {
    if (coeff.is_zero()) return;
    OmegaElem pda = horizontal(calc_.d(coeff));
    for (const auto& [l, r] : strong_connection(leg_sign)) {
      OmegaElem form = right_act(pda, l);
      Spinor part = to_plus ? Spinor::plus_section(r) : Spinor::minus_section(r);
      out.emplace_back(std::move(form), std::move(part));
    }
  };
  expand(s.plus(), -1, true);
  expand(s.minus(), 1, false);
  return out;
}

Spinor SpinGeometry::clifford(const OmegaElem& w, const Spinor& s) const {
  if (!w.zero.is_zero()) throw std::domain_error("clifford action needs a horizontal one-form");
  long d = 0;
  if (!w.minus.is_homogeneous(&d) || (!w.minus.is_zero() && d != 2))
    throw std::domain_error("w- coefficient must be homogeneous of degree 2");
  if (!w.plus.is_homogeneous(&d) || (!w.plus.is_zero() && d != -2))
    throw std::domain_error("w+ coefficient must be homogeneous of degree -2");
  // (c- w+ + c+ w-) |> (a s+ + b s-) = beta_+ c- b s+ + beta_- c+ a s-
  return Spinor(w.plus * s.minus() * spin_.beta_plus, w.minus * s.plus() * spin_.beta_minus);
}

Spinor SpinGeometry::dirac(const Spinor& s) const {
  ctx()->require_regular();
  const auto& dp = calc_.partial(DerivTag::DPlus);
  const auto& dm = calc_.partial(DerivTag::DMinus);
  return Spinor(dp(s.minus()) * (spin_.beta_plus * Scalar::q_power(-1)),
                dm(s.plus()) * (spin_.beta_minus * Scalar::q()));
}

Spinor SpinGeometry::dirac_via_connection(const Spinor& s) const {
  Spinor acc = Spinor::zero(ctx());
  for (const auto& [w, part] : connection(s)) acc = acc + clifford(w, part);
  return acc;
}

Spinor SpinGeometry::grading(const Spinor& s) { return Spinor(s.plus(), -s.minus()); }

Spinor SpinGeometry::apply_j_unchecked(const Spinor& s) const {
  // a s+ + b s- -> -+ nu^{-1} b* s+ + nu a* s-
  Scalar front = spin_.nu.inverse();
  if (spin_.orientation == SpinParams::Orientation::NegativeRatio) front = -front;
  return Spinor(s.minus().star() * front, s.plus().star() * spin_.nu);
}

Spinor SpinGeometry::real_structure(const Spinor& s) const {
  spin_.validate();
  return apply_j_unchecked(s);
}

// ---------------------------------------------------------------------------
// Spanning sets

std::vector<AMonomial> a_monomials_of_degree(long degree, unsigned max_word_length) {
  std::vector<AMonomial> out;
  for (const auto& m : a_monomials_up_to(max_word_length))
    if (m.degree() == degree) out.push_back(m);
  return out;
}

std::vector<AMonomial> a_monomials_up_to(unsigned max_word_length) {
  std::vector<AMonomial> out;
  for (unsigned len = 0; len <= max_word_length; ++len) {
    for (unsigned a = 0; a <= len; ++a) {
      for (unsigned b = 0; a + b <= len; ++b) {
        unsigned c = len - a - b;
        if (a == 0) {
          out.push_back(AMonomial{XSign::None, 0, b, c});
        } else {
          out.push_back(AMonomial{XSign::Plus, a, b, c});
          out.push_back(AMonomial{XSign::Minus, a, b, c});
        }
      }
    }
  }
  return out;
}

std::vector<BMonomial> b_monomials_up_to(unsigned max_word_length) {
  std::vector<BMonomial> out;
  for (unsigned len = 0; len <= max_word_length; ++len) {
    for (unsigned e = 0; e <= len; ++e) {
      unsigned m = len - e;
      if (e == 0) {
        out.push_back(BMonomial{BSign::None, 0, m});
      } else {
        out.push_back(BMonomial{BSign::X, e, m});
        out.push_back(BMonomial{BSign::Y, e, m});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// KO-dimension verification

std::vector<KoCondition> verify_ko_dimension(const SpinGeometry& geom, unsigned bound) {
  const CtxPtr& cx = geom.ctx();
  std::vector<KoCondition> out;

  std::vector<Spinor> spanning;
  for (const auto& m : a_monomials_of_degree(-1, bound))
    spanning.push_back(Spinor::plus_section(AlgElem::monomial(cx, m)));
  for (const auto& m : a_monomials_of_degree(1, bound))
    spanning.push_back(Spinor::minus_section(AlgElem::monomial(cx, m)));

  std::vector<BElem> belems;
  for (const auto& m : b_monomials_up_to(bound)) belems.push_back(BElem::monomial(cx, m));

  auto J = [&](const Spinor& s) { return geom.apply_j_unchecked(s); };
  auto D = [&](const Spinor& s) { return geom.dirac(s); };
  auto G = [&](const Spinor& s) { return SpinGeometry::grading(s); };

  bool expect_minus =
      geom.spin_params().orientation == SpinParams::Orientation::NegativeRatio;

  {
    KoCondition c{"j-squared",
                  expect_minus ? "J^2 = -id on the spinor module"
                               : "J^2 = +id on the spinor module (positive-ratio variant)",
                  true,
                  ""};
    for (const auto& s : spanning) {
      Spinor expect = expect_minus ? -s : s;
      if (!(J(J(s)) == expect)) {
        c.pass = false;
        c.counterexample = s.to_string();
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"j-gamma-anticommute", "J gamma = -gamma J", true, ""};
    for (const auto& s : spanning) {
      if (!(J(G(s)) == -G(J(s)))) {
        c.pass = false;
        c.counterexample = s.to_string();
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"j-d-commute", "J D = D J", true, ""};
    for (const auto& s : spanning) {
      if (!(J(D(s)) == D(J(s)))) {
        c.pass = false;
        c.counterexample = s.to_string();
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"order-zero", "[u, J v J] = 0 for u, v in the base algebra", true, ""};
    for (const auto& u : belems) {
      for (const auto& v : belems) {
        auto jvj = [&](const Spinor& s) { return J(left_mul(v, J(s))); };
        for (const auto& s : spanning) {
          if (!(left_mul(u, jvj(s)) == jvj(left_mul(u, s)))) {
            c.pass = false;
            c.counterexample =
                "u = " + u.to_string() + ", v = " + v.to_string() + ", s = " + s.to_string();
            break;
          }
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"order-one", "[[D, u], J v J] = 0 for u, v in the base algebra", true, ""};
    auto bracket_d = [&](const BElem& u, const Spinor& s) {
      return D(left_mul(u, s)) - left_mul(u, D(s));
    };
    for (const auto& u : belems) {
      for (const auto& v : belems) {
        auto jvj = [&](const Spinor& s) { return J(left_mul(v, J(s))); };
        for (const auto& s : spanning) {
          if (!(bracket_d(u, jvj(s)) == jvj(bracket_d(u, s)))) {
            c.pass = false;
            c.counterexample =
                "u = " + u.to_string() + ", v = " + v.to_string() + ", s = " + s.to_string();
            break;
          }
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"partial-star-exchange",
                  "d+(c)* = q^{|c|-2} d-(c*) and d-(c)* = q^{|c|+2} d+(c*)", true, ""};
    const auto& dp = geom.calculus().partial(DerivTag::DPlus);
    const auto& dm = geom.calculus().partial(DerivTag::DMinus);
    for (const auto& m : a_monomials_up_to(bound)) {
      AlgElem a = AlgElem::monomial(cx, m);
      long deg = m.degree();
      bool ok = dp(a).star() == dm(a.star()) * Scalar::q_power(deg - 2) &&
                dm(a).star() == dp(a.star()) * Scalar::q_power(deg + 2);
      if (!ok) {
        c.pass = false;
        c.counterexample = a.to_string();
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    KoCondition c{"d-commutator-form",
                  "[D, u] acts by beta_+ d+(u) swap(+) + beta_- d-(u) swap(-)", true, ""};
    const auto& dp = geom.calculus().partial(DerivTag::DPlus);
    const auto& dm = geom.calculus().partial(DerivTag::DMinus);
    const auto& sp = geom.spin_params();
    for (const auto& u : belems) {
      AlgElem tu = theta(u);
      for (const auto& s : spanning) {
        Spinor lhs = D(left_mul(u, s)) - left_mul(u, D(s));
        Spinor rhs = Spinor(dp(tu) * s.minus() * sp.beta_plus, dm(tu) * s.plus() * sp.beta_minus);
        if (!(lhs == rhs)) {
          c.pass = false;
          c.counterexample = "u = " + u.to_string() + ", s = " + s.to_string();
          break;
        }
      }
      if (!c.pass) break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gwa
