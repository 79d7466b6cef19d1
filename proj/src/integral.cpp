#include "gwa/integral.hpp"

#include <sstream>

namespace gwa {

CoVector::CoVector(AlgElem m, AlgElem z, AlgElem p)
    : minus(std::move(m)), zero(std::move(z)), plus(std::move(p)) {
  if (!same_ctx(minus.ctx(), zero.ctx()) || !same_ctx(zero.ctx(), plus.ctx()))
    throw std::invalid_argument("mismatched ctx");
}

CoVector CoVector::dual_basis(const CtxPtr& ctx, OmegaIndex i) {
  CoVector xi(ctx);
  xi.val(i) = AlgElem::unit(ctx);
  return xi;
}

const AlgElem& CoVector::val(OmegaIndex i) const {
  switch (i) {
    case OmegaIndex::Minus: return minus;
    case OmegaIndex::Zero: return zero;
    case OmegaIndex::Plus: return plus;
  }
  return zero;
}

AlgElem& CoVector::val(OmegaIndex i) {
  switch (i) {
    case OmegaIndex::Minus: return minus;
    case OmegaIndex::Zero: return zero;
    case OmegaIndex::Plus: return plus;
  }
  return zero;
}

AlgElem CoVector::evaluate(const OmegaElem& w) const {
  AlgElem out(ctx());
  for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus})
    out += val(i) * sigma_inverse(omega_twist(i), w.comp(i));
  return out;
}

CoVector CoVector::acted(const AlgElem& a) const {
  CoVector r(ctx());
  for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus})
    r.val(i) = val(i) * sigma_inverse(omega_twist(i), a);
  return r;
}

bool CoVector::operator==(const CoVector& o) const {
  return minus == o.minus && zero == o.zero && plus == o.plus;
}

AlgElem divergence(const Calculus& calc, const CoVector& xi) {
  return calc.partial(DerivTag::DMinus)(xi.minus) * Scalar::q_power(-2) +
         calc.partial(DerivTag::D0)(xi.zero) +
         calc.partial(DerivTag::DPlus)(xi.plus) * Scalar::q_power(2);
}

bool IntegralValue::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

IntegralValue IntegralValue::operator+(const IntegralValue& o) const {
  if (coeffs.size() != o.coeffs.size())
    throw std::invalid_argument("integral values over different spaces");
  IntegralValue r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

IntegralValue IntegralValue::operator*(const Scalar& s) const {
  IntegralValue r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

std::string IntegralValue::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ", ";
    os << coeffs[i].to_string();
  }
  os << "]";
  return os.str();
}

static void require_integral_ctx(const CtxPtr& ctx) {
  ctx->require_regular();
  if (ctx->degree() < 1)
    throw std::domain_error("constant p has trivial integral space");
}

BetaTable beta_table(const CtxPtr& ctx, unsigned kmax) {
  require_integral_ctx(ctx);
  BetaTable t;
  t.n = ctx->degree();
  t.mu = ctx->mu();
  t.beta.assign(kmax + 1, std::vector<Scalar>(t.n, Scalar()));
  for (unsigned k = 0; k <= kmax; ++k) {
    for (int i = 0; i < t.n; ++i) {
      Scalar acc;
      for (int j = 1; j <= t.n; ++j) {
        long kk = static_cast<long>(k) - j;
        if (kk < 0) continue;  // beta_i^l = 0 for l < 0
        acc += t.mu[t.n - j] * t.beta[kk][i];
      }
      long im = static_cast<long>(i) - static_cast<long>(k);
      if (im >= 0) acc += t.mu[im];  // mu_l = 0 for l < 0
      t.beta[k][i] = std::move(acc);
    }
  }
  return t;
}

const Scalar& BetaTable::at(unsigned k, unsigned i) const {
  if (k >= beta.size() || i >= static_cast<unsigned>(n))
    throw std::out_of_range("beta table index");
  return beta[k][i];
}

bool BetaTable::q_independent() const {
  for (const auto& row : beta)
    for (const auto& b : row)
      if (!b.is_rational()) return false;
  return true;
}

namespace {

// Lambda(z^k) over the v-basis via the compact beta form.
IntegralValue lambda_power_compact(const CtxPtr& ctx, unsigned k) {
  int n = ctx->degree();
  IntegralValue v;
  v.coeffs.assign(n, Scalar());
  if (static_cast<int>(k) < n) {
    v.coeffs[k] = Scalar(1);
    return v;
  }
  unsigned kk = k - n;
  BetaTable t = beta_table(ctx, kk);
  Scalar denom = q_integer(n + kk + 1);
  for (int i = 0; i < n; ++i)
    v.coeffs[i] = q_integer(i + 1) / denom * t.beta[kk][i];
  return v;
}

// Lambda(z^k) by direct upward iteration of the order-n recurrence.
IntegralValue lambda_power_recurrence(const CtxPtr& ctx, unsigned k) {
  int n = ctx->degree();
  std::vector<IntegralValue> memo;
  for (unsigned m = 0; m <= k; ++m) {
    IntegralValue v;
    v.coeffs.assign(n, Scalar());
    if (static_cast<int>(m) < n) {
      v.coeffs[m] = Scalar(1);
    } else {
      unsigned kk = m - n;
      Scalar denom = q_integer(n + kk + 1);
      for (int i = 0; i < n; ++i) {
        Scalar f = q_integer(i + kk + 1) / denom * ctx->mu()[i];
        v = v + memo[kk + i] * f;
      }
    }
    memo.push_back(std::move(v));
  }
  return memo[k];
}

template <typename PowerFn>
IntegralValue integral_impl(const AlgElem& a, PowerFn&& power) {
  const CtxPtr& ctx = a.ctx();
  require_integral_ctx(ctx);
  IntegralValue out;
  out.coeffs.assign(ctx->degree(), Scalar());
  for (const auto& [m, c] : a.terms()) {
    if (m.xexp > 0 || m.zplus != m.zminus) continue;  // Lambda vanishes off K[z]
    out = out + power(ctx, m.zplus) * c;
  }
  return out;
}

}  // namespace

IntegralValue integral(const AlgElem& a) { return integral_impl(a, lambda_power_compact); }

IntegralValue integral_by_recurrence(const AlgElem& a) {
  return integral_impl(a, lambda_power_recurrence);
}

bool check_lambda_functional(const CtxPtr& ctx, const ZPoly& f) {
  require_integral_ctx(ctx);
  Scalar q2 = Scalar::q_power(2);
  ZPoly lhs = (ctx->p().scaled_argument(q2) * f.scaled_argument(q2)) * q2;
  ZPoly rhs = ctx->p() * f;
  return integral(AlgElem::from_zpoly(ctx, lhs)) == integral(AlgElem::from_zpoly(ctx, rhs));
}

}  // namespace gwa
