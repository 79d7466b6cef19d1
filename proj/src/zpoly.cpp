#include "gwa/zpoly.hpp"

#include <sstream>

namespace gwa {

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly::ZPoly(Scalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

ZPoly::ZPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::variable() { return monomial(Scalar(1), 1); }

ZPoly ZPoly::monomial(Scalar coeff, unsigned degree) {
  ZPoly p;
  if (!coeff.is_zero()) {
    p.c_.assign(degree + 1, Scalar());
    p.c_[degree] = std::move(coeff);
  }
  return p;
}

const Scalar& ZPoly::coeff(unsigned i) const {
  if (i < c_.size()) return c_[i];
  return Scalar::zero();
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  ZPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator*(const Scalar& s) const {
  if (s.is_zero()) return ZPoly();
  ZPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

ZPoly ZPoly::pow(unsigned k) const {
  ZPoly acc(Scalar(1));
  ZPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Scalar ZPoly::eval(const Scalar& at) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

ZPoly ZPoly::scaled_argument(const Scalar& gamma) const {
  ZPoly r = *this;
  Scalar g(1);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= g;
    g *= gamma;
  }
  r.trim();
  return r;
}

ZPoly ZPoly::divided_by_z() const {
  if (is_zero()) return ZPoly();
  if (!c_[0].is_zero()) throw std::domain_error("inexact division by z");
  ZPoly r;
  r.c_.assign(c_.begin() + 1, c_.end());
  return r;
}

ZPoly ZPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::pair<ZPoly, ZPoly> ZPoly::divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  ZPoly rem = a;
  ZPoly quot;
  int db = b.degree();
  if (a.degree() >= db) quot.c_.assign(a.degree() - db + 1, Scalar());
  Scalar lb_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Scalar f = rem.leading() * lb_inv;
    quot.c_[k] = f;
    for (int i = 0; i <= db; ++i) rem.c_[k + i] -= f * b.c_[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
  while (!b.is_zero()) {
    ZPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<ZPoly, ZPoly, ZPoly> ZPoly::extended_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly r0 = a, r1 = b;
  ZPoly u0(Scalar(1)), u1;
  ZPoly v0, v1(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    ZPoly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, u0 * inv, v0 * inv};
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    Scalar a = c;
    if (!first) {
      if (a.is_negative_leading()) {
        os << "-";
        a = -a;
      } else {
        os << "+";
      }
    } else {
      first = false;
    }
    bool unit = a.is_one();
    if (i == 0) {
      std::string s = a.to_string();
      os << (a.needs_parens() ? "(" + s + ")" : s);
    } else {
      if (!unit) {
        std::string s = a.to_string();
        os << (a.needs_parens() ? "(" + s + ")" : s) << "*";
      }
      os << "z";
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

ZPoly q_derivative(const ZPoly& p, const Scalar& base) {
  if (base.is_one()) throw std::domain_error("degenerate q-derivative base");
  // (p(base z) - p(z)) / ((base - 1) z): coefficient i-1 of the result is
  // p_i (base^i - 1)/(base - 1) = p_i (1 + base + ... + base^(i-1)).
  ZPoly r;
  if (p.degree() < 1) return r;
  std::vector<Scalar> out(static_cast<size_t>(p.degree()), Scalar());
  Scalar geom;  // 1 + base + ... + base^(i-1), running
  Scalar bp(1);
  for (int i = 1; i <= p.degree(); ++i) {
    geom += bp;
    bp *= base;
    out[i - 1] = p.coeff(i) * geom;
  }
  return ZPoly(std::move(out));
}

ZPoly c_poly(const ZPoly& p) {
  Scalar q2 = Scalar::q_power(2);
  return q_derivative(p, q2) * Scalar::q();
}

SeparabilityCertificate is_q2_separable(const ZPoly& p) {
  if (p.is_zero()) throw std::domain_error("separability of the zero polynomial");
  SeparabilityCertificate cert;
  ZPoly zpq2 = ZPoly::variable() * q_derivative(p, Scalar::q_power(2));
  auto [g, u, v] = ZPoly::extended_gcd(p, zpq2);
  cert.witness_gcd = g;
  cert.separable = (g.degree() == 0 && !g.is_zero());
  if (cert.separable) {
    cert.f = u;
    cert.g = v;
    // z * f0 + p * g0 = 1 exists because separability forces p(0) != 0
    auto [g2, u2, v2] = ZPoly::extended_gcd(ZPoly::variable(), p);
    if (g2.degree() != 0) throw std::domain_error("p(0) = 0 for separable p");
    cert.f0 = u2;
    cert.g0 = v2;
  }
  return cert;
}

}  // namespace gwa
