#include "gwa/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace gwa {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// QPoly

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(BigInt coeff, unsigned degree) {
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, BigInt(0));
    p.c_[degree] = std::move(coeff);
  }
  return p;
}

bool QPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

unsigned QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<unsigned>(i);
  return 0;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  auto scale_shift = [](const QPoly& p, const BigInt& c, size_t k) {
    QPoly r;
    r.c_.assign(p.c_.size() + k, BigInt(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      if (p.c_[i] != 0) r.c_[i + k] = p.c_[i] * c;
    return r;
  };
  if (is_monomial()) return scale_shift(o, leading(), c_.size() - 1);
  if (o.is_monomial()) return scale_shift(*this, o.leading(), o.c_.size() - 1);
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.c_.assign(c_.size() + k, BigInt(0));
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

QPoly QPoly::shifted_down(unsigned k) const {
  if (k == 0) return *this;
  if (valuation() < k) throw std::domain_error("inexact q-power division");
  QPoly r;
  if (c_.size() > k) r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

QPoly QPoly::divided_by_int(const BigInt& n) const {
  QPoly r = *this;
  for (auto& c : r.c_) {
    if (c % n != 0) throw std::domain_error("inexact integer division of polynomial");
    c /= n;
  }
  return r;
}

QPoly QPoly::divided_exact(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return QPoly();
  QPoly rem = *this;
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) throw std::domain_error("inexact polynomial division");
  QPoly quot;
  quot.c_.assign(qd + 1, BigInt(0));
  for (int k = qd; k >= 0; --k) {
    BigInt top = rem.coeff(k + dd);
    if (top == 0) continue;
    if (top % d.leading() != 0) throw std::domain_error("inexact polynomial division");
    BigInt f = top / d.leading();
    quot.c_[k] = f;
    for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * d.c_[i];
  }
  rem.trim();
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  quot.trim();
  return quot;
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  auto primitive = [](QPoly p) {
    if (p.is_zero()) return p;
    BigInt c = p.content();
    if (p.leading() < 0) c = -c;
    return p.divided_by_int(c);
  };
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  // primitive pseudo-remainder sequence
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    QPoly rem = a;
    int dd = b.degree();
    int steps = rem.degree() - dd;
    for (int s = 0; s <= steps; ++s) rem = rem * QPoly(b.leading());
    for (int k = rem.degree() - dd; k >= 0; --k) {
      BigInt top = rem.coeff(k + dd);
      if (top == 0) continue;
      BigInt f = top / b.leading();  // exact after premultiplication
      for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * b.c_[i];
    }
    rem.trim();
    a = std::move(b);
    b = primitive(std::move(rem));
  }
  return a;
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + Rational(*it);
  return acc;
}

size_t QPoly::term_count() const {
  size_t n = 0;
  for (const auto& c : c_)
    if (c != 0) ++n;
  return n;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& r)
    : num_(BigInt(boost::multiprecision::numerator(r))),
      den_(BigInt(boost::multiprecision::denominator(r))) {}

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

Scalar::Scalar(long shift, QPoly num, QPoly den, int)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

Scalar Scalar::q() { return Scalar(1, QPoly(1), QPoly(1), 0); }

Scalar Scalar::q_power(long k) { return Scalar(k, QPoly(1), QPoly(1), 0); }

const Scalar& Scalar::zero() {
  static const Scalar s;
  return s;
}

const Scalar& Scalar::one() {
  static const Scalar s(1);
  return s;
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = QPoly(1);
    return;
  }
  // pull all q-powers into the shift
  unsigned vn = num_.valuation(), vd = den_.valuation();
  shift_ += static_cast<long>(vn) - static_cast<long>(vd);
  if (vn > 0) num_ = num_.shifted_down(vn);
  if (vd > 0) den_ = den_.shifted_down(vd);
  // integer content
  BigInt g = int_gcd(num_.content(), den_.content());
  if (den_.leading() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_by_int(g);
    den_ = den_.divided_by_int(g);
  }
  // both parts now have nonzero constant term; only a genuine polynomial
  // factor can remain
  if (den_.degree() == 0 || num_.degree() == 0) return;
  QPoly g2 = QPoly::gcd(num_, den_);
  if (g2.degree() > 0) {
    num_ = num_.divided_exact(g2);
    den_ = den_.divided_exact(g2);
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

QPoly Scalar::num() const { return shift_ >= 0 ? num_.shifted(static_cast<unsigned>(shift_)) : num_; }

QPoly Scalar::den() const {
  return shift_ >= 0 ? den_ : den_.shifted(static_cast<unsigned>(-shift_));
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("scalar depends on q");
  if (is_zero()) return Rational(0);
  return Rational(num_.coeff(0)) / Rational(den_.coeff(0));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (shift_ == o.shift_ && den_ == o.den_)
    return Scalar(shift_, num_ + o.num_, den_, 0);
  long base = std::min(shift_, o.shift_);
  QPoly a = num_.shifted(static_cast<unsigned>(shift_ - base));
  QPoly b = o.num_.shifted(static_cast<unsigned>(o.shift_ - base));
  return Scalar(base, a * o.den_ + b * den_, den_ * o.den_, 0);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  return Scalar(shift_ + o.shift_, num_ * o.num_, den_ * o.den_, 0);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(-shift_, den_, num_, 0);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(1);
  Scalar base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::is_negative_leading() const {
  return !num_.is_zero() && num_.leading() < 0;
}

Rational Scalar::specialize(const Rational& q0) const {
  if (q0 == 0) throw std::domain_error("specialization point must be nonzero");
  Rational d = den_.eval(q0);
  if (d == 0) throw std::domain_error("pole at specialization point");
  Rational v = num_.eval(q0) / d;
  long e = shift_;
  Rational f = q0;
  if (e < 0) {
    f = 1 / q0;
    e = -e;
  }
  for (long i = 0; i < e; ++i) v *= f;
  return v;
}

bool Scalar::needs_parens() const {
  return num_.term_count() > 1 || den_.term_count() > 1;
}

std::string Scalar::to_string() const {
  QPoly n = num(), d = den();
  if (d.is_one()) return n.to_string();
  std::string ns = n.to_string();
  std::string ds = d.to_string();
  if (n.term_count() > 1 || n.leading() < 0) ns = "(" + ns + ")";
  if (d.term_count() > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

Scalar q_integer(unsigned l) {
  QPoly p;
  if (l == 0) return Scalar();
  p = QPoly(0);
  for (unsigned j = 0; j < l; ++j) p = p + QPoly::monomial(1, 2 * j);
  return Scalar(std::move(p), QPoly(1));
}

void check_not_root_of_unity(const Rational& q0, unsigned lmax) {
  for (unsigned l = 1; l <= lmax; ++l) {
    if (q_integer(l).specialize(q0) == 0) throw std::domain_error("root-of-unity degeneracy");
  }
}

// ---------------------------------------------------------------------------
// Sign on (0,1) via a Sturm sequence over Q.

namespace {

using RatPoly = std::vector<Rational>;  // coefficient i of q^i

void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_from(const QPoly& p) {
  RatPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.push_back(Rational(p.coeff(i)));
  rp_trim(r);
  return r;
}

RatPoly rp_derivative(const RatPoly& p) {
  RatPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  rp_trim(r);
  return r;
}

RatPoly rp_neg_rem(RatPoly a, const RatPoly& b) {
  // remainder of a by b, negated
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    rp_trim(a);
  }
  for (auto& c : a) c = -c;
  return a;
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide out all factors q and (q - 1).
RatPoly rp_deflate_endpoints(RatPoly p) {
  while (!p.empty() && p.front() == 0) p.erase(p.begin());
  auto eval1 = [&] { return rp_eval(p, Rational(1)); };
  while (!p.empty() && eval1() == 0) {
    // synthetic division by (q - 1)
    RatPoly q(p.size() - 1);
    Rational carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
      carry = p[i] + carry;
      q[i - 1] = carry;
    }
    p = std::move(q);
    rp_trim(p);
  }
  return p;
}

// Number of distinct roots in the open interval (0,1).
int roots_in_unit_interval(RatPoly p) {
  p = rp_deflate_endpoints(std::move(p));
  if (p.size() <= 1) return 0;
  std::vector<RatPoly> sturm;
  sturm.push_back(p);
  sturm.push_back(rp_derivative(p));
  rp_trim(sturm.back());
  while (!sturm.back().empty() && sturm.back().size() > 1) {
    RatPoly next = rp_neg_rem(sturm[sturm.size() - 2], sturm.back());
    if (next.empty()) break;
    sturm.push_back(std::move(next));
  }
  auto variations = [&](const Rational& x) {
    int v = 0;
    int prev = 0;
    for (const auto& sp : sturm) {
      Rational val = rp_eval(sp, x);
      int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(Rational(0)) - variations(Rational(1));
}

}  // namespace

IntervalSign sign_on_unit_interval(const Scalar& s) {
  if (s.is_zero()) return IntervalSign::Mixed;
  if (roots_in_unit_interval(rp_from(s.num())) > 0) return IntervalSign::Mixed;
  if (roots_in_unit_interval(rp_from(s.den())) > 0) return IntervalSign::Mixed;
  Rational mid(1, 2);
  Rational v = s.specialize(mid);
  if (v == 0) return IntervalSign::Mixed;  // root exactly at 1/2
  return v > 0 ? IntervalSign::Positive : IntervalSign::Negative;
}

}  // namespace gwa
