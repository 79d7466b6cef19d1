// Exact coefficient arithmetic over Q(q): integer-coefficient polynomials
// in the deformation parameter q, and their quotients kept in lowest terms.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense polynomial in q with integer coefficients. coeff(i) is the
// coefficient of q^i; the top coefficient is nonzero unless the
// polynomial is zero.
class QPoly {
public:
  QPoly() = default;
  QPoly(long n) { if (n != 0) c_.push_back(BigInt(n)); }
  explicit QPoly(BigInt n) { if (n != 0) c_.push_back(std::move(n)); }
  static QPoly monomial(BigInt coeff, unsigned degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monomial() const;
  unsigned valuation() const;  // lowest nonzero power; 0 for the zero polynomial
  BigInt coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly shifted(unsigned k) const;         // multiply by q^k
  QPoly shifted_down(unsigned k) const;    // divide by q^k exactly
  QPoly divided_by_int(const BigInt& n) const;  // exact
  QPoly divided_exact(const QPoly& d) const;    // exact polynomial division
  BigInt content() const;                  // nonnegative gcd of coefficients
  static QPoly gcd(QPoly a, QPoly b);      // primitive, positive leading coefficient

  Rational eval(const Rational& q0) const;
  std::string to_string() const;
  size_t term_count() const;

private:
  void trim();
  std::vector<BigInt> c_;
};

// Element of Q(q): a fraction of integer polynomials in q, always reduced
// to lowest terms with a positive leading coefficient in the denominator.
// Zero is 0/1. The involution conj is the identity (q is kept real).
//
// Stored internally in Laurent normal form q^shift * num/den with num and
// den of q-valuation zero, so that multiplying by powers of q costs one
// integer addition. num() and den() expose the plain fraction.
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  Scalar(BigInt n) : num_(std::move(n)), den_(1) {}
  Scalar(const Rational& r);
  Scalar(QPoly num, QPoly den);

  static Scalar q();                 // the generator q itself
  static Scalar q_power(long k);     // q^k, k may be negative
  static const Scalar& zero();
  static const Scalar& one();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  // true when the value lies in Q (no dependence on q)
  bool is_rational() const { return shift_ == 0 && num_.degree() <= 0 && den_.degree() <= 0; }
  Rational as_rational() const;      // requires is_rational()

  QPoly num() const;  // numerator of the plain lowest-terms fraction
  QPoly den() const;  // denominator, with positive leading coefficient

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }

  Scalar inverse() const;            // throws on zero
  Scalar pow(long k) const;
  Scalar conj() const { return *this; }

  // leading numerator coefficient is negative (used for printing)
  bool is_negative_leading() const;

  // Evaluate at a nonzero rational point; throws "pole at specialization
  // point" when the denominator vanishes there.
  Rational specialize(const Rational& q0) const;

  std::string to_string() const;
  bool needs_parens() const;         // when embedded in a product

private:
  Scalar(long shift, QPoly num, QPoly den, int);  // raw, then normalized
  void reduce();
  long shift_ = 0;
  QPoly num_, den_;
};

// q^2-integer [l] = 1 + q^2 + ... + q^(2l-2); [0] = 0.
Scalar q_integer(unsigned l);

// Throws "root-of-unity degeneracy" when some [l], l <= lmax, vanishes at q0.
void check_not_root_of_unity(const Rational& q0, unsigned lmax);

// Sign of a scalar as a function on the real interval 0 < q < 1.
enum class IntervalSign { Negative, Positive, Mixed };
IntervalSign sign_on_unit_interval(const Scalar& s);

}  // namespace gwa
