// Polynomials in one central variable z with Q(q) coefficients: the home of
// the defining polynomial p, its q-derivatives, and Bezout certificates.
#pragma once

#include <optional>

#include "gwa/scalar.hpp"

namespace gwa {

class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(Scalar constant);
  explicit ZPoly(std::vector<Scalar> coeffs);
  static ZPoly variable();                        // z
  static ZPoly monomial(Scalar coeff, unsigned degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Scalar& coeff(unsigned i) const;
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const Scalar& s) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  ZPoly pow(unsigned k) const;
  Scalar eval(const Scalar& at) const;
  ZPoly scaled_argument(const Scalar& gamma) const;  // z -> gamma * z
  ZPoly divided_by_z() const;                        // exact; constant term must vanish
  ZPoly monic() const;                               // divide by leading coefficient

  // division with remainder over the field Q(q)
  static std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b);
  static ZPoly gcd(ZPoly a, ZPoly b);  // monic (or zero)
  // extended euclid: returns (g, u, v) with u*a + v*b = g, g monic or zero
  static std::tuple<ZPoly, ZPoly, ZPoly> extended_gcd(const ZPoly& a, const ZPoly& b);

  std::string to_string() const;  // in the variable z

private:
  void trim();
  std::vector<Scalar> c_;
};

// (p(base z) - p(z)) / ((base - 1) z); throws "degenerate q-derivative base"
// when base = 1.
ZPoly q_derivative(const ZPoly& p, const Scalar& base);

// c(z) = q * p_{q^2}(z)
ZPoly c_poly(const ZPoly& p);

// Bezout data certifying q^2-separability: f*p + g*(z*p_{q^2}) = 1 and
// f0*z + g0*p = 1. The cofactors are meaningful only when separable.
struct SeparabilityCertificate {
  bool separable = false;
  ZPoly witness_gcd;  // monic gcd(p, z*p_{q^2})
  ZPoly f, g;
  ZPoly f0, g0;
};

SeparabilityCertificate is_q2_separable(const ZPoly& p);

}  // namespace gwa
