// Strong connection values, spinor-bundle idempotents, the spinor
// connection, Clifford action, Dirac operator, grading, and real structure.
#pragma once

#include "gwa/calculus.hpp"

namespace gwa {

// beta_+, beta_-, nu for the Clifford action and the real structure. The
// orientation declares the sign of conj(beta_-)/beta_+ on 0 < q < 1:
// a negative ratio gives KO-dimension 2 (J^2 = -id), a positive ratio the
// KO-dimension 6 variant (J^2 = +id, with the sign of the real structure
// flipped accordingly). validate() performs exact sign analysis on (0,1)
// and checks nu^2 = -+ q^3 conj(beta_-)/beta_+.
struct SpinParams {
  enum class Orientation { NegativeRatio, PositiveRatio };

  Scalar beta_plus;
  Scalar beta_minus;
  Scalar nu;
  Orientation orientation = Orientation::NegativeRatio;

  static SpinParams defaults();  // (1, -q^{-3}, 1), negative ratio
  Scalar ratio() const;          // conj(beta_minus)/beta_plus
  bool constraint_holds() const;
  void validate() const;
};

// Element of S = A_{-1} s+ (+) A_1 s-: both components homogeneous of the
// required degree (zero allowed).
class Spinor {
public:
  explicit Spinor(const CtxPtr& ctx);
  Spinor(AlgElem plus_part, AlgElem minus_part);

  static Spinor zero(const CtxPtr& ctx) { return Spinor(ctx); }
  static Spinor plus_section(AlgElem a);   // a s+, |a| = -1
  static Spinor minus_section(AlgElem b);  // b s-, |b| = +1

  const CtxPtr& ctx() const { return plus_.ctx(); }
  const AlgElem& plus() const { return plus_; }
  const AlgElem& minus() const { return minus_; }
  bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }

  Spinor operator+(const Spinor& o) const;
  Spinor operator-(const Spinor& o) const;
  Spinor operator-() const;
  Spinor operator*(const Scalar& s) const;
  bool operator==(const Spinor& o) const;

  std::string to_string() const;

private:
  AlgElem plus_, minus_;
};

// left action of B(p;q) through theta
Spinor left_mul(const BElem& u, const Spinor& s);

struct BMatrix2 {
  std::array<std::array<BElem, 2>, 2> at;

  static BMatrix2 identity(const CtxPtr& ctx);
  BMatrix2 operator*(const BMatrix2& o) const;
  BMatrix2 operator+(const BMatrix2& o) const;
  bool operator==(const BMatrix2& o) const;
  std::string to_string() const;
};

class SpinGeometry {
public:
  SpinGeometry(CtxPtr ctx, DerivParams deriv = DerivParams::defaults(),
               SpinParams spin = SpinParams::defaults());

  const CtxPtr& ctx() const { return calc_.ctx(); }
  const Calculus& calculus() const { return calc_; }
  const SpinParams& spin_params() const { return spin_; }

  // tensor legs of the strong connection value l(n), n = +-1; multiplying
  // each pair and summing gives 1, legs have degrees (-n, n)
  std::vector<std::pair<AlgElem, AlgElem>> strong_connection(int n) const;

  // the idempotents e(1), e(-1) presenting A_1 and A_{-1} as projective
  // B-modules; each squares to itself and they sum to the identity
  std::pair<BMatrix2, BMatrix2> idempotents() const;

  // the spinor connection expanded over the strong-connection legs
  std::vector<std::pair<OmegaElem, Spinor>> connection(const Spinor& s) const;

  // Clifford action of a horizontal one-form (comp_zero = 0, comp_minus of
  // degree 2, comp_plus of degree -2)
  Spinor clifford(const OmegaElem& w, const Spinor& s) const;

  Spinor dirac(const Spinor& s) const;                 // direct formula
  Spinor dirac_via_connection(const Spinor& s) const;  // clifford o connection

  static Spinor grading(const Spinor& s);

  Spinor real_structure(const Spinor& s) const;  // validates the parameters
  Spinor apply_j_unchecked(const Spinor& s) const;

private:
  Calculus calc_;
  SpinParams spin_;
};

struct KoCondition {
  std::string name;
  std::string ref;
  bool pass = false;
  std::string counterexample;
};

// The real-structure conditions on spanning sets of word-length <= bound:
// J^2 = -+id, J gamma = -gamma J, J D = D J, the order-zero and order-one
// commutant conditions, and the exchange identities between the degree
// -+2 derivations and the involution.
std::vector<KoCondition> verify_ko_dimension(const SpinGeometry& geom, unsigned bound);

// Basis-monomial enumeration used for spanning-set checks.
std::vector<AMonomial> a_monomials_of_degree(long degree, unsigned max_word_length);
std::vector<AMonomial> a_monomials_up_to(unsigned max_word_length);
std::vector<BMonomial> b_monomials_up_to(unsigned max_word_length);

}  // namespace gwa
