// Elements and normal-form arithmetic of the generalized Weyl algebras
// A(p;q) (generators x+, x-, z+, z-) and B(p;q) (generators x, y, z),
// together with the grading, the degree-zero isomorphism theta, and the
// star structure.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gwa/zpoly.hpp"

namespace gwa {

class AlgebraCtx;
using CtxPtr = std::shared_ptr<const AlgebraCtx>;

// Immutable bundle shared by all elements of one algebra: the defining
// polynomial p, its separability certificate, and derived data.
class AlgebraCtx {
public:
  static CtxPtr make(ZPoly p);

  const ZPoly& p() const { return p_; }
  const ZPoly& c() const { return c_; }  // c(z) = q p_{q^2}(z)
  const SeparabilityCertificate& certificate() const { return cert_; }
  bool regular() const { return cert_.separable; }
  int degree() const { return p_.degree(); }         // n = deg p
  const Scalar& p_at_zero() const { return p0_; }
  const ZPoly& p_hat() const { return p_hat_; }      // monic form of p
  const std::vector<Scalar>& mu() const { return mu_; }  // p_hat = z^n - sum mu_i z^i
  void require_regular() const;

private:
  AlgebraCtx() = default;
  ZPoly p_, c_, p_hat_;
  SeparabilityCertificate cert_;
  Scalar p0_;
  std::vector<Scalar> mu_;
};

bool same_ctx(const CtxPtr& a, const CtxPtr& b);

enum class Gen : uint8_t { Xp, Xm, Zp, Zm };
const char* gen_name(Gen g);
int gen_degree(Gen g);

enum class XSign : int8_t { Minus = -1, None = 0, Plus = 1 };

// Canonical basis monomial x_s^xexp * z+^zplus * z-^zminus with the x-block
// to the left of the z-block; xexp = 0 iff xsign = None.
struct AMonomial {
  XSign xsign = XSign::None;
  uint32_t xexp = 0;
  uint32_t zplus = 0;
  uint32_t zminus = 0;

  long degree() const {
    return static_cast<long>(xsign) * xexp + static_cast<long>(zplus) - static_cast<long>(zminus);
  }
  unsigned word_length() const { return xexp + zplus + zminus; }
  bool is_unit() const { return xexp == 0 && zplus == 0 && zminus == 0; }
  auto operator<=>(const AMonomial&) const = default;

  std::string to_string() const;
  std::vector<Gen> word() const;  // canonical generator word
};

// Normal-form element of A(p;q): a sparse map from basis monomials to
// nonzero scalars.
class AlgElem {
public:
  AlgElem() = default;
  explicit AlgElem(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static AlgElem zero(CtxPtr ctx) { return AlgElem(std::move(ctx)); }
  static AlgElem unit(CtxPtr ctx);
  static AlgElem scalar(CtxPtr ctx, Scalar s);
  static AlgElem generator(CtxPtr ctx, Gen g);
  static AlgElem monomial(CtxPtr ctx, AMonomial m, Scalar coeff = Scalar(1));
  // evaluation of f at the central element z = z+ z-
  static AlgElem from_zpoly(CtxPtr ctx, const ZPoly& f);

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<AMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  AlgElem operator-() const;
  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator*(const AlgElem& o) const;
  AlgElem operator*(const Scalar& s) const;
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  bool operator==(const AlgElem& o) const;

  AlgElem pow(unsigned k) const;
  void add_term(const AMonomial& m, const Scalar& coeff);

  // grading
  std::map<long, AlgElem> grade_decompose() const;
  bool is_homogeneous(long* deg = nullptr) const;  // zero counts as any degree
  AlgElem graded_scale(long power_per_degree) const;  // term of degree k -> q^(power_per_degree*k) * term

  AlgElem star() const;
  std::string to_string() const;

private:
  CtxPtr ctx_;
  std::map<AMonomial, Scalar> terms_;
};

// Literal rewriting of generator words to normal form; the order in which
// redexes are contracted is selectable so confluence can be tested.
enum class RewriteStrategy { Leftmost, Rightmost };
AlgElem normalize_word(const CtxPtr& ctx, std::span<const Gen> word,
                       const Scalar& prefactor = Scalar(1),
                       RewriteStrategy strategy = RewriteStrategy::Leftmost);

// ---------------------------------------------------------------------------
// B(p;q)

enum class BGen : uint8_t { X, Y, Z };
const char* bgen_name(BGen g);

enum class BSign : int8_t { Y = -1, None = 0, X = 1 };

// Canonical basis monomial x^e z^m or y^e z^m; e = 0 iff sign = None.
struct BMonomial {
  BSign sign = BSign::None;
  uint32_t xyexp = 0;
  uint32_t zexp = 0;

  unsigned word_length() const { return xyexp + zexp; }
  bool is_unit() const { return xyexp == 0 && zexp == 0; }
  auto operator<=>(const BMonomial&) const = default;
  std::string to_string() const;
};

class BElem {
public:
  BElem() = default;
  explicit BElem(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static BElem zero(CtxPtr ctx) { return BElem(std::move(ctx)); }
  static BElem unit(CtxPtr ctx);
  static BElem scalar(CtxPtr ctx, Scalar s);
  static BElem generator(CtxPtr ctx, BGen g);
  static BElem monomial(CtxPtr ctx, BMonomial m, Scalar coeff = Scalar(1));
  static BElem from_zpoly(CtxPtr ctx, const ZPoly& f);  // f evaluated at z

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<BMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BElem operator-() const;
  BElem operator+(const BElem& o) const;
  BElem operator-(const BElem& o) const;
  BElem operator*(const BElem& o) const;
  BElem operator*(const Scalar& s) const;
  BElem& operator+=(const BElem& o);
  BElem& operator-=(const BElem& o);
  bool operator==(const BElem& o) const;

  BElem pow(unsigned k) const;
  void add_term(const BMonomial& m, const Scalar& coeff);

  BElem star() const;
  std::string to_string() const;

private:
  CtxPtr ctx_;
  std::map<BMonomial, Scalar> terms_;
};

// The isomorphism theta: B(p;q) -> A(p;q)_0, x -> x- z+, y -> z- x+,
// z -> z- z+, and its inverse on the degree-zero part.
AlgElem theta(const BElem& b);
BElem theta_inverse(const AlgElem& a);

}  // namespace gwa
