#include "gwa/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gwa/linalg.hpp"
#include "gwa/parse.hpp"

namespace gwa {

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

size_t VerificationReport::count(CheckStatus s) const {
  size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

static const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << status_name(c.status) << "  " << c.name << "  (" << c.ref << ")";
    if (!c.counterexample.empty()) os << "\n      " << c.counterexample;
    os << "\n";
  }
  os << checks.size() << " checks: " << count(CheckStatus::Pass) << " passed, "
     << count(CheckStatus::Fail) << " failed, " << count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"ref", c.ref},
                   {"status", c.status == CheckStatus::Pass     ? "pass"
                              : c.status == CheckStatus::Fail ? "fail"
                                                              : "skipped"},
                   {"counterexample", c.counterexample},
                   {"millis", c.millis}});
  }
  return arr.dump(2);
}

// ---------------------------------------------------------------------------
// Random elements

unsigned ElementRng::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(engine);
}

Scalar ElementRng::small_scalar() {
  long n = static_cast<long>(uniform(1, 3));
  if (uniform(0, 1)) n = -n;
  long e = static_cast<long>(uniform(0, 4)) - 2;
  return Scalar(n) * Scalar::q_power(e);
}

AMonomial ElementRng::monomial(unsigned max_word_length) {
  unsigned len = uniform(0, max_word_length);
  unsigned a = uniform(0, len);
  unsigned b = uniform(0, len - a);
  unsigned c = len - a - b;
  AMonomial m;
  m.xexp = a;
  m.zplus = b;
  m.zminus = c;
  m.xsign = a == 0 ? XSign::None : (uniform(0, 1) ? XSign::Plus : XSign::Minus);
  return m;
}

std::vector<Gen> ElementRng::word(unsigned length) {
  std::vector<Gen> w(length);
  for (auto& g : w) g = static_cast<Gen>(uniform(0, 3));
  return w;
}

AlgElem ElementRng::elem(const CtxPtr& ctx, unsigned terms, unsigned max_word_length) {
  AlgElem e(ctx);
  for (unsigned i = 0; i < terms; ++i) e.add_term(monomial(max_word_length), small_scalar());
  return e;
}

BElem ElementRng::b_elem(const CtxPtr& ctx, unsigned terms, unsigned max_word_length) {
  BElem e(ctx);
  for (unsigned i = 0; i < terms; ++i) {
    unsigned len = uniform(0, max_word_length);
    unsigned a = uniform(0, len);
    BMonomial m;
    m.xyexp = a;
    m.zexp = len - a;
    m.sign = a == 0 ? BSign::None : (uniform(0, 1) ? BSign::X : BSign::Y);
    e.add_term(m, small_scalar());
  }
  return e;
}

CoVector ElementRng::covector(const CtxPtr& ctx, unsigned terms, unsigned max_word_length) {
  CoVector xi(ctx);
  xi.minus = elem(ctx, terms, max_word_length);
  xi.zero = elem(ctx, terms, max_word_length);
  xi.plus = elem(ctx, terms, max_word_length);
  return xi;
}

ZPoly ElementRng::zpoly(unsigned max_degree) {
  std::vector<Scalar> cs(uniform(0, max_degree) + 1);
  for (auto& c : cs) c = uniform(0, 3) == 0 ? Scalar() : small_scalar();
  return ZPoly(std::move(cs));
}

// ---------------------------------------------------------------------------
// The check registry

namespace {

struct Outcome {
  bool ok = true;
  std::string counterexample;
};

struct PendingCheck {
  std::string name;
  std::string ref;
  std::function<Outcome()> run;
  std::string skip_reason;  // nonempty: report as skipped without running
};

uint64_t mix_seed(uint64_t seed, const std::string& name) {
  uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (char c : name) h = (h ^ static_cast<uint64_t>(c)) * 0x100000001b3ull;
  return h;
}

class Registry {
public:

  void add(std::string name, std::string ref, std::function<Outcome()> fn) {
    checks_.push_back({std::move(name), std::move(ref), std::move(fn), ""});
  }

  void add_skipped(std::string name, std::string ref, std::string reason) {
    checks_.push_back({std::move(name), std::move(ref), nullptr, std::move(reason)});
  }

  std::vector<PendingCheck> take() { return std::move(checks_); }

private:
  std::vector<PendingCheck> checks_;
};

Outcome ok() { return {}; }
Outcome fail(std::string cex) { return {false, std::move(cex)}; }

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport run_verify_all(const CtxPtr& ctx, const VerifyOptions& opts) {
  Registry reg;
  const uint64_t seed = opts.seed;
  const unsigned bound = opts.bound;
  const unsigned iters = opts.random_iterations;
  const DerivParams& dparams = opts.deriv;
  const bool regular = ctx->regular();
  const bool has_integral = regular && ctx->degree() >= 1;
  const std::string not_regular = "p not q^2-separable";
  const std::string no_integral =
      regular ? "constant p has trivial integral space" : not_regular;

  auto spanning = a_monomials_up_to(bound);
  auto b_spanning = b_monomials_up_to(bound);

  // ---- core algebra -------------------------------------------------------

  reg.add("algebra/associativity", "(ab)c = a(bc) on random elements", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/associativity"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 3, 4), b = rng.elem(ctx, 3, 4), c = rng.elem(ctx, 3, 4);
      if (!((a * b) * c == a * (b * c)))
        return fail("a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string());
    }
    return ok();
  });

  reg.add("algebra/confluence", "rewrite strategies agree on random words", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/confluence"));
    for (unsigned i = 0; i < iters; ++i) {
      auto w = rng.word(rng.uniform(0, 8));
      AlgElem l = normalize_word(ctx, w, Scalar(1), RewriteStrategy::Leftmost);
      AlgElem r = normalize_word(ctx, w, Scalar(1), RewriteStrategy::Rightmost);
      if (!(l == r)) {
        std::string ws;
        for (Gen g : w) ws += std::string(gen_name(g)) + " ";
        return fail("word " + ws);
      }
    }
    return ok();
  });

  reg.add("algebra/fastpath-vs-rewriter", "closed-form product equals literal rewriting", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/fastpath-vs-rewriter"));
    for (unsigned i = 0; i < iters; ++i) {
      auto w = rng.word(rng.uniform(0, 8));
      AlgElem prod = AlgElem::unit(ctx);
      for (Gen g : w) prod = prod * AlgElem::generator(ctx, g);
      if (!(prod == normalize_word(ctx, w))) {
        std::string ws;
        for (Gen g : w) ws += std::string(gen_name(g)) + " ";
        return fail("word " + ws);
      }
    }
    return ok();
  });

  reg.add("algebra/defining-relations", "generator relations hold in normal form", [=] {
    auto gen = [&](Gen g) { return AlgElem::generator(ctx, g); };
    Scalar q = Scalar::q();
    if (!(gen(Gen::Zp) * gen(Gen::Zm) == gen(Gen::Zm) * gen(Gen::Zp))) return fail("z+ z-");
    for (Gen z : {Gen::Zp, Gen::Zm}) {
      if (!(gen(Gen::Xp) * gen(z) == gen(z) * gen(Gen::Xp) * q.inverse()))
        return fail(std::string("x+ ") + gen_name(z));
      if (!(gen(Gen::Xm) * gen(z) == gen(z) * gen(Gen::Xm) * q))
        return fail(std::string("x- ") + gen_name(z));
    }
    if (!(gen(Gen::Xp) * gen(Gen::Xm) == AlgElem::from_zpoly(ctx, ctx->p()))) return fail("x+ x-");
    ZPoly pq2 = ctx->p().scaled_argument(Scalar::q_power(2));
    if (!(gen(Gen::Xm) * gen(Gen::Xp) == AlgElem::from_zpoly(ctx, pq2))) return fail("x- x+");
    // B relations transported through theta
    auto bgen = [&](BGen g) { return BElem::generator(ctx, g); };
    BElem bx = bgen(BGen::X), by = bgen(BGen::Y), bz = bgen(BGen::Z);
    if (!(bx * bz == bz * bx * Scalar::q_power(2))) return fail("x z");
    if (!(by * bz == bz * by * Scalar::q_power(-2))) return fail("y z");
    if (!(bx * by == BElem::from_zpoly(ctx, pq2 * ZPoly::variable() * Scalar::q_power(2))))
      return fail("x y");
    if (!(by * bx == BElem::from_zpoly(ctx, ctx->p() * ZPoly::variable()))) return fail("y x");
    return ok();
  });

  reg.add("algebra/grading-multiplicative", "degree(uv) = degree(u) + degree(v)", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/grading-multiplicative"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem u = AlgElem::monomial(ctx, rng.monomial(5), rng.small_scalar());
      AlgElem v = AlgElem::monomial(ctx, rng.monomial(5), rng.small_scalar());
      long du = 0, dv = 0, dp = 0;
      u.is_homogeneous(&du);
      v.is_homogeneous(&dv);
      AlgElem prod = u * v;
      if (!prod.is_homogeneous(&dp) || (!prod.is_zero() && dp != du + dv))
        return fail("u = " + u.to_string() + ", v = " + v.to_string());
    }
    return ok();
  });

  reg.add("algebra/star-antihomomorphism", "(ab)* = b* a* and star reverses degree", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/star-antihomomorphism"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 3, 4), b = rng.elem(ctx, 3, 4);
      if (!((a * b).star() == b.star() * a.star()))
        return fail("a = " + a.to_string() + ", b = " + b.to_string());
      if (!(a.star().star() == a)) return fail("a = " + a.to_string());
    }
    for (const auto& m : spanning) {
      AlgElem a = AlgElem::monomial(ctx, m);
      long d = 0, ds = 0;
      a.is_homogeneous(&d);
      if (!a.star().is_homogeneous(&ds) || ds != -d) return fail("monomial " + m.to_string());
    }
    return ok();
  });

  reg.add("algebra/theta-isomorphism",
          "theta is an algebra isomorphism onto the degree-zero part", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "algebra/theta-isomorphism"));
    for (unsigned i = 0; i < iters; ++i) {
      BElem u = rng.b_elem(ctx, 3, 4), v = rng.b_elem(ctx, 3, 4);
      if (!(theta(u * v) == theta(u) * theta(v)))
        return fail("u = " + u.to_string() + ", v = " + v.to_string());
      if (!(theta_inverse(theta(u)) == u)) return fail("u = " + u.to_string());
      if (!(theta(u.star()) == theta(u).star())) return fail("u = " + u.to_string());
    }
    // every degree-0 monomial is in the image
    for (const auto& m : spanning) {
      if (m.degree() != 0) continue;
      AlgElem a = AlgElem::monomial(ctx, m);
      if (!(theta(theta_inverse(a)) == a)) return fail("monomial " + m.to_string());
    }
    return ok();
  });

  reg.add("cli/print-parse-roundtrip", "printing then parsing is the identity", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "cli/print-parse-roundtrip"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 4, 5);
      if (!(parse_a_expr(a.to_string(), ctx) == a)) return fail(a.to_string());
      BElem b = rng.b_elem(ctx, 4, 5);
      if (!(parse_b_expr(b.to_string(), ctx) == b)) return fail(b.to_string());
      Scalar s = rng.small_scalar() + rng.small_scalar();
      if (!(parse_scalar(s.to_string()) == s)) return fail(s.to_string());
    }
    return ok();
  });

  // ---- derivations --------------------------------------------------------

  reg.add("derivations/sigma-automorphism", "sigma is a degree-scaling automorphism", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "derivations/sigma-automorphism"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 3, 4), b = rng.elem(ctx, 3, 4);
      for (SigmaTag t : {SigmaTag::Plus, SigmaTag::Zero, SigmaTag::Minus}) {
        if (!(sigma(t, a * b) == sigma(t, a) * sigma(t, b)))
          return fail("a = " + a.to_string() + ", b = " + b.to_string());
        if (!(sigma_inverse(t, sigma(t, a)) == a)) return fail("a = " + a.to_string());
      }
      if (!(sigma(SigmaTag::Plus, a) == sigma(SigmaTag::Minus, a)))
        return fail("a = " + a.to_string());
    }
    return ok();
  });

  reg.add("derivations/skew-leibniz",
          "d(ab) = d(a) sigma(b) + a d(b) on all monomial pairs", [=] {
    Calculus calc(ctx, dparams);
    for (DerivTag t : {DerivTag::D0, DerivTag::DPlus, DerivTag::DMinus}) {
      const SkewDerivation& d = calc.partial(t);
      for (const auto& ma : spanning) {
        AlgElem a = AlgElem::monomial(ctx, ma);
        AlgElem da = d(a);
        for (const auto& mb : spanning) {
          AlgElem b = AlgElem::monomial(ctx, mb);
          if (!(d(a * b) == da * sigma(d.twist(), b) + a * d(b)))
            return fail(ma.to_string() + " , " + mb.to_string());
        }
      }
    }
    return ok();
  });

  reg.add("derivations/q-skew-identities",
          "sigma^{-1} d sigma = q^{+-2} d and sigma_0^{-1} d0 sigma_0 = d0", [=] {
    Calculus calc(ctx, dparams);
    ElementRng rng = ElementRng(mix_seed(seed, "derivations/q-skew-identities"));
    const auto& d0 = calc.partial(DerivTag::D0);
    const auto& dp = calc.partial(DerivTag::DPlus);
    const auto& dm = calc.partial(DerivTag::DMinus);
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 3, 5);
      if (!(sigma_inverse(SigmaTag::Plus, dp(sigma(SigmaTag::Plus, a))) ==
            dp(a) * Scalar::q_power(2)))
        return fail("a = " + a.to_string());
      if (!(sigma_inverse(SigmaTag::Minus, dm(sigma(SigmaTag::Minus, a))) ==
            dm(a) * Scalar::q_power(-2)))
        return fail("a = " + a.to_string());
      if (!(sigma_inverse(SigmaTag::Zero, d0(sigma(SigmaTag::Zero, a))) == d0(a)))
        return fail("a = " + a.to_string());
    }
    return ok();
  });

  reg.add("derivations/degree-shifts", "|d0(a)| = |a|, |d+-(a)| = |a| -+ 2", [=] {
    Calculus calc(ctx, dparams);
    for (const auto& m : spanning) {
      AlgElem a = AlgElem::monomial(ctx, m);
      long d = m.degree(), got = 0;
      AlgElem v0 = calc.partial(DerivTag::D0)(a);
      if (!v0.is_homogeneous(&got) || (!v0.is_zero() && got != d)) return fail(m.to_string());
      AlgElem vp = calc.partial(DerivTag::DPlus)(a);
      if (!vp.is_homogeneous(&got) || (!vp.is_zero() && got != d - 2)) return fail(m.to_string());
      AlgElem vm = calc.partial(DerivTag::DMinus)(a);
      if (!vm.is_homogeneous(&got) || (!vm.is_zero() && got != d + 2)) return fail(m.to_string());
    }
    return ok();
  });

  reg.add("derivations/closed-forms",
          "d0 scales one-sided monomials by the signed q^2-integer of their length", [=] {
    // d0(x+^n z+^m) = a0 [m+n] x+^n z+^m and
    // d0(x-^n z-^m) = -a0 q^{-2(m+n)} [m+n] x-^n z-^m
    Calculus calc(ctx, dparams);
    const auto& d0 = calc.partial(DerivTag::D0);
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned m = 0; n + m <= 8; ++m) {
        AMonomial plus{n ? XSign::Plus : XSign::None, n, m, 0};
        AlgElem a = AlgElem::monomial(ctx, plus);
        if (!(d0(a) == a * (dparams.alpha0 * q_integer(m + n))))
          return fail("x+^" + std::to_string(n) + " z+^" + std::to_string(m));
        AMonomial minus{n ? XSign::Minus : XSign::None, n, 0, m};
        AlgElem b = AlgElem::monomial(ctx, minus);
        Scalar coeff = -(dparams.alpha0 * q_integer(m + n) *
                         Scalar::q_power(-2 * static_cast<long>(m + n)));
        if (!(d0(b) == b * coeff))
          return fail("x-^" + std::to_string(n) + " z-^" + std::to_string(m));
      }
    }
    return ok();
  });

  reg.add("derivations/delta-leibniz",
          "delta_+- obey the untwisted Leibniz rule over the base algebra", [=] {
    Calculus calc(ctx, dparams);
    for (DerivTag t : {DerivTag::DPlus, DerivTag::DMinus}) {
      const auto& d = calc.partial(t);
      for (const auto& mu : b_spanning) {
        BElem u = BElem::monomial(ctx, mu);
        for (const auto& mv : b_spanning) {
          BElem v = BElem::monomial(ctx, mv);
          if (!(delta(d, u * v) == delta(d, u) * theta(v) + theta(u) * delta(d, v)))
            return fail(mu.to_string() + " , " + mv.to_string());
        }
      }
    }
    return ok();
  });

  reg.add("derivations/delta-degree",
          "delta_+- land in degree -+2 and d0 vanishes on the base algebra", [=] {
    Calculus calc(ctx, dparams);
    for (const auto& mb : b_spanning) {
      BElem u = BElem::monomial(ctx, mb);
      if (!calc.partial(DerivTag::D0)(theta(u)).is_zero()) return fail(mb.to_string());
      long d = 0;
      AlgElem vp = delta(calc.partial(DerivTag::DPlus), u);
      if (!vp.is_homogeneous(&d) || (!vp.is_zero() && d != -2)) return fail(mb.to_string());
      AlgElem vm = delta(calc.partial(DerivTag::DMinus), u);
      if (!vm.is_homogeneous(&d) || (!vm.is_zero() && d != 2)) return fail(mb.to_string());
    }
    return ok();
  });

  // ---- calculus -----------------------------------------------------------

  reg.add("calculus/d-leibniz", "d(ab) = d(a).b + a.d(b) on monomial pairs", [=] {
    Calculus calc(ctx, dparams);
    for (const auto& ma : spanning) {
      AlgElem a = AlgElem::monomial(ctx, ma);
      OmegaElem da = calc.d(a);
      for (const auto& mb : spanning) {
        AlgElem b = AlgElem::monomial(ctx, mb);
        if (!(calc.d(a * b) == right_act(da, b) + left_mul(a, calc.d(b))))
          return fail(ma.to_string() + " , " + mb.to_string());
      }
    }
    return ok();
  });

  reg.add("calculus/omega-relations",
          "w_i g = q^{..} g w_i for every generator and basis one-form", [=] {
    Scalar q = Scalar::q();
    for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus}) {
      OmegaElem w = OmegaElem::basis(ctx, i);
      long scale = i == OmegaIndex::Zero ? 2 : 1;
      for (Gen g : {Gen::Xp, Gen::Xm, Gen::Zp, Gen::Zm}) {
        AlgElem e = AlgElem::generator(ctx, g);
        OmegaElem lhs = right_act(w, e);
        OmegaElem rhs = left_mul(e * q.pow(scale * gen_degree(g)), w);
        if (!(lhs == rhs)) return fail(std::string(omega_name(i)) + " " + gen_name(g));
      }
    }
    return ok();
  });

  reg.add("calculus/bimodule-compat", "(a.w).b = a.(w.b)", [=] {
    ElementRng rng = ElementRng(mix_seed(seed, "calculus/bimodule-compat"));
    for (unsigned i = 0; i < iters; ++i) {
      AlgElem a = rng.elem(ctx, 2, 3), b = rng.elem(ctx, 2, 3);
      OmegaElem w(rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3));
      if (!(right_act(left_mul(a, w), b) == left_mul(a, right_act(w, b))))
        return fail("a = " + a.to_string() + ", b = " + b.to_string());
    }
    return ok();
  });

  reg.add("calculus/degree-bookkeeping",
          "d sends degree k into k+2 (w-), k (w0), k-2 (w+) coefficients", [=] {
    Calculus calc(ctx, dparams);
    for (const auto& m : spanning) {
      OmegaElem w = calc.d(AlgElem::monomial(ctx, m));
      long k = m.degree(), d = 0;
      if (!w.minus.is_homogeneous(&d) || (!w.minus.is_zero() && d != k + 2))
        return fail(m.to_string());
      if (!w.zero.is_homogeneous(&d) || (!w.zero.is_zero() && d != k)) return fail(m.to_string());
      if (!w.plus.is_homogeneous(&d) || (!w.plus.is_zero() && d != k - 2))
        return fail(m.to_string());
    }
    return ok();
  });

  reg.add("calculus/horizontal-projection",
          "the projection is idempotent and fixes d of the base algebra", [=] {
    Calculus calc(ctx, dparams);
    ElementRng rng = ElementRng(mix_seed(seed, "calculus/horizontal-projection"));
    for (unsigned i = 0; i < iters; ++i) {
      OmegaElem w(rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3));
      if (!(horizontal(horizontal(w)) == horizontal(w))) return fail(w.to_string());
      BElem u = rng.b_elem(ctx, 3, 3);
      OmegaElem du = calc.d(theta(u));
      if (!(horizontal(du) == du)) return fail("u = " + u.to_string());
    }
    return ok();
  });

  if (dparams.star_compatible()) {
    reg.add("calculus/star-calculus", "d(a*) = d(a)* and star_omega is involutive", [=] {
      Calculus calc(ctx, dparams);
      ElementRng rng = ElementRng(mix_seed(seed, "calculus/star-calculus"));
      for (unsigned i = 0; i < iters; ++i) {
        AlgElem a = rng.elem(ctx, 3, 4);
        if (!(calc.d(a.star()) == calc.star(calc.d(a)))) return fail("a = " + a.to_string());
        OmegaElem w(rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3), rng.elem(ctx, 2, 3));
        if (!(calc.star(calc.star(w)) == w)) return fail(w.to_string());
        AlgElem b = rng.elem(ctx, 2, 3);
        if (!(calc.star(left_mul(a, right_act(w, b))) ==
              left_mul(b.star(), right_act(calc.star(w), a.star()))))
          return fail("a = " + a.to_string() + ", w = " + w.to_string());
      }
      return ok();
    });
  } else {
    reg.add_skipped("calculus/star-calculus", "d(a*) = d(a)* and star_omega is involutive",
                    "derivation parameters are not star-compatible");
  }

  if (regular) {
    reg.add("calculus/density-witnesses", "basis one-forms lie in A d(A), exactly", [=] {
      Calculus calc(ctx, dparams);
      for (OmegaIndex t : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus}) {
        DensityWitness w = calc.density_witness(t);
        if (!(calc.evaluate(w) == OmegaElem::basis(ctx, t))) return fail(omega_name(t));
      }
      return ok();
    });
    reg.add("calculus/bar-witnesses",
            "the six generator one-forms of the restricted calculus are reachable", [=] {
      Calculus calc(ctx, dparams);
      for (BarTarget t : {BarTarget::ZpSqWm, BarTarget::XpSqWm, BarTarget::ZpXpWm,
                          BarTarget::ZmSqWp, BarTarget::XmSqWp, BarTarget::ZmXmWp}) {
        BarWitness w = calc.bar_omega_witness(t);
        if (!(calc.evaluate(w) == calc.bar_target_form(t))) return fail(bar_target_name(t));
      }
      return ok();
    });
  } else {
    reg.add_skipped("calculus/density-witnesses", "basis one-forms lie in A d(A), exactly",
                    not_regular);
    reg.add_skipped("calculus/bar-witnesses",
                    "the six generator one-forms of the restricted calculus are reachable",
                    not_regular);
  }

  // ---- integral -----------------------------------------------------------

  if (has_integral) {
    reg.add("integral/divergence-contract", "div(xi.a) = div(xi) a + xi(d(a))", [=] {
      Calculus calc(ctx, dparams);
      ElementRng rng = ElementRng(mix_seed(seed, "integral/divergence-contract"));
      for (unsigned i = 0; i < iters; ++i) {
        CoVector xi = rng.covector(ctx, 2, 3);
        AlgElem a = rng.elem(ctx, 2, 3);
        if (!(divergence(calc, xi.acted(a)) ==
              divergence(calc, xi) * a + xi.evaluate(calc.d(a))))
          return fail("a = " + a.to_string());
      }
      return ok();
    });
    reg.add("integral/dual-basis-kernel", "div of each dual-basis covector is zero", [=] {
      Calculus calc(ctx, dparams);
      for (OmegaIndex i : {OmegaIndex::Minus, OmegaIndex::Zero, OmegaIndex::Plus}) {
        if (!divergence(calc, CoVector::dual_basis(ctx, i)).is_zero())
          return fail(omega_name(i));
      }
      return ok();
    });
    reg.add("integral/kernel-inclusion", "the image of div lies in ker Lambda", [=] {
      Calculus calc(ctx, dparams);
      ElementRng rng = ElementRng(mix_seed(seed, "integral/kernel-inclusion"));
      for (unsigned i = 0; i < iters; ++i) {
        CoVector xi = rng.covector(ctx, 2, 3);
        if (!integral(divergence(calc, xi)).is_zero()) return fail("xi found");
      }
      return ok();
    });
    reg.add("integral/oracle-agreement",
            "closed combination equals direct recurrence on powers of z", [=] {
      for (unsigned k = 0; k <= 30; ++k) {
        AMonomial m;
        m.zplus = m.zminus = k;
        AlgElem a = AlgElem::monomial(ctx, m);
        if (!(integral(a) == integral_by_recurrence(a))) return fail("z^" + std::to_string(k));
      }
      return ok();
    });
    reg.add("integral/lambda-functional",
            "Lambda(q^2 p(q^2 z) f(q^2 z)) = Lambda(p f) for random f", [=] {
      ElementRng rng = ElementRng(mix_seed(seed, "integral/lambda-functional"));
      for (unsigned i = 0; i < iters; ++i) {
        if (!check_lambda_functional(ctx, rng.zpoly(6))) return fail("f found");
      }
      return ok();
    });
    reg.add("integral/vanishing-families",
            "Lambda kills x^{k+1} z^l and y^{k+1} z^l", [=] {
      for (unsigned k = 0; k + 1 <= 4; ++k) {
        for (unsigned l = 0; l <= 3; ++l) {
          BMonomial mx{BSign::X, k + 1, l};
          BMonomial my{BSign::Y, k + 1, l};
          if (!integral(theta(BElem::monomial(ctx, mx))).is_zero())
            return fail(mx.to_string());
          if (!integral(theta(BElem::monomial(ctx, my))).is_zero())
            return fail(my.to_string());
        }
      }
      return ok();
    });
    reg.add("integral/space-dimension",
            "Lambda restricted to a bounded slice of K[z] has rank n", [=] {
      int n = ctx->degree();
      unsigned kmax = static_cast<unsigned>(n) + 6;
      ScalarMatrix m;
      for (unsigned k = 0; k <= kmax; ++k) {
        AMonomial mono;
        mono.zplus = mono.zminus = k;
        m.push_back(integral(AlgElem::monomial(ctx, mono)).coeffs);
      }
      if (matrix_rank(std::move(m)) != static_cast<unsigned>(n)) return fail("rank deficit");
      return ok();
    });
    reg.add("integral/beta-q-independence",
            "beta entries are plain rationals for rational monic p", [=] {
      bool rational_phat = true;
      for (const auto& c : ctx->p_hat().coeffs())
        if (!c.is_rational()) rational_phat = false;
      if (!rational_phat) return ok();  // premise vacuous
      BetaTable t = beta_table(ctx, 20);
      if (!t.q_independent()) return fail("q-dependent beta entry");
      return ok();
    });
  } else {
    for (const char* name :
         {"integral/divergence-contract", "integral/dual-basis-kernel",
          "integral/kernel-inclusion", "integral/oracle-agreement", "integral/lambda-functional",
          "integral/vanishing-families", "integral/space-dimension",
          "integral/beta-q-independence"})
      reg.add_skipped(name, "integral-space identity", no_integral);
  }

  // ---- spin geometry ------------------------------------------------------

  if (regular) {
    const SpinParams& sparams = opts.spin;
    reg.add("spin/strong-connection", "l(+-1) legs multiply-sum to 1 with degrees (-n, n)", [=] {
      SpinGeometry geom(ctx, dparams, sparams);
      for (int n : {1, -1}) {
        AlgElem sum(ctx);
        for (const auto& [l, r] : geom.strong_connection(n)) {
          long dl = 0, dr = 0;
          if (!l.is_homogeneous(&dl) || (!l.is_zero() && dl != -n)) return fail("leg degree");
          if (!r.is_homogeneous(&dr) || (!r.is_zero() && dr != n)) return fail("leg degree");
          sum += l * r;
        }
        if (!(sum == AlgElem::unit(ctx))) return fail("n = " + std::to_string(n));
      }
      return ok();
    });
    reg.add("spin/idempotents", "e(+-1)^2 = e(+-1) and e(1) + e(-1) = id", [=] {
      SpinGeometry geom(ctx, dparams, sparams);
      auto [e1, em1] = geom.idempotents();
      if (!(e1 * e1 == e1)) return fail("e(1)");
      if (!(em1 * em1 == em1)) return fail("e(-1)");
      if (!(e1 + em1 == BMatrix2::identity(ctx))) return fail("sum");
      return ok();
    });
    reg.add("spin/dirac-factorization",
            "the direct Dirac formula equals clifford after the connection", [=] {
      SpinGeometry geom(ctx, dparams, sparams);
      for (const auto& m : a_monomials_of_degree(-1, bound)) {
        Spinor s = Spinor::plus_section(AlgElem::monomial(ctx, m));
        if (!(geom.dirac(s) == geom.dirac_via_connection(s))) return fail(m.to_string());
      }
      for (const auto& m : a_monomials_of_degree(1, bound)) {
        Spinor s = Spinor::minus_section(AlgElem::monomial(ctx, m));
        if (!(geom.dirac(s) == geom.dirac_via_connection(s))) return fail(m.to_string());
      }
      return ok();
    });
    reg.add("spin/grading-anticommutes", "D gamma = -gamma D", [=] {
      SpinGeometry geom(ctx, dparams, sparams);
      for (const auto& m : a_monomials_of_degree(-1, bound)) {
        Spinor s = Spinor::plus_section(AlgElem::monomial(ctx, m));
        if (!(geom.dirac(SpinGeometry::grading(s)) == -SpinGeometry::grading(geom.dirac(s))))
          return fail(m.to_string());
      }
      for (const auto& m : a_monomials_of_degree(1, bound)) {
        Spinor s = Spinor::minus_section(AlgElem::monomial(ctx, m));
        if (!(geom.dirac(SpinGeometry::grading(s)) == -SpinGeometry::grading(geom.dirac(s))))
          return fail(m.to_string());
      }
      return ok();
    });
    // the real-structure conditions, one named check each
    for (const char* name : {"j-squared", "j-gamma-anticommute", "j-d-commute", "order-zero",
                             "order-one", "partial-star-exchange", "d-commutator-form"}) {
      std::string full = std::string("spin/") + name;
      reg.add(full, "real-structure condition", [=] {
        SpinGeometry geom(ctx, dparams, sparams);
        for (const auto& c : verify_ko_dimension(geom, bound)) {
          if (c.name == name) {
            if (c.pass) return ok();
            return fail(c.counterexample);
          }
        }
        return fail("condition not found");
      });
    }
    reg.add("spin/negative-control",
            "a deliberately wrong nu must break J D = D J with a counterexample", [=] {
      SpinParams bad = sparams;
      bad.nu = bad.nu * Scalar::q();
      SpinGeometry geom(ctx, dparams, bad);
      for (const auto& c : verify_ko_dimension(geom, std::min(bound, 2u))) {
        if (c.name == "j-d-commute") {
          if (!c.pass && !c.counterexample.empty()) return ok();
          return fail("perturbed nu did not break J D = D J");
        }
      }
      return fail("condition not found");
    });
  } else {
    for (const char* name :
         {"spin/strong-connection", "spin/idempotents", "spin/dirac-factorization",
          "spin/grading-anticommutes", "spin/j-squared", "spin/j-gamma-anticommute",
          "spin/j-d-commute", "spin/order-zero", "spin/order-one",
          "spin/partial-star-exchange", "spin/d-commutator-form", "spin/negative-control"})
      reg.add_skipped(name, "spin-geometry identity", not_regular);
  }

  // ---- run ----------------------------------------------------------------

  std::vector<PendingCheck> pending = reg.take();
  std::sort(pending.begin(), pending.end(),
            [](const PendingCheck& a, const PendingCheck& b) { return a.name < b.name; });

  VerificationReport report;
  report.checks.resize(pending.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const PendingCheck& pc = pending[i];
      CheckResult r;
      r.name = pc.name;
      r.ref = pc.ref;
      if (!pc.skip_reason.empty()) {
        r.status = CheckStatus::Skipped;
        r.counterexample = pc.skip_reason;
      } else {
        auto t0 = std::chrono::steady_clock::now();
        try {
          Outcome o = pc.run();
          r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
          r.counterexample = o.counterexample;
        } catch (const std::exception& e) {
          r.status = CheckStatus::Fail;
          r.counterexample = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
      }
      report.checks[i] = std::move(r);
    }
  };
  unsigned nthreads = std::max(1u, opts.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace gwa
