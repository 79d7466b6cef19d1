// Verification harness: every identity the engine is built on, run as a
// named check with pass/fail/skipped status, deterministic random input
// streams, optional parallel execution, and text/JSON reporting.
#pragma once

#include <functional>
#include <random>

#include "gwa/integral.hpp"
#include "gwa/spin.hpp"

namespace gwa {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  std::string ref;
  CheckStatus status = CheckStatus::Pass;
  std::string counterexample;  // or the reason when skipped
  double millis = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  size_t count(CheckStatus s) const;
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  unsigned bound = 3;          // word-length bound for spanning sets
  unsigned random_iterations = 100;
  unsigned threads = 1;
  DerivParams deriv = DerivParams::defaults();
  SpinParams spin = SpinParams::defaults();
  uint64_t seed = 20160623;
};

VerificationReport run_verify_all(const CtxPtr& ctx, const VerifyOptions& opts);

// Deterministic random element generation shared by the verifier and the
// acceptance suite.
struct ElementRng {
  std::mt19937_64 engine;

  explicit ElementRng(uint64_t seed) : engine(seed) {}

  unsigned uniform(unsigned lo, unsigned hi);  // inclusive
  Scalar small_scalar();                       // +-(1..3) q^{-2..2}
  AMonomial monomial(unsigned max_word_length);
  std::vector<Gen> word(unsigned length);
  AlgElem elem(const CtxPtr& ctx, unsigned terms, unsigned max_word_length);
  BElem b_elem(const CtxPtr& ctx, unsigned terms, unsigned max_word_length);
  CoVector covector(const CtxPtr& ctx, unsigned terms, unsigned max_word_length);
  ZPoly zpoly(unsigned max_degree);
};

}  // namespace gwa
