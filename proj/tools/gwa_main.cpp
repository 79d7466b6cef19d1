// Command-line front end: expression evaluation in A(p;q) and B(p;q),
// derivation and calculus queries, integral tables, and the verification
// harness. Exit codes: 0 success, 1 verification failure, 2 usage or
// parse error.
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "gwa/parse.hpp"
#include "gwa/verify.hpp"

using namespace gwa;

namespace {

struct CommonOpts {
  std::string p_text = "z^2-1";
  std::string config_path;
  std::string alpha0, alpha_plus, alpha_minus;
  std::string beta_plus, beta_minus, nu;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

struct Session {
  CtxPtr ctx;
  DerivParams deriv = DerivParams::defaults();
  SpinParams spin = SpinParams::defaults();
};

Session make_session(const CommonOpts& o) {
  Session s;
  std::map<std::string, std::string> cfg;
  if (!o.config_path.empty()) cfg = read_config(o.config_path);
  auto pick = [&](const std::string& flag, const char* key) -> std::string {
    if (!flag.empty()) return flag;
    auto it = cfg.find(key);
    return it == cfg.end() ? std::string() : it->second;
  };
  Scalar a0 = DerivParams::defaults().alpha0;
  Scalar ap = DerivParams::defaults().alpha_plus;
  Scalar am = DerivParams::defaults().alpha_minus;
  if (auto t = pick(o.alpha0, "alpha0"); !t.empty()) a0 = parse_scalar(t);
  if (auto t = pick(o.alpha_plus, "alpha+"); !t.empty()) ap = parse_scalar(t);
  if (auto t = pick(o.alpha_minus, "alpha-"); !t.empty()) am = parse_scalar(t);
  s.deriv = DerivParams(a0, ap, am);
  if (auto t = pick(o.beta_plus, "beta+"); !t.empty()) s.spin.beta_plus = parse_scalar(t);
  if (auto t = pick(o.beta_minus, "beta-"); !t.empty()) s.spin.beta_minus = parse_scalar(t);
  if (auto t = pick(o.nu, "nu"); !t.empty()) s.spin.nu = parse_scalar(t);
  s.ctx = AlgebraCtx::make(parse_zpoly(o.p_text));
  return s;
}

int report_exit(const VerificationReport& report, const std::string& json_path) {
  std::cout << report.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.to_json() << "\n";
    std::cout << "json report written to " << json_path << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for the generalized Weyl algebras A(p;q) and B(p;q)"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--p", common.p_text, "defining polynomial p(z)")->capture_default_str();
  app.add_option("--config", common.config_path, "key = value file with parameter overrides");
  app.add_option("--alpha0", common.alpha0, "scaling of the degree-preserving derivation");
  app.add_option("--alpha+", common.alpha_plus, "scaling of the degree -2 derivation");
  app.add_option("--alpha-", common.alpha_minus, "scaling of the degree +2 derivation");
  app.add_option("--beta+", common.beta_plus, "Clifford action coefficient beta+");
  app.add_option("--beta-", common.beta_minus, "Clifford action coefficient beta-");
  app.add_option("--nu", common.nu, "real-structure coefficient nu");

  std::string expr1, expr2, which, algebra = "A";
  unsigned kmax = 20, bound = 3, threads = 1;
  std::string json_path;

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr1)->required();
  nf->add_option("--algebra", algebra, "A or B")->check(CLI::IsMember({"A", "B"}));

  auto* mulc = app.add_subcommand("mul", "product of two expressions");
  mulc->add_option("expr1", expr1)->required();
  mulc->add_option("expr2", expr2)->required();
  mulc->add_option("--algebra", algebra, "A or B")->check(CLI::IsMember({"A", "B"}));

  auto* gradec = app.add_subcommand("grade", "decompose by Z-degree");
  gradec->add_option("expr", expr1)->required();

  auto* applyc = app.add_subcommand("apply", "apply a derivation or automorphism");
  applyc->add_option("map", which)
      ->required()
      ->check(CLI::IsMember({"d0", "d+", "d-", "sigma0", "sigma+", "sigma-"}));
  applyc->add_option("expr", expr1)->required();

  auto* dc = app.add_subcommand("d", "exterior derivative of an expression");
  dc->add_option("expr", expr1)->required();

  auto* densc = app.add_subcommand("density-witness", "density witness for a basis one-form");
  densc->add_option("target", which)->required()->check(CLI::IsMember({"w-", "w0", "w+"}));

  auto* barc = app.add_subcommand("bar-witness",
                                  "witness for a generator one-form of the restricted calculus");
  barc->add_option("target", which, "e.g. \"z+^2*w-\"")->required();

  auto* intc = app.add_subcommand("integral", "integral of an expression");
  intc->add_option("expr", expr1)->required();

  auto* itab = app.add_subcommand("integral-table", "Lambda(z^k) for k = 0..kmax");
  itab->add_option("--kmax", kmax)->capture_default_str();

  auto* btab = app.add_subcommand("beta-table", "beta coefficients for k = 0..kmax");
  btab->add_option("--kmax", kmax)->capture_default_str();

  auto* divc = app.add_subcommand("divergence", "divergence of a covector");
  std::string val_m = "0", val_0 = "0", val_p = "0";
  divc->add_option("--wm", val_m, "value on w-");
  divc->add_option("--w0", val_0, "value on w0");
  divc->add_option("--wp", val_p, "value on w+");

  auto* dirc = app.add_subcommand("dirac", "Dirac operator on a spinor expression");
  dirc->add_option("spinor", expr1, "e.g. \"z-*s+ + x+*s-\"")->required();

  app.add_subcommand("idempotents", "spinor-bundle idempotents e(1), e(-1)");

  auto* kov = app.add_subcommand("verify-ko", "verify the real-structure conditions");
  kov->add_option("--bound", bound, "word-length bound for spanning sets")->capture_default_str();
  kov->add_option("--json", json_path, "write a JSON report");

  auto* vall = app.add_subcommand("verify-all", "run the complete verification suite");
  vall->add_option("--bound", bound)->capture_default_str();
  vall->add_option("--json", json_path, "write a JSON report");
  vall->add_option("--threads", threads, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Session s = make_session(common);
    Calculus calc(s.ctx, s.deriv);

    if (nf->parsed()) {
      if (algebra == "A")
        std::cout << parse_a_expr(expr1, s.ctx).to_string() << "\n";
      else
        std::cout << parse_b_expr(expr1, s.ctx).to_string() << "\n";
    } else if (mulc->parsed()) {
      if (algebra == "A")
        std::cout << (parse_a_expr(expr1, s.ctx) * parse_a_expr(expr2, s.ctx)).to_string() << "\n";
      else
        std::cout << (parse_b_expr(expr1, s.ctx) * parse_b_expr(expr2, s.ctx)).to_string() << "\n";
    } else if (gradec->parsed()) {
      for (const auto& [deg, comp] : parse_a_expr(expr1, s.ctx).grade_decompose())
        std::cout << deg << ": " << comp.to_string() << "\n";
    } else if (applyc->parsed()) {
      AlgElem a = parse_a_expr(expr1, s.ctx);
      AlgElem out(s.ctx);
      if (which == "d0") out = calc.partial(DerivTag::D0)(a);
      else if (which == "d+") out = calc.partial(DerivTag::DPlus)(a);
      else if (which == "d-") out = calc.partial(DerivTag::DMinus)(a);
      else if (which == "sigma0") out = sigma(SigmaTag::Zero, a);
      else if (which == "sigma+") out = sigma(SigmaTag::Plus, a);
      else out = sigma(SigmaTag::Minus, a);
      std::cout << out.to_string() << "\n";
    } else if (dc->parsed()) {
      std::cout << calc.d(parse_a_expr(expr1, s.ctx)).to_string() << "\n";
    } else if (densc->parsed()) {
      OmegaIndex t = which == "w-" ? OmegaIndex::Minus
                     : which == "w0" ? OmegaIndex::Zero
                                     : OmegaIndex::Plus;
      DensityWitness w = calc.density_witness(t);
      for (const auto& [a, b] : w.pairs)
        std::cout << "(" << a.to_string() << ") * d( " << b.to_string() << " )\n";
      std::cout << "evaluates to: " << calc.evaluate(w).to_string() << "\n";
    } else if (barc->parsed()) {
      OmegaElem want = parse_omega(which, s.ctx);
      std::optional<BarTarget> target;
      for (BarTarget t : {BarTarget::ZpSqWm, BarTarget::XpSqWm, BarTarget::ZpXpWm,
                          BarTarget::ZmSqWp, BarTarget::XmSqWp, BarTarget::ZmXmWp}) {
        if (calc.bar_target_form(t) == want) target = t;
      }
      if (!target) {
        std::cerr << "target must be one of the six generator one-forms, e.g. z+^2*w-\n";
        return 2;
      }
      BarWitness w = calc.bar_omega_witness(*target);
      for (const auto& [u, g, v] : w.triples)
        std::cout << "(" << u.to_string() << ") * d(" << bgen_name(g) << ") * ("
                  << v.to_string() << ")\n";
      std::cout << "evaluates to: " << calc.evaluate(w).to_string() << "\n";
    } else if (intc->parsed()) {
      IntegralValue v = integral(parse_a_expr(expr1, s.ctx));
      std::cout << v.to_string() << "\n";
    } else if (itab->parsed()) {
      for (unsigned k = 0; k <= kmax; ++k) {
        AMonomial m;
        m.zplus = m.zminus = k;
        std::cout << k << "\t" << integral(AlgElem::monomial(s.ctx, m)).to_string() << "\n";
      }
    } else if (btab->parsed()) {
      BetaTable t = beta_table(s.ctx, kmax);
      for (unsigned k = 0; k <= kmax; ++k) {
        std::cout << k << "\t[";
        for (int i = 0; i < t.n; ++i) std::cout << (i ? ", " : "") << t.beta[k][i].to_string();
        std::cout << "]\n";
      }
    } else if (divc->parsed()) {
      CoVector xi(s.ctx);
      xi.minus = parse_a_expr(val_m, s.ctx);
      xi.zero = parse_a_expr(val_0, s.ctx);
      xi.plus = parse_a_expr(val_p, s.ctx);
      std::cout << divergence(calc, xi).to_string() << "\n";
    } else if (dirc->parsed()) {
      SpinGeometry geom(s.ctx, s.deriv, s.spin);
      std::cout << geom.dirac(parse_spinor(expr1, s.ctx)).to_string() << "\n";
    } else if (app.get_subcommand("idempotents")->parsed()) {
      SpinGeometry geom(s.ctx, s.deriv, s.spin);
      auto [e1, em1] = geom.idempotents();
      std::cout << "e(1)  = " << e1.to_string() << "\n";
      std::cout << "e(-1) = " << em1.to_string() << "\n";
    } else if (kov->parsed()) {
      s.spin.validate();
      SpinGeometry geom(s.ctx, s.deriv, s.spin);
      VerificationReport report;
      for (const auto& c : verify_ko_dimension(geom, bound)) {
        CheckResult r;
        r.name = "spin/" + c.name;
        r.ref = c.ref;
        r.status = c.pass ? CheckStatus::Pass : CheckStatus::Fail;
        r.counterexample = c.counterexample;
        report.checks.push_back(std::move(r));
      }
      return report_exit(report, json_path);
    } else if (vall->parsed()) {
      VerifyOptions opts;
      opts.bound = bound;
      opts.threads = threads;
      opts.deriv = s.deriv;
      opts.spin = s.spin;
      return report_exit(run_verify_all(s.ctx, opts), json_path);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
