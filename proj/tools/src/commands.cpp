#include "hoc_cli/commands.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hoc/courant.hpp"
#include "hoc/dsl.hpp"
#include "hoc/nambu.hpp"
#include "hoc/plectic.hpp"
#include "hoc/sampler.hpp"
#include "hoc_cli/report.hpp"

namespace hoc::cli {
namespace {

// Points for pointwise nondegeneracy draw from their own stream.
constexpr std::uint64_t kPointStream = 301;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = 0;
  std::optional<int> n;
  std::uint64_t seed = 0;
  SuiteParams params;
  std::optional<std::string> json;
  std::optional<std::string> theta, phi, pi, omega, xi, with_x;
};

void add_context(CLI::App& app, Options& o) {
  app.add_option("-m,--dim", o.m, "chart dimension")->required()->check(CLI::Range(1, kMaxDim));
  app.add_option("-n,--order", o.n, "bracket order")->check(CLI::PositiveNumber);
}

void add_suite(CLI::App& app, Options& o) {
  app.add_option("--seed", o.seed, "random seed")->default_val(0);
  app.add_option("--samples", o.params.samples, "random cases per check")->default_val(25)->check(CLI::PositiveNumber);
  app.add_option("--degree", o.params.degree, "polynomial degree bound D")->default_val(2)->check(CLI::Range(0, 8));
  app.add_option("--points", o.params.points, "evaluation points for pointwise rank tests")
      ->default_val(5)
      ->check(CLI::PositiveNumber);
  app.add_option("--json", o.json, "write the JSON report to a file, or to stdout without a path")
      ->expected(0, 1)
      ->default_str("");
}

Context context_of(const Options& o, std::optional<int> inferred, const char* hint) {
  const std::optional<int> n = o.n ? o.n : inferred;
  if (!n) throw UsageError(std::string("bracket order unknown; pass -n/--order") + hint);
  if (o.n && inferred && *o.n != *inferred) {
    throw UsageError("-n " + std::to_string(*o.n) + " disagrees with the degree of the structure (n = " +
                     std::to_string(*inferred) + ")");
  }
  return Context::make(o.m, *n);
}

template <class F>
auto with_label(const std::string& label, F&& f) {
  try {
    return f();
  } catch (const dsl::DslError& e) {
    throw UsageError(label + ": " + e.what());
  }
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required ") + flag);
  return *v;
}

// n inferred from a structure of degree n + shift; nullopt for a bare scalar.
template <class T>
std::optional<int> degree_hint(const std::optional<std::string>& text, int m, int shift) {
  if (!text) return std::nullopt;
  const dsl::Value v = with_label(*text, [&] { return dsl::parse_any(*text, m); });
  if (const T* t = std::get_if<T>(&v)) return t->degree() - shift;
  if (std::holds_alternative<Poly>(v)) return std::nullopt;
  throw UsageError(*text + ": wrong variance for this flag");
}

Form form_arg(const std::optional<std::string>& text, const char* flag, int m, int degree) {
  const std::string& s = require(text, flag);
  return with_label(std::string(flag), [&] { return dsl::parse_form(s, m, degree); });
}

SuiteReport make_report(const std::string& suite, const Context& ctx, const Options& o,
                        std::vector<CheckResult> checks) {
  SuiteReport r;
  r.suite = suite;
  r.m = ctx.dim;
  r.n = ctx.order;
  r.seed = o.seed;
  r.params = o.params;
  r.quantifier_scope = summarize_scopes(checks);
  r.checks = std::move(checks);
  return r;
}

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more) {
  for (auto& c : more) into.push_back(std::move(c));
}

SuiteReport run_check(const std::string& target, const Options& o) {
  const int m = o.m;
  const int samples = o.params.samples;
  if (target == "courant-axioms" || target == "dorfman-axioms") {
    const Context ctx = context_of(o, std::nullopt, "");
    return make_report(target, ctx, o,
                       target == "courant-axioms" ? check_courant_axioms(ctx, o.seed, samples)
                                                  : check_dorfman_axioms(ctx, o.seed, samples));
  }
  if (target == "deformation") {
    const Context ctx = context_of(o, degree_hint<Form>(o.theta, m, 2), " or --theta");
    const Form theta = form_arg(o.theta, "--theta", m, ctx.order + 2);
    return make_report(target, ctx, o, check_deformation(ctx, theta, o.seed, samples));
  }
  if (target == "gauge") {
    const Context ctx = context_of(o, degree_hint<Form>(o.phi, m, 1), " or --phi");
    const Form phi = form_arg(o.phi, "--phi", m, ctx.order + 1);
    return make_report(target, ctx, o, check_gauge_isomorphism(ctx, phi, o.seed, samples));
  }
  if (target == "nambu") {
    const Context ctx = context_of(o, degree_hint<MultiVec>(o.pi, m, 1), " or --pi");
    const std::string& text = require(o.pi, "--pi");
    const NambuCandidate c(ctx, with_label("--pi", [&] { return dsl::parse_multivec(text, m, ctx.order + 1); }));
    std::vector<CheckResult> checks;
    checks.push_back(np_fundamental_check(c, o.params.degree));
    checks.push_back(graph_closure_check(c, o.seed, samples, o.params.degree));
    checks.push_back(verdict_agreement("agreement", checks[0], checks[1]));
    if (checks[0].passed()) append(checks, check_nambu_leibniz_algebroid(c, o.seed, samples));
    return make_report(target, ctx, o, std::move(checks));
  }
  if (target == "plectic" || target == "admissible") {
    const Context ctx = context_of(o, degree_hint<Form>(o.omega, m, 1), " or --omega");
    const PlecticCandidate c(ctx, form_arg(o.omega, "--omega", m, ctx.order + 1));
    std::vector<CheckResult> checks;
    if (target == "plectic") {
      std::vector<std::vector<Rational>> points;
      Sampler s(o.seed, kPointStream);
      for (int i = 0; i < o.params.points; ++i) points.push_back(s.point(m));
      checks.push_back(nondegeneracy_check(c, points));
      append(checks, graph_closure_omega(c, o.seed, samples));
      if (o.theta) append(checks, deformed_graph_check(c, form_arg(o.theta, "--theta", m, ctx.order + 2), o.seed, samples));
    } else {
      append(checks, check_admissible_lie_algebroid(c, o.seed, samples));
      if (c.omega().has_constant_coefficients()) append(checks, check_hamiltonian_brackets(c, o.seed, samples));
    }
    return make_report(target, ctx, o, std::move(checks));
  }
  throw UsageError("unknown check target '" + target + "'");
}

int emit(const SuiteReport& report, const Options& o, std::ostream& out) {
  if (o.json && o.json->empty()) {
    out << to_json(report);
  } else {
    write_text(out, report);
    if (o.json) {
      std::ofstream file(*o.json, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *o.json);
      file << to_json(report);
    }
  }
  return report.passed() ? kPass : kCheckFailed;
}

int run_bracket(const std::string& kind, const std::string& e1, const std::string& e2, const Options& o,
                std::ostream& out) {
  if (kind == "deformed" && !o.theta) throw UsageError("the deformed bracket needs --theta");
  if (kind != "deformed" && o.theta) throw UsageError("--theta only applies to the deformed bracket");
  const Context ctx = context_of(o, degree_hint<Form>(o.theta, o.m, 2), "");
  const Section a = with_label("first section", [&] { return dsl::parse_section(e1, ctx); });
  const Section b = with_label("second section", [&] { return dsl::parse_section(e2, ctx); });
  Section result;
  if (kind == "courant") {
    result = courant_bracket(a, b);
  } else if (kind == "dorfman") {
    result = dorfman_bracket(a, b);
  } else {
    result = deformed_dorfman(a, b, form_arg(o.theta, "--theta", o.m, ctx.order + 2));
  }
  out << dsl::print(result) << "\n";
  return kPass;
}

int run_solve(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o, degree_hint<Form>(o.omega, o.m, 1), " or --omega");
  const PlecticCandidate c(ctx, form_arg(o.omega, "--omega", o.m, ctx.order + 1));
  const Form xi = form_arg(o.xi, "--xi", o.m, ctx.order - 1);
  std::optional<HamiltonianPair> pair;
  if (o.with_x) {
    const MultiVec x = with_label("--with-x", [&] { return dsl::parse_multivec(*o.with_x, o.m, 1); });
    pair = HamiltonianPair::verify(c, xi, x);
  } else {
    if (!c.omega().has_constant_coefficients()) {
      throw UsageError("omega has non-constant coefficients; supply a candidate field with --with-x to verify it");
    }
    pair = solve_hamiltonian(c, xi);
  }
  out << (pair ? dsl::print(pair->x()) : std::string("not-hamiltonian")) << "\n";
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact checker for higher Courant and Dorfman bracket identities", "hoc");
  app.require_subcommand(1);

  Options o;
  std::string kind, e1, e2, target;

  CLI::App* bracket = app.add_subcommand("bracket", "compute a bracket of two sections");
  bracket->add_option("kind", kind, "courant, dorfman or deformed")
      ->required()
      ->check(CLI::IsMember({"courant", "dorfman", "deformed"}));
  bracket->add_option("e1", e1, "first section, e.g. \"(@1 ; x2*dx1)\"")->required();
  bracket->add_option("e2", e2, "second section")->required();
  add_context(*bracket, o);
  bracket->add_option("--theta", o.theta, "(n+2)-form twisting the deformed bracket");

  CLI::App* check = app.add_subcommand("check", "run a seeded identity suite");
  check->add_option("target", target, "suite to run")
      ->required()
      ->check(CLI::IsMember({"courant-axioms", "dorfman-axioms", "deformation", "gauge", "nambu", "plectic",
                             "admissible"}));
  add_context(*check, o);
  add_suite(*check, o);
  check->add_option("--theta", o.theta, "(n+2)-form");
  check->add_option("--phi", o.phi, "(n+1)-form for the gauge transform");
  check->add_option("--pi", o.pi, "(n+1)-vector field");
  check->add_option("--omega", o.omega, "(n+1)-form");

  CLI::App* solve = app.add_subcommand("solve-hamiltonian", "find the Hamiltonian vector field of an (n-1)-form");
  add_context(*solve, o);
  solve->add_option("--omega", o.omega, "constant-coefficient (n+1)-form")->required();
  solve->add_option("--xi", o.xi, "(n-1)-form")->required();
  solve->add_option("--with-x", o.with_x, "candidate vector field to verify instead of solving");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*bracket) return run_bracket(kind, e1, e2, o, out);
    if (*check) return emit(run_check(target, o), o, out);
    return run_solve(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const dsl::DslError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ContextError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
  } catch (const InconsistentCandidateError& e) {
    err << "inconsistent candidate: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace hoc::cli
