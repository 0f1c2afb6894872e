#include "hoc/nambu.hpp"

#include <string>

#include "hoc/courant.hpp"
#include "hoc/dsl.hpp"
#include "hoc/exterior.hpp"
#include "hoc/sampler.hpp"

namespace hoc {
namespace {

void require_degree(const NambuCandidate& c, const Form& f, int degree, const char* what) {
  if (f.degree() != degree || f.dim() != c.context().dim) {
    throw ArgumentError(std::string(what) + " must be a " + std::to_string(degree) + "-form on the chart");
  }
}

std::vector<std::string> texts(std::initializer_list<std::string> items) { return items; }

enum Stream : std::uint64_t {
  kGraph = 101,
  kLeibniz,
  kAnchor,
  kScalar,
  kAlgebra,
  kComparison,
  kMarreroAnchor,
  kExact,
  kSharpLie,
  kSharpInterior,
};

}  // namespace

NambuCandidate::NambuCandidate(const Context& ctx, MultiVec pi) : ctx_(ctx), pi_(std::move(pi)) {
  if (pi_.degree() != ctx.order + 1 || pi_.dim() != ctx.dim) {
    throw ArgumentError("Nambu candidate must be an (n+1)-vector field on the chart");
  }
}

MultiVec pi_sharp(const NambuCandidate& c, const Form& xi) {
  require_degree(c, xi, c.context().order, "argument of pi#");
  return contract(xi, c.pi());
}

CheckResult np_fundamental_check(const NambuCandidate& c, int max_degree) {
  if (max_degree < 1) throw ArgumentError("degree bound must be at least 1");
  const int m = c.context().dim;
  const int n = c.context().order;
  const auto monomials = monomials_up_to(m, max_degree);
  std::vector<Poly> functions;
  std::vector<Form> differentials;
  for (const auto& mono : monomials) {
    functions.push_back(Poly::monomial(m, mono));
    differentials.push_back(differential(functions.back()));
  }
  const auto count = static_cast<int>(functions.size());

  CheckRecorder rec("fundamental-identity", "L_{pi#(df1 ^ ... ^ dfn)} pi = 0",
                    "all sets of " + std::to_string(n) + " distinct monomials of degree 1.." +
                        std::to_string(max_degree) + " in " + std::to_string(m) +
                        " variables; a finite family, not a proof for all smooth functions");
  // Lexicographic enumeration of increasing index tuples; repeated or
  // reordered tuples only change the wedge by a sign or kill it.
  std::vector<int> tuple(static_cast<std::size_t>(n));
  auto rec_fn = [&](auto&& self, int pos, int start, const Form& acc) -> void {
    if (pos == n) {
      if (acc.is_zero()) {
        rec.record(true, {}, {});
        return;
      }
      const MultiVec residual = lie_derivative(contract(acc, c.pi()), c.pi());
      rec.record(
          residual.is_zero(),
          [&] {
            std::vector<std::string> in;
            for (int t : tuple) in.push_back(dsl::print(functions[static_cast<std::size_t>(t)]));
            return in;
          },
          [&] { return dsl::print(residual); });
      return;
    }
    for (int i = start; i < count; ++i) {
      tuple[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1, wedge(acc, differentials[static_cast<std::size_t>(i)]));
    }
  };
  rec_fn(rec_fn, 0, 0, Form::scalar(Poly::constant(m, 1)));
  return std::move(rec).finish();
}

CheckResult graph_closure_check(const NambuCandidate& c, std::uint64_t seed, int samples, int max_degree,
                                GraphBracket bracket) {
  const Context& ctx = c.context();
  const auto basis = multi_indices(ctx.dim, ctx.order);
  const char* which = bracket == GraphBracket::dorfman ? "dorfman" : "courant";
  CheckRecorder rec(std::string("graph-closure-") + which,
                    "[[pi#a + a, pi#b + b]] = Z + g with Z = pi#(g)",
                    "all " + std::to_string(basis.size() * basis.size()) + " pairs of constant basis " +
                        std::to_string(ctx.order) + "-forms plus " + std::to_string(samples) +
                        " seeded random pairs, coefficients of degree <= " + std::to_string(max_degree));
  auto run = [&](const Form& a, const Form& b) {
    const Section ea(pi_sharp(c, a), a);
    const Section eb(pi_sharp(c, b), b);
    const Section br = bracket == GraphBracket::dorfman ? dorfman_bracket(ea, eb) : courant_bracket(ea, eb);
    const MultiVec residual = br.vec - pi_sharp(c, br.form);
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
        [&] { return dsl::print(residual); });
  };
  for (const auto& i : basis) {
    for (const auto& j : basis) run(Form::basis(ctx.dim, i), Form::basis(ctx.dim, j));
  }
  Sampler s(seed, kGraph);
  for (int k = 0; k < samples; ++k) {
    const Form a = s.form(ctx.dim, ctx.order, max_degree);
    const Form b = s.form(ctx.dim, ctx.order, max_degree);
    run(a, b);
  }
  return std::move(rec).finish();
}

Form nambu_form_bracket(const NambuCandidate& c, const Form& alpha, const Form& beta) {
  const MultiVec pa = pi_sharp(c, alpha);
  const MultiVec pb = pi_sharp(c, beta);
  return lie_derivative(pa, beta) - lie_derivative(pb, alpha) + exterior_derivative(interior(pb, alpha));
}

Form marrero_bracket(const NambuCandidate& c, const Form& alpha, const Form& beta) {
  const MultiVec pa = pi_sharp(c, alpha);
  require_degree(c, beta, c.context().order, "second argument");
  Poly full = pairing(exterior_derivative(alpha), c.pi());
  if (c.context().order % 2 == 0) full = -full;  // (-1)^{n+1}
  return lie_derivative(pa, beta) + full * beta;
}

Form leibniz_nm1_bracket(const NambuCandidate& c, const Form& xi, const Form& eta) {
  const int n = c.context().order;
  require_degree(c, xi, n - 1, "first argument");
  require_degree(c, eta, n - 1, "second argument");
  return lie_derivative(pi_sharp(c, exterior_derivative(xi)), eta);
}

std::vector<CheckResult> check_nambu_leibniz_algebroid(const NambuCandidate& c, std::uint64_t seed, int samples) {
  if (samples < 1) throw ArgumentError("samples must be at least 1");
  if (!np_fundamental_check(c, 2).passed()) {
    throw PreconditionError("pi is not Nambu-Poisson (fundamental identity fails on monomials of degree <= 2); "
                            "the Leibniz algebroid statements presuppose it");
  }
  const Context& ctx = c.context();
  const int m = ctx.dim;
  const int n = ctx.order;
  const std::string scope = std::to_string(samples) + " seeded random samples, coefficients of degree <= 2";
  const Rational sign_n = (n % 2 == 0) ? 1 : -1;
  std::vector<CheckResult> out;

  auto bracket = [&](const Form& a, const Form& b) { return nambu_form_bracket(c, a, b); };

  {
    CheckRecorder rec("leibniz", "[a,[b,g]_pi]_pi = [[a,b]_pi,g]_pi + [b,[a,g]_pi]_pi", scope);
    Sampler s(seed, kLeibniz);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n), g = s.form(m, n);
      const Form residual = bracket(a, bracket(b, g)) - bracket(bracket(a, b), g) - bracket(b, bracket(a, g));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b), dsl::print(g)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("anchor", "pi#[a,b]_pi = [pi#a, pi#b]", scope);
    Sampler s(seed, kAnchor);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const MultiVec residual = pi_sharp(c, bracket(a, b)) - lie_bracket(pi_sharp(c, a), pi_sharp(c, b));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("scalar-rule", "[a, f b]_pi = f [a,b]_pi + pi#(a)(f) b", scope);
    Sampler s(seed, kScalar);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const Poly f = s.poly(m);
      const Form residual = bracket(a, f * b) - f * bracket(a, b) - apply(pi_sharp(c, a), f) * b;
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b), dsl::print(f)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("leibniz-algebra", "{x,{y,z}_pi}_pi = {{x,y}_pi,z}_pi + {y,{x,z}_pi}_pi on (n-1)-forms", scope);
    Sampler s(seed, kAlgebra);
    auto br = [&](const Form& x, const Form& y) { return leibniz_nm1_bracket(c, x, y); };
    for (int k = 0; k < samples; ++k) {
      const Form x = s.form(m, n - 1), y = s.form(m, n - 1), z = s.form(m, n - 1);
      const Form residual = br(x, br(y, z)) - br(br(x, y), z) - br(y, br(x, z));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(x), dsl::print(y), dsl::print(z)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("exact-compatibility", "[dx, dy]_pi = d{x,y}_pi", scope);
    Sampler s(seed, kExact);
    for (int k = 0; k < samples; ++k) {
      const Form x = s.form(m, n - 1), y = s.form(m, n - 1);
      const Form residual = bracket(exterior_derivative(x), exterior_derivative(y)) -
                            exterior_derivative(leibniz_nm1_bracket(c, x, y));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(x), dsl::print(y)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("comparison", "pi#([a,b]_pi - [a,b]^pi) = 0", scope);
    Sampler s(seed, kComparison);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const MultiVec residual = pi_sharp(c, bracket(a, b) - marrero_bracket(c, a, b));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("comparison-anchor", "pi#[a,b]^pi = [pi#a, pi#b]", scope);
    Sampler s(seed, kMarreroAnchor);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const MultiVec residual = pi_sharp(c, marrero_bracket(c, a, b)) - lie_bracket(pi_sharp(c, a), pi_sharp(c, b));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("sharp-lie", "pi#(L_{pi#a} b) = [pi#a, pi#b] + (-1)^n <da, pi> pi#b", scope);
    Sampler s(seed, kSharpLie);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const MultiVec pa = pi_sharp(c, a), pb = pi_sharp(c, b);
      const MultiVec residual = pi_sharp(c, lie_derivative(pa, b)) - lie_bracket(pa, pb) -
                                (sign_n * pairing(exterior_derivative(a), c.pi())) * pb;
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("sharp-interior", "pi#(i_{pi#a} db) = (-1)^n <db, pi> pi#a", scope);
    Sampler s(seed, kSharpInterior);
    for (int k = 0; k < samples; ++k) {
      const Form a = s.form(m, n), b = s.form(m, n);
      const MultiVec pa = pi_sharp(c, a);
      const Form db = exterior_derivative(b);
      const MultiVec residual =
          pi_sharp(c, interior(pa, db)) - (sign_n * pairing(db, c.pi())) * pa;
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a), dsl::print(b)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  return out;
}

}  // namespace hoc
