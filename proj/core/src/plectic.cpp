#include "hoc/plectic.hpp"

#include <algorithm>
#include <string>

#include "hoc/courant.hpp"
#include "hoc/dsl.hpp"
#include "hoc/exterior.hpp"
#include "hoc/linear.hpp"
#include "hoc/sampler.hpp"

namespace hoc {
namespace {

std::vector<std::string> texts(std::initializer_list<std::string> items) { return items; }

enum Stream : std::uint64_t {
  kGraph = 201,
  kTwistedGraph,
  kGaugeIso,
  kSkew,
  kJacobi,
  kAnchor,
  kScalar,
  kHamExact,
  kHamSemi,
  kHamSym,
};

std::string scope_for(int samples) {
  return std::to_string(samples) + " seeded random samples, coefficients of degree <= 2";
}

void require_samples(int samples) {
  if (samples < 1) throw ArgumentError("samples must be at least 1");
}

// Column j holds the coefficients of i_{@j} omega on the degree-n basis,
// each coefficient mapped through `entry`.
template <class Entry>
RationalMatrix flat_matrix(const PlecticCandidate& c, const std::vector<MultiIndex>& rows, Entry entry) {
  const int m = c.context().dim;
  RationalMatrix a(static_cast<int>(rows.size()), m);
  for (int j = 1; j <= m; ++j) {
    const Form col = interior(coordinate_field(m, j), c.omega());
    for (std::size_t r = 0; r < rows.size(); ++r) a.at(static_cast<int>(r), j - 1) = entry(col.coeff(rows[r]));
  }
  return a;
}

MultiVec constant_field(int dim, const std::vector<Rational>& v) {
  MultiVec x(dim, 1);
  for (int j = 1; j <= dim; ++j) x.add_term(MultiIndex::single(j), Poly::constant(dim, v[static_cast<std::size_t>(j - 1)]));
  return x;
}

// [a,b]_omega from the raw formula, without the pair bookkeeping.
Form bracket_form(const PlecticCandidate& c, const Form& a, const MultiVec& xa, const Form& b, const MultiVec& xb) {
  return lie_derivative(xa, b) - lie_derivative(xb, a) - exterior_derivative(interior(xa, interior(xb, c.omega())));
}

// d i_X eta, read as the zero function when eta is itself a function (n = 1).
Form d_interior(const MultiVec& x, const Form& eta) {
  if (eta.degree() == 0) return Form::zero(eta.dim(), 0);
  return exterior_derivative(interior(x, eta));
}

void require_closed(const PlecticCandidate& c, const char* what) {
  if (!c.is_closed()) throw PreconditionError(std::string(what) + " requires d omega = 0");
}

void require_constant(const PlecticCandidate& c, const char* what) {
  if (!c.omega().has_constant_coefficients()) {
    throw UnsupportedError(std::string(what) + " requires constant-coefficient omega; supply the vector field and "
                           "verify instead");
  }
}

}  // namespace

PlecticCandidate::PlecticCandidate(const Context& ctx, Form omega) : ctx_(ctx), omega_(std::move(omega)) {
  if (omega_.degree() != ctx.order + 1 || omega_.dim() != ctx.dim) {
    throw ArgumentError("plectic candidate must be an (n+1)-form on the chart");
  }
}

bool PlecticCandidate::is_closed() const { return exterior_derivative(omega_).is_zero(); }

std::optional<AdmissiblePair> AdmissiblePair::verify(const PlecticCandidate& c, Form alpha, MultiVec x) {
  if (alpha.degree() != c.context().order || alpha.dim() != c.context().dim) {
    throw ArgumentError("admissible form must be an n-form on the chart");
  }
  if (!(interior(x, c.omega()) == alpha)) return std::nullopt;
  return AdmissiblePair(std::move(alpha), std::move(x));
}

AdmissiblePair AdmissiblePair::from_vector(const PlecticCandidate& c, MultiVec x) {
  Form alpha = interior(x, c.omega());
  return AdmissiblePair(std::move(alpha), std::move(x));
}

std::optional<HamiltonianPair> HamiltonianPair::verify(const PlecticCandidate& c, Form xi, MultiVec x) {
  if (xi.degree() != c.context().order - 1 || xi.dim() != c.context().dim) {
    throw ArgumentError("Hamiltonian form must be an (n-1)-form on the chart");
  }
  if (!(exterior_derivative(xi) == interior(x, c.omega()))) return std::nullopt;
  return HamiltonianPair(std::move(xi), std::move(x));
}

Form omega_flat(const PlecticCandidate& c, const MultiVec& x) { return interior(x, c.omega()); }

CheckResult nondegeneracy_check(const PlecticCandidate& c, const std::vector<std::vector<Rational>>& points) {
  const int m = c.context().dim;
  const auto rows = multi_indices(m, c.context().order);
  if (c.omega().has_constant_coefficients()) {
    CheckRecorder rec("nondegeneracy", "i_X omega = 0 implies X = 0", "exact: constant coefficients, rank over Q");
    const RationalMatrix a = flat_matrix(c, rows, [](const Poly& p) { return p.constant_term(); });
    const auto kernel = kernel_vector(a);
    rec.record(
        !kernel.has_value(), [] { return std::vector<std::string>{}; },
        [&] { return dsl::print(constant_field(m, *kernel)); });
    return std::move(rec).finish();
  }
  if (points.empty()) throw ArgumentError("non-constant omega needs at least one evaluation point");
  CheckRecorder rec("nondegeneracy", "i_X omega = 0 implies X = 0",
                    "sampled: exact rank at " + std::to_string(points.size()) +
                        " rational points; full rank there is not a global certificate");
  for (const auto& pt : points) {
    const RationalMatrix a = flat_matrix(c, rows, [&](const Poly& p) { return p.eval(pt); });
    const auto kernel = kernel_vector(a);
    rec.record(
        !kernel.has_value(),
        [&] {
          std::vector<std::string> in;
          for (const auto& q : pt) in.push_back(dsl::print(q));
          return in;
        },
        [&] { return dsl::print(constant_field(m, *kernel)); });
  }
  return std::move(rec).finish();
}

std::vector<CheckResult> graph_closure_omega(const PlecticCandidate& c, std::uint64_t seed, int samples) {
  require_samples(samples);
  const Context& ctx = c.context();
  const int m = ctx.dim;
  const std::string scope = "all " + std::to_string(m * m) + " ordered pairs of coordinate fields plus " +
                            scope_for(samples);
  std::vector<CheckResult> out;
  {
    CheckRecorder rec("closed", "d omega = 0", "exact symbolic test");
    const Form domega = exterior_derivative(c.omega());
    rec.record(
        domega.is_zero(), [&] { return texts({dsl::print(c.omega())}); }, [&] { return dsl::print(domega); });
    out.push_back(std::move(rec).finish());
  }
  CheckRecorder closure("graph-closure", "[[X + i_X omega, Y + i_Y omega]] has form part i_[X,Y] omega", scope);
  CheckRecorder isotropy("isotropy", "<X + i_X omega, Y + i_Y omega> = 0", scope);
  auto run = [&](const MultiVec& x, const MultiVec& y) {
    const Section ex(x, omega_flat(c, x));
    const Section ey(y, omega_flat(c, y));
    const Section br = dorfman_bracket(ex, ey);
    const Form residual = br.form - omega_flat(c, br.vec);
    closure.record(
        residual.is_zero(), [&] { return texts({dsl::print(x), dsl::print(y)}); },
        [&] { return dsl::print(residual); });
    const Form iso = pairing(ex, ey);
    isotropy.record(
        iso.is_zero(), [&] { return texts({dsl::print(x), dsl::print(y)}); }, [&] { return dsl::print(iso); });
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) run(coordinate_field(m, i), coordinate_field(m, j));
  }
  Sampler s(seed, kGraph);
  for (int k = 0; k < samples; ++k) {
    const MultiVec x = s.vector_field(m), y = s.vector_field(m);
    run(x, y);
  }
  out.push_back(std::move(closure).finish());
  out.push_back(std::move(isotropy).finish());
  out.push_back(verdict_agreement("agreement", out[0], out[1]));
  return out;
}

std::vector<CheckResult> deformed_graph_check(const PlecticCandidate& c, const Form& theta, std::uint64_t seed,
                                              int samples) {
  require_samples(samples);
  const Context& ctx = c.context();
  const int m = ctx.dim;
  if (theta.degree() != ctx.order + 2 || theta.dim() != m) {
    throw ArgumentError("twisting form must be an (n+2)-form on the chart");
  }
  std::vector<CheckResult> out;
  const Form criterion = exterior_derivative(c.omega()) + theta;
  {
    CheckRecorder rec("criterion", "d omega + theta = 0", "exact symbolic test");
    rec.record(
        criterion.is_zero(), [&] { return texts({dsl::print(c.omega()), dsl::print(theta)}); },
        [&] { return dsl::print(criterion); });
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("graph-closure-twisted", "[[X + i_X omega, Y + i_Y omega]]_theta has form part i_[X,Y] omega",
                      "all " + std::to_string(m * m) + " ordered pairs of coordinate fields plus " +
                          scope_for(samples));
    auto run = [&](const MultiVec& x, const MultiVec& y) {
      const Section br = deformed_dorfman(Section(x, omega_flat(c, x)), Section(y, omega_flat(c, y)), theta);
      const Form residual = br.form - omega_flat(c, br.vec);
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(x), dsl::print(y)}); },
          [&] { return dsl::print(residual); });
    };
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) run(coordinate_field(m, i), coordinate_field(m, j));
    }
    Sampler s(seed, kTwistedGraph);
    for (int k = 0; k < samples; ++k) {
      const MultiVec x = s.vector_field(m), y = s.vector_field(m);
      run(x, y);
    }
    out.push_back(std::move(rec).finish());
  }
  out.push_back(verdict_agreement("agreement-twisted", out[0], out[1]));
  if (criterion.is_zero()) {
    CheckRecorder rec("gauge-isomorphism", "e^{-omega} [[e1,e2]]_theta = [[e^{-omega} e1, e^{-omega} e2]]",
                      scope_for(samples));
    const Form minus_omega = -c.omega();
    Sampler s(seed, kGaugeIso);
    for (int k = 0; k < samples; ++k) {
      const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
      const Section residual = gauge(minus_omega, deformed_dorfman(e1, e2, theta)) -
                               dorfman_bracket(gauge(minus_omega, e1), gauge(minus_omega, e2));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  return out;
}

std::optional<AdmissiblePair> solve_admissible(const PlecticCandidate& c, const Form& alpha) {
  require_constant(c, "solving for X_alpha");
  const Context& ctx = c.context();
  const int m = ctx.dim;
  if (alpha.degree() != ctx.order || alpha.dim() != m) throw ArgumentError("admissible form must be an n-form");
  const auto rows = multi_indices(m, ctx.order);
  const RationalMatrix a = flat_matrix(c, rows, [](const Poly& p) { return p.constant_term(); });

  // alpha = sum over monomials mu of mu * (constant n-form); solve per monomial.
  std::vector<Monomial> monomials;
  for (const auto& [idx, f] : alpha.terms()) {
    for (const auto& [mono, coef] : f.terms()) monomials.push_back(mono);
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

  MultiVec x(m, 1);
  for (const auto& mono : monomials) {
    std::vector<Rational> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Poly coeff = alpha.coeff(rows[r]);
      for (const auto& [tm, tc] : coeff.terms()) {
        if (tm == mono) rhs[r] = tc;
      }
    }
    const auto sol = solve(a, rhs);
    if (!sol) return std::nullopt;
    for (int j = 1; j <= m; ++j) {
      x.add_term(MultiIndex::single(j), Poly::monomial(m, mono, (*sol)[static_cast<std::size_t>(j - 1)]));
    }
  }
  auto pair = AdmissiblePair::verify(c, alpha, std::move(x));
  if (!pair) throw InconsistentCandidateError("linear solve produced a vector field that does not reproduce alpha");
  return pair;
}

std::optional<HamiltonianPair> solve_hamiltonian(const PlecticCandidate& c, const Form& xi) {
  if (xi.degree() != c.context().order - 1 || xi.dim() != c.context().dim) {
    throw ArgumentError("Hamiltonian form must be an (n-1)-form on the chart");
  }
  auto admissible = solve_admissible(c, exterior_derivative(xi));
  if (!admissible) return std::nullopt;
  return HamiltonianPair::verify(c, xi, admissible->x());
}

AdmissiblePair admissible_bracket(const PlecticCandidate& c, const AdmissiblePair& a, const AdmissiblePair& b) {
  require_closed(c, "the admissible bracket");
  Form form = bracket_form(c, a.alpha(), a.x(), b.alpha(), b.x());
  MultiVec x = lie_bracket(a.x(), b.x());
  auto pair = AdmissiblePair::verify(c, form, x);
  if (!pair) {
    throw InconsistentCandidateError("bracket " + dsl::print(form) + " is not i_X omega for X = " + dsl::print(x));
  }
  return *pair;
}

std::vector<CheckResult> check_admissible_lie_algebroid(const PlecticCandidate& c, std::uint64_t seed, int samples) {
  require_samples(samples);
  require_closed(c, "the admissible Lie algebroid check");
  const int m = c.context().dim;
  const std::string scope = scope_for(samples) + " (admissible forms generated as i_X omega)";
  auto draw = [&](Sampler& s) { return AdmissiblePair::from_vector(c, s.vector_field(m)); };
  auto br = [&](const AdmissiblePair& a, const AdmissiblePair& b) {
    return std::make_pair(bracket_form(c, a.alpha(), a.x(), b.alpha(), b.x()), lie_bracket(a.x(), b.x()));
  };
  std::vector<CheckResult> out;
  {
    CheckRecorder rec("skew-symmetry", "[a,b]_omega + [b,a]_omega = 0", scope);
    Sampler s(seed, kSkew);
    for (int k = 0; k < samples; ++k) {
      const auto a = draw(s), b = draw(s);
      const Form residual = br(a, b).first + br(b, a).first;
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a.alpha()), dsl::print(b.alpha())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("jacobi", "[[a,b]_omega,g]_omega + c.p. = 0", scope);
    Sampler s(seed, kJacobi);
    for (int k = 0; k < samples; ++k) {
      const auto a = draw(s), b = draw(s), g = draw(s);
      auto nested = [&](const AdmissiblePair& p, const AdmissiblePair& q, const AdmissiblePair& r) {
        const auto [f, x] = br(p, q);
        return bracket_form(c, f, x, r.alpha(), r.x());
      };
      const Form residual = nested(a, b, g) + nested(b, g, a) + nested(g, a, b);
      rec.record(
          residual.is_zero(),
          [&] { return texts({dsl::print(a.alpha()), dsl::print(b.alpha()), dsl::print(g.alpha())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("anchor", "[a,b]_omega = i_{[Xa,Xb]} omega, i.e. X_[a,b] = [Xa,Xb]", scope);
    Sampler s(seed, kAnchor);
    for (int k = 0; k < samples; ++k) {
      const auto a = draw(s), b = draw(s);
      const auto [f, x] = br(a, b);
      const Form residual = f - omega_flat(c, x);
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(a.alpha()), dsl::print(b.alpha())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("scalar-rule", "[a, f b]_omega = f [a,b]_omega + Xa(f) b", scope);
    Sampler s(seed, kScalar);
    for (int k = 0; k < samples; ++k) {
      const auto a = draw(s), b = draw(s);
      const Poly f = s.poly(m);
      const AdmissiblePair fb = AdmissiblePair::from_vector(c, f * b.x());
      const Form residual = br(a, fb).first - f * br(a, b).first - apply(a.x(), f) * b.alpha();
      rec.record(
          residual.is_zero(),
          [&] { return texts({dsl::print(a.alpha()), dsl::print(b.alpha()), dsl::print(f)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  return out;
}

Form hemi_bracket(const PlecticCandidate& c, const HamiltonianPair& p, const HamiltonianPair& q) {
  (void)c;
  return lie_derivative(p.x(), q.xi());
}

Form semi_bracket(const PlecticCandidate& c, const HamiltonianPair& p, const HamiltonianPair& q) {
  return interior(p.x(), interior(q.x(), c.omega()));
}

HamiltonianPair random_hamiltonian_pair(const PlecticCandidate& c, Sampler& sampler) {
  require_constant(c, "Hamiltonian pair generation");
  const Context& ctx = c.context();
  const int m = ctx.dim;
  const int n = ctx.order;
  if (auto p = solve_hamiltonian(c, sampler.form(m, n - 1))) return *p;

  // Backwards: constant X, beta = i_X omega is constant, and
  // d((1/n) i_E beta) = (1/n) L_E beta = beta for the Euler field E.
  MultiVec x(m, 1);
  MultiVec euler(m, 1);
  for (int j = 1; j <= m; ++j) {
    x.add_term(MultiIndex::single(j), Poly::constant(m, sampler.uniform(-3, 3)));
    euler.add_term(MultiIndex::single(j), Poly::variable(m, j));
  }
  Form xi = make_rational(1, n) * interior(euler, interior(x, c.omega()));
  if (n >= 2) xi += exterior_derivative(sampler.form(m, n - 2));
  auto pair = HamiltonianPair::verify(c, std::move(xi), std::move(x));
  if (!pair) throw InconsistentCandidateError("backward Hamiltonian construction failed; omega is not constant");
  return *pair;
}

std::vector<CheckResult> check_hamiltonian_brackets(const PlecticCandidate& c, std::uint64_t seed, int samples) {
  require_samples(samples);
  require_closed(c, "the Hamiltonian bracket checks");
  require_constant(c, "the Hamiltonian bracket checks");
  const std::string scope = std::to_string(samples) + " generated Hamiltonian pairs (random potentials, with "
                            "backward construction from constant fields when a potential is not Hamiltonian)";
  std::vector<CheckResult> out;
  {
    CheckRecorder rec("hemi-exact", "d{x,y}_h = [dx,dy]_omega", scope);
    Sampler s(seed, kHamExact);
    for (int k = 0; k < samples; ++k) {
      const auto p = random_hamiltonian_pair(c, s), q = random_hamiltonian_pair(c, s);
      const Form residual = exterior_derivative(hemi_bracket(c, p, q)) -
                            bracket_form(c, exterior_derivative(p.xi()), p.x(), exterior_derivative(q.xi()), q.x());
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(p.xi()), dsl::print(q.xi())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("semi-hemi", "{x,y}_s = {x,y}_h - d i_{Xx} y", scope);
    Sampler s(seed, kHamSemi);
    for (int k = 0; k < samples; ++k) {
      const auto p = random_hamiltonian_pair(c, s), q = random_hamiltonian_pair(c, s);
      const Form residual =
          semi_bracket(c, p, q) - hemi_bracket(c, p, q) + d_interior(p.x(), q.xi());
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(p.xi()), dsl::print(q.xi())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  {
    CheckRecorder rec("hemi-symmetrization", "{x,y}_h + {y,x}_h = d(i_{Xx} y + i_{Xy} x)", scope);
    Sampler s(seed, kHamSym);
    for (int k = 0; k < samples; ++k) {
      const auto p = random_hamiltonian_pair(c, s), q = random_hamiltonian_pair(c, s);
      const Form residual = hemi_bracket(c, p, q) + hemi_bracket(c, q, p) - d_interior(p.x(), q.xi()) -
                            d_interior(q.x(), p.xi());
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(p.xi()), dsl::print(q.xi())}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  return out;
}

}  // namespace hoc
