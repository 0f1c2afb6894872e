#include "hoc/courant.hpp"

#include <string>

#include "hoc/dsl.hpp"
#include "hoc/exterior.hpp"
#include "hoc/sampler.hpp"

namespace hoc {
namespace {

void require_same_context(const Section& a, const Section& b) {
  if (a.dim() != b.dim() || a.order() != b.order()) throw ContextError("sections from different contexts");
}

const Rational kHalf = make_rational(1, 2);

std::string scope_for(int samples) {
  return std::to_string(samples) + " seeded random samples, coefficients of degree <= 2";
}

void require_samples(int samples) {
  if (samples < 1) throw ArgumentError("samples must be at least 1");
}

// Independent random streams per check so reports do not depend on which
// checks ran before.
enum Stream : std::uint64_t {
  kJacobiator = 1,
  kCourantScalar,
  kCourantAnchor,
  kCourantCompat,
  kLeibniz,
  kScalarRight,
  kScalarLeft,
  kDorfmanCompat,
  kDorfmanAnchor,
  kPaths,
  kDeformation,
  kGauge,
  kAutomorphism,
};

std::vector<std::string> texts(std::initializer_list<std::string> items) { return items; }

}  // namespace

Form pairing(const Section& e1, const Section& e2) {
  require_same_context(e1, e2);
  return kHalf * (interior(e1.vec, e2.form) + interior(e2.vec, e1.form));
}

Section courant_bracket(const Section& e1, const Section& e2) {
  require_same_context(e1, e2);
  const auto& [x, a] = e1;
  const auto& [y, b] = e2;
  Form f = lie_derivative(x, b) - lie_derivative(y, a) +
           kHalf * (exterior_derivative(interior(y, a)) - exterior_derivative(interior(x, b)));
  return {lie_bracket(x, y), std::move(f)};
}

Section dorfman_bracket(const Section& e1, const Section& e2) {
  require_same_context(e1, e2);
  const auto& [x, a] = e1;
  const auto& [y, b] = e2;
  Form f = lie_derivative(x, b) - lie_derivative(y, a) + exterior_derivative(interior(y, a));
  return {lie_bracket(x, y), std::move(f)};
}

Section dorfman_bracket_via_courant(const Section& e1, const Section& e2) {
  return add_form(courant_bracket(e1, e2), exterior_derivative(pairing(e1, e2)));
}

Form t_map(const Section& e1, const Section& e2, const Section& e3) {
  Form s = pairing(courant_bracket(e1, e2), e3) + pairing(courant_bracket(e2, e3), e1) +
           pairing(courant_bracket(e3, e1), e2);
  return make_rational(-1, 3) * std::move(s);
}

MultiVec anchor(const Section& e) { return e.vec; }

Section deformed_dorfman(const Section& e1, const Section& e2, const Form& theta) {
  if (theta.degree() != e1.order() + 2) {
    throw ArgumentError("twisting form must have degree n+2 = " + std::to_string(e1.order() + 2));
  }
  if (theta.dim() != e1.dim()) throw ContextError("twisting form lives on a different chart");
  return add_form(dorfman_bracket(e1, e2), contract(wedge(e1.vec, e2.vec), theta));
}

Section gauge(const Form& phi, const Section& e) {
  if (phi.degree() != e.order() + 1) {
    throw ArgumentError("gauge form must have degree n+1 = " + std::to_string(e.order() + 1));
  }
  if (phi.dim() != e.dim()) throw ContextError("gauge form lives on a different chart");
  return add_form(e, interior(e.vec, phi));
}

Section add_form(Section e, const Form& f) {
  e.form += f;
  return e;
}

Section random_section(Sampler& sampler, const Context& ctx) {
  MultiVec v = sampler.vector_field(ctx.dim);
  Form f = sampler.form(ctx.dim, ctx.order);
  return {std::move(v), std::move(f)};
}

namespace {

CheckResult check_courant_scalar_rule(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("scalar-rule", "[[e1, f e2]] = f [[e1,e2]] + rho(e1)(f) e2 - df ^ <e1,e2>", scope);
  Sampler s(seed, kCourantScalar);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const Poly f = s.poly(ctx.dim);
    const Section expected = add_form(f * courant_bracket(e1, e2) + apply(anchor(e1), f) * e2,
                                      -wedge(differential(f), pairing(e1, e2)));
    const Section residual = courant_bracket(e1, f * e2) - expected;
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(f)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_courant_anchor(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("anchor", "rho [[e1,e2]] = [rho(e1), rho(e2)]", scope);
  Sampler s(seed, kCourantAnchor);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const MultiVec residual = anchor(courant_bracket(e1, e2)) - lie_bracket(anchor(e1), anchor(e2));
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_courant_lie_compatibility(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("lie-compatibility",
                    "L_{rho(e1)} <e2,e3> = <[[e1,e2]] + d<e1,e2>, e3> + <e2, [[e1,e3]] + d<e1,e3>>", scope);
  Sampler s(seed, kCourantCompat);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx), e3 = random_section(s, ctx);
    const Section b12 = add_form(courant_bracket(e1, e2), exterior_derivative(pairing(e1, e2)));
    const Section b13 = add_form(courant_bracket(e1, e3), exterior_derivative(pairing(e1, e3)));
    const Form residual = lie_derivative(anchor(e1), pairing(e2, e3)) - pairing(b12, e3) - pairing(e2, b13);
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(e3)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_scalar_right(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("scalar-rule-right", "[[e1, f e2]] = f [[e1,e2]] + rho(e1)(f) e2", scope);
  Sampler s(seed, kScalarRight);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const Poly f = s.poly(ctx.dim);
    const Section residual =
        dorfman_bracket(e1, f * e2) - f * dorfman_bracket(e1, e2) - apply(anchor(e1), f) * e2;
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(f)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_scalar_left(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("scalar-rule-left", "[[f e1, e2]] = f [[e1,e2]] - rho(e2)(f) e1 + df ^ 2<e1,e2>", scope);
  Sampler s(seed, kScalarLeft);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const Poly f = s.poly(ctx.dim);
    const Section expected = add_form(f * dorfman_bracket(e1, e2) - apply(anchor(e2), f) * e1,
                                      Rational(2) * wedge(differential(f), pairing(e1, e2)));
    const Section residual = dorfman_bracket(f * e1, e2) - expected;
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(f)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_anchor(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("anchor", "rho [[e1,e2]] = [rho(e1), rho(e2)]", scope);
  Sampler s(seed, kDorfmanAnchor);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const MultiVec residual = anchor(dorfman_bracket(e1, e2)) - lie_bracket(anchor(e1), anchor(e2));
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_construction_paths(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("construction-paths", "direct formula = courant bracket + d<e1,e2>", scope);
  Sampler s(seed, kPaths);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
    const Section residual = dorfman_bracket(e1, e2) - dorfman_bracket_via_courant(e1, e2);
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

}  // namespace

CheckResult check_courant_jacobiator(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("jacobiator", "[[e1,[[e2,e3]]]] + c.p. = d T(e1,e2,e3)", scope);
  Sampler s(seed, kJacobiator);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx), e3 = random_section(s, ctx);
    const Section jac = courant_bracket(e1, courant_bracket(e2, e3)) + courant_bracket(e2, courant_bracket(e3, e1)) +
                        courant_bracket(e3, courant_bracket(e1, e2));
    const Section residual = add_form(jac, -exterior_derivative(t_map(e1, e2, e3)));
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(e3)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_leibniz(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("leibniz", "[[e1,[[e2,e3]]]] = [[[[e1,e2]],e3]] + [[e2,[[e1,e3]]]]", scope);
  Sampler s(seed, kLeibniz);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx), e3 = random_section(s, ctx);
    const Section residual = dorfman_bracket(e1, dorfman_bracket(e2, e3)) -
                             dorfman_bracket(dorfman_bracket(e1, e2), e3) -
                             dorfman_bracket(e2, dorfman_bracket(e1, e3));
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(e3)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

CheckResult check_dorfman_pairing_compatibility(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  const std::string scope = scope_for(samples);
  CheckRecorder rec("pairing-compatibility", "L_{rho(e1)} <e2,e3> = <[[e1,e2]], e3> + <e2, [[e1,e3]]>", scope);
  Sampler s(seed, kDorfmanCompat);
  for (int k = 0; k < samples; ++k) {
    const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx), e3 = random_section(s, ctx);
    const Form residual = lie_derivative(anchor(e1), pairing(e2, e3)) - pairing(dorfman_bracket(e1, e2), e3) -
                          pairing(e2, dorfman_bracket(e1, e3));
    rec.record(
        residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(e3)}); },
        [&] { return dsl::print(residual); });
  }
  return std::move(rec).finish();
}

std::vector<CheckResult> check_courant_axioms(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  return {check_courant_jacobiator(ctx, seed, samples), check_courant_scalar_rule(ctx, seed, samples),
          check_courant_anchor(ctx, seed, samples), check_courant_lie_compatibility(ctx, seed, samples)};
}

std::vector<CheckResult> check_dorfman_axioms(const Context& ctx, std::uint64_t seed, int samples) {
  require_samples(samples);
  return {check_dorfman_leibniz(ctx, seed, samples),
          check_dorfman_scalar_right(ctx, seed, samples),
          check_dorfman_scalar_left(ctx, seed, samples),
          check_dorfman_pairing_compatibility(ctx, seed, samples),
          check_dorfman_anchor(ctx, seed, samples),
          check_dorfman_construction_paths(ctx, seed, samples)};
}

std::vector<CheckResult> check_deformation(const Context& ctx, const Form& theta, std::uint64_t seed, int samples) {
  require_samples(samples);
  if (theta.degree() != ctx.order + 2 || theta.dim() != ctx.dim) {
    throw ArgumentError("twisting form must be an (n+2)-form on the chart");
  }
  std::vector<CheckResult> out;
  {
    CheckRecorder rec("closed", "d theta = 0", "exact symbolic test");
    const Form dtheta = exterior_derivative(theta);
    rec.record(
        dtheta.is_zero(), [&] { return texts({dsl::print(theta)}); }, [&] { return dsl::print(dtheta); });
    out.push_back(std::move(rec).finish());
  }
  {
    const int m = ctx.dim;
    CheckRecorder rec("leibniz", "Leibniz identity for the twisted bracket",
                      "all " + std::to_string(m * m * m) + " ordered triples of coordinate fields plus " +
                          scope_for(samples));
    auto run = [&](const Section& e1, const Section& e2, const Section& e3) {
      const Section residual = deformed_dorfman(e1, deformed_dorfman(e2, e3, theta), theta) -
                               deformed_dorfman(deformed_dorfman(e1, e2, theta), e3, theta) -
                               deformed_dorfman(e2, deformed_dorfman(e1, e3, theta), theta);
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2), dsl::print(e3)}); },
          [&] { return dsl::print(residual); });
    };
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
          run(Section::of_vector(ctx, coordinate_field(m, i)), Section::of_vector(ctx, coordinate_field(m, j)),
              Section::of_vector(ctx, coordinate_field(m, k)));
        }
      }
    }
    Sampler s(seed, kDeformation);
    for (int k = 0; k < samples; ++k) {
      const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx), e3 = random_section(s, ctx);
      run(e1, e2, e3);
    }
    out.push_back(std::move(rec).finish());
  }
  out.push_back(verdict_agreement("agreement", out[0], out[1]));
  return out;
}

std::vector<CheckResult> check_gauge_isomorphism(const Context& ctx, const Form& phi, std::uint64_t seed,
                                                 int samples) {
  require_samples(samples);
  if (phi.degree() != ctx.order + 1 || phi.dim() != ctx.dim) {
    throw ArgumentError("gauge form must be an (n+1)-form on the chart");
  }
  const std::string scope = scope_for(samples);
  const Form dphi = exterior_derivative(phi);
  std::vector<CheckResult> out;
  {
    CheckRecorder rec("gauge-identity", "e^phi [[e1,e2]]_{d phi} = [[e^phi e1, e^phi e2]]", scope);
    Sampler s(seed, kGauge);
    for (int k = 0; k < samples; ++k) {
      const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
      const Section residual =
          gauge(phi, deformed_dorfman(e1, e2, dphi)) - dorfman_bracket(gauge(phi, e1), gauge(phi, e2));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  if (dphi.is_zero()) {
    CheckRecorder rec("automorphism", "e^phi [[e1,e2]] = [[e^phi e1, e^phi e2]] for closed phi", scope);
    Sampler s(seed, kAutomorphism);
    for (int k = 0; k < samples; ++k) {
      const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
      const Section residual = gauge(phi, dorfman_bracket(e1, e2)) - dorfman_bracket(gauge(phi, e1), gauge(phi, e2));
      rec.record(
          residual.is_zero(), [&] { return texts({dsl::print(e1), dsl::print(e2)}); },
          [&] { return dsl::print(residual); });
    }
    out.push_back(std::move(rec).finish());
  }
  return out;
}

}  // namespace hoc
