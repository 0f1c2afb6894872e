#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "hoc/courant.hpp"
#include "hoc/exterior.hpp"
#include "oracles.hpp"

namespace hoc {
namespace {

using test::F;
using test::Gen;
using test::P;
using test::S;
using test::V;

const Context k21 = Context::make(2, 1);
const Context k31 = Context::make(3, 1);
const Context k32 = Context::make(3, 2);

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(S("(@1 ; dx1^dx2)", k32), S("(@2 ; dx2^dx3)", k32)), F("-1/2*dx1", 3, 1));
  EXPECT_EQ(pairing(S("(@1 ; 0)", Context::make(2, 2)), S("(0 ; dx1^dx2)", Context::make(2, 2))), F("1/2*dx2", 2, 1));
}

TEST(Pairing, SelfPairingIsInterior) {
  Gen g(41);
  for (int t = 0; t < 50; ++t) {
    const Context ctx = g.context();
    const Section e = g.section(ctx);
    EXPECT_EQ(pairing(e, e), interior(e.vec, e.form));
  }
}

TEST(Pairing, ContextMismatch) {
  EXPECT_THROW(pairing(Section::zero(k31), Section::zero(k32)), ContextError);
  EXPECT_THROW(dorfman_bracket(Section::zero(k21), Section::zero(k31)), ContextError);
}

TEST(CourantBracket, Examples) {
  const Section e = S("(x2*@1 - @3 ; x1*x3*dx1^dx2)", k32);
  EXPECT_TRUE(courant_bracket(e, e).is_zero());
  EXPECT_EQ(courant_bracket(S("(@1 ; 0)", k32), S("(0 ; x1*dx2^dx3)", k32)), S("(0 ; dx2^dx3)", k32));
  EXPECT_TRUE(courant_bracket(S("(@1 ; 0)", k21), S("(@2 ; 0)", k21)).is_zero());
}

TEST(DorfmanBracket, Examples) {
  EXPECT_EQ(dorfman_bracket(S("(@1 ; x2*dx1)", k21), S("(@2 ; 0)", k21)), S("(0 ; -dx1)", k21));
  EXPECT_EQ(dorfman_bracket(S("(@1 ; 0)", k32), S("(@2 ; x1*dx2^dx3)", k32)), S("(0 ; dx2^dx3)", k32));
}

TEST(DorfmanBracket, SelfBracketIsExact) {
  Gen g(42);
  for (int t = 0; t < 50; ++t) {
    const Context ctx = g.context();
    const Section e = g.section(ctx);
    EXPECT_EQ(dorfman_bracket(e, e), Section::of_form(ctx, exterior_derivative(interior(e.vec, e.form))));
  }
}

TEST(TMap, Examples) {
  Gen g(43);
  const Section e = g.section(k32), e3 = g.section(k32);
  EXPECT_TRUE(t_map(e, e, e3).is_zero());
  EXPECT_TRUE(t_map(S("(@1 ; 0)", k32), S("(@2 ; 0)", k32), S("(@3 ; 0)", k32)).is_zero());

  const Section e1 = S("(@1 ; x2*dx1)", k21), e2 = S("(@2 ; 0)", k21), e3b = S("(@1 ; 0)", k21);
  auto term = [](const Section& a, const Section& b, const Section& c) {
    return oracle::pairing(oracle::courant(a, b), c);
  };
  const Form expected = make_rational(-1, 3) * (term(e1, e2, e3b) + term(e2, e3b, e1) + term(e3b, e1, e2));
  EXPECT_EQ(t_map(e1, e2, e3b), expected);
}

TEST(Anchor, Examples) {
  const Context k22 = Context::make(2, 2);
  EXPECT_EQ(anchor(S("(@1 ; dx1^dx2)", k22)), V("@1", 2));
  EXPECT_TRUE(anchor(S("(0 ; dx1^dx2)", k22)).is_zero());
  const Poly f = P("x1*x2 + 2", 2);
  const Section e = S("(x2*@1 + @2 ; x1*dx1)", k21);
  EXPECT_EQ(anchor(f * e), f * anchor(e));
}

TEST(DeformedDorfman, Examples) {
  Gen g(44);
  const Section a = g.section(k31), b = g.section(k31);
  EXPECT_EQ(deformed_dorfman(a, b, Form::zero(3, 3)), dorfman_bracket(a, b));
  EXPECT_EQ(deformed_dorfman(S("(@1 ; 0)", k31), S("(@2 ; 0)", k31), F("dx1^dx2^dx3", 3, 3)), S("(0 ; dx3)", k31));
  const Form theta = F("x2*dx1^dx2^dx3", 3, 3);
  EXPECT_TRUE(deformed_dorfman(S("(@1 ; 0)", k31), S("(@1 ; 0)", k31), theta).is_zero());
  EXPECT_THROW(deformed_dorfman(a, b, F("dx1^dx2", 3, 2)), ArgumentError);
}

TEST(Gauge, Examples) {
  EXPECT_EQ(gauge(F("dx1^dx2", 2, 2), S("(@1 ; 0)", k21)), S("(@1 ; dx2)", k21));
  Gen g(45);
  const Section e = g.section(k32);
  EXPECT_EQ(gauge(Form::zero(3, 3), e), e);
  const Section alpha = S("(0 ; x1*dx2^dx3)", k32);
  EXPECT_EQ(gauge(F("x3*dx1^dx2^dx3", 3, 3), alpha), alpha);
  EXPECT_THROW(gauge(F("dx1^dx2", 3, 2), e), ArgumentError);
}

void expect_all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed()) << c.name << ": " << (c.failures.empty() ? "" : c.failures.front().residual);
    EXPECT_GT(c.cases, 0U) << c.name;
  }
}

TEST(CourantAxioms, Runs) {
  const auto small = check_courant_axioms(k21, 7, 25);
  ASSERT_EQ(small.size(), 4U);
  expect_all_passed(small);
  expect_all_passed(check_courant_axioms(k32, 0, 25));
  EXPECT_THROW(check_courant_axioms(k21, 0, 0), ArgumentError);
}

TEST(DorfmanAxioms, Runs) {
  const auto small = check_dorfman_axioms(k21, 0, 25);
  ASSERT_EQ(small.size(), 6U);
  expect_all_passed(small);
  expect_all_passed(check_dorfman_axioms(Context::make(4, 3), 0, 10));
  EXPECT_THROW(check_dorfman_axioms(k21, 0, 0), ArgumentError);
}

TEST(DorfmanAxioms, ConstantBasisLeibniz) {
  for (int i = 1; i <= 3; ++i) {
    const Section e = Section::of_vector(k32, coordinate_field(3, i));
    const Section residual = dorfman_bracket(e, dorfman_bracket(e, e)) - dorfman_bracket(dorfman_bracket(e, e), e) -
                             dorfman_bracket(e, dorfman_bracket(e, e));
    EXPECT_TRUE(residual.is_zero());
  }
}

TEST(Deformation, ClosedTheta) {
  const auto r = check_deformation(k31, F("dx1^dx2^dx3", 3, 3), 0, 10);
  ASSERT_EQ(r.size(), 3U);
  expect_all_passed(r);
  expect_all_passed(check_deformation(k31, Form::zero(3, 3), 0, 5));
}

TEST(Deformation, NonClosedThetaFailsWithWitness) {
  const Context k41 = Context::make(4, 1);
  const Form theta = F("x4*dx1^dx2^dx3", 4, 3);
  const auto r = check_deformation(k41, theta, 0, 5);
  ASSERT_EQ(r.size(), 3U);
  EXPECT_FALSE(r[0].passed());
  EXPECT_EQ(r[0].failures.front().residual, "-dx1^dx2^dx3^dx4");
  ASSERT_FALSE(r[1].passed());
  EXPECT_TRUE(r[2].passed());

  // Replay the first witness from its text.
  const Witness& w = r[1].failures.front();
  ASSERT_EQ(w.inputs.size(), 3U);
  const Section e1 = S(w.inputs[0], k41), e2 = S(w.inputs[1], k41), e3 = S(w.inputs[2], k41);
  const Section residual = deformed_dorfman(e1, deformed_dorfman(e2, e3, theta), theta) -
                           deformed_dorfman(deformed_dorfman(e1, e2, theta), e3, theta) -
                           deformed_dorfman(e2, deformed_dorfman(e1, e3, theta), theta);
  EXPECT_EQ(dsl::print(residual), w.residual);
  EXPECT_FALSE(residual.is_zero());
}

TEST(Deformation, WrongDegree) {
  EXPECT_THROW(check_deformation(k31, F("dx1^dx2", 3, 2), 0, 5), ArgumentError);
}

TEST(GaugeIsomorphism, Runs) {
  const auto open = check_gauge_isomorphism(k31, F("x3*dx1^dx2", 3, 2), 0, 25);
  ASSERT_EQ(open.size(), 1U);
  expect_all_passed(open);
  const auto closed = check_gauge_isomorphism(k21, F("dx1^dx2", 2, 2), 0, 25);
  ASSERT_EQ(closed.size(), 2U);
  EXPECT_EQ(closed[1].name, "automorphism");
  expect_all_passed(closed);
  expect_all_passed(check_gauge_isomorphism(k31, Form::zero(3, 2), 0, 5));
}

// Properties on test-side random sections.

TEST(CourantProperties, MatchesOracleBrackets) {
  Gen g(51);
  for (int t = 0; t < 100; ++t) {
    const Context ctx = g.context();
    const Section a = g.section(ctx), b = g.section(ctx);
    EXPECT_EQ(dorfman_bracket(a, b), oracle::dorfman(a, b));
    EXPECT_EQ(courant_bracket(a, b), oracle::courant(a, b));
    EXPECT_EQ(pairing(a, b), oracle::pairing(a, b));
  }
}

TEST(CourantProperties, SkewAndSymmetrization) {
  Gen g(52);
  for (int t = 0; t < 100; ++t) {
    const Context ctx = g.context();
    const Section a = g.section(ctx), b = g.section(ctx);
    EXPECT_EQ(courant_bracket(a, b), -courant_bracket(b, a));
    EXPECT_EQ(pairing(a, b), pairing(b, a));
    EXPECT_EQ(dorfman_bracket(a, b) + dorfman_bracket(b, a),
              Section::of_form(ctx, Rational(2) * exterior_derivative(pairing(a, b))));
    EXPECT_EQ(dorfman_bracket(a, b), dorfman_bracket_via_courant(a, b));
  }
}

TEST(CourantProperties, LeftScalarRule) {
  Gen g(53);
  for (int t = 0; t < 100; ++t) {
    const Context ctx = g.context();
    const Section a = g.section(ctx), b = g.section(ctx);
    const Poly f = g.poly(ctx.dim, 2);
    const Section expected = add_form(f * dorfman_bracket(a, b) - apply(anchor(b), f) * a,
                                      Rational(2) * wedge(differential(f), pairing(a, b)));
    EXPECT_EQ(dorfman_bracket(f * a, b), expected);
  }
}

TEST(CourantProperties, PairingNondegenerateOnConstantBasis) {
  for (const Context& ctx : {k21, k31, k32, Context::make(4, 3)}) {
    const int m = ctx.dim;
    std::vector<Section> basis;
    for (int i = 1; i <= m; ++i) basis.push_back(Section::of_vector(ctx, coordinate_field(m, i)));
    for (MultiIndex idx : multi_indices(m, ctx.order)) basis.push_back(Section::of_form(ctx, Form::basis(m, idx)));
    for (const auto& e : basis) {
      bool found = false;
      for (const auto& other : basis) found = found || !pairing(e, other).is_zero();
      EXPECT_TRUE(found) << dsl::print(e);
    }
  }
}

}  // namespace
}  // namespace hoc
