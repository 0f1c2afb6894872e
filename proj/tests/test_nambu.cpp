#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gen.hpp"
#include "hoc/courant.hpp"
#include "hoc/exterior.hpp"
#include "hoc/nambu.hpp"
#include "oracles.hpp"

namespace hoc {
namespace {

using test::F;
using test::Gen;
using test::P;
using test::V;

const Context k32 = Context::make(3, 2);
const Context k42 = Context::make(4, 2);

NambuCandidate candidate(const Context& ctx, std::string_view pi) {
  return NambuCandidate(ctx, V(pi, ctx.dim, ctx.order + 1));
}

bool oracle_sweep_finds_violation(const NambuCandidate& c) {
  return oracle::nambu_violation(c.pi(), c.context().order);
}

TEST(NambuCandidateTest, DegreeValidated) {
  EXPECT_THROW(NambuCandidate(k32, V("@1^@2", 3, 2)), ArgumentError);
}

TEST(PiSharp, Examples) {
  const NambuCandidate c = candidate(k32, "@1^@2^@3");
  EXPECT_EQ(pi_sharp(c, F("dx2^dx3", 3, 2)), V("@1", 3));
  EXPECT_EQ(pi_sharp(c, F("x1*dx2^dx3", 3, 2)), V("x1*@1", 3));
  const NambuCandidate narrow = candidate(k42, "@1^@2^@3");
  EXPECT_TRUE(pi_sharp(narrow, F("dx1^dx4", 4, 2)).is_zero());
  EXPECT_THROW(pi_sharp(c, F("dx1", 3, 1)), ArgumentError);
}

TEST(FundamentalCheck, NormalFormPasses) {
  const CheckResult r = np_fundamental_check(candidate(k32, "@1^@2^@3"), 2);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.cases, 0U);
  EXPECT_NE(r.scope.find("not a proof"), std::string::npos);
}

TEST(FundamentalCheck, DecomposableSumPasses) {
  const MultiVec pi = V("@1^@2^@3 + @2^@3^@4", 4, 3);
  EXPECT_EQ(wedge(wedge(V("@2", 4), V("@3", 4)), V("@1 + @4", 4)), pi);
  EXPECT_TRUE(np_fundamental_check(NambuCandidate(k42, pi), 2).passed());
}

// x1 @1^@2^@3 + @2^@3^@4 = @2^@3^(x1 @1 + @4) spans an involutive
// distribution, so it is Nambu-Poisson; the sweep must agree.
TEST(FundamentalCheck, InvolutiveDecomposableIsPositive) {
  const NambuCandidate c = candidate(k42, "x1*@1^@2^@3 + @2^@3^@4");
  EXPECT_EQ(wedge(wedge(V("@2", 4), V("@3", 4)), V("x1*@1 + @4", 4)), c.pi());
  EXPECT_FALSE(oracle_sweep_finds_violation(c));
  EXPECT_TRUE(np_fundamental_check(c, 2).passed());
  EXPECT_TRUE(graph_closure_check(c, 0, 10).passed());
}

TEST(FundamentalCheck, CertifiedNegativesFail) {
  for (const char* text : {"x2*@1^@2^@3 + @2^@3^@4", "@1^@2^@3 + x1*@1^@2^@4"}) {
    const NambuCandidate c = candidate(k42, text);
    ASSERT_TRUE(oracle_sweep_finds_violation(c)) << text;
    const CheckResult r = np_fundamental_check(c, 2);
    ASSERT_FALSE(r.passed()) << text;
    // Replay the first witness: inputs are the monomials f1, f2.
    const Witness& w = r.failures.front();
    ASSERT_EQ(w.inputs.size(), 2U);
    const Form df = wedge(differential(P(w.inputs[0], 4)), differential(P(w.inputs[1], 4)));
    EXPECT_EQ(dsl::print(lie_derivative(pi_sharp(c, df), c.pi())), w.residual);
  }
}

TEST(FundamentalCheck, WitnessOrderIsDeterministic) {
  const NambuCandidate c = candidate(k42, "x2*@1^@2^@3 + @2^@3^@4");
  const CheckResult a = np_fundamental_check(c, 2), b = np_fundamental_check(c, 2);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) EXPECT_EQ(a.failures[i].inputs, b.failures[i].inputs);
  EXPECT_LE(a.failures.size(), CheckRecorder::kMaxWitnesses);
}

TEST(GraphClosure, Examples) {
  EXPECT_TRUE(graph_closure_check(candidate(k32, "@1^@2^@3"), 0, 10).passed());
  const CheckResult neg = graph_closure_check(candidate(k42, "x2*@1^@2^@3 + @2^@3^@4"), 0, 10);
  ASSERT_FALSE(neg.passed());
  // The constant basis sweep finds the witness: both inputs are constant.
  for (const auto& in : neg.failures.front().inputs) {
    EXPECT_TRUE(F(in, 4, 2).has_constant_coefficients()) << in;
  }
  EXPECT_TRUE(graph_closure_check(NambuCandidate(k42, MultiVec::zero(4, 3)), 0, 5).passed());
}

TEST(GraphClosure, CourantAndDorfmanAgree) {
  for (const char* text : {"@1^@2^@3", "x2*@1^@2^@3 + @2^@3^@4", "x1*@1^@2^@3 + @2^@3^@4"}) {
    const NambuCandidate c = candidate(k42, text);
    EXPECT_EQ(graph_closure_check(c, 3, 10, 2, GraphBracket::dorfman).passed(),
              graph_closure_check(c, 3, 10, 2, GraphBracket::courant).passed())
        << text;
  }
}

TEST(GraphClosure, BiconditionalOnPanel) {
  Gen g(61);
  std::vector<NambuCandidate> panel{candidate(k32, "@1^@2^@3"), candidate(k42, "x2*@1^@2^@3 + @2^@3^@4"),
                                    candidate(k42, "@1^@2^@3 + x1*@1^@2^@4")};
  for (int k = 0; k < 3; ++k) {
    const Poly f = g.nonzero_poly(3, 2);
    panel.emplace_back(k32, f * V("@1^@2^@3", 3, 3));
  }
  for (const auto& c : panel) {
    EXPECT_EQ(np_fundamental_check(c, 2).passed(), graph_closure_check(c, 0, 10).passed()) << dsl::print(c.pi());
  }
}

TEST(NambuBrackets, Examples) {
  const NambuCandidate c = candidate(k32, "@1^@2^@3");
  EXPECT_TRUE(nambu_form_bracket(c, F("x1*dx2^dx3", 3, 2), F("-dx1^dx3", 3, 2)).is_zero());
  const Form a = F("x1*x2*dx1^dx3 + x3*dx2^dx3", 3, 2);
  EXPECT_EQ(nambu_form_bracket(c, a, a), exterior_derivative(interior(pi_sharp(c, a), a)));
  EXPECT_TRUE(nambu_form_bracket(c, F("dx1^dx2", 3, 2), F("2*dx2^dx3", 3, 2)).is_zero());

  const Form closed = F("x2*dx2^dx3", 3, 2), beta = F("x1*dx1^dx2", 3, 2);
  EXPECT_EQ(marrero_bracket(c, closed, beta), lie_derivative(pi_sharp(c, closed), beta));
  const Form b = F("dx2^dx3", 3, 2);
  EXPECT_EQ(marrero_bracket(c, F("x1*dx2^dx3", 3, 2), b),
            lie_derivative(pi_sharp(c, F("x1*dx2^dx3", 3, 2)), b) - b);

  EXPECT_TRUE(leibniz_nm1_bracket(c, F("3*dx1", 3, 1), F("x2*dx3", 3, 1)).is_zero());
  EXPECT_EQ(leibniz_nm1_bracket(c, F("x1*dx2", 3, 1), F("x3*dx2", 3, 1)), F("dx2", 3, 1));
  EXPECT_THROW(nambu_form_bracket(c, F("dx1", 3, 1), b), ArgumentError);
}

TEST(NambuBrackets, ExactCompatibility) {
  Gen g(62);
  const NambuCandidate c = candidate(k32, "@1^@2^@3");
  for (int t = 0; t < 30; ++t) {
    const Form xi = g.form(3, 1), eta = g.form(3, 1);
    EXPECT_EQ(nambu_form_bracket(c, exterior_derivative(xi), exterior_derivative(eta)),
              exterior_derivative(leibniz_nm1_bracket(c, xi, eta)));
  }
}

TEST(LeibnizAlgebroid, NormalForm) {
  const auto r = check_nambu_leibniz_algebroid(candidate(k32, "@1^@2^@3"), 0, 25);
  EXPECT_GE(r.size(), 5U);
  for (const auto& c : r) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(LeibnizAlgebroid, PoissonBivector) {
  const auto r = check_nambu_leibniz_algebroid(candidate(Context::make(3, 1), "@1^@2"), 0, 25);
  for (const auto& c : r) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(LeibnizAlgebroid, RefusesNonNambu) {
  EXPECT_THROW(check_nambu_leibniz_algebroid(candidate(k42, "x2*@1^@2^@3 + @2^@3^@4"), 0, 5), PreconditionError);
}

TEST(NambuProperties, PiSharpMatchesOracle) {
  Gen g(63);
  for (int t = 0; t < 100; ++t) {
    const Context ctx = g.context();
    if (ctx.order + 1 > ctx.dim) continue;
    const NambuCandidate c(ctx, g.multivec(ctx.dim, ctx.order + 1));
    const Form xi = g.form(ctx.dim, ctx.order);
    EXPECT_EQ(pi_sharp(c, xi), oracle::contract(xi, c.pi()));
  }
}

}  // namespace
}  // namespace hoc
