#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "gen.hpp"
#include "hoc/poly.hpp"

namespace hoc {
namespace {

using test::Gen;
using test::P;

// Term-map oracle: a polynomial as exponent vector -> coefficient.
using TermMap = std::map<std::vector<int>, Rational>;

TermMap term_map(const Poly& p) {
  TermMap out;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> e;
    for (int i = 1; i <= p.dim(); ++i) e.push_back(mono.exponent(i));
    out[e] = c;
  }
  return out;
}

void prune(TermMap& t) { std::erase_if(t, [](const auto& kv) { return kv.second == 0; }); }

TermMap add(const TermMap& a, const TermMap& b) {
  TermMap r = a;
  for (const auto& [e, c] : b) r[e] += c;
  prune(r);
  return r;
}

TermMap mul(const TermMap& a, const TermMap& b) {
  TermMap r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  }
  prune(r);
  return r;
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
  const Rational q = make_rational(1, -2);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(q.get_num(), -1);
  const Rational zero = make_rational(0, 7);
  EXPECT_EQ(zero.get_num(), 0);
  EXPECT_EQ(zero.get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), ArgumentError);
  EXPECT_EQ(make_rational("6", "-4"), make_rational(-3, 2));
}

// Operands near the 64-bit boundary exercise promotion to and demotion from
// the arbitrary-precision representation; plain GMP is the reference.
TEST(Rational, MatchesGmpAcrossTheInlineBoundary) {
  std::mt19937_64 rng(17);
  const std::vector<std::int64_t> edges{0, 1, -1, 2, 3, 7, INT64_MAX, -INT64_MAX, INT64_MIN, INT64_MAX / 2,
                                        (std::int64_t{1} << 32) + 1, 3037000499, -3037000500};
  auto draw = [&]() -> std::int64_t {
    switch (rng() % 3) {
      case 0: return edges[rng() % edges.size()];
      case 1: return static_cast<std::int64_t>(rng() % 41) - 20;
      default: return static_cast<std::int64_t>(rng());
    }
  };
  auto gmp = [](const Rational& q) { return q.to_mpq(); };
  for (int t = 0; t < 5000; ++t) {
    std::int64_t an = draw(), ad = draw(), bn = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    Rational a(an, ad), b(bn, bd);
    if (t % 7 == 0) a = a * a * Rational(bn, bd);  // push past 64 bits
    mpq_class ra = gmp(a), rb = gmp(b);
    EXPECT_EQ(gmp(a + b), mpq_class(ra + rb));
    EXPECT_EQ(gmp(a - b), mpq_class(ra - rb));
    EXPECT_EQ(gmp(a * b), mpq_class(ra * rb));
    if (b.sign() != 0) {
      EXPECT_EQ(gmp(a / b), mpq_class(ra / rb));
    }
    EXPECT_EQ(a < b, ra < rb);
    EXPECT_EQ(a == b, ra == rb);
    EXPECT_EQ((a - a).sign(), 0);
    // Canonical: a round trip through GMP reproduces the same value and text.
    EXPECT_EQ(Rational(mpq_class(ra + rb)), a + b);
    EXPECT_EQ((a * b).get_str(), mpq_class(ra * rb).get_str());
  }
  EXPECT_THROW(Rational(1) / Rational(0), ArgumentError);
  EXPECT_EQ(Rational(INT64_MIN) + Rational(1), Rational(-INT64_MAX));
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(P("x1 + 1", 2) + P("-1", 2), P("x1", 2));
  EXPECT_EQ(Poly(2) + P("x2*x2", 2), P("x2*x2", 2));
  const Poly x1x2 = P("x1*x2", 2);
  const Poly sum = x1x2 + x1x2;
  EXPECT_EQ(term_map(sum), add(term_map(x1x2), term_map(x1x2)));
  EXPECT_EQ(sum, Rational(2) * x1x2);
}

TEST(PolyAdd, DimensionMismatchIsContextError) {
  EXPECT_THROW(P("x1", 2) + P("x1", 3), ContextError);
  EXPECT_THROW(P("x1", 2) * P("x1", 3), ContextError);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(P("x1", 2) * P("1", 2), P("x1", 2));
  const Poly a = P("x1 + x2", 2), b = P("x1 - x2", 2);
  EXPECT_EQ(term_map(a * b), mul(term_map(a), term_map(b)));
  EXPECT_EQ(a * b, P("x1*x1 - x2*x2", 2));
  EXPECT_TRUE((Poly(2) * P("x1*x2 + 3", 2)).is_zero());
}

TEST(PolyPartial, Examples) {
  EXPECT_EQ(P("x1*x1*x2", 2).partial(1), P("2*x1*x2", 2));
  EXPECT_TRUE(P("x1", 2).partial(2).is_zero());
  EXPECT_TRUE(P("7/3", 2).partial(1).is_zero());
  EXPECT_THROW(P("x1", 2).partial(0), ArgumentError);
  EXPECT_THROW(P("x1", 2).partial(3), ArgumentError);
}

TEST(PolyEval, Examples) {
  const std::vector<Rational> p12{1, 2};
  EXPECT_EQ(P("x1 + x2", 2).eval(p12), 3);
  const std::vector<Rational> p05{0, 5};
  EXPECT_EQ(P("x1*x2", 2).eval(p05), 0);
  const std::vector<Rational> p{make_rational(2, 3), 0};
  EXPECT_EQ(P("x1*x1", 2).eval(p), make_rational(4, 9));
  const std::vector<Rational> short_point{1};
  EXPECT_THROW(P("x1", 2).eval(short_point), ArgumentError);
}

TEST(PolyMonomial, ExponentBounds) {
  Monomial m;
  EXPECT_THROW(m.set_exponent(1, 256), ArgumentError);
  EXPECT_THROW(m.set_exponent(0, 1), ArgumentError);
  m.set_exponent(2, 3);
  EXPECT_EQ(m.total_degree(), 3);
  m.set_exponent(2, 1);
  EXPECT_EQ(m.total_degree(), 1);
}

TEST(PolyOrder, GradedLexDescending) {
  // Terms are stored highest first: degree, then x1 > x2 > ...
  const Poly p = P("1 + x2 + x1 + x2*x2 + x1*x2 + x1*x1", 2);
  std::vector<std::vector<int>> seen;
  for (const auto& [mono, c] : p.terms()) seen.push_back({mono.exponent(1), mono.exponent(2)});
  const std::vector<std::vector<int>> expected{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  EXPECT_EQ(seen, expected);
}

TEST(PolyProperties, RingAxioms) {
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = g.range(1, 4);
    const Poly a = g.poly(m), b = g.poly(m), c = g.poly(m);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(term_map(a + b), add(term_map(a), term_map(b)));
    EXPECT_EQ(term_map(a * b), mul(term_map(a), term_map(b)));
  }
}

TEST(PolyProperties, NoZeroTermsStored) {
  Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = g.poly(3), b = g.poly(3);
    for (const Poly& p : {a + b, a - b, a * b, a.partial(1), a - a}) {
      for (const auto& [mono, c] : p.terms()) EXPECT_NE(c, 0);
    }
  }
}

TEST(PolyProperties, PartialsCommute) {
  Gen g(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = g.range(2, 4);
    const Poly a = g.poly(m, 4);
    const int i = g.range(1, m), j = g.range(1, m);
    EXPECT_EQ(a.partial(i).partial(j), a.partial(j).partial(i));
  }
}

TEST(PolyProperties, LeibnizRule) {
  Gen g(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = g.range(1, 4);
    const Poly a = g.poly(m), b = g.poly(m);
    const int i = g.range(1, m);
    EXPECT_EQ((a * b).partial(i), a.partial(i) * b + a * b.partial(i));
  }
}

TEST(PolyProperties, EvalIsRingHomomorphism) {
  Gen g(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = g.range(1, 4);
    const Poly a = g.poly(m), b = g.poly(m);
    const auto pt = g.point(m);
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

}  // namespace
}  // namespace hoc
