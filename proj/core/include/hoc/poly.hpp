#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hoc/rational.hpp"

namespace hoc {

/// Largest supported chart dimension. Multi-indices are 32-bit masks and
/// exponent vectors are fixed arrays of this length.
inline constexpr int kMaxDim = 16;

/// Exponent vector of a monomial x1^e1 ... xm^em. Entries past the chart
/// dimension stay zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int i);  // 1-based coordinate index

  int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  void set_exponent(int i, int e);
  int total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// Graded lexicographic order: total degree first, then x1 > x2 > ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint8_t, kMaxDim> exps_{};
  std::uint16_t degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients on a chart
/// of dimension `dim`. Terms are kept in descending graded-lex order with no
/// zero coefficients, so equality is structural.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(int dim);

  static Poly constant(int dim, const Rational& c);
  static Poly variable(int dim, int i);
  static Poly monomial(int dim, const Monomial& m, const Rational& c = 1);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;

  Poly partial(int i) const;
  Rational eval(std::span<const Rational> point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& other) const;

 private:
  void require_same_dim(const Poly& other) const;
  static Poly merge(const Poly& a, const Poly& b, bool negate_b);

  int dim_ = 0;
  std::vector<Term> terms_;
};

/// All monomials in `dim` variables with 1 <= total degree <= max_degree
/// (or 0 <= ... when include_one), ascending graded-lex order.
std::vector<Monomial> monomials_up_to(int dim, int max_degree, bool include_one = false);

}  // namespace hoc
