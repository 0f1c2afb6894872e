#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "hoc/errors.hpp"

namespace hoc {

/// Exact rational number in lowest terms with a positive denominator.
/// Values whose numerator and denominator fit in 64 bits live inline; larger
/// ones are held by GMP. The representation is canonical, so equal values
/// always share it.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) {  // NOLINT: implicit like an integer literal
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
      if (v > static_cast<std::uint64_t>(INT64_MAX)) {
        assign(mpq_class(mpz_class(std::to_string(v), 10)));
        return;
      }
    } else if constexpr (std::is_signed_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
      if (v == INT64_MIN) {
        assign(mpq_class(static_cast<long>(v)));
        return;
      }
    }
    num_ = static_cast<std::int64_t>(v);
  }
  /// num/den reduced; throws ArgumentError when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  mpq_class to_mpq() const;
  mpz_class get_num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
  mpz_class get_den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }
  std::string get_str(int base = 10) const;

  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws ArgumentError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals an inline one
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  __extension__ using Wide = __int128;

  void assign(const mpq_class& q);
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;  // set iff the value does not fit inline
};

Rational abs(const Rational& q);
std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// Decimal numerator and denominator of any length.
Rational make_rational(const std::string& num, const std::string& den);

inline std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace hoc
