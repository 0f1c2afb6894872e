#include "hoc/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>

namespace hoc {
namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr i128 kMax = INT64_MAX;

// Inline values exclude INT64_MIN so negation and std::gcd never overflow.
bool fits(i128 v) { return v >= -kMax && v <= kMax; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  const u128 mag = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class z(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  z <<= 64;
  z += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign(q);
    return;
  }
  *this = from_wide(num, den);
}

void Rational::assign(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  if (den != 1) {
    const u128 g = gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num), static_cast<u128>(den));
    if (g != 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    r.assign(q);
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::get_str(int base) const {
  if (big_) return big_->get_str(base);
  if (base == 10) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  return to_mpq().get_str(base);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  if (a.den_ == 1 && b.den_ == 1) {
    const i128 s = static_cast<i128>(a.num_) + b.num_;
    if (fits(s)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(s);
      return r;
    }
  }
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  if (a.den_ == 1 && b.den_ == 1) {
    const i128 p = static_cast<i128>(a.num_) * b.num_;
    if (fits(p)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(p);
      return r;
    }
    return Rational::from_wide(p, 1);
  }
  // Cross-cancel so the product is already in lowest terms.
  const std::int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
  const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(num) && fits(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw ArgumentError("division by zero");
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return cmp(a.to_mpq(), b.to_mpq()) <=> 0;
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.get_str(10); }

Rational make_rational(const std::string& num, const std::string& den) {
  const mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ArgumentError("rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

}  // namespace hoc
