#include "hoc/poly.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace hoc {

Monomial Monomial::variable(int i) {
  Monomial m;
  m.set_exponent(i, 1);
  return m;
}

void Monomial::set_exponent(int i, int e) {
  if (i < 1 || i > kMaxDim) throw ArgumentError("coordinate index out of range: " + std::to_string(i));
  if (e < 0 || e > 255) throw ArgumentError("exponent out of range: " + std::to_string(e));
  auto& slot = exps_[static_cast<std::size_t>(i - 1)];
  degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
  slot = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    const int e = exps_[k] + other.exps_[k];
    if (e > 255) throw ArgumentError("exponent overflow in monomial product");
    r.exps_[k] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  // Larger exponent on an earlier variable ranks higher: unsigned bytewise order.
  return std::memcmp(a.exps_.data(), b.exps_.data(), a.exps_.size()) <=> 0;
}

Poly::Poly(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw ContextError("chart dimension out of range: " + std::to_string(dim));
}

Poly Poly::constant(int dim, const Rational& c) { return monomial(dim, Monomial{}, c); }

Poly Poly::variable(int dim, int i) {
  if (i < 1 || i > dim) throw ArgumentError("variable index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return monomial(dim, Monomial::variable(i));
}

Poly Poly::monomial(int dim, const Monomial& m, const Rational& c) {
  Poly p(dim);
  for (int i = dim + 1; i <= kMaxDim; ++i) {
    if (m.exponent(i) != 0) throw ArgumentError("monomial uses a variable beyond the chart dimension");
  }
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.total_degree(); }

void Poly::require_same_dim(const Poly& other) const {
  if (dim_ != 0 && other.dim_ != 0 && dim_ != other.dim_) {
    throw ContextError("polynomials on charts of dimension " + std::to_string(dim_) + " and " +
                       std::to_string(other.dim_));
  }
}

Poly Poly::merge(const Poly& a, const Poly& b, bool negate_b) {
  a.require_same_dim(b);
  Poly r;
  r.dim_ = a.dim_ != 0 ? a.dim_ : b.dim_;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first > ib->first)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first > ia->first) {
      r.terms_.emplace_back(ib->first, negate_b ? Rational(-ib->second) : ib->second);
      ++ib;
    } else {
      Rational c = negate_b ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
      if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) {
    require_same_dim(other);
    if (dim_ == 0) dim_ = other.dim_;
    return *this;
  }
  *this = merge(*this, other, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.empty()) {
    require_same_dim(other);
    if (dim_ == 0) dim_ = other.dim_;
    return *this;
  }
  *this = merge(*this, other, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_dim(b);
  Poly r;
  r.dim_ = a.dim_ != 0 ? a.dim_ : b.dim_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  }
  std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
  return r;
}

Poly Poly::partial(int i) const {
  if (i < 1 || i > dim_) throw ArgumentError("partial derivative index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
  Poly r;
  r.dim_ = dim_;
  // Differentiating in one variable keeps distinct monomials distinct and,
  // restricted to the surviving terms, preserves graded-lex order.
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set_exponent(i, e - 1);
    r.terms_.emplace_back(dm, c * e);
  }
  return r;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != dim_) {
    throw ArgumentError("evaluation point has " + std::to_string(point.size()) + " coordinates, chart has " +
                        std::to_string(dim_));
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 1; i <= dim_; ++i) {
      for (int e = m.exponent(i); e > 0; --e) v *= point[static_cast<std::size_t>(i - 1)];
    }
    sum += v;
  }
  return sum;
}

bool Poly::operator==(const Poly& other) const {
  if (dim_ != 0 && other.dim_ != 0 && dim_ != other.dim_) return false;
  return terms_ == other.terms_;
}

std::vector<Monomial> monomials_up_to(int dim, int max_degree, bool include_one) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(dim), 0);
  // Enumerate exponent vectors with total degree <= max_degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var > dim) {
      Monomial m;
      for (int i = 1; i <= dim; ++i) m.set_exponent(i, exps[static_cast<std::size_t>(i - 1)]);
      if (include_one || !m.is_one()) out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(var - 1)] = e;
      self(self, var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var - 1)] = 0;
  };
  rec(rec, 1, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hoc
