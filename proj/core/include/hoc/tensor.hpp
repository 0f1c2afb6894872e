#pragma once

#include <map>
#include <string>
#include <utility>

#include "hoc/errors.hpp"
#include "hoc/multi_index.hpp"
#include "hoc/poly.hpp"

namespace hoc {

/// Chart dimension m and bracket order n of the bundle TM + /\^n T*M.
struct Context {
  int dim = 0;
  int order = 0;

  /// Validates 1 <= n <= m <= kMaxDim; throws ContextError.
  static Context make(int dim, int order) {
    if (dim < 1 || dim > kMaxDim) throw ContextError("chart dimension must be in 1.." + std::to_string(kMaxDim));
    if (order < 1 || order > dim) {
      throw ContextError("bracket order n=" + std::to_string(order) + " must satisfy 1 <= n <= m=" + std::to_string(dim));
    }
    return Context{dim, order};
  }

  bool operator==(const Context&) const = default;
};

enum class Variance { covariant, contravariant };

/// Sparse alternating tensor field of fixed degree: covariant tensors are
/// differential forms sum f_I dx^I, contravariant ones are multivector fields
/// sum f_I @_I. Only nonzero coefficients are stored, keyed by strictly
/// increasing multi-indices; degree > dim forces the zero tensor.
template <Variance V>
class Tensor {
 public:
  using Coefficients = std::map<MultiIndex, Poly>;

  Tensor() = default;
  Tensor(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > kMaxDim) throw ContextError("chart dimension out of range");
    if (degree < 0) throw ArgumentError("negative tensor degree");
  }

  static Tensor zero(int dim, int degree) { return Tensor(dim, degree); }

  /// coeff * dx^I (or coeff * @_I).
  static Tensor basis(int dim, MultiIndex index, const Poly& coeff) {
    Tensor t(dim, index.degree());
    t.add_term(index, coeff);
    return t;
  }
  static Tensor basis(int dim, MultiIndex index) { return basis(dim, index, Poly::constant(dim, 1)); }

  /// Degree-0 tensor holding a scalar.
  static Tensor scalar(const Poly& f) { return basis(f.dim(), MultiIndex{}, f); }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const Coefficients& terms() const { return coeffs_; }

  Poly coeff(MultiIndex index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Poly(dim_) : it->second;
  }

  /// Coefficient of a degree-0 tensor; for vector fields use component().
  Poly scalar_value() const {
    if (degree_ != 0) throw ArgumentError("scalar_value on a tensor of degree " + std::to_string(degree_));
    return coeff(MultiIndex{});
  }

  /// i-th component of a degree-1 tensor.
  Poly component(int i) const { return coeff(MultiIndex::single(i)); }

  bool has_constant_coefficients() const {
    for (const auto& [idx, f] : coeffs_) {
      if (!f.is_constant()) return false;
    }
    return true;
  }

  void add_term(MultiIndex index, const Poly& f) {
    if (index.degree() != degree_) throw ArgumentError("term degree does not match tensor degree");
    if (index.max_index() > dim_) throw ArgumentError("basis index exceeds chart dimension");
    if (f.dim() != 0 && f.dim() != dim_) throw ContextError("coefficient lives on a different chart");
    if (f.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(index, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  Tensor operator-() const {
    Tensor r = *this;
    for (auto& [idx, f] : r.coeffs_) f = -f;
    return r;
  }

  Tensor& operator+=(const Tensor& other) {
    require_compatible(other);
    for (const auto& [idx, f] : other.coeffs_) add_term(idx, f);
    return *this;
  }

  Tensor& operator-=(const Tensor& other) {
    require_compatible(other);
    for (const auto& [idx, f] : other.coeffs_) add_term(idx, -f);
    return *this;
  }

  Tensor& operator*=(const Poly& f) {
    if (f.dim() != 0 && f.dim() != dim_) throw ContextError("scalar lives on a different chart");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      it->second = it->second * f;
      it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }
    return *this;
  }

  Tensor& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& [idx, f] : coeffs_) f *= c;
    }
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Poly& f, Tensor a) { return a *= f; }
  friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }

  bool operator==(const Tensor& other) const {
    return dim_ == other.dim_ && degree_ == other.degree_ && coeffs_ == other.coeffs_;
  }

  void require_compatible(const Tensor& other) const {
    if (dim_ != other.dim_) throw ContextError("tensors live on charts of different dimension");
    if (degree_ != other.degree_) {
      throw ArgumentError("degree mismatch: " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
    }
  }

 private:
  int dim_ = 0;
  int degree_ = 0;
  Coefficients coeffs_;
};

using Form = Tensor<Variance::covariant>;
using MultiVec = Tensor<Variance::contravariant>;

}  // namespace hoc
