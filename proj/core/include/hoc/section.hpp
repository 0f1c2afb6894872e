#pragma once

#include "hoc/tensor.hpp"

namespace hoc {

/// A section X + alpha of TM + /\^n T*M: a vector field and an n-form.
struct Section {
  MultiVec vec;
  Form form;

  Section() = default;
  Section(MultiVec v, Form f) : vec(std::move(v)), form(std::move(f)) {
    if (vec.degree() != 1) throw ArgumentError("section vector part must be a vector field");
    if (vec.dim() != form.dim()) throw ContextError("section parts live on different charts");
  }

  static Section zero(const Context& ctx) { return {MultiVec::zero(ctx.dim, 1), Form::zero(ctx.dim, ctx.order)}; }
  static Section of_vector(const Context& ctx, MultiVec v) { return {std::move(v), Form::zero(ctx.dim, ctx.order)}; }
  static Section of_form(const Context& ctx, Form f) { return {MultiVec::zero(ctx.dim, 1), std::move(f)}; }

  int dim() const { return vec.dim(); }
  int order() const { return form.degree(); }
  bool is_zero() const { return vec.is_zero() && form.is_zero(); }

  /// Throws ContextError unless the section lives in `ctx`.
  void require_context(const Context& ctx) const {
    if (vec.dim() != ctx.dim || form.dim() != ctx.dim || form.degree() != ctx.order) {
      throw ContextError("section does not belong to the bracket context");
    }
  }

  Section operator-() const { return {-vec, -form}; }
  Section& operator+=(const Section& o) {
    vec += o.vec;
    form += o.form;
    return *this;
  }
  Section& operator-=(const Section& o) {
    vec -= o.vec;
    form -= o.form;
    return *this;
  }
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  /// f e scales both components.
  friend Section operator*(const Poly& f, Section e) {
    e.vec *= f;
    e.form *= f;
    return e;
  }
  friend Section operator*(const Rational& c, Section e) {
    e.vec *= c;
    e.form *= c;
    return e;
  }

  bool operator==(const Section&) const = default;
};

}  // namespace hoc
