#include "hoc/exterior.hpp"

#include <string>

namespace hoc {
namespace {

template <Variance V>
Tensor<V> wedge_impl(const Tensor<V>& a, const Tensor<V>& b) {
  if (a.dim() != b.dim()) throw ContextError("wedge of tensors on different charts");
  Tensor<V> r(a.dim(), a.degree() + b.degree());
  if (r.degree() > r.dim()) return r;
  for (const auto& [i, f] : a.terms()) {
    for (const auto& [j, g] : b.terms()) {
      const int s = merge_sign(i, j);
      if (s == 0) continue;
      Poly fg = f * g;
      if (s < 0) fg = -fg;
      r.add_term(i | j, fg);
    }
  }
  return r;
}

template <Variance VA, Variance VB>
Tensor<VB> contract_impl(const Tensor<VA>& a, const Tensor<VB>& b) {
  if (a.dim() != b.dim()) throw ContextError("contraction of tensors on different charts");
  if (a.degree() > b.degree()) {
    throw ArgumentError("cannot contract degree " + std::to_string(a.degree()) + " into degree " +
                        std::to_string(b.degree()));
  }
  Tensor<VB> r(b.dim(), b.degree() - a.degree());
  for (const auto& [j, f] : a.terms()) {
    for (const auto& [k, g] : b.terms()) {
      if (!j.subset_of(k)) continue;
      const MultiIndex rest = k.without(j);
      Poly fg = f * g;
      if (merge_sign(j, rest) < 0) fg = -fg;
      r.add_term(rest, fg);
    }
  }
  return r;
}

void require_vector_field(const MultiVec& x) {
  if (x.degree() != 1) throw ArgumentError("expected a vector field, got a " + std::to_string(x.degree()) + "-vector");
}

}  // namespace

Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }
MultiVec wedge(const MultiVec& a, const MultiVec& b) { return wedge_impl(a, b); }

Form interior(const MultiVec& x, const Form& a) {
  require_vector_field(x);
  if (a.degree() == 0) {
    if (x.dim() != a.dim()) throw ContextError("interior product on different charts");
    return Form::zero(a.dim(), 0);
  }
  return contract_impl(x, a);
}

MultiVec contract(const Form& xi, const MultiVec& p) { return contract_impl(xi, p); }

Form contract(const MultiVec& p, const Form& a) { return contract_impl(p, a); }

Poly pairing(const Form& a, const MultiVec& p) {
  if (a.degree() != p.degree()) throw ArgumentError("full contraction needs equal degrees");
  return contract_impl(a, p).scalar_value();
}

Form exterior_derivative(const Form& a) {
  Form r(a.dim(), a.degree() + 1);
  if (r.degree() > r.dim()) return r;
  for (const auto& [idx, f] : a.terms()) {
    for (int i = 1; i <= a.dim(); ++i) {
      if (idx.contains(i)) continue;
      Poly df = f.partial(i);
      if (df.is_zero()) continue;
      const MultiIndex di = MultiIndex::single(i);
      if (merge_sign(di, idx) < 0) df = -df;
      r.add_term(di | idx, df);
    }
  }
  return r;
}

Form differential(const Poly& f) { return exterior_derivative(Form::scalar(f)); }

Poly apply(const MultiVec& x, const Poly& f) {
  require_vector_field(x);
  Poly r(x.dim());
  for (const auto& [idx, xj] : x.terms()) {
    const int j = idx.indices().front();
    r += xj * f.partial(j);
  }
  return r;
}

Form lie_derivative(const MultiVec& x, const Form& a) {
  require_vector_field(x);
  if (a.degree() == 0) return Form::scalar(apply(x, a.scalar_value()));
  return interior(x, exterior_derivative(a)) + exterior_derivative(interior(x, a));
}

MultiVec lie_derivative(const MultiVec& x, const MultiVec& p) {
  require_vector_field(x);
  if (x.dim() != p.dim()) throw ContextError("Lie derivative on different charts");
  const int dim = p.dim();
  MultiVec r(dim, p.degree());
  for (const auto& [idx, f] : p.terms()) {
    // Transport of the coefficient.
    r.add_term(idx, apply(x, f));
    // f * sum over slots s of @_{i1} ^ ... ^ [X, @_{is}] ^ ... with
    // [X, @_i] = -sum_j (d_i X^j) @_j.
    int position = 0;
    for (int slot : idx.indices()) {
      const MultiIndex others = idx.without(MultiIndex::single(slot));
      for (int j = 1; j <= dim; ++j) {
        if (others.contains(j)) continue;
        Poly dxj = x.component(j).partial(slot);
        if (dxj.is_zero()) continue;
        const MultiIndex jj = MultiIndex::single(j);
        // Moving @_j from slot `position` to the front costs (-1)^position.
        int sign = merge_sign(jj, others) * ((position & 1) ? -1 : 1);
        Poly term = f * dxj;
        if (sign > 0) term = -term;  // leading minus from [X, @_i]
        r.add_term(jj | others, term);
      }
      ++position;
    }
  }
  return r;
}

MultiVec lie_bracket(const MultiVec& x, const MultiVec& y) {
  require_vector_field(x);
  require_vector_field(y);
  if (x.dim() != y.dim()) throw ContextError("bracket of vector fields on different charts");
  MultiVec r(x.dim(), 1);
  for (int i = 1; i <= x.dim(); ++i) {
    r.add_term(MultiIndex::single(i), apply(x, y.component(i)) - apply(y, x.component(i)));
  }
  return r;
}

MultiVec coordinate_field(int dim, int i) { return MultiVec::basis(dim, MultiIndex::single(i)); }

Form coordinate_covector(int dim, int i) { return Form::basis(dim, MultiIndex::single(i)); }

}  // namespace hoc
