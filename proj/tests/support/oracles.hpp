#pragma once

// Reference implementations written from the component definitions,
// independent of the library's sparse algorithms. A tensor is read as an
// alternating multilinear map on coordinate slots with <dx^I, @_I> = 1, so
// a(i1,...,ik) is sign(sort) * a_{sorted} and 0 on repeated slots.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "hoc/section.hpp"

namespace hoc::oracle {

/// Sign of the permutation sorting `slots`, 0 on a repeated entry.
inline int perm_sign(std::vector<int> slots) {
  int sign = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      if (slots[i] == slots[j]) return 0;
      if (slots[i] > slots[j]) sign = -sign;
    }
  }
  return sign;
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i) {
    if ((mask >> (i - 1)) & 1U) out.push_back(i);
  }
  return out;
}

template <Variance V>
Poly eval(const Tensor<V>& t, const std::vector<int>& slots) {
  const int s = perm_sign(slots);
  if (s == 0) return Poly(t.dim());
  std::uint32_t mask = 0;
  for (int i : slots) mask |= 1U << (i - 1);
  const Poly c = t.coeff(MultiIndex::from_mask(mask));
  return s > 0 ? c : -c;
}

/// Builds a degree-k tensor from its values on increasing slot lists.
template <Variance V>
Tensor<V> build(int dim, int degree, const std::function<Poly(const std::vector<int>&)>& value) {
  Tensor<V> t(dim, degree);
  if (degree > dim) return t;
  for (std::uint32_t mask = 0; mask < (1U << dim); ++mask) {
    if (std::popcount(mask) != degree) continue;
    t.add_term(MultiIndex::from_mask(mask), value(members(mask)));
  }
  return t;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Shuffle formula (a ^ b)(K) = sum over p-subsets S of K of
/// sign(S, K\S) a(S) b(K\S).
template <Variance V>
Tensor<V> wedge(const Tensor<V>& a, const Tensor<V>& b) {
  const int p = a.degree();
  return build<V>(a.dim(), p + b.degree(), [&](const std::vector<int>& k) {
    Poly sum(a.dim());
    const int n = static_cast<int>(k.size());
    for (std::uint32_t pick = 0; pick < (1U << n); ++pick) {
      if (std::popcount(pick) != p) continue;
      std::vector<int> s, rest;
      for (int i = 0; i < n; ++i) ((pick >> i) & 1U ? s : rest).push_back(k[static_cast<std::size_t>(i)]);
      const Poly term = eval(a, s) * eval(b, rest);
      sum += perm_sign(concat(s, rest)) > 0 ? term : -term;
    }
    return sum;
  });
}

/// (i_X a)(K) = sum_j X^j a(j, K).
inline Form interior(const MultiVec& x, const Form& a) {
  if (a.degree() == 0) return Form(a.dim(), 0);
  return build<Variance::covariant>(a.dim(), a.degree() - 1, [&](const std::vector<int>& k) {
    Poly sum(a.dim());
    for (int j = 1; j <= a.dim(); ++j) sum += x.component(j) * eval(a, concat({j}, k));
    return sum;
  });
}

/// Leading-slot contraction (i_P a)(K) = sum_J P^J a(J, K).
inline Form contract(const MultiVec& p, const Form& a) {
  return build<Variance::covariant>(a.dim(), a.degree() - p.degree(), [&](const std::vector<int>& k) {
    Poly sum(a.dim());
    for (const auto& [j, f] : p.terms()) sum += f * eval(a, concat(j.indices(), k));
    return sum;
  });
}

/// <i_xi P, eta> = <P, xi ^ eta>: (i_xi P)(K) = sum_J xi_J P(J, K).
inline MultiVec contract(const Form& xi, const MultiVec& p) {
  return build<Variance::contravariant>(p.dim(), p.degree() - xi.degree(), [&](const std::vector<int>& k) {
    Poly sum(p.dim());
    for (const auto& [j, f] : xi.terms()) sum += f * eval(p, concat(j.indices(), k));
    return sum;
  });
}

/// (d a)(k0..kp) = sum_s (-1)^s d_{k_s} a(k0 .. ^k_s .. kp).
inline Form d(const Form& a) {
  return build<Variance::covariant>(a.dim(), a.degree() + 1, [&](const std::vector<int>& k) {
    Poly sum(a.dim());
    for (std::size_t s = 0; s < k.size(); ++s) {
      std::vector<int> rest = k;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      const Poly term = eval(a, rest).partial(k[s]);
      sum += s % 2 == 0 ? term : -term;
    }
    return sum;
  });
}

inline Poly apply(const MultiVec& x, const Poly& f) {
  Poly sum(f.dim());
  for (int j = 1; j <= f.dim(); ++j) sum += x.component(j) * f.partial(j);
  return sum;
}

/// [X,Y]^i = X(Y^i) - Y(X^i).
inline MultiVec bracket(const MultiVec& x, const MultiVec& y) {
  return build<Variance::contravariant>(x.dim(), 1, [&](const std::vector<int>& k) {
    return oracle::apply(x, y.component(k[0])) - oracle::apply(y, x.component(k[0]));
  });
}

/// Component formula (L_X a)(K) = X(a_K) + sum_s sum_j (d_{k_s} X^j) a(.., j, ..).
inline Form lie(const MultiVec& x, const Form& a) {
  return build<Variance::covariant>(a.dim(), a.degree(), [&](const std::vector<int>& k) {
    Poly sum = oracle::apply(x, eval(a, k));
    for (std::size_t s = 0; s < k.size(); ++s) {
      for (int j = 1; j <= a.dim(); ++j) {
        std::vector<int> slots = k;
        slots[s] = j;
        sum += x.component(j).partial(k[s]) * eval(a, slots);
      }
    }
    return sum;
  });
}

/// (L_X P)^K = X(P^K) - sum_s sum_j (d_j X^{k_s}) P(.., j, ..).
inline MultiVec lie(const MultiVec& x, const MultiVec& p) {
  return build<Variance::contravariant>(p.dim(), p.degree(), [&](const std::vector<int>& k) {
    Poly sum = oracle::apply(x, eval(p, k));
    for (std::size_t s = 0; s < k.size(); ++s) {
      for (int j = 1; j <= p.dim(); ++j) {
        std::vector<int> slots = k;
        slots[s] = j;
        sum -= x.component(k[s]).partial(j) * eval(p, slots);
      }
    }
    return sum;
  });
}

/// Sections through the oracles above.
inline Form pairing(const Section& e1, const Section& e2) {
  return make_rational(1, 2) * (oracle::interior(e1.vec, e2.form) + oracle::interior(e2.vec, e1.form));
}

inline Section dorfman(const Section& e1, const Section& e2) {
  return {bracket(e1.vec, e2.vec), lie(e1.vec, e2.form) - lie(e2.vec, e1.form) + oracle::d(oracle::interior(e2.vec, e1.form))};
}

inline Section courant(const Section& e1, const Section& e2) {
  const Form half = make_rational(1, 2) * (oracle::d(oracle::interior(e2.vec, e1.form)) - oracle::d(oracle::interior(e1.vec, e2.form)));
  return {bracket(e1.vec, e2.vec), lie(e1.vec, e2.form) - lie(e2.vec, e1.form) + half};
}

/// Brute-force sweep of L_{pi#(df1 ^ ... ^ dfn)} pi = 0 over every n-set of
/// distinct nonconstant monomials of degree <= max_degree. True when some
/// set gives a nonzero residual.
inline bool nambu_violation(const MultiVec& pi, int n, int max_degree = 2) {
  const int m = pi.dim();
  std::vector<Poly> monos;
  for (std::uint32_t e = 1;; ++e) {
    // Exponent vectors in base (max_degree + 1), filtered by total degree.
    std::vector<int> exps(static_cast<std::size_t>(m));
    std::uint32_t rest = e;
    int total = 0;
    for (auto& x : exps) {
      x = static_cast<int>(rest % static_cast<std::uint32_t>(max_degree + 1));
      rest /= static_cast<std::uint32_t>(max_degree + 1);
      total += x;
    }
    if (rest != 0) break;
    if (total == 0 || total > max_degree) continue;
    Poly f = Poly::constant(m, 1);
    for (int i = 1; i <= m; ++i) {
      for (int k = 0; k < exps[static_cast<std::size_t>(i - 1)]; ++k) f = f * Poly::variable(m, i);
    }
    monos.push_back(f);
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == pick.size()) {
      Form w = Form::scalar(Poly::constant(m, 1));
      for (std::size_t i : pick) w = oracle::wedge(w, oracle::d(Form::scalar(monos[i])));
      return !oracle::lie(oracle::contract(w, pi), pi).is_zero();
    }
    for (std::size_t i = start; i < monos.size(); ++i) {
      pick[depth] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace hoc::oracle
