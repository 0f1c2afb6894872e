#pragma once

#include <cstdint>
#include <vector>

#include "hoc/check.hpp"
#include "hoc/section.hpp"

namespace hoc {

/// An (n+1)-vector field proposed as a Nambu-Poisson tensor of order n.
class NambuCandidate {
 public:
  /// Throws ArgumentError unless pi has degree ctx.order + 1 on ctx's chart.
  NambuCandidate(const Context& ctx, MultiVec pi);

  const Context& context() const { return ctx_; }
  const MultiVec& pi() const { return pi_; }

 private:
  Context ctx_;
  MultiVec pi_;
};

/// pi#(xi) = i_xi pi for an n-form xi.
MultiVec pi_sharp(const NambuCandidate& c, const Form& xi);

/// Which bracket graph closure is tested against.
enum class GraphBracket { dorfman, courant };

/// Evaluates L_{pi#(df1^...^dfn)} pi for every set of n distinct nonconstant
/// monomials of total degree <= max_degree. Passes iff every residual
/// vanishes; witnesses are listed in sorted tuple order.
CheckResult np_fundamental_check(const NambuCandidate& c, int max_degree = 2);

/// Brackets graph sections pi#(a) + a, pi#(b) + b and tests that the result
/// Z + g satisfies Z = pi#(g). Sweeps all pairs of constant basis n-forms,
/// then `samples` seeded random pairs with coefficients of degree <= max_degree.
CheckResult graph_closure_check(const NambuCandidate& c, std::uint64_t seed, int samples, int max_degree = 2,
                                GraphBracket bracket = GraphBracket::dorfman);

/// [a,b]_pi = L_{pi#a} b - L_{pi#b} a + d i_{pi#b} a.
Form nambu_form_bracket(const NambuCandidate& c, const Form& alpha, const Form& beta);

/// The comparison bracket [a,b]^pi = L_{pi#a} b + (-1)^{n+1} <da, pi> b.
Form marrero_bracket(const NambuCandidate& c, const Form& alpha, const Form& beta);

/// {xi,eta}_pi = L_{pi#(d xi)} eta on (n-1)-forms.
Form leibniz_nm1_bracket(const NambuCandidate& c, const Form& xi, const Form& eta);

/// Leibniz algebroid identities for [.,.]_pi, the Leibniz algebra on
/// (n-1)-forms, the comparison with [.,.]^pi and the pi# identities used to
/// relate the Courant and Dorfman graph conditions. Throws PreconditionError
/// when c fails np_fundamental_check at degree 2.
std::vector<CheckResult> check_nambu_leibniz_algebroid(const NambuCandidate& c, std::uint64_t seed, int samples);

}  // namespace hoc
