#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hoc/check.hpp"
#include "hoc/section.hpp"

namespace hoc {

class Sampler;

/// An (n+1)-form proposed as a (pre-)n-plectic structure.
class PlecticCandidate {
 public:
  /// Throws ArgumentError unless omega has degree ctx.order + 1 on ctx's chart.
  PlecticCandidate(const Context& ctx, Form omega);

  const Context& context() const { return ctx_; }
  const Form& omega() const { return omega_; }
  bool is_closed() const;

 private:
  Context ctx_;
  Form omega_;
};

/// An n-form alpha together with a vector field X with alpha = i_X omega.
class AdmissiblePair {
 public:
  /// Returns nullopt unless alpha = i_x omega exactly.
  static std::optional<AdmissiblePair> verify(const PlecticCandidate& c, Form alpha, MultiVec x);
  /// alpha := i_x omega, admissible by construction.
  static AdmissiblePair from_vector(const PlecticCandidate& c, MultiVec x);

  const Form& alpha() const { return alpha_; }
  const MultiVec& x() const { return x_; }

 private:
  AdmissiblePair(Form alpha, MultiVec x) : alpha_(std::move(alpha)), x_(std::move(x)) {}
  Form alpha_;
  MultiVec x_;
};

/// An (n-1)-form xi with its Hamiltonian vector field: d xi = i_X omega.
class HamiltonianPair {
 public:
  static std::optional<HamiltonianPair> verify(const PlecticCandidate& c, Form xi, MultiVec x);

  const Form& xi() const { return xi_; }
  const MultiVec& x() const { return x_; }

 private:
  HamiltonianPair(Form xi, MultiVec x) : xi_(std::move(xi)), x_(std::move(x)) {}
  Form xi_;
  MultiVec x_;
};

/// omega_flat(X) = i_X omega.
Form omega_flat(const PlecticCandidate& c, const MultiVec& x);

/// Rank of X -> i_X omega. Constant omega: exact verdict, `points` unused.
/// Otherwise evaluated at each point: a rank-deficient point is a definitive
/// degeneracy witness (inputs: the point's coordinates, residual: a kernel
/// vector); full rank everywhere only certifies the sampled points.
/// Throws ArgumentError when omega is non-constant and points is empty.
CheckResult nondegeneracy_check(const PlecticCandidate& c, const std::vector<std::vector<Rational>>& points);

/// d omega = 0, closure of the graph X + i_X omega under the Dorfman bracket
/// (coordinate-field pairs plus random pairs), isotropy of the graph, and
/// agreement of the closedness and closure verdicts.
std::vector<CheckResult> graph_closure_omega(const PlecticCandidate& c, std::uint64_t seed, int samples);

/// d omega + theta = 0 against closure under the twisted bracket, their
/// agreement, and when d omega + theta = 0 that e^{-omega} carries the twisted
/// bracket to the untwisted one.
std::vector<CheckResult> deformed_graph_check(const PlecticCandidate& c, const Form& theta, std::uint64_t seed,
                                              int samples);

/// Exact solve of alpha = i_X omega for constant-coefficient omega, one linear
/// system per monomial. nullopt when alpha is not in the image.
/// Throws UnsupportedError for non-constant omega (use AdmissiblePair::verify).
std::optional<AdmissiblePair> solve_admissible(const PlecticCandidate& c, const Form& alpha);

/// d xi = i_X omega solved through solve_admissible(c, d xi).
std::optional<HamiltonianPair> solve_hamiltonian(const PlecticCandidate& c, const Form& xi);

/// [a,b]_omega = L_{Xa} b - L_{Xb} a - d i_{Xa} i_{Xb} omega with vector part
/// [Xa, Xb]. Throws PreconditionError when d omega != 0 and
/// InconsistentCandidateError if the result breaks the pair invariant.
AdmissiblePair admissible_bracket(const PlecticCandidate& c, const AdmissiblePair& a, const AdmissiblePair& b);

/// Skew-symmetry, Jacobi, anchor and scalar rule on sampled admissible forms.
/// Throws PreconditionError when d omega != 0.
std::vector<CheckResult> check_admissible_lie_algebroid(const PlecticCandidate& c, std::uint64_t seed, int samples);

/// {xi,eta}_h = L_{X_xi} eta.
Form hemi_bracket(const PlecticCandidate& c, const HamiltonianPair& p, const HamiltonianPair& q);

/// {xi,eta}_s = i_{X_xi} i_{X_eta} omega.
Form semi_bracket(const PlecticCandidate& c, const HamiltonianPair& p, const HamiltonianPair& q);

/// Hamiltonian pair for constant omega: a random potential when it solves,
/// otherwise built backwards from a constant vector field X as
/// xi = (1/n) i_E (i_X omega) with the Euler field E, plus a random exact term.
HamiltonianPair random_hamiltonian_pair(const PlecticCandidate& c, Sampler& sampler);

/// d{x,y}_h = [dx,dy]_omega, {x,y}_s = {x,y}_h - d i_{Xx} y, and
/// {x,y}_h + {y,x}_h = d(i_{Xx} y + i_{Xy} x) on generated Hamiltonian pairs.
/// Requires constant closed omega.
std::vector<CheckResult> check_hamiltonian_brackets(const PlecticCandidate& c, std::uint64_t seed, int samples);

}  // namespace hoc
