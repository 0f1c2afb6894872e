#pragma once

#include <cstdint>
#include <vector>

#include "hoc/check.hpp"
#include "hoc/section.hpp"

namespace hoc {

/// Symmetric (n-1)-form valued pairing (X+a, Y+b) = 1/2 (i_X b + i_Y a).
Form pairing(const Section& e1, const Section& e2);

/// Skew-symmetric bracket
/// [X,Y] + L_X b - L_Y a + 1/2 (d i_Y a - d i_X b).
Section courant_bracket(const Section& e1, const Section& e2);

/// Non-skew bracket [X,Y] + L_X b - L_Y a + d i_Y a.
Section dorfman_bracket(const Section& e1, const Section& e2);

/// The same bracket assembled as courant_bracket + d(pairing). Kept as a
/// second construction path; both must agree exactly.
Section dorfman_bracket_via_courant(const Section& e1, const Section& e2);

/// T(e1,e2,e3) = -1/3 ( <[[e1,e2]], e3> + c.p. ), Courant bracket inside.
Form t_map(const Section& e1, const Section& e2, const Section& e3);

/// Projection to the vector part.
MultiVec anchor(const Section& e);

/// Dorfman bracket twisted by an (n+2)-form: adds i_{X^Y} theta.
Section deformed_dorfman(const Section& e1, const Section& e2, const Form& theta);

/// Shear X + a -> X + a + i_X phi by an (n+1)-form.
Section gauge(const Form& phi, const Section& e);

/// Adds an n-form to the form part: the meaning of "df ^ <e1,e2>" added to
/// a section.
Section add_form(Section e, const Form& f);

/// Random section with coefficients of degree <= 2 (exterior sampler).
class Sampler;
Section random_section(Sampler& sampler, const Context& ctx);

/// Jacobiator of the Courant bracket equals d T on sampled triples.
CheckResult check_courant_jacobiator(const Context& ctx, std::uint64_t seed, int samples);

/// Leibniz identity of the Dorfman bracket on sampled triples.
CheckResult check_dorfman_leibniz(const Context& ctx, std::uint64_t seed, int samples);

/// L_{rho(e1)} <e2,e3> = <[[e1,e2]], e3> + <e2, [[e1,e3]]> on sampled triples.
CheckResult check_dorfman_pairing_compatibility(const Context& ctx, std::uint64_t seed, int samples);

/// Jacobiator = dT, scalar rule with -df ^ <e1,e2>, anchor morphism and the
/// Lie-derivative compatibility of the pairing. Throws ArgumentError when
/// samples == 0.
std::vector<CheckResult> check_courant_axioms(const Context& ctx, std::uint64_t seed, int samples);

/// Leibniz identity, both scalar rules, pairing compatibility, anchor
/// morphism and agreement of the two bracket construction paths.
std::vector<CheckResult> check_dorfman_axioms(const Context& ctx, std::uint64_t seed, int samples);

/// Closedness of theta against the Leibniz identity of the twisted bracket
/// (sampled triples plus every triple of coordinate fields), followed by a
/// check that the two verdicts agree.
std::vector<CheckResult> check_deformation(const Context& ctx, const Form& theta, std::uint64_t seed, int samples);

/// e^phi [[e1,e2]]_{d phi} = [[e^phi e1, e^phi e2]]; when d phi = 0 also
/// that e^phi preserves the untwisted bracket.
std::vector<CheckResult> check_gauge_isomorphism(const Context& ctx, const Form& phi, std::uint64_t seed,
                                                 int samples);

}  // namespace hoc
