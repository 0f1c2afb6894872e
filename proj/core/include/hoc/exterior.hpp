#pragma once

#include "hoc/tensor.hpp"

namespace hoc {

// Conventions shared by every module:
//  * basis pairing <dx^I, @_I> = 1, no factorial normalisation;
//  * contraction of A into B (opposite variances, deg A <= deg B) fills the
//    leading slots: <contract(A, B), C> = <B, A ^ C>. For a vector field this
//    is the usual interior product, and contract(X ^ Y, theta) = i_Y i_X theta.

/// Alternating product; degree p + q (zero when p + q > dim).
Form wedge(const Form& a, const Form& b);
MultiVec wedge(const MultiVec& a, const MultiVec& b);

/// Interior product i_X a of a vector field with a form; degree k - 1.
/// For k = 0 the result is the zero scalar.
Form interior(const MultiVec& x, const Form& a);

/// i_xi P: leading-slot contraction of a p-form into a q-vector, degree q - p.
/// Throws ArgumentError when p > q.
MultiVec contract(const Form& xi, const MultiVec& p);

/// i_P a: leading-slot contraction of a p-vector into a q-form, degree q - p.
/// Throws ArgumentError when p > q.
Form contract(const MultiVec& p, const Form& a);

/// Full contraction <a, P> of a form and a multivector of equal degree.
Poly pairing(const Form& a, const MultiVec& p);

/// Coordinate exterior derivative.
Form exterior_derivative(const Form& a);

/// df as a 1-form.
Form differential(const Poly& f);

/// X(f) = sum_j X^j d_j f.
Poly apply(const MultiVec& x, const Poly& f);

/// Lie derivative of a form via the Cartan formula L_X = i_X d + d i_X.
Form lie_derivative(const MultiVec& x, const Form& a);

/// Lie derivative of a multivector field along a vector field.
MultiVec lie_derivative(const MultiVec& x, const MultiVec& p);

/// Jacobi-Lie bracket of vector fields.
MultiVec lie_bracket(const MultiVec& x, const MultiVec& y);

/// The vector field @_i on a chart of dimension dim.
MultiVec coordinate_field(int dim, int i);

/// The 1-form dx_i on a chart of dimension dim.
Form coordinate_covector(int dim, int i);

}  // namespace hoc
