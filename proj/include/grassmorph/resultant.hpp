#ifndef GRASSMORPH_RESULTANT_HPP
#define GRASSMORPH_RESULTANT_HPP

#include <utility>
#include <vector>

#include "grassmorph/poly.hpp"
#include "grassmorph/univariate.hpp"

namespace grassmorph {

/// Determinant of the Sylvester matrix of f and g with respect to `var`
/// (both must have positive degree in var), using their actual var-degrees.
/// The result is a homogeneous form in the remaining two variables, of
/// degree n'*m + m'*n - m'*n' where m, n are total degrees and m', n' the
/// var-degrees; with full var-degrees that is deg(f)*deg(g). Computed by
/// evaluation at deg+1 parameter values and exact Lagrange interpolation.
HomPoly sylvester_resultant(const HomPoly& f, const HomPoly& g, int var);

/// Coefficients of the first subresultant S_1(var) = psc1 * var + s10 of f
/// and g with respect to `var`, dehomogenized at (t, 1) in the remaining
/// two variables. Requires full var-degrees (leading var-coefficients are
/// nonzero constants) and deg f + deg g >= 3. Where the resultant vanishes
/// and psc1 does not, the fiber gcd is linear and the unique common root is
/// var = -s10(t)/psc1(t).
std::pair<UniPoly, UniPoly> first_subresultant_coeffs(const HomPoly& f, const HomPoly& g, int var);

/// Exact polynomial through the given sample points (distinct abscissae).
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

} // namespace grassmorph

#endif
