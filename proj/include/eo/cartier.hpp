#pragma once

#include <vector>

#include "eo/curve.hpp"
#include "eo/matrix.hpp"

namespace eo {

/// Cartier operator on u(x) dx over the projective line:
/// C(x^j dx) = x^{(j+1)/p - 1} dx when p | j + 1 and 0 otherwise, with
/// coefficients p-th-rooted.
LaurentPoly cartier_poly(const Field& F, const LaurentPoly& u);

/// Cartier operator on u(x) y^{-n} dx. Picks the least t >= 0 with
/// p | n + m t, so that C(u y^{-n} dx) = y^{-(n + m t)/p} C(u f^t dx).
DifferentialForm cartier_form(const CurveData& curve, const DifferentialForm& form);

/// Coordinates of a holomorphic form in the holomorphic basis. Throws
/// InvariantViolation when the form is not in the span.
std::vector<Elem> holomorphic_coordinates(const CurveData& curve, const DifferentialForm& form);

/// g x g matrix whose column j holds the coordinates of C(omega_j); entries
/// are therefore already p-th-rooted.
Matrix cartier_manin(const CurveData& curve);
Matrix cartier_manin(const CurveModel& model);

/// Hyperelliptic fast path: H[j][i] = c_{p(j+1)-1-i}^{1/p}, c the
/// coefficients of f^{(p-1)/2}.
Matrix hyperelliptic_cartier_manin(const HyperellipticModel& model);

/// Stable dimension of W_{i+1} = C(W_i), W_0 the holomorphic space.
std::size_t p_rank_of(const Field& F, const Matrix& cartier);

int a_number(const CurveModel& model);
int p_rank(const CurveModel& model);

}  // namespace eo
