#pragma once

#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"

namespace tsg {

// Chevalley-Eilenberg complex with trivial coefficients. Sign convention:
//   (d w)(x_1..x_{k+1}) = sum_{i<j} (-1)^{i+j} w([x_i,x_j], x_1..^i..^j..x_{k+1})
// so for a 1-form, (d theta)(x, y) = -theta([x, y]).

/// d applied to a degree-k form, k < dim g. Throws DegreeOverflow when
/// k == dim g.
AltForm ce_differential(const LieAlgebra& g, const AltForm& form);

/// Matrix of d : Lambda^k -> Lambda^{k+1} in the lexicographic monomial
/// bases. Degree n yields a 0 x 1 matrix.
RatMatrix ce_differential_matrix(const LieAlgebra& g, int k);

/// Coefficient vector of a form in the lexicographic monomial basis.
RatVector form_to_vector(const AltForm& form);
AltForm vector_to_form(int n, int k, const RatVector& v);

/// Basis of the k-cocycles Z^k(g).
std::vector<AltForm> cocycle_space(const LieAlgebra& g, int k);

/// Betti numbers b_0..b_n.
std::vector<std::size_t> betti(const LieAlgebra& g);

}  // namespace tsg
