#pragma once

#include "lcslab/kform.hpp"
#include "lcslab/lie_algebra.hpp"

namespace lcslab {

/// Chevalley-Eilenberg differential: on 1-forms (d a)(x, y) = -a([x, y]),
/// extended as a degree +1 antiderivation. d o d = 0 is equivalent to the
/// Jacobi identity, which construction already guarantees.
KForm cediff(const LieAlgebra& g, const KForm& a);

bool is_closed(const LieAlgebra& g, const KForm& a);

/// d_theta a = d a - theta ^ a for closed theta (enforced; otherwise the
/// square of the operator would not vanish). theta may be the zero 1-form,
/// in which case this is cediff.
KForm twisted_diff(const LieAlgebra& g, const KForm& theta, const KForm& a);

/// Matrix of d_theta : Lambda^k -> Lambda^(k+1) in the lambda_basis
/// orderings; C(n,k) columns, C(n,k+1) rows.
QMat twisted_diff_matrix(const LieAlgebra& g, const KForm& theta, int k);

/// Canonical basis of the closed 1-forms (kernel of d on Lambda^1).
std::vector<KForm> closed_one_forms(const LieAlgebra& g);

} // namespace lcslab
