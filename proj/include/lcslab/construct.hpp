#pragma once

#include "lcslab/kform.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/lie_algebra.hpp"

#include <string>
#include <vector>

namespace lcslab {

/// Basis of the derivation algebra Der(g), each element an n x n matrix,
/// canonical echelon form over the row-major n^2 coordinates.
struct DerivationSpace {
    LieAlgebra parent;
    std::vector<QMat> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// D [x,y] = [Dx, y] + [x, Dy] on all basis pairs; defect pairs reported
/// through `defects` when given.
bool is_derivation(const LieAlgebra& g, const QMat& d,
                   std::vector<std::pair<int, int>>* defects = nullptr);

DerivationSpace derivation_space(const LieAlgebra& g);

/// R x_D h: one new generator e_0 acting by D, the brackets of h kept.
/// The result displays as e0..en (offset 0). Throws NotADerivation.
LieAlgebra semidirect(const LieAlgebra& h, const QMat& d, const std::string& name = "");

struct LcsTriple {
    LieAlgebra algebra;
    LcsStructure structure;
};

/// Contact (h, eta) with derivation D, eta o D = 0  |->  first-kind LCS on
/// R x_D h with theta the dual of the new generator and omega = d_theta(eta).
LcsTriple lcs_from_contact(const LieAlgebra& h, const KForm& eta, const QMat& d,
                           const std::string& name = "");

struct ContactData {
    Subalgebra kernel;   // ker theta inside g
    KForm eta;           // contact form on the kernel algebra
    QMat derivation;     // ad_U restricted, in the kernel basis
    QVec anti_lee;       // U in g coordinates
};

/// Inverse construction: a first-kind LCS gives (ker theta, eta, ad_U).
/// A caller-supplied potential is accepted after re-verification;
/// otherwise the canonical one from verify_lcs is used. Throws NotFirstKind.
ContactData contact_from_lcs(const LieAlgebra& g, const KForm& omega, const KForm& theta,
                             const std::optional<KForm>& eta = std::nullopt);

/// {E in Der(s) : beta(Ex, y) + beta(x, Ey) = 0}, a subspace of the
/// derivation space. beta must be closed and nondegenerate (NotSymplectic).
std::vector<QMat> symplectic_derivations(const LieAlgebra& s, const KForm& beta);

/// Double extension g = R U + R V + s: [X,Y] = beta(X,Y) V + [X,Y]_s,
/// [U,X] = EX, V central; theta = U^*, eta = V^*, omega = d_theta(eta).
/// Basis order (U, V, s...), displayed e1..e(n+2).
LcsTriple double_extension(const LieAlgebra& s, const KForm& beta, const QMat& e,
                           const std::string& name = "");

} // namespace lcslab
