#pragma once

#include "lcslab/exterior.hpp"
#include "lcslab/kform.hpp"
#include "lcslab/lie_algebra.hpp"
#include "lcslab/poly.hpp"

#include <optional>
#include <vector>

namespace lcslab {

/// Dimensions and representatives of H^*_theta(g). theta = 0 gives the
/// untwisted Chevalley-Eilenberg cohomology (Betti numbers).
struct CohomologyReport {
    KForm theta;
    std::vector<int> dims;                       // b_0 .. b_n
    std::vector<std::vector<KForm>> representatives; // per degree, dims[k] many
    bool all_zero() const {
        for (int d : dims)
            if (d != 0) return false;
        return true;
    }
};

/// Morse-Novikov cohomology of (Lambda* g*, d_theta) for closed theta.
/// dims[k] = dim ker(d_theta|k) - rank(d_theta|k-1); representatives are
/// chosen deterministically from the canonical kernel basis.
CohomologyReport cohomology(const LieAlgebra& g, const KForm& theta);

/// A potential eta with d_theta(eta) = omega, or nullopt when the class
/// [omega]_theta is nonzero. Requires d_theta(omega) = 0 (NotClosed).
/// Deterministic echelon solve with free variables pinned to zero.
std::optional<KForm> solve_potential(const LieAlgebra& g, const KForm& theta, const KForm& omega);

/// Spectra of the coadjoint action of a transversal A on H^k(ker theta),
/// stored as characteristic polynomials. The twisted cohomology of g is
/// nontrivial exactly when 1 is an eigenvalue in some degree.
struct InducedSpectrum {
    QVec transversal;
    std::vector<Poly> char_polys; // degree k = 0 .. dim(ker theta)
    bool one_in_spectrum() const {
        for (const auto& p : char_polys)
            if (!p.is_zero() && p(Rat(1)).is_zero()) return true;
        return false;
    }
};

/// Computes ker theta, the action -ad_A^t extended as a derivation of
/// Lambda*(ker theta)*, and its induced map on each H^k(ker theta).
/// Requires d(theta) = 0 and theta(A) = 1 (NotTransversal otherwise).
InducedSpectrum induced_spectrum(const LieAlgebra& g, const KForm& theta, const QVec& a);

} // namespace lcslab
