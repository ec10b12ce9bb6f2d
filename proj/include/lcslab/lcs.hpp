#pragma once

#include "lcslab/cohomology.hpp"
#include "lcslab/kform.hpp"
#include "lcslab/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace lcslab {

enum class LcsKind { FirstKind, SecondKind };

/// A validated pair (omega, theta): d(theta) = 0, d(omega) = theta ^ omega,
/// Pf(omega) != 0. The Lee vector V solves i_V omega = theta; when the
/// class [omega]_theta vanishes the potential eta and the anti-Lee vector
/// U (with eta = -i_U omega) are present.
struct LcsStructure {
    KForm omega;
    KForm theta;
    QVec lee_vector;
    std::optional<KForm> potential;
    std::optional<QVec> anti_lee_vector;
    LcsKind kind = LcsKind::SecondKind;
    bool symplectic = false; // theta == 0; the kind dichotomy presupposes theta != 0
};

/// Contact form with its unique Reeb vector: eta(R) = 1, i_R d(eta) = 0.
struct ContactStructure {
    KForm eta;
    QVec reeb_vector;
};

/// Infinitesimal automorphisms g_omega = {x : omega([x,y],z) + omega(y,[x,z]) = 0}.
struct AutomorphismAlgebra {
    std::vector<QVec> basis;
    std::vector<Rat> lee_values; // theta on the basis (zero when theta omitted)
};

LcsStructure verify_lcs(const LieAlgebra& g, const KForm& omega, const KForm& theta);

/// V always (omega nondegenerate); U only when (omega, theta) is LCS and
/// d_theta-exact.
std::pair<QVec, std::optional<QVec>> lee_vectors(const LieAlgebra& g, const KForm& omega,
                                                 const KForm& theta);

/// Kernel of the defect map plus bracket-closure verification. theta, when
/// given, fills lee_values.
AutomorphismAlgebra automorphism_algebra(const LieAlgebra& g, const KForm& omega,
                                         const std::optional<KForm>& theta = std::nullopt);

/// FirstKind iff theta is nonzero somewhere on g_omega; the Lee morphism
/// maps onto a subspace of R, so surjective-or-zero is a dichotomy.
LcsKind classify_kind(const LieAlgebra& g, const KForm& omega, const KForm& theta);

/// Solution space of d(omega) = theta ^ omega over Lambda^2 plus a seeded
/// hunt for a nondegenerate point. A missing witness is inconclusive: the
/// Pfaffian could still be nonzero somewhere off the sample grid.
struct LcsSearchResult {
    std::vector<KForm> solution_basis;
    std::optional<KForm> witness;
    int samples = 0;
};
LcsSearchResult lcs_search(const LieAlgebra& g, const KForm& theta, std::uint64_t seed = 0,
                           int budget = 512);

ContactStructure verify_contact(const LieAlgebra& g, const KForm& eta);

std::optional<ContactStructure> contact_search(const LieAlgebra& g, std::uint64_t seed = 0,
                                               int budget = 512);

} // namespace lcslab
