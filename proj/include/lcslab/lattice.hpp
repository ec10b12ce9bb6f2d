#pragma once

#include "lcslab/matrix.hpp"
#include "lcslab/pi_scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcslab {

using PiMat = Mat<PiScalar>;
using PiVec = std::vector<PiScalar>;

PiMat to_pi(const QMat& m);
PiMat pi_identity(int n);
PiScalar pi_det(const PiMat& m);
/// Adjugate inverse; needs det a nonzero monomial q pi^n (throws SingularA
/// when det = 0). Every automorphism this library exponentiates has det 1.
PiMat pi_inverse(const PiMat& m);
/// Conjugation by a coordinate transposition (swap positions a, b).
PiMat swap_coords(const PiMat& m, int a, int b);

enum class HeisenbergKind { H3, H5 };

/// Point of H3 = (z, x, y) or H5 = (z, x1, y1, x2, y2) over PiScalar.
struct GroupElement {
    HeisenbergKind kind;
    PiVec coords;
};

GroupElement group_identity(HeisenbergKind kind);
/// The displayed polynomial product, all coordinates:
///   H3: z'' = z + z' + (x y' - x' y)/2, the rest add.
///   H5: z'' = z + z' + (x1 y1' - x1' y1 + x2 y2' - x2' y2)/2, the rest add.
GroupElement group_product(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);

/// e^{tD} for D = S + N with S the semisimple part of the rational piece
/// (exact Jordan-Chevalley), N nilpotent, [S, N] = 0 (checked, else
/// NonCommutingDecomposition). Rotation rates of S must be rational and
/// the angles rate * t integer multiples of pi/2, where cos and sin take
/// values in {0, +-1} (else UnsupportedAngle). Nilpotent factor by the
/// terminating series. t must be 0 or a single monomial q pi^e.
PiMat exp_one_param(const PiMat& d, const PiScalar& t);

/// Coordinate lattice B * Z^n for a diagonal B with monomial entries.
struct CoordinateLattice {
    PiVec diag;
    bool contains(const PiVec& coords) const;
};

struct LatticeCheck {
    bool preserved = false;
    PiMat conjugated;     // B^-1 A B
    PiMat conjugated_inv; // B^-1 A^-1 B
    std::optional<std::pair<int, int>> offending_entry;
};

/// True iff B^-1 A B and B^-1 A^-1 B are integer matrices.
LatticeCheck lattice_preserved(const PiMat& a, const CoordinateLattice& l);

enum class LatticeFamily { G1, G2 };

struct LatticeLevel {
    std::string description;
    LatticeCheck check;
};

struct LatticeReport {
    LatticeFamily family;
    int k = 1;
    PiScalar t0;
    bool preserved = false;
    bool closure_ok = false; // sampled subgroup closure of Gamma_k
    std::vector<LatticeLevel> levels;
};

/// Exact verification of the reference lattice data.
///  G1: phi(t0) with b = 1/t0 preserves Gamma_k = (1/2k)Z x Z^4 in H5;
///      t0 must be one of pi/2, pi, 2pi (UnsupportedT0 otherwise).
///  G2: with b = 8/pi^3, the three levels rho(pi/2), psi(2/pi), phi(pi/2)
///      preserve the tower coordinate lattices over Gamma_k in H3.
/// Plus a seeded random closure check of Gamma_k under the group product.
LatticeReport check_reference_lattices(LatticeFamily family, int k,
                                   const PiScalar& t0 = PiScalar(0), std::uint64_t seed = 0);

/// The one-parameter generators of the two lattice families.
PiMat g1_derivation(const PiScalar& b); // on h5 = (e1..e5)
PiMat g2_phi_derivation(const PiScalar& b); // on (e4, e5, e1, e2, e3)
PiMat g2_psi_derivation(); // on (e5, e1, e2, e3)
PiMat g2_rho_derivation(); // on (e1, e2, e3)

/// Matrix of phi(t) on the display coordinates (z, x1, y1, x2, y2) of H5;
/// the basis pairing is (e2, e4), (e3, e5), so this is exp_one_param
/// conjugated by the y1 <-> x2 swap. It is a group automorphism of the
/// displayed product for every supported t.
PiMat g1_automorphism(const PiScalar& b, const PiScalar& t);

} // namespace lcslab
