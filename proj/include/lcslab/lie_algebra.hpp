#pragma once

#include "lcslab/errors.hpp"
#include "lcslab/kform.hpp"
#include "lcslab/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcslab {

/// One bracket relation [e_x, e_y] = sum_k out[k] e_k, indices 1-based,
/// x < y. Only the nonzero relations need to be listed.
struct BracketEntry {
    int x, y;
    std::vector<std::pair<int, Rat>> out;
};

/// Finite-dimensional real Lie algebra given by antisymmetric structure
/// constants over Rat. Construction validates the Jacobi identity on all
/// C(n,3) basis triples; instances are immutable afterwards.
class LieAlgebra {
public:
    static constexpr int max_dim = 8;

    /// Throws JacobiViolation listing every violated triple.
    static LieAlgebra validate(int n, const std::vector<BracketEntry>& brackets,
                               std::string name = "", int display_offset = 1);

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    /// 1 when the basis prints as e1..en, 0 when it prints as e0..e(n-1).
    int display_offset() const { return display_offset_; }

    /// [e_i, e_j] for 1 <= i, j <= n (any order, antisymmetry applied).
    QVec basis_bracket(int i, int j) const;
    QVec bracket(const QVec& x, const QVec& y) const;

    /// Matrix of y -> [x, y] in the basis.
    QMat ad(const QVec& x) const;
    QMat ad_basis(int j) const; // ad_{e_j}, 1-based

    /// Structure constant c^k_{ij} with i < j.
    Rat c(int i, int j, int k) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

private:
    LieAlgebra(int n, std::vector<QVec> c, std::string name, int display_offset)
        : n_(n), c_(std::move(c)), name_(std::move(name)), display_offset_(display_offset) {}
    int pair_index(int i, int j) const; // i < j, 1-based
    int n_;
    std::vector<QVec> c_; // [e_i, e_j] for i < j, lexicographic (i, j)
    std::string name_;
    int display_offset_;
};

/// Canonical (reduced row echelon) basis of the span of the given vectors.
std::vector<QVec> span_basis(const std::vector<QVec>& vectors);

struct StructuralProfile {
    bool unimodular = false;
    bool solvable = false;
    bool nilpotent = false;
    std::optional<bool> type_I; // present only when solvable
    int center_dim = 0;
    // dims of g^(1), g^(2), ... resp. [g,g], [g,[g,g]], ..., each series
    // recorded up to (and excluding the repeat of) its stable value
    std::vector<int> derived_series_dims;
    std::vector<int> lower_central_dims;
};

/// Unimodularity, solvability, nilpotency, center, series dims, and (for
/// solvable algebras) the type-I flag via the per-basis-vector purely
/// imaginary spectrum test. The basis test suffices for solvable algebras:
/// by Lie's theorem the eigenvalue functions of the adjoint representation
/// are linear, and a linear functional with vanishing real part on a basis
/// vanishes everywhere.
StructuralProfile structural_profile(const LieAlgebra& g);

/// Bounded search for A with theta(A) = 1 and ad_A having purely imaginary
/// spectrum: scans scaled basis vectors, scaled basis pairs, then seeded
/// random rational points on the slice theta = 1. A nullopt answer means
/// the search was inconclusive, never that no such A exists.
std::optional<QVec> find_imaginary_transversal(const LieAlgebra& g, const KForm& theta,
                                               int budget = 200, std::uint64_t seed = 0);

struct Subalgebra {
    LieAlgebra algebra;
    QMat embedding; // n x m, columns are the subalgebra basis inside g
};

/// The (n-1)-dimensional subalgebra ker(theta) for closed nonzero theta
/// (closedness forces theta[x,y] = 0), with the change of basis recorded.
Subalgebra kernel_subalgebra(const LieAlgebra& g, const KForm& theta);

/// Restriction of ad_x to an embedded subspace, in the embedding basis.
/// Throws if the subspace is not ad_x-invariant.
QMat ad_restricted(const LieAlgebra& g, const QVec& x, const QMat& embedding);

/// Isomorphism-invariant record: equal algebras give equal fingerprints,
/// different fingerprints certify non-isomorphism. Says nothing when two
/// fingerprints agree.
struct Fingerprint {
    int dim = 0;
    std::vector<int> derived_series_dims;
    std::vector<int> lower_central_dims;
    int center_dim = 0;
    std::vector<int> betti;
    bool unimodular = false, solvable = false, nilpotent = false;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string str() const;
};

Fingerprint invariant_fingerprint(const LieAlgebra& g);

} // namespace lcslab
