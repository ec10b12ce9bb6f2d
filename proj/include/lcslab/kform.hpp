#pragma once

#include "lcslab/matrix.hpp"
#include "lcslab/rat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcslab {

/// Basis monomial of the exterior algebra on n <= 8 generators, encoded as
/// a bitmask: bit i-1 set means the index i appears. Masks are the
/// canonical strictly increasing tuples.
using Monomial = std::uint16_t;

int monomial_degree(Monomial m);
std::vector<int> monomial_indices(Monomial m);
Monomial monomial_from_indices(const std::vector<int>& idx); // must be strictly increasing

/// All degree-k monomials on n generators, ascending mask order. This is
/// the basis ordering used by every matrix of a degree-k operator.
const std::vector<Monomial>& lambda_basis(int n, int k);

/// Element of Lambda^k g* with exact rational coefficients. Zero forms of
/// any degree are represented by an empty coefficient map with an explicit
/// degree, so degree bookkeeping survives chains of differentials.
class KForm {
public:
    KForm() : n_(0), k_(0) {} // empty placeholder, dimension 0
    KForm(int n, int degree);

    /// 1-based indices; repeated indices give the zero form, out-of-order
    /// indices contribute the permutation sign.
    static KForm monomial(int n, const std::vector<int>& indices, const Rat& coeff = Rat(1));
    static KForm from_covector(const QVec& theta); // degree 1
    static KForm zero(int n, int degree) { return KForm(n, degree); }

    int dim() const { return n_; }
    int degree() const { return k_; }
    bool is_zero() const { return coeff_.empty(); }

    const Rat& coeff(Monomial m) const;
    const std::map<Monomial, Rat>& terms() const { return coeff_; }
    void set_coeff(Monomial m, const Rat& c);

    KForm operator-() const;
    friend KForm operator+(const KForm& a, const KForm& b);
    friend KForm operator-(const KForm& a, const KForm& b);
    KForm operator*(const Rat& s) const;
    friend bool operator==(const KForm& a, const KForm& b);
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    /// Degree-1 form as a covector.
    QVec covector() const;
    /// theta(x) for a degree-1 form.
    Rat pair(const QVec& x) const;
    /// omega(u, v) for a degree-2 form.
    Rat eval2(const QVec& u, const QVec& v) const;
    /// Gram matrix [omega(e_i, e_j)] of a degree-2 form.
    QMat gram() const;

    /// Coordinates in lambda_basis(n, degree).
    QVec coords() const;
    static KForm from_coords(int n, int k, const QVec& coords);

    /// "e12 - 2*e34" style, digits shifted by the display offset
    /// (offset 1 prints internal index i as i, offset 0 prints i-1).
    std::string str(int display_offset = 1) const;

private:
    int n_, k_;
    std::map<Monomial, Rat> coeff_;
};

/// Exterior product, graded-anticommutative, sign by permutation parity.
KForm wedge(const KForm& a, const KForm& b);

/// Contraction in the first slot: (i_x a)(v2,..,vk) = a(x, v2,..,vk).
/// Degree drops by one; degree-0 input is rejected.
KForm interior_product(const QVec& x, const KForm& a);

/// a ^ a ^ ... (p factors); p = 0 gives the constant 1 form of degree 0.
KForm wedge_power(const KForm& a, int p);

} // namespace lcslab
