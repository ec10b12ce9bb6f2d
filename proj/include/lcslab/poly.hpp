#pragma once

#include "lcslab/rat.hpp"

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace lcslab {

/// Univariate polynomial over Rat, coefficients stored low degree first
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& r) { return Poly(std::vector<Rat>{r}); }
    /// x^k
    static Poly power(int k, const Rat& coeff = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rat& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly monic() const;

    /// Euclidean division: (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Multiplicity of the root 0, i.e. the largest m with x^m | p.
    int order_at_zero() const;
    /// p / x^m for m = order_at_zero().
    Poly strip_zero_roots() const;

    /// True iff all odd-degree coefficients vanish.
    bool is_even() const;
    /// For an even polynomial p, the q with q(x^2) = p.
    Poly even_substitute() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

/// Extended Euclid: g = s*a + t*b with g = gcd(a, b) monic.
struct PolyXgcd {
    Poly g, s, t;
};
PolyXgcd xgcd(const Poly& a, const Poly& b);

/// Extended rational endpoint for root counting.
struct XRat {
    enum Kind { NegInf, Finite, PosInf } kind;
    Rat value;
    static XRat neg_inf() { return {NegInf, Rat(0)}; }
    static XRat pos_inf() { return {PosInf, Rat(0)}; }
    static XRat at(const Rat& r) { return {Finite, r}; }
};

/// Number of distinct real roots of the squarefree polynomial p in
/// (lo, hi], by sign variations of the Sturm sequence. Rejects the zero
/// polynomial.
int sturm_count(const Poly& p, const XRat& lo, const XRat& hi);

/// Rational roots of p, found by the rational root theorem on the
/// primitive integer form. Returns nullopt when the divisor enumeration
/// exceeds the search bound (coefficients too large to factor here).
std::optional<std::vector<Rat>> rational_roots(const Poly& p);

} // namespace lcslab
