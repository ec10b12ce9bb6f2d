#pragma once

#include "lcslab/rat.hpp"

#include <map>
#include <optional>
#include <string>

namespace lcslab {

/// Exact scalar of the form sum q_n * pi^n over finitely many integer
/// exponents n, with rational q_n. Since pi is transcendental the
/// representation is unique, so equality and integrality tests are exact.
/// No stored coefficient is zero; the empty sum is 0.
class PiScalar {
public:
    PiScalar() = default;
    PiScalar(const Rat& r) { set_term(0, r); }
    PiScalar(long n) { set_term(0, Rat(n)); }
    PiScalar(int n) { set_term(0, Rat(n)); }

    static PiScalar pi(int exponent = 1) { return monomial(Rat(1), exponent); }
    static PiScalar monomial(const Rat& coeff, int exponent) {
        PiScalar s;
        s.set_term(exponent, coeff);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    /// Integral means a single term q * pi^0 with q an integer (or zero).
    bool is_integral() const {
        if (terms_.empty()) return true;
        return is_rational() && terms_.begin()->second.is_integer();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    /// The pi^0 coefficient; exact when is_rational().
    Rat rational_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    PiScalar operator-() const {
        PiScalar s;
        for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
        return s;
    }
    PiScalar& operator+=(const PiScalar& o) {
        for (const auto& [e, c] : o.terms_) set_term(e, coeff(e) + c);
        return *this;
    }
    PiScalar& operator-=(const PiScalar& o) { return *this += -o; }
    PiScalar& operator*=(const PiScalar& o) {
        PiScalar out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) out.set_term(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
        *this = out;
        return *this;
    }

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

    /// Inverse, defined for nonzero monomials only: (q pi^n)^-1 = q^-1 pi^-n.
    std::optional<PiScalar> inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        return monomial(c.inverse(), -e);
    }

    const std::map<int, Rat>& terms() const { return terms_; }

    /// Exact printable form: "0", "3/2", "pi", "pi/2", "2/pi", "8/pi^3",
    /// "3*pi^2", multi-term sums joined with " + " / " - ".
    std::string str() const;

private:
    void set_term(int exponent, const Rat& c) {
        if (c.is_zero())
            terms_.erase(exponent);
        else
            terms_[exponent] = c;
    }
    std::map<int, Rat> terms_;
};

} // namespace lcslab
