#include "lcslab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcslab {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::power(int k, const Rat& coeff) {
    if (coeff.is_zero()) return Poly();
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = coeff;
    return Poly(std::move(c));
}

const Rat& Poly::coeff(int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(-a);
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(a * s);
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = *this;
    std::vector<Rat> quot(std::max(0, degree() - divisor.degree() + 1), Rat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() / divisor.leading();
        quot[shift] = factor;
        rem = rem - divisor * Poly::power(shift, factor);
    }
    return {Poly(std::move(quot)), rem};
}

int Poly::order_at_zero() const {
    if (is_zero()) return 0;
    int m = 0;
    while (c_[m].is_zero()) ++m;
    return m;
}

Poly Poly::strip_zero_roots() const {
    if (is_zero()) return *this;
    int m = order_at_zero();
    return Poly(std::vector<Rat>(c_.begin() + m, c_.end()));
}

bool Poly::is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (!c_[i].is_zero()) return false;
    return true;
}

Poly Poly::even_substitute() const {
    if (!is_even()) throw std::domain_error("Poly: even_substitute on non-even polynomial");
    std::vector<Rat> c((c_.size() + 1) / 2, Rat(0));
    for (std::size_t i = 0; i < c_.size(); i += 2) c[i / 2] = c_[i];
    return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = c_[k];
        if (a.is_zero()) continue;
        Rat mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != Rat(1)) os << mag.str();
        if (k > 0) {
            if (mag != Rat(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rat(1));
    Poly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

PolyXgcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rat(1)), s1;
    Poly t0, t1 = Poly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat lead = r0.leading();
    return {r0.monic(), s0 * lead.inverse(), t0 * lead.inverse()};
}

namespace {

int sign_at(const Poly& p, const XRat& x) {
    if (p.is_zero()) return 0;
    switch (x.kind) {
        case XRat::Finite: return p(x.value).sign();
        case XRat::PosInf: return p.leading().sign();
        case XRat::NegInf: return (p.degree() % 2 == 0) ? p.leading().sign() : -p.leading().sign();
    }
    return 0;
}

int variations(const std::vector<Poly>& chain, const XRat& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

bool xless(const XRat& a, const XRat& b) {
    if (a.kind == XRat::NegInf) return b.kind != XRat::NegInf;
    if (a.kind == XRat::PosInf) return false;
    if (b.kind == XRat::PosInf) return true;
    if (b.kind == XRat::NegInf) return false;
    return a.value < b.value;
}

} // namespace

int sturm_count(const Poly& p, const XRat& lo, const XRat& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (!xless(lo, hi)) throw std::invalid_argument("sturm_count: need lo < hi");
    if (p.degree() == 0) return 0;
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return variations(chain, lo) - variations(chain, hi);
}

namespace {

// Divisors of |n| by trial division, abandoning the search when n needs
// more work than the bound allows.
std::optional<std::vector<mpz_class>> divisors(mpz_class n, long trial_bound = 2000000) {
    n = ::abs(n);
    if (n == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class d = 2;
    long steps = 0;
    while (d * d <= n) {
        if (++steps > trial_bound) return std::nullopt;
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, mult] : factors) {
        std::size_t before = divs.size();
        mpz_class pk = 1;
        for (int e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < before; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 4096) return std::nullopt;
    }
    return divs;
}

} // namespace

std::optional<std::vector<Rat>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    Poly q = p;
    std::vector<Rat> roots;
    if (q.order_at_zero() > 0) {
        roots.push_back(Rat(0));
        q = q.strip_zero_roots();
    }
    if (q.degree() == 0) return roots;
    // Clear denominators to get a primitive integer polynomial.
    mpz_class lcm_den = 1;
    for (const auto& c : q.coeffs()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        lcm_den = lcm_den / g * c.den();
    }
    std::vector<mpz_class> ic;
    for (const auto& c : q.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
    auto num_divs = divisors(ic.front());
    auto den_divs = divisors(ic.back());
    if (!num_divs || !den_divs) return std::nullopt;
    for (const auto& a : *num_divs)
        for (const auto& b : *den_divs)
            for (int s : {1, -1}) {
                Rat cand(a * s, b);
                if (q(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace lcslab
