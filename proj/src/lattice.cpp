#include "lcslab/lattice.hpp"

#include "lcslab/errors.hpp"
#include "lcslab/poly.hpp"
#include "lcslab/prng.hpp"

namespace lcslab {

PiMat to_pi(const QMat& m) {
    PiMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = PiScalar(m(i, j));
    return out;
}

PiMat pi_identity(int n) { return PiMat::identity(n); }

PiScalar pi_det(const PiMat& m) {
    if (!m.is_square()) throw std::invalid_argument("pi_det: non-square matrix");
    int n = m.rows();
    if (n == 0) return PiScalar(1);
    if (n == 1) return m(0, 0);
    PiScalar acc;
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PiMat sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        PiScalar term = m(0, j) * pi_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PiMat pi_inverse(const PiMat& m) {
    if (!m.is_square()) throw std::invalid_argument("pi_inverse: non-square matrix");
    int n = m.rows();
    PiScalar d = pi_det(m);
    if (d.is_zero()) throw SingularA();
    auto dinv = d.inverse();
    if (!dinv) throw Error("pi_inverse: determinant is not an invertible monomial");
    PiMat adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PiMat sub(n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue; // adjugate transposes the cofactors
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            PiScalar cof = pi_det(sub);
            if ((i + j) % 2 != 0) cof = -cof;
            adj(i, j) = cof * *dinv;
        }
    return adj;
}

PiMat swap_coords(const PiMat& m, int a, int b) {
    auto s = [&](int i) { return i == a ? b : (i == b ? a : i); };
    PiMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(s(i), s(j));
    return out;
}

GroupElement group_identity(HeisenbergKind kind) {
    return {kind, PiVec(kind == HeisenbergKind::H3 ? 3 : 5, PiScalar(0))};
}

GroupElement group_product(const GroupElement& a, const GroupElement& b) {
    if (a.kind != b.kind) throw std::invalid_argument("group_product: kind mismatch");
    const PiScalar half(Rat(1, 2));
    PiVec out(a.coords.size());
    for (std::size_t i = 1; i < a.coords.size(); ++i) out[i] = a.coords[i] + b.coords[i];
    PiScalar z = a.coords[0] + b.coords[0];
    if (a.kind == HeisenbergKind::H3) {
        z += half * (a.coords[1] * b.coords[2] - b.coords[1] * a.coords[2]);
    } else {
        z += half * (a.coords[1] * b.coords[2] - b.coords[1] * a.coords[2] +
                     a.coords[3] * b.coords[4] - b.coords[3] * a.coords[4]);
    }
    out[0] = z;
    return {a.kind, std::move(out)};
}

GroupElement group_inverse(const GroupElement& a) {
    PiVec out(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i) out[i] = -a.coords[i];
    return {a.kind, std::move(out)};
}

namespace {

// Semisimple part of a rational matrix by the Newton iteration on the
// squarefree part of the characteristic polynomial. Exact over Q; the
// result is a polynomial in the input, so it commutes with anything the
// input commutes with.
QMat semisimple_part(const QMat& d) {
    Poly p = squarefree_part(char_poly(d));
    QMat s = d;
    if (poly_at(p, s).is_zero()) return s;
    auto bez = xgcd(p.derivative(), p);
    if (bez.g.degree() != 0) throw NonCommutingDecomposition();
    Poly u = bez.s * bez.g.coeff(0).inverse(); // u p' == 1 mod p
    for (int it = 0; it < 8; ++it) {
        QMat ps = poly_at(p, s);
        if (ps.is_zero()) return s;
        s = s - ps * poly_at(u, s);
    }
    if (!poly_at(p, s).is_zero()) throw NonCommutingDecomposition();
    return s;
}

// cos, sin at tau, exact; only 0 and half-integer multiples of pi exist.
std::pair<Rat, Rat> trig_at(const PiScalar& tau) {
    if (tau.is_zero()) return {Rat(1), Rat(0)};
    const auto& terms = tau.terms();
    if (terms.size() == 1 && terms.begin()->first == 1) {
        Rat q = terms.begin()->second * Rat(2); // tau = (q/2) pi
        if (q.is_integer()) {
            long m = static_cast<long>(mpz_class(q.num() % 4).get_si());
            if (m < 0) m += 4;
            switch (m) {
                case 0: return {Rat(1), Rat(0)};
                case 1: return {Rat(0), Rat(1)};
                case 2: return {Rat(-1), Rat(0)};
                default: return {Rat(0), Rat(-1)};
            }
        }
    }
    throw UnsupportedAngle(tau.str());
}

// e^{tS} for semisimple rational S whose nonzero eigenvalues are +- i a_j
// with rational rates a_j, via the primary projections of the minimal
// polynomial lambda^e prod (lambda^2 + a_j^2).
PiMat exp_semisimple(const QMat& s, const PiScalar& t) {
    int n = s.rows();
    if (s.is_zero()) return pi_identity(n);
    Poly pmin = squarefree_part(char_poly(s));
    if (!poly_at(pmin, s).is_zero()) throw NonCommutingDecomposition();
    int eps = pmin.order_at_zero();
    Poly q = pmin.strip_zero_roots();
    if (eps > 1 || !q.is_even()) throw NonCommutingDecomposition();
    std::vector<Rat> rates;
    if (q.degree() > 0) {
        Poly r = q.even_substitute(); // roots are -a_j^2, squarefree
        auto roots = rational_roots(r);
        if (!roots || static_cast<int>(roots->size()) != r.degree())
            throw NonCommutingDecomposition();
        for (const Rat& mu : *roots) {
            if (mu.sign() >= 0) throw NonCommutingDecomposition();
            auto a = rat_sqrt(-mu);
            if (!a) throw NonCommutingDecomposition();
            rates.push_back(*a);
        }
    }

    struct Factor {
        Poly f;
        std::optional<Rat> rate; // nullopt for the lambda factor
    };
    std::vector<Factor> factors;
    if (eps == 1) factors.push_back({Poly({Rat(0), Rat(1)}), std::nullopt});
    for (const Rat& a : rates)
        factors.push_back({Poly({a * a, Rat(0), Rat(1)}), a});

    PiMat out(n, n);
    QMat proj_sum(n, n);
    for (const auto& [f, rate] : factors) {
        Poly h = pmin.divmod(f).first;
        Poly u;
        if (!rate) {
            u = Poly::constant(h(Rat(0)).inverse());
        } else {
            Poly hm = h.divmod(f).second; // alpha x + beta
            Rat alpha = hm.coeff(1), beta = hm.coeff(0), a2 = *rate * *rate;
            QMat sys(2, 2, {beta, alpha, -a2 * alpha, beta});
            auto gd = solve(sys, QVec{Rat(0), Rat(1)});
            if (!gd) throw NonCommutingDecomposition();
            u = Poly({(*gd)[1], (*gd)[0]}); // gamma x + delta
        }
        QMat proj = poly_at(u * h, s);
        proj_sum = proj_sum + proj;
        if (!rate) {
            out = out + to_pi(proj);
        } else {
            auto [c, si] = trig_at(t * PiScalar(*rate));
            QMat block = proj * c + (s * proj) * (si / *rate);
            out = out + to_pi(block);
        }
    }
    if (!(proj_sum == QMat::identity(n))) throw NonCommutingDecomposition();
    return out;
}

} // namespace

PiMat exp_one_param(const PiMat& d, const PiScalar& t) {
    if (!d.is_square()) throw std::invalid_argument("exp_one_param: non-square matrix");
    if (!t.is_zero() && !t.is_monomial()) throw UnsupportedAngle(t.str());
    int n = d.rows();
    // rational piece and the pure pi-power remainder
    QMat d0(n, n);
    PiMat d1(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d0(i, j) = d(i, j).coeff(0);
            d1(i, j) = d(i, j) - PiScalar(d0(i, j));
        }
    QMat s = semisimple_part(d0);
    PiMat nil = to_pi(d0 - s) + d1;
    PiMat s_pi = to_pi(s);
    if (!(s_pi * nil == nil * s_pi)) throw NonCommutingDecomposition();
    // nilpotency of the remainder
    {
        PiMat power = nil;
        for (int i = 1; i < n; ++i) power = power * nil;
        if (!power.is_zero()) throw NonCommutingDecomposition();
    }

    PiMat exp_s = exp_semisimple(s, t);
    PiMat exp_n = pi_identity(n);
    PiMat term = pi_identity(n);
    PiMat tn = nil * t;
    for (int k = 1; k < n; ++k) {
        term = term * tn * PiScalar(Rat(1, k));
        exp_n = exp_n + term;
        if (term.is_zero()) break;
    }
    return exp_s * exp_n;
}

bool CoordinateLattice::contains(const PiVec& coords) const {
    if (coords.size() != diag.size()) throw std::invalid_argument("lattice: coordinate size mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        auto inv = diag[i].inverse();
        if (!inv) throw Error("lattice: basis entry is not an invertible monomial");
        if (!(coords[i] * *inv).is_integral()) return false;
    }
    return true;
}

LatticeCheck lattice_preserved(const PiMat& a, const CoordinateLattice& l) {
    int n = a.rows();
    if (static_cast<int>(l.diag.size()) != n)
        throw std::invalid_argument("lattice_preserved: size mismatch");
    PiMat a_inv = pi_inverse(a); // throws SingularA when det = 0
    auto conj = [&](const PiMat& m) {
        PiMat out(n, n);
        for (int i = 0; i < n; ++i) {
            auto inv = l.diag[i].inverse();
            if (!inv) throw Error("lattice_preserved: basis entry not invertible");
            for (int j = 0; j < n; ++j) out(i, j) = *inv * m(i, j) * l.diag[j];
        }
        return out;
    };
    LatticeCheck res;
    res.conjugated = conj(a);
    res.conjugated_inv = conj(a_inv);
    res.preserved = true;
    for (int i = 0; i < n && res.preserved; ++i)
        for (int j = 0; j < n; ++j) {
            if (!res.conjugated(i, j).is_integral() || !res.conjugated_inv(i, j).is_integral()) {
                res.preserved = false;
                res.offending_entry = std::make_pair(i, j);
                break;
            }
        }
    return res;
}

PiMat g1_derivation(const PiScalar& b) {
    PiMat d(5, 5);
    d(1, 3) = PiScalar(Rat(-1));
    d(3, 1) = PiScalar(Rat(1));
    d(4, 2) = b;
    return d;
}

PiMat g2_phi_derivation(const PiScalar& b) {
    PiMat d(5, 5);
    d(0, 1) = b;
    d(3, 4) = PiScalar(Rat(-1));
    d(4, 3) = PiScalar(Rat(1));
    return d;
}

PiMat g2_psi_derivation() {
    PiMat d(4, 4);
    d(1, 0) = PiScalar(Rat(1));
    return d;
}

PiMat g2_rho_derivation() {
    PiMat d(3, 3);
    d(1, 2) = PiScalar(Rat(1));
    d(2, 1) = PiScalar(Rat(-1));
    return d;
}

PiMat g1_automorphism(const PiScalar& b, const PiScalar& t) {
    // display coordinates (z, x1, y1, x2, y2) list the basis directions
    // (e1, e2, e4, e3, e5): the product pairs (x1, y1) = (e2, e4) and
    // (x2, y2) = (e3, e5), so the matrix is conjugated by the swap of
    // positions 2 and 3 (0-based)
    return swap_coords(exp_one_param(g1_derivation(b), t), 2, 3);
}

namespace {

GroupElement random_gamma_k(Prng& rng, HeisenbergKind kind, int k) {
    int n = kind == HeisenbergKind::H3 ? 3 : 5;
    PiVec coords(n);
    coords[0] = PiScalar(Rat(rng.range(-20, 20), 2 * k));
    for (int i = 1; i < n; ++i) coords[i] = PiScalar(Rat(rng.range(-10, 10)));
    return {kind, std::move(coords)};
}

bool closure_sample(HeisenbergKind kind, int k, const CoordinateLattice& l, std::uint64_t seed) {
    Prng rng(seed);
    for (int t = 0; t < 64; ++t) {
        GroupElement a = random_gamma_k(rng, kind, k);
        GroupElement b = random_gamma_k(rng, kind, k);
        if (!l.contains(a.coords) || !l.contains(b.coords)) return false;
        if (!l.contains(group_product(a, b).coords)) return false;
        if (!l.contains(group_inverse(a).coords)) return false;
        GroupElement prod = group_product(a, group_inverse(a));
        if (!(prod.coords == group_identity(kind).coords)) return false;
    }
    return true;
}

} // namespace

LatticeReport check_reference_lattices(LatticeFamily family, int k, const PiScalar& t0,
                                   std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("check_reference_lattices: k must be positive");
    LatticeReport rep;
    rep.family = family;
    rep.k = k;
    rep.t0 = t0;
    const PiScalar inv2k(Rat(1, 2 * k));
    const PiScalar one(Rat(1));
    const PiScalar half_pi = PiScalar::monomial(Rat(1, 2), 1);

    if (family == LatticeFamily::G1) {
        const PiScalar pi = PiScalar::pi();
        const PiScalar two_pi = PiScalar::monomial(Rat(2), 1);
        if (!(t0 == half_pi || t0 == pi || t0 == two_pi)) throw UnsupportedT0();
        PiScalar b = *t0.inverse();
        PiMat a = g1_automorphism(b, t0);
        CoordinateLattice gamma{{inv2k, one, one, one, one}};
        rep.levels.push_back({"phi(t0) with b = 1/t0 on Gamma_k in H5", lattice_preserved(a, gamma)});
        rep.closure_ok = closure_sample(HeisenbergKind::H5, k, gamma, seed);
    } else {
        // b = 8/pi^3; levels from the inside out
        const PiScalar b = PiScalar::monomial(Rat(8), -3);
        const PiScalar two_over_pi = PiScalar::monomial(Rat(2), -1);
        CoordinateLattice gamma3{{inv2k, one, one}};
        rep.levels.push_back(
            {"rho(pi/2) on Gamma_k in H3",
             lattice_preserved(exp_one_param(g2_rho_derivation(), half_pi), gamma3)});
        CoordinateLattice l4{{half_pi, inv2k, one, one}};
        rep.levels.push_back(
            {"psi(2/pi) on (pi/2)Z x Gamma_k",
             lattice_preserved(exp_one_param(g2_psi_derivation(), two_over_pi), l4)});
        CoordinateLattice l5{{two_over_pi, half_pi, inv2k, one, one}};
        rep.levels.push_back(
            {"phi(pi/2) with b = 8/pi^3 on (2/pi)Z x (pi/2)Z x Gamma_k",
             lattice_preserved(exp_one_param(g2_phi_derivation(b), half_pi), l5)});
        rep.closure_ok = closure_sample(HeisenbergKind::H3, k, gamma3, seed);
    }
    rep.preserved = rep.closure_ok;
    for (const auto& lvl : rep.levels) rep.preserved = rep.preserved && lvl.check.preserved;
    return rep;
}

} // namespace lcslab
