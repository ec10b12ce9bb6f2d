#include "lcslab/lcs.hpp"

#include "lcslab/errors.hpp"
#include "lcslab/prng.hpp"

namespace lcslab {

namespace {

void check_one_form(const LieAlgebra& g, const KForm& f, const char* who) {
    if (f.degree() != 1 || f.dim() != g.dim())
        throw std::invalid_argument(std::string(who) + ": expected a 1-form on g");
}

// Solve i_V omega = rhs, i.e. Gram^t V = rhs; unique for nondegenerate omega.
QVec contract_solve(const KForm& omega, const QVec& rhs) {
    auto v = solve(omega.gram().transpose(), rhs);
    if (!v) throw Degenerate();
    return *v;
}

} // namespace

std::pair<QVec, std::optional<QVec>> lee_vectors(const LieAlgebra& g, const KForm& omega,
                                                 const KForm& theta) {
    check_one_form(g, theta, "lee_vectors");
    if (omega.degree() != 2 || omega.dim() != g.dim())
        throw std::invalid_argument("lee_vectors: omega must be a 2-form on g");
    if (g.dim() % 2 != 0 || pfaffian(omega.gram()).is_zero()) throw Degenerate();

    QVec v = contract_solve(omega, theta.covector());
    std::optional<QVec> u;
    if (is_closed(g, theta) && twisted_diff(g, theta, omega).is_zero()) {
        if (auto eta = solve_potential(g, theta, omega)) {
            QVec eta_vec = eta->covector();
            for (auto& x : eta_vec) x = -x;
            u = contract_solve(omega, eta_vec); // i_U omega = -eta
        }
    }
    return {v, u};
}

AutomorphismAlgebra automorphism_algebra(const LieAlgebra& g, const KForm& omega,
                                         const std::optional<KForm>& theta) {
    if (omega.degree() != 2 || omega.dim() != g.dim())
        throw std::invalid_argument("automorphism_algebra: omega must be a 2-form on g");
    int n = g.dim();
    // defect(x; y, z) = omega([x,y],z) + omega(y,[x,z]), antisymmetric in
    // (y, z), so basis pairs y < z give all conditions
    auto defect = [&](const QVec& x, int y, int z) {
        return omega.eval2(g.bracket(x, unit(n, y)), unit(n, z)) +
               omega.eval2(unit(n, y), g.bracket(x, unit(n, z)));
    };
    QMat sys(n * (n - 1) / 2, n);
    for (int j = 1; j <= n; ++j) {
        QVec x = unit(n, j);
        int row = 0;
        for (int y = 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z) sys(row++, j - 1) = defect(x, y, z);
    }
    AutomorphismAlgebra out;
    out.basis = kernel_basis(sys);
    // g_omega is a subalgebra; verify closure under the bracket
    for (const auto& a : out.basis)
        for (const auto& b : out.basis) {
            QVec w = g.bracket(a, b);
            for (int y = 1; y <= n; ++y)
                for (int z = y + 1; z <= n; ++z)
                    if (!defect(w, y, z).is_zero())
                        throw Error("automorphism_algebra: bracket closure failed");
        }
    if (theta) {
        check_one_form(g, *theta, "automorphism_algebra");
        for (const auto& a : out.basis) out.lee_values.push_back(theta->pair(a));
    } else {
        out.lee_values.assign(out.basis.size(), Rat(0));
    }
    return out;
}

LcsStructure verify_lcs(const LieAlgebra& g, const KForm& omega, const KForm& theta) {
    check_one_form(g, theta, "verify_lcs");
    if (omega.degree() != 2 || omega.dim() != g.dim())
        throw std::invalid_argument("verify_lcs: omega must be a 2-form on g");
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    KForm defect = cediff(g, omega) - wedge(theta, omega);
    if (!defect.is_zero()) throw NotLcs(defect.str(g.display_offset()));
    if (g.dim() % 2 != 0 || pfaffian(omega.gram()).is_zero()) throw Degenerate();

    LcsStructure s;
    s.omega = omega;
    s.theta = theta;
    s.symplectic = theta.is_zero();
    auto [v, u] = lee_vectors(g, omega, theta);
    s.lee_vector = v;
    s.anti_lee_vector = u;
    if (u) {
        // recompute the potential that produced u: eta = -i_U omega
        KForm eta = -interior_product(*u, omega);
        s.potential = eta;
    }
    AutomorphismAlgebra aut = automorphism_algebra(g, omega, theta);
    s.kind = LcsKind::SecondKind;
    for (const auto& t : aut.lee_values)
        if (!t.is_zero()) {
            s.kind = LcsKind::FirstKind;
            break;
        }
    return s;
}

LcsKind classify_kind(const LieAlgebra& g, const KForm& omega, const KForm& theta) {
    return verify_lcs(g, omega, theta).kind;
}

LcsSearchResult lcs_search(const LieAlgebra& g, const KForm& theta, std::uint64_t seed,
                           int budget) {
    check_one_form(g, theta, "lcs_search");
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    int n = g.dim();
    // linear system d(omega) - theta ^ omega = 0 on Lambda^2 coordinates
    QMat sys = twisted_diff_matrix(g, theta, 2);
    LcsSearchResult res;
    std::vector<QVec> kernel = kernel_basis(sys);
    for (const auto& v : kernel) res.solution_basis.push_back(KForm::from_coords(n, 2, v));
    if (kernel.empty() || n % 2 != 0) return res;

    auto pf_nonzero = [&](const QVec& coords) {
        return !pfaffian(KForm::from_coords(n, 2, coords).gram()).is_zero();
    };
    // basis points first, then seeded rational combinations
    for (const auto& v : kernel) {
        ++res.samples;
        if (pf_nonzero(v)) {
            res.witness = KForm::from_coords(n, 2, v);
            return res;
        }
    }
    Prng rng(seed);
    int m = static_cast<int>(kernel.size());
    int ambient = static_cast<int>(kernel[0].size());
    while (res.samples < budget) {
        ++res.samples;
        QVec coords(ambient, Rat(0));
        for (int i = 0; i < m; ++i) {
            Rat t = rng.rat(8, 4);
            if (t.is_zero()) continue;
            coords = coords + kernel[i] * t;
        }
        if (pf_nonzero(coords)) {
            res.witness = KForm::from_coords(n, 2, coords);
            return res;
        }
    }
    return res;
}

ContactStructure verify_contact(const LieAlgebra& g, const KForm& eta) {
    check_one_form(g, eta, "verify_contact");
    int n = g.dim();
    if (n % 2 == 0) throw EvenDimension();
    int half = (n - 1) / 2;
    KForm deta = cediff(g, eta);
    KForm top = wedge(eta, wedge_power(deta, half));
    if (top.is_zero()) throw NotContact();

    // Reeb vector: eta(R) = 1 and i_R d(eta) = 0
    QMat sys(n + 1, n);
    QMat gram_t = deta.gram().transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys(i, j) = gram_t(i, j);
    QVec eta_vec = eta.covector();
    for (int j = 0; j < n; ++j) sys(n, j) = eta_vec[j];
    QVec rhs(n + 1, Rat(0));
    rhs[n] = Rat(1);
    auto r = solve(sys, rhs);
    if (!r) throw Error("verify_contact: Reeb system inconsistent on a contact form");
    if (!kernel_basis(sys).empty()) throw Error("verify_contact: Reeb vector not unique");
    return {eta, *r};
}

std::optional<ContactStructure> contact_search(const LieAlgebra& g, std::uint64_t seed,
                                               int budget) {
    int n = g.dim();
    if (n % 2 == 0) throw EvenDimension();
    int half = (n - 1) / 2;
    auto contact = [&](const KForm& eta) {
        return !wedge(eta, wedge_power(cediff(g, eta), half)).is_zero();
    };
    for (int j = 1; j <= n; ++j) {
        KForm eta = KForm::monomial(n, {j});
        if (contact(eta)) return verify_contact(g, eta);
    }
    Prng rng(seed);
    for (int t = static_cast<int>(n); t < budget; ++t) {
        KForm eta = KForm::from_covector(rng.rat_vector(n, 6, 3));
        if (eta.is_zero()) continue;
        if (contact(eta)) return verify_contact(g, eta);
    }
    return std::nullopt;
}

} // namespace lcslab
