#include "lcslab/construct.hpp"

#include "lcslab/errors.hpp"
#include "lcslab/exterior.hpp"

namespace lcslab {

bool is_derivation(const LieAlgebra& g, const QMat& d,
                   std::vector<std::pair<int, int>>* defects) {
    int n = g.dim();
    if (d.rows() != n || d.cols() != n)
        throw std::invalid_argument("is_derivation: matrix size mismatch");
    bool ok = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            QVec lhs = d.apply(g.basis_bracket(i, j));
            QVec rhs = g.bracket(d.col(i - 1), unit(n, j)) + g.bracket(unit(n, i), d.col(j - 1));
            if (!is_zero(lhs - rhs)) {
                ok = false;
                if (defects) defects->emplace_back(i, j);
            }
        }
    return ok;
}

DerivationSpace derivation_space(const LieAlgebra& g) {
    int n = g.dim();
    // unknowns D_{rs} in row-major order, one defect row per (i < j, k)
    QMat sys(n * (n - 1) / 2 * n, n * n);
    int row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                // coefficient of D_{rs} in (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_k
                for (int r = 1; r <= n; ++r)
                    for (int s = 1; s <= n; ++s) {
                        Rat coeff(0);
                        if (r == k) coeff += g.basis_bracket(i, j)[s - 1];
                        if (s == i) coeff -= g.basis_bracket(r, j)[k - 1];
                        if (s == j) coeff -= g.basis_bracket(i, r)[k - 1];
                        sys(row, (r - 1) * n + (s - 1)) = coeff;
                    }
                ++row;
            }
        }
    DerivationSpace out{g, {}};
    for (const auto& v : kernel_basis(sys)) {
        QMat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) m(r, s) = v[r * n + s];
        out.basis.push_back(std::move(m));
    }
    return out;
}

LieAlgebra semidirect(const LieAlgebra& h, const QMat& d, const std::string& name) {
    std::vector<std::pair<int, int>> bad;
    if (!is_derivation(h, d, &bad)) throw NotADerivation(std::move(bad));
    int m = h.dim(), n = m + 1;
    std::vector<BracketEntry> entries;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            QVec br = h.basis_bracket(i, j);
            BracketEntry e{i + 1, j + 1, {}};
            for (int k = 0; k < m; ++k)
                if (!br[k].is_zero()) e.out.emplace_back(k + 2, br[k]);
            if (!e.out.empty()) entries.push_back(std::move(e));
        }
    for (int j = 1; j <= m; ++j) {
        BracketEntry e{1, j + 1, {}};
        for (int k = 0; k < m; ++k)
            if (!d(k, j - 1).is_zero()) e.out.emplace_back(k + 2, d(k, j - 1));
        if (!e.out.empty()) entries.push_back(std::move(e));
    }
    std::string nm = name.empty() ? "R|x" + h.name() : name;
    return LieAlgebra::validate(n, entries, nm, 0); // displays as e0..em
}

LcsTriple lcs_from_contact(const LieAlgebra& h, const KForm& eta, const QMat& d,
                           const std::string& name) {
    verify_contact(h, eta); // NotContact / EvenDimension
    int m = h.dim();
    QVec eta_d(m, Rat(0));
    for (int j = 0; j < m; ++j) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) acc += eta.covector()[i] * d(i, j);
        eta_d[j] = acc;
    }
    if (!is_zero(eta_d)) throw EtaDNotZero();

    LieAlgebra g = semidirect(h, d, name); // throws NotADerivation
    int n = m + 1;
    KForm theta = KForm::monomial(n, {1});
    KForm eta_up(n, 1); // eta extended by eta(e_0) = 0
    for (const auto& [mono, c] : eta.terms()) {
        int idx = monomial_indices(mono)[0];
        eta_up.set_coeff(monomial_from_indices({idx + 1}), c);
    }
    KForm omega = twisted_diff(g, theta, eta_up);
    LcsStructure s = verify_lcs(g, omega, theta);
    return {std::move(g), std::move(s)};
}

ContactData contact_from_lcs(const LieAlgebra& g, const KForm& omega, const KForm& theta,
                             const std::optional<KForm>& eta_in) {
    LcsStructure s = verify_lcs(g, omega, theta);
    if (s.kind != LcsKind::FirstKind) throw NotFirstKind();
    KForm eta = [&] {
        if (eta_in) {
            if (!(twisted_diff(g, theta, *eta_in) == omega))
                throw std::invalid_argument("contact_from_lcs: supplied eta has d_theta(eta) != omega");
            return *eta_in;
        }
        if (!s.potential) throw NotFirstKind(); // first kind implies exact
        return *s.potential;
    }();

    Subalgebra h = kernel_subalgebra(g, theta);
    int m = h.algebra.dim();
    // pull eta back along the embedding
    QVec eta_vec = eta.covector();
    QVec eta_h(m, Rat(0));
    for (int j = 0; j < m; ++j) {
        Rat acc(0);
        QVec col = h.embedding.col(j);
        for (int i = 0; i < g.dim(); ++i) acc += eta_vec[i] * col[i];
        eta_h[j] = acc;
    }
    KForm eta_form = KForm::from_covector(eta_h);
    verify_contact(h.algebra, eta_form);

    // anti-Lee vector for this particular eta: i_U omega = -eta
    QVec rhs = eta_vec;
    for (auto& x : rhs) x = -x;
    auto u = solve(omega.gram().transpose(), rhs);
    if (!u) throw Degenerate();
    QMat d = ad_restricted(g, *u, h.embedding);

    // eta o D = 0 holds in the correspondence; checked
    for (int j = 0; j < m; ++j) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) acc += eta_h[i] * d(i, j);
        if (!acc.is_zero()) throw EtaDNotZero();
    }
    return {std::move(h), std::move(eta_form), std::move(d), std::move(*u)};
}

std::vector<QMat> symplectic_derivations(const LieAlgebra& s, const KForm& beta) {
    int n = s.dim();
    if (beta.degree() != 2 || beta.dim() != n)
        throw std::invalid_argument("symplectic_derivations: beta must be a 2-form on s");
    if (n % 2 != 0 || !is_closed(s, beta) || pfaffian(beta.gram()).is_zero())
        throw NotSymplectic();
    QMat b = beta.gram();
    // derivation rows plus beta-compatibility rows over the same unknowns
    QMat der(n * (n - 1) / 2 * n, n * n);
    int row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                for (int r = 1; r <= n; ++r)
                    for (int ss = 1; ss <= n; ++ss) {
                        Rat coeff(0);
                        if (r == k) coeff += s.basis_bracket(i, j)[ss - 1];
                        if (ss == i) coeff -= s.basis_bracket(r, j)[k - 1];
                        if (ss == j) coeff -= s.basis_bracket(i, r)[k - 1];
                        der(row, (r - 1) * n + (ss - 1)) = coeff;
                    }
                ++row;
            }
    QMat sym(n * (n - 1) / 2, n * n);
    row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            // beta(E e_i, e_j) + beta(e_i, E e_j) = sum_r E_{ri} B_{rj} + E_{rj} B_{ir}
            for (int r = 1; r <= n; ++r) {
                sym(row, (r - 1) * n + (i - 1)) += b(r - 1, j - 1);
                sym(row, (r - 1) * n + (j - 1)) += b(i - 1, r - 1);
            }
            ++row;
        }
    QMat both(der.rows() + sym.rows(), n * n);
    for (int i = 0; i < der.rows(); ++i)
        for (int j = 0; j < n * n; ++j) both(i, j) = der(i, j);
    for (int i = 0; i < sym.rows(); ++i)
        for (int j = 0; j < n * n; ++j) both(der.rows() + i, j) = sym(i, j);
    std::vector<QMat> out;
    for (const auto& v : kernel_basis(both)) {
        QMat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = v[r * n + c];
        out.push_back(std::move(m));
    }
    return out;
}

LcsTriple double_extension(const LieAlgebra& s, const KForm& beta, const QMat& e,
                           const std::string& name) {
    int n = s.dim();
    if (n % 2 != 0 || !is_closed(s, beta) || pfaffian(beta.gram()).is_zero())
        throw NotSymplectic();
    std::vector<std::pair<int, int>> bad;
    if (!is_derivation(s, e, &bad)) throw NotADerivation(std::move(bad));
    QMat b = beta.gram();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat acc(0);
            for (int r = 0; r < n; ++r) acc += e(r, i) * b(r, j) + e(r, j) * b(i, r);
            if (!acc.is_zero()) throw NotSymplecticDerivation();
        }

    // basis (U, V, s_1..s_n) = (e_1, e_2, e_3..e_{n+2})
    int nn = n + 2;
    std::vector<BracketEntry> entries;
    for (int j = 1; j <= n; ++j) { // [U, s_j] = E s_j
        BracketEntry be{1, j + 2, {}};
        for (int k = 0; k < n; ++k)
            if (!e(k, j - 1).is_zero()) be.out.emplace_back(k + 3, e(k, j - 1));
        if (!be.out.empty()) entries.push_back(std::move(be));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) { // [s_i, s_j] = beta_{ij} V + [s_i, s_j]_s
            BracketEntry be{i + 2, j + 2, {}};
            if (!b(i - 1, j - 1).is_zero()) be.out.emplace_back(2, b(i - 1, j - 1));
            QVec br = s.basis_bracket(i, j);
            for (int k = 0; k < n; ++k)
                if (!br[k].is_zero()) be.out.emplace_back(k + 3, br[k]);
            if (!be.out.empty()) entries.push_back(std::move(be));
        }
    std::string nm = name.empty() ? s.name() + ".double_ext" : name;
    LieAlgebra g = LieAlgebra::validate(nn, entries, nm, 1);

    KForm theta = KForm::monomial(nn, {1});
    KForm eta = KForm::monomial(nn, {2});
    KForm omega = twisted_diff(g, theta, eta);
    LcsStructure st = verify_lcs(g, omega, theta);
    if (!(st.lee_vector == unit(nn, 2))) throw Error("double_extension: Lee vector is not V");
    if (!g.ad(unit(nn, 2)).is_zero()) throw Error("double_extension: V is not central");
    // block-spectrum identity: Spec(ad_X on s) plus {0,0} = Spec(ad_X on g)
    for (int k = 1; k <= n; ++k) {
        Poly lhs = char_poly(g.ad(unit(nn, k + 2)));
        Poly rhs = Poly::power(2) * char_poly(s.ad(unit(n, k)));
        if (lhs != rhs) throw Error("double_extension: block spectrum identity failed");
    }
    return {std::move(g), std::move(st)};
}

} // namespace lcslab
