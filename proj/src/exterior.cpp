#include "lcslab/exterior.hpp"

#include "lcslab/errors.hpp"

namespace lcslab {

namespace {

// d e^k as a 2-form: coefficient of e^{ij} is -c^k_{ij}.
KForm generator_diff(const LieAlgebra& g, int k) {
    int n = g.dim();
    KForm d(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat ck = g.c(i, j, k);
            if (!ck.is_zero())
                d.set_coeff(monomial_from_indices({i, j}), -ck);
        }
    return d;
}

} // namespace

KForm cediff(const LieAlgebra& g, const KForm& a) {
    if (a.dim() != g.dim()) throw std::invalid_argument("cediff: dimension mismatch");
    int n = g.dim();
    int k = a.degree();
    if (k >= n) return KForm(n, n); // image is zero beyond top degree
    KForm out(n, k + 1);
    if (k == 0) return out; // constants are closed
    for (const auto& [m, c] : a.terms()) {
        auto idx = monomial_indices(m);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            // d(e^S) = sum_t (-1)^(t-1) d(e^{s_t}) ^ e^{S \ s_t}; the
            // degree-2 factor commutes past the prefix, so only the
            // antiderivation sign remains.
            KForm rest(n, k - 1);
            std::vector<int> rest_idx;
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest_idx.push_back(idx[s]);
            rest.set_coeff(monomial_from_indices(rest_idx), Rat(1));
            Rat sign((t % 2 == 0) ? 1 : -1);
            out = out + wedge(generator_diff(g, idx[t]), rest) * (c * sign);
        }
    }
    return out;
}

bool is_closed(const LieAlgebra& g, const KForm& a) { return cediff(g, a).is_zero(); }

KForm twisted_diff(const LieAlgebra& g, const KForm& theta, const KForm& a) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("twisted_diff: theta must be a 1-form on g");
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    KForm da = cediff(g, a);
    KForm ta = wedge(theta, a);
    if (da.degree() != ta.degree()) {
        // both vanish beyond top degree; keep the clamped zero form
        if (!da.is_zero() || !ta.is_zero()) throw Error("twisted_diff: degree bookkeeping error");
        return da;
    }
    return da - ta;
}

QMat twisted_diff_matrix(const LieAlgebra& g, const KForm& theta, int k) {
    int n = g.dim();
    const auto& dom = lambda_basis(n, k);
    int rows = (k + 1 <= n) ? static_cast<int>(lambda_basis(n, k + 1).size()) : 0;
    QMat m(rows, static_cast<int>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        KForm mono(n, k);
        mono.set_coeff(dom[j], Rat(1));
        KForm img = twisted_diff(g, theta, mono);
        if (rows == 0) continue;
        QVec col = img.coords();
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = col[i];
    }
    return m;
}

std::vector<KForm> closed_one_forms(const LieAlgebra& g) {
    int n = g.dim();
    QMat d1 = twisted_diff_matrix(g, KForm(n, 1), 1);
    std::vector<KForm> out;
    for (const auto& v : kernel_basis(d1)) out.push_back(KForm::from_coords(n, 1, v));
    return out;
}

} // namespace lcslab
