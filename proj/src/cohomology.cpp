#include "lcslab/cohomology.hpp"

#include "lcslab/errors.hpp"

namespace lcslab {

namespace {

// Column-reduce [image | kernel] and keep the kernel columns that add new
// pivots: a deterministic basis of a complement of the image inside the
// kernel, i.e. representatives of H^k.
std::vector<QVec> complement_in(const std::vector<QVec>& image, const std::vector<QVec>& kernel,
                                int ambient) {
    std::vector<QVec> reps;
    std::vector<QVec> cols = image;
    int r = static_cast<int>(span_basis(image).size());
    for (const auto& v : kernel) {
        cols.push_back(v);
        int r2 = rank(columns_to_mat(cols, ambient));
        if (r2 > r) {
            reps.push_back(v);
            r = r2;
        } else {
            cols.pop_back();
        }
    }
    return reps;
}

} // namespace

CohomologyReport cohomology(const LieAlgebra& g, const KForm& theta) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("cohomology: theta must be a 1-form on g");
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    int n = g.dim();
    CohomologyReport rep{theta, {}, {}};
    std::vector<QMat> d(n + 1);
    for (int k = 0; k <= n; ++k) d[k] = twisted_diff_matrix(g, theta, k);
    for (int k = 0; k <= n; ++k) {
        std::vector<QVec> ker = kernel_basis(d[k]);
        std::vector<QVec> img;
        if (k > 0)
            for (int j = 0; j < d[k - 1].cols(); ++j) {
                QVec c = d[k - 1].col(j);
                if (!is_zero(c)) img.push_back(std::move(c));
            }
        int ambient = static_cast<int>(lambda_basis(n, k).size());
        std::vector<QVec> reps = complement_in(img, ker, ambient);
        rep.dims.push_back(static_cast<int>(reps.size()));
        std::vector<KForm> forms;
        for (const auto& v : reps) forms.push_back(KForm::from_coords(n, k, v));
        rep.representatives.push_back(std::move(forms));
    }
    return rep;
}

std::optional<KForm> solve_potential(const LieAlgebra& g, const KForm& theta, const KForm& omega) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("solve_potential: theta must be a 1-form on g");
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    if (!twisted_diff(g, theta, omega).is_zero()) throw NotClosed();
    int k = omega.degree();
    if (k == 0) {
        // only multiples of theta-twisted constants can hit degree 0; the
        // image of d_theta in degree 0 is {0}
        return omega.is_zero() ? std::optional<KForm>(KForm(g.dim(), 0)) : std::nullopt;
    }
    QMat d = twisted_diff_matrix(g, theta, k - 1);
    auto x = solve(d, omega.coords());
    if (!x) return std::nullopt;
    return KForm::from_coords(g.dim(), k - 1, *x);
}

namespace {

// Derivation extension of a linear operator on 1-forms to Lambda^k, as a
// matrix in the lambda_basis ordering.
QMat derivation_extension(const QMat& on_one_forms, int m, int k) {
    const auto& basis = lambda_basis(m, k);
    int dimk = static_cast<int>(basis.size());
    QMat ext(dimk, dimk);
    for (int j = 0; j < dimk; ++j) {
        auto idx = monomial_indices(basis[j]);
        KForm img(m, k);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            KForm one = KForm::from_covector(on_one_forms.col(idx[t] - 1));
            std::vector<int> rest;
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            KForm restf(m, k - 1);
            restf.set_coeff(rest.empty() ? Monomial(0) : monomial_from_indices(rest), Rat(1));
            Rat sign((t % 2 == 0) ? 1 : -1);
            img = img + wedge(one, restf) * sign;
        }
        QVec col = img.coords();
        for (int i = 0; i < dimk; ++i) ext(i, j) = col[i];
    }
    return ext;
}

} // namespace

InducedSpectrum induced_spectrum(const LieAlgebra& g, const KForm& theta, const QVec& a) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("induced_spectrum: theta must be a 1-form on g");
    if (theta.is_zero()) throw ThetaZero();
    if (!is_closed(g, theta)) throw ThetaNotClosed();
    if (theta.pair(a) != Rat(1)) throw NotTransversal();

    Subalgebra h = kernel_subalgebra(g, theta);
    int m = h.algebra.dim();
    // closed theta makes ker theta an ideal, so ad_a preserves it
    QMat d = ad_restricted(g, a, h.embedding);
    QMat dual = -d.transpose(); // coadjoint action on (ker theta)*
    KForm zero_theta(m, 1);
    CohomologyReport hcoh = cohomology(h.algebra, zero_theta);

    InducedSpectrum out;
    out.transversal = a;
    for (int k = 0; k <= m; ++k) {
        QMat ext = derivation_extension(dual, m, k);
        QMat dk = twisted_diff_matrix(h.algebra, zero_theta, k);
        std::vector<QVec> image;
        if (k > 0) {
            QMat dkm1 = twisted_diff_matrix(h.algebra, zero_theta, k - 1);
            for (int j = 0; j < dkm1.cols(); ++j) {
                QVec c = dkm1.col(j);
                if (!is_zero(c)) image.push_back(std::move(c));
            }
        }
        // well-definedness: the action commutes with d, hence maps cocycles
        // to cocycles and boundaries to boundaries; assert both directly
        for (const auto& b : image)
            if (!coordinates_in(image, ext.apply(b)))
                throw Error("induced_spectrum: action does not preserve boundaries");

        const auto& reps = hcoh.representatives[k];
        int b = static_cast<int>(reps.size());
        QMat induced(b, b);
        std::vector<QVec> mix; // representatives followed by image basis
        for (const auto& r : reps) mix.push_back(r.coords());
        for (const auto& v : image) mix.push_back(v);
        int ambient = static_cast<int>(lambda_basis(m, k).size());
        for (int j = 0; j < b; ++j) {
            QVec w = ext.apply(reps[j].coords());
            if (!is_zero(dk.apply(w)))
                throw Error("induced_spectrum: action does not preserve cocycles");
            auto coords = solve(columns_to_mat(mix, ambient), w);
            if (!coords) throw Error("induced_spectrum: image not expressible in H^k basis");
            for (int i = 0; i < b; ++i) induced(i, j) = (*coords)[i];
        }
        out.char_polys.push_back(char_poly(induced));
    }
    return out;
}

} // namespace lcslab
