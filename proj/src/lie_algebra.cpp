#include "lcslab/lie_algebra.hpp"

#include "lcslab/cohomology.hpp"
#include "lcslab/exterior.hpp"
#include "lcslab/prng.hpp"

#include <algorithm>
#include <sstream>

namespace lcslab {

int LieAlgebra::pair_index(int i, int j) const {
    // lexicographic rank of (i, j), i < j, 1-based
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

LieAlgebra LieAlgebra::validate(int n, const std::vector<BracketEntry>& brackets,
                                std::string name, int display_offset) {
    if (n < 1 || n > max_dim) throw std::invalid_argument("LieAlgebra: dimension must be 1..8");
    std::vector<QVec> c(n * (n - 1) / 2, QVec(n, Rat(0)));
    LieAlgebra g(n, std::move(c), std::move(name), display_offset);
    for (const auto& b : brackets) {
        if (b.x < 1 || b.y < 1 || b.x > n || b.y > n || b.x >= b.y)
            throw std::invalid_argument("LieAlgebra: bracket indices must satisfy 1 <= x < y <= n");
        for (const auto& [k, v] : b.out) {
            if (k < 1 || k > n) throw std::invalid_argument("LieAlgebra: bracket output index out of range");
            g.c_[g.pair_index(b.x, b.y)][k - 1] += v;
        }
    }
    std::vector<std::tuple<int, int, int, QVec>> defects;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                QVec d = g.bracket(g.basis_bracket(i, j), unit(n, k)) +
                         g.bracket(g.basis_bracket(j, k), unit(n, i)) +
                         g.bracket(g.basis_bracket(k, i), unit(n, j));
                if (!is_zero(d)) defects.emplace_back(i, j, k, std::move(d));
            }
    if (!defects.empty()) throw JacobiViolation(std::move(defects));
    return g;
}

QVec LieAlgebra::basis_bracket(int i, int j) const {
    if (i == j) return QVec(n_, Rat(0));
    if (i < j) return c_[pair_index(i, j)];
    QVec v = c_[pair_index(j, i)];
    for (auto& x : v) x = -x;
    return v;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw std::invalid_argument("LieAlgebra: bracket dimension mismatch");
    QVec out(n_, Rat(0));
    for (int i = 1; i <= n_; ++i) {
        if (x[i - 1].is_zero()) continue;
        for (int j = 1; j <= n_; ++j) {
            if (j == i || y[j - 1].is_zero()) continue;
            Rat f = x[i - 1] * y[j - 1];
            const QVec b = basis_bracket(i, j);
            for (int k = 0; k < n_; ++k) out[k] += f * b[k];
        }
    }
    return out;
}

QMat LieAlgebra::ad(const QVec& x) const {
    QMat m(n_, n_);
    for (int j = 1; j <= n_; ++j) {
        QVec col = bracket(x, unit(n_, j));
        for (int i = 0; i < n_; ++i) m(i, j - 1) = col[i];
    }
    return m;
}

QMat LieAlgebra::ad_basis(int j) const { return ad(unit(n_, j)); }

Rat LieAlgebra::c(int i, int j, int k) const {
    if (!(1 <= i && i < j && j <= n_)) throw std::invalid_argument("LieAlgebra: c needs i < j");
    return c_[pair_index(i, j)][k - 1];
}

std::vector<QVec> span_basis(const std::vector<QVec>& vectors) {
    if (vectors.empty()) return {};
    int n = static_cast<int>(vectors[0].size());
    QMat rows(static_cast<int>(vectors.size()), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (int j = 0; j < n; ++j) rows(static_cast<int>(i), j) = vectors[i][j];
    int r = 0;
    QMat e = rref(rows, &r);
    std::vector<QVec> basis;
    for (int i = 0; i < r; ++i) {
        QVec v(n);
        for (int j = 0; j < n; ++j) v[j] = e(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::vector<QVec> subspace_bracket(const LieAlgebra& g, const std::vector<QVec>& u,
                                   const std::vector<QVec>& w) {
    std::vector<QVec> gens;
    for (const auto& a : u)
        for (const auto& b : w) {
            QVec br = g.bracket(a, b);
            if (!is_zero(br)) gens.push_back(std::move(br));
        }
    return span_basis(gens);
}

std::vector<QVec> full_basis(int n) {
    std::vector<QVec> b;
    for (int k = 1; k <= n; ++k) b.push_back(unit(n, k));
    return b;
}

} // namespace

StructuralProfile structural_profile(const LieAlgebra& g) {
    StructuralProfile p;
    int n = g.dim();

    p.unimodular = true;
    for (int j = 1; j <= n; ++j) {
        QMat a = g.ad_basis(j);
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += a(i, i);
        if (!tr.is_zero()) {
            p.unimodular = false;
            break;
        }
    }

    // derived series g^(k+1) = [g^(k), g^(k)]
    {
        std::vector<QVec> cur = full_basis(n);
        int last = n;
        while (true) {
            cur = subspace_bracket(g, cur, cur);
            int d = static_cast<int>(cur.size());
            if (d == last) break;
            p.derived_series_dims.push_back(d);
            last = d;
            if (d == 0) break;
        }
        if (p.derived_series_dims.empty()) p.derived_series_dims.push_back(last);
        p.solvable = p.derived_series_dims.back() == 0;
    }

    // lower central series g_(k+1) = [g, g_(k)]
    {
        std::vector<QVec> whole = full_basis(n), cur = whole;
        int last = n;
        while (true) {
            cur = subspace_bracket(g, whole, cur);
            int d = static_cast<int>(cur.size());
            if (d == last) break;
            p.lower_central_dims.push_back(d);
            last = d;
            if (d == 0) break;
        }
        if (p.lower_central_dims.empty()) p.lower_central_dims.push_back(last);
        p.nilpotent = p.lower_central_dims.back() == 0;
    }

    // center = kernel of x -> ([x, e_1], ..., [x, e_n]) stacked
    {
        QMat stacked(n * n, n);
        for (int j = 1; j <= n; ++j) {
            QMat m = -g.ad_basis(j); // row block: x -> [x, e_j]
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) stacked((j - 1) * n + r, s) = m(r, s);
        }
        p.center_dim = static_cast<int>(kernel_basis(stacked).size());
    }

    if (p.solvable) {
        bool all = true;
        for (int j = 1; j <= n && all; ++j) all = spectrum_purely_imaginary(g.ad_basis(j));
        p.type_I = all;
    }
    return p;
}

std::optional<QVec> find_imaginary_transversal(const LieAlgebra& g, const KForm& theta,
                                               int budget, std::uint64_t seed) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("find_imaginary_transversal: theta must be a 1-form on g");
    if (theta.is_zero()) throw ThetaZero();
    if (!is_closed(g, theta)) throw ThetaNotClosed();

    int n = g.dim();
    QVec th = theta.covector();
    auto good = [&](const QVec& a) { return spectrum_purely_imaginary(g.ad(a)); };

    // scaled basis vectors, then scaled pair sums
    for (int j = 0; j < n; ++j)
        if (!th[j].is_zero()) {
            QVec a = unit(n, j + 1) * th[j].inverse();
            if (good(a)) return a;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v = th[i] + th[j];
            if (v.is_zero()) continue;
            QVec a = (unit(n, i + 1) + unit(n, j + 1)) * v.inverse();
            if (good(a)) return a;
        }

    // seeded random rational points, renormalized onto the slice theta = 1
    Prng rng(seed);
    for (int t = 0; t < budget; ++t) {
        QVec a = rng.rat_vector(n, 4, 3);
        Rat v(0);
        for (int i = 0; i < n; ++i) v += th[i] * a[i];
        if (v.is_zero()) continue;
        a = a * v.inverse();
        if (good(a)) return a;
    }
    return std::nullopt;
}

Subalgebra kernel_subalgebra(const LieAlgebra& g, const KForm& theta) {
    if (theta.degree() != 1 || theta.dim() != g.dim())
        throw std::invalid_argument("kernel_subalgebra: theta must be a 1-form on g");
    if (theta.is_zero()) throw ThetaZero();
    if (!is_closed(g, theta)) throw ThetaNotClosed();

    int n = g.dim();
    QMat row(1, n);
    QVec th = theta.covector();
    for (int j = 0; j < n; ++j) row(0, j) = th[j];
    std::vector<QVec> basis = kernel_basis(row);
    int m = static_cast<int>(basis.size()); // n - 1
    QMat embedding = columns_to_mat(basis, n);

    std::vector<BracketEntry> entries;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            QVec br = g.bracket(basis[i], basis[j]);
            // closed theta kills theta([x, y]), so br lies in the kernel
            auto coords = solve(embedding, br);
            if (!coords) throw Error("kernel_subalgebra: bracket left the kernel (theta not closed?)");
            BracketEntry e{i + 1, j + 1, {}};
            for (int k = 0; k < m; ++k)
                if (!(*coords)[k].is_zero()) e.out.emplace_back(k + 1, (*coords)[k]);
            if (!e.out.empty()) entries.push_back(std::move(e));
        }
    LieAlgebra sub = LieAlgebra::validate(m, entries, g.name() + ".ker_theta", g.display_offset());
    return {std::move(sub), std::move(embedding)};
}

QMat ad_restricted(const LieAlgebra& g, const QVec& x, const QMat& embedding) {
    int m = embedding.cols();
    QMat out(m, m);
    for (int j = 0; j < m; ++j) {
        QVec img = g.bracket(x, embedding.col(j));
        auto coords = solve(embedding, img);
        if (!coords) throw Error("ad_restricted: subspace is not invariant");
        for (int i = 0; i < m; ++i) out(i, j) = (*coords)[i];
    }
    return out;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
    };
    os << "dim=" << dim << " derived=";
    list(derived_series_dims);
    os << " lcs=";
    list(lower_central_dims);
    os << " center=" << center_dim << " betti=";
    list(betti);
    os << (unimodular ? " unimodular" : "") << (solvable ? " solvable" : "")
       << (nilpotent ? " nilpotent" : "");
    return os.str();
}

Fingerprint invariant_fingerprint(const LieAlgebra& g) {
    StructuralProfile p = structural_profile(g);
    Fingerprint f;
    f.dim = g.dim();
    f.derived_series_dims = p.derived_series_dims;
    f.lower_central_dims = p.lower_central_dims;
    f.center_dim = p.center_dim;
    f.betti = cohomology(g, KForm(g.dim(), 1)).dims;
    f.unimodular = p.unimodular;
    f.solvable = p.solvable;
    f.nilpotent = p.nilpotent;
    return f;
}

} // namespace lcslab
