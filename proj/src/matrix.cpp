#include "lcslab/matrix.hpp"

namespace lcslab {

QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: size mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: size mismatch");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

QVec operator*(const QVec& a, const Rat& s) {
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
    return c;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

QVec unit(int n, int k) {
    QVec v(n, Rat(0));
    v[k - 1] = Rat(1);
    return v;
}

QMat rref(QMat m, int* rank_out, std::vector<int>* pivots_out) {
    int r = 0;
    std::vector<int> pivots;
    for (int j = 0; j < m.cols() && r < m.rows(); ++j) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
        Rat inv = m(r, j).inverse();
        for (int k = j; k < m.cols(); ++k) m(r, k) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, j).is_zero()) continue;
            Rat f = m(i, j);
            for (int k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    if (rank_out) *rank_out = r;
    if (pivots_out) *pivots_out = pivots;
    return m;
}

int rank(const QMat& m) {
    int r = 0;
    rref(m, &r);
    return r;
}

std::vector<QVec> kernel_basis(const QMat& m) {
    int r = 0;
    std::vector<int> pivots;
    QMat e = rref(m, &r, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        QVec v(m.cols(), Rat(0));
        v[j] = Rat(1);
        for (int i = 0; i < r; ++i) v[pivots[i]] = -e(i, j);
        basis.push_back(std::move(v));
    }
    // rank-nullity, checked on every kernel computation
    if (static_cast<int>(basis.size()) != m.cols() - r)
        throw std::logic_error("kernel_basis: rank-nullity violation");
    return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    int r = 0;
    std::vector<int> pivots;
    QMat e = rref(aug, &r, &pivots);
    for (int p : pivots)
        if (p == a.cols()) return std::nullopt; // pivot in the constant column
    QVec x(a.cols(), Rat(0));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = e(i, a.cols());
    return x;
}

Rat det(const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    QMat a = m;
    int n = a.rows();
    Rat d(1);
    for (int j = 0; j < n; ++j) {
        int pivot = -1;
        for (int i = j; i < n; ++i)
            if (!a(i, j).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != j) {
            for (int k = 0; k < n; ++k) std::swap(a(pivot, k), a(j, k));
            d = -d;
        }
        d *= a(j, j);
        Rat inv = a(j, j).inverse();
        for (int i = j + 1; i < n; ++i) {
            if (a(i, j).is_zero()) continue;
            Rat f = a(i, j) * inv;
            for (int k = j; k < n; ++k) a(i, k) -= f * a(j, k);
        }
    }
    return d;
}

Poly char_poly(const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    int n = m.rows();
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = Rat(1);
    QMat nk = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        QMat mn = m * nk;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mn(i, i);
        Rat ak = -tr / Rat(k);
        coeffs[n - k] = ak;
        nk = mn;
        for (int i = 0; i < n; ++i) nk(i, i) += ak;
    }
    return Poly(std::move(coeffs));
}

bool spectrum_purely_imaginary(const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("spectrum_purely_imaginary: non-square matrix");
    if (m.rows() == 0) return true;
    Poly p = char_poly(m).strip_zero_roots();
    if (p.degree() == 0) return true; // nilpotent
    if (!p.is_even()) return false;
    Poly r = p.even_substitute();
    Poly s = squarefree_part(r);
    // all roots of r real and negative <=> the squarefree part has deg(s)
    // distinct roots in (-inf, 0]; zero is excluded since r(0) != 0
    return sturm_count(s, XRat::neg_inf(), XRat::at(Rat(0))) == s.degree();
}

namespace {

Rat pfaffian_rec(const QMat& m, std::vector<int>& live) {
    if (live.empty()) return Rat(1);
    int i0 = live.front();
    Rat acc(0);
    int sign = 1;
    for (std::size_t t = 1; t < live.size(); ++t) {
        int j = live[t];
        if (!m(i0, j).is_zero()) {
            std::vector<int> rest;
            rest.reserve(live.size() - 2);
            for (std::size_t s = 1; s < live.size(); ++s)
                if (s != t) rest.push_back(live[s]);
            Rat sub = pfaffian_rec(m, rest);
            acc += m(i0, j) * sub * Rat(sign);
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

Rat pfaffian(const QMat& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian: need even-size square matrix");
    if (m.transpose() != -m) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
    std::vector<int> live(m.rows());
    for (int i = 0; i < m.rows(); ++i) live[i] = i;
    return pfaffian_rec(m, live);
}

std::optional<QVec> coordinates_in(const std::vector<QVec>& basis, const QVec& v) {
    if (basis.empty()) return is_zero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
    QMat a = columns_to_mat(basis, static_cast<int>(v.size()));
    return solve(a, v);
}

QMat columns_to_mat(const std::vector<QVec>& cols, int rows) {
    QMat m(rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("columns_to_mat: column length mismatch");
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

QMat poly_at(const Poly& p, const QMat& m) {
    if (!m.is_square()) throw std::invalid_argument("poly_at: non-square matrix");
    int n = m.rows();
    QMat acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
    }
    return acc;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rat(0);
    mpz_class num = r.num(), den = r.den(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rat(rn, rd);
}

} // namespace lcslab
