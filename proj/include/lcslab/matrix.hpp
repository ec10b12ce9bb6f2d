#pragma once

#include "lcslab/poly.hpp"
#include "lcslab/rat.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcslab {

/// Dense matrix over an exact scalar ring. Row-major.
template <typename S>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative size");
    }
    Mat(int rows, int cols, std::initializer_list<S> entries) : Mat(rows, cols) {
        if (static_cast<int>(entries.size()) != rows * cols)
            throw std::invalid_argument("Mat: entry count mismatch");
        int k = 0;
        for (const S& e : entries) a_[k++] = e;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
        return c;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: product shape mismatch");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik == S(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    Mat operator*(const S& s) const {
        Mat c(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] = a_[k] * s;
        return c;
    }
    Mat operator-() const { return *this * S(-1); }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        for (const S& e : a_)
            if (!(e == S(0))) return false;
        return true;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat: apply shape mismatch");
        std::vector<S> out(rows_, S(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    std::vector<S> col(int j) const {
        std::vector<S> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }
    int rows_, cols_;
    std::vector<S> a_;
};

using QMat = Mat<Rat>;
using QVec = std::vector<Rat>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const QVec& a, const Rat& s);
bool is_zero(const QVec& v);
/// k-th standard basis vector of length n, 1-based.
QVec unit(int n, int k);

/// Reduced row echelon form; returns the rank and, via pivots, the pivot
/// column of each nonzero row.
QMat rref(QMat m, int* rank_out = nullptr, std::vector<int>* pivots_out = nullptr);

int rank(const QMat& m);

/// Canonical basis of the null space: one vector per free column, entry 1
/// at the free column, pivot entries filled from the reduced echelon form.
/// Deterministic, and the count is always cols - rank (checked).
std::vector<QVec> kernel_basis(const QMat& m);

/// One solution of Ax = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

Rat det(const QMat& m);

/// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recursion (division-free apart from exact integer divisions).
Poly char_poly(const QMat& m);

/// True iff every complex eigenvalue of M lies on the imaginary axis (zero
/// allowed). Strips zero roots, requires the remainder even, substitutes
/// x^2 and counts real roots of the squarefree part in (-inf, 0] by Sturm.
bool spectrum_purely_imaginary(const QMat& m);

/// Pfaffian of a skew-symmetric matrix of even size, by recursive
/// expansion along the first row. Pf(M)^2 = det(M).
Rat pfaffian(const QMat& m);

/// Coordinates of v in the span of `basis` (columns), or nullopt.
std::optional<QVec> coordinates_in(const std::vector<QVec>& basis, const QVec& v);

QMat columns_to_mat(const std::vector<QVec>& cols, int rows);

/// p(M) for square M, Horner evaluation.
QMat poly_at(const Poly& p, const QMat& m);

/// Exact square root of a nonnegative rational, when it exists.
std::optional<Rat> rat_sqrt(const Rat& r);

} // namespace lcslab
