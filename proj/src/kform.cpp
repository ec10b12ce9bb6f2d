#include "lcslab/kform.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace lcslab {

int monomial_degree(Monomial m) { return std::popcount(m); }

std::vector<int> monomial_indices(Monomial m) {
    std::vector<int> idx;
    for (int i = 0; i < 16; ++i)
        if (m & (Monomial(1) << i)) idx.push_back(i + 1);
    return idx;
}

Monomial monomial_from_indices(const std::vector<int>& idx) {
    Monomial m = 0;
    int last = 0;
    for (int i : idx) {
        if (i <= last) throw std::invalid_argument("monomial_from_indices: indices not strictly increasing");
        m |= Monomial(1) << (i - 1);
        last = i;
    }
    return m;
}

const std::vector<Monomial>& lambda_basis(int n, int k) {
    // the full table is built once; function-local static initialization
    // keeps concurrent first use safe
    static const auto table = [] {
        std::array<std::array<std::vector<Monomial>, 9>, 9> t{};
        for (int nn = 0; nn <= 8; ++nn)
            for (Monomial m = 0; m < (Monomial(1) << nn); ++m) t[nn][std::popcount(m)].push_back(m);
        return t;
    }();
    if (n < 0 || n > 8 || k < 0 || k > n) throw std::invalid_argument("lambda_basis: out of range");
    return table[n][k];
}

namespace {

// Parity of the merge of two disjoint ascending index sets: counts pairs
// (i in a, j in b) with i > j.
int merge_sign(Monomial a, Monomial b) {
    int crossings = 0;
    for (int j = 0; j < 16; ++j)
        if (b & (Monomial(1) << j)) crossings += std::popcount(static_cast<Monomial>(a >> (j + 1)));
    return (crossings % 2 == 0) ? 1 : -1;
}

} // namespace

KForm::KForm(int n, int degree) : n_(n), k_(degree) {
    if (n < 0 || n > 8) throw std::invalid_argument("KForm: dimension must be 0..8");
    if (degree < 0 || degree > n) throw std::invalid_argument("KForm: degree out of range");
}

KForm KForm::monomial(int n, const std::vector<int>& indices, const Rat& coeff) {
    KForm f(n, static_cast<int>(indices.size()));
    // sort with sign; repeated index means the zero form
    std::vector<int> idx = indices;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return f;
    for (int i : idx)
        if (i < 1 || i > n) throw std::invalid_argument("KForm::monomial: index out of range");
    f.set_coeff(monomial_from_indices(idx), coeff * Rat(sign));
    return f;
}

KForm KForm::from_covector(const QVec& theta) {
    KForm f(static_cast<int>(theta.size()), 1);
    for (std::size_t i = 0; i < theta.size(); ++i)
        f.set_coeff(Monomial(1) << i, theta[i]);
    return f;
}

const Rat& KForm::coeff(Monomial m) const {
    static const Rat zero(0);
    auto it = coeff_.find(m);
    return it == coeff_.end() ? zero : it->second;
}

void KForm::set_coeff(Monomial m, const Rat& c) {
    if (monomial_degree(m) != k_) throw std::invalid_argument("KForm: monomial degree mismatch");
    if (c.is_zero())
        coeff_.erase(m);
    else
        coeff_[m] = c;
}

KForm KForm::operator-() const {
    KForm f(n_, k_);
    for (const auto& [m, c] : coeff_) f.coeff_.emplace(m, -c);
    return f;
}

KForm operator+(const KForm& a, const KForm& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("KForm: degree/dimension mismatch in sum");
    KForm f = a;
    for (const auto& [m, c] : b.coeff_) f.set_coeff(m, f.coeff(m) + c);
    return f;
}

KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

KForm KForm::operator*(const Rat& s) const {
    KForm f(n_, k_);
    if (s.is_zero()) return f;
    for (const auto& [m, c] : coeff_) f.coeff_.emplace(m, c * s);
    return f;
}

bool operator==(const KForm& a, const KForm& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coeff_ == b.coeff_;
}

QVec KForm::covector() const {
    if (k_ != 1) throw std::invalid_argument("KForm: covector of non-1-form");
    QVec v(n_, Rat(0));
    for (const auto& [m, c] : coeff_) v[monomial_indices(m)[0] - 1] = c;
    return v;
}

Rat KForm::pair(const QVec& x) const {
    if (k_ != 1) throw std::invalid_argument("KForm: pairing needs a 1-form");
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("KForm: pairing dimension mismatch");
    Rat acc(0);
    for (const auto& [m, c] : coeff_) acc += c * x[monomial_indices(m)[0] - 1];
    return acc;
}

Rat KForm::eval2(const QVec& u, const QVec& v) const {
    if (k_ != 2) throw std::invalid_argument("KForm: eval2 needs a 2-form");
    Rat acc(0);
    for (const auto& [m, c] : coeff_) {
        auto idx = monomial_indices(m);
        int i = idx[0] - 1, j = idx[1] - 1;
        acc += c * (u[i] * v[j] - u[j] * v[i]);
    }
    return acc;
}

QMat KForm::gram() const {
    if (k_ != 2) throw std::invalid_argument("KForm: gram needs a 2-form");
    QMat g(n_, n_);
    for (const auto& [m, c] : coeff_) {
        auto idx = monomial_indices(m);
        g(idx[0] - 1, idx[1] - 1) = c;
        g(idx[1] - 1, idx[0] - 1) = -c;
    }
    return g;
}

QVec KForm::coords() const {
    const auto& basis = lambda_basis(n_, k_);
    QVec v(basis.size(), Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
    return v;
}

KForm KForm::from_coords(int n, int k, const QVec& coords) {
    const auto& basis = lambda_basis(n, k);
    if (coords.size() != basis.size()) throw std::invalid_argument("KForm: coordinate length mismatch");
    KForm f(n, k);
    for (std::size_t i = 0; i < basis.size(); ++i) f.set_coeff(basis[i], coords[i]);
    return f;
}

std::string KForm::str(int display_offset) const {
    if (coeff_.empty()) return "0";
    // print in lexicographic index-tuple order, the order index tables use
    std::vector<std::pair<std::vector<int>, Rat>> terms;
    for (const auto& [m, c] : coeff_) terms.emplace_back(monomial_indices(m), c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat mag = c.abs();
        if (mag != Rat(1) || k_ == 0) os << mag.str();
        if (k_ > 0) {
            if (mag != Rat(1)) os << "*";
            os << "e";
            for (int i : idx) os << (i - 1 + display_offset);
        }
    }
    return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    int n = a.dim();
    int k = a.degree() + b.degree();
    if (k > n) return KForm(n, n); // identically zero beyond top degree
    KForm f(n, k);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Monomial m = ma | mb;
            f.set_coeff(m, f.coeff(m) + ca * cb * Rat(merge_sign(ma, mb)));
        }
    return f;
}

KForm interior_product(const QVec& x, const KForm& a) {
    if (a.degree() == 0) throw std::invalid_argument("interior_product: degree-0 form");
    if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("interior_product: dimension mismatch");
    KForm f(a.dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms()) {
        int pos = 0;
        for (int i = 0; i < a.dim(); ++i) {
            Monomial bit = Monomial(1) << i;
            if (!(m & bit)) continue;
            if (!x[i].is_zero()) {
                Monomial rest = m & ~bit;
                Rat sgn((pos % 2 == 0) ? 1 : -1);
                f.set_coeff(rest, f.coeff(rest) + c * x[i] * sgn);
            }
            ++pos;
        }
    }
    return f;
}

KForm wedge_power(const KForm& a, int p) {
    if (p < 0) throw std::invalid_argument("wedge_power: negative power");
    KForm acc(a.dim(), 0);
    acc.set_coeff(0, Rat(1));
    for (int i = 0; i < p; ++i) acc = wedge(acc, a);
    return acc;
}

} // namespace lcslab
