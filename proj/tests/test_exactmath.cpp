#include <doctest.h>

#include "lcslab/matrix.hpp"
#include "lcslab/pi_scalar.hpp"
#include "lcslab/poly.hpp"
#include "lcslab/lie_algebra.hpp"
#include "lcslab/prng.hpp"
#include "oracles.hpp"

using namespace lcslab;

namespace {

QMat random_matrix(Prng& rng, int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.rat(5, 3);
    return m;
}

QMat random_skew(Prng& rng, int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = rng.rat(5, 3);
            m(j, i) = -m(i, j);
        }
    return m;
}

} // namespace

TEST_CASE("Rat canonical form and arithmetic") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat::from_string("-3/2") == Rat(-3, 2));
    CHECK(Rat(7).is_integer());
    CHECK(!Rat(7, 2).is_integer());
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("kernel_basis identity and zero cases") {
    QMat zero(2, 2);
    auto k = kernel_basis(zero);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == QVec{Rat(1), Rat(0)});
    CHECK(k[1] == QVec{Rat(0), Rat(1)});

    QMat id = QMat::identity(2);
    CHECK(kernel_basis(id).empty());
}

TEST_CASE("kernel vectors satisfy Mv = 0 and count cols - rank") {
    Prng rng(7);
    for (int t = 0; t < 30; ++t) {
        int rows = rng.range(1, 5), cols = rng.range(1, 5);
        QMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = rng.rat(3, 2);
        auto kb = kernel_basis(m);
        CHECK(static_cast<int>(kb.size()) == cols - oracle::rank_gauss(m));
        for (const auto& v : kb) CHECK(is_zero(m.apply(v)));
        // idempotence under re-reduction: the span re-reduces to itself
        auto re = span_basis(kb);
        CHECK(re.size() == kb.size());
    }
}

TEST_CASE("char_poly matches cofactor oracle") {
    QMat rot(2, 2, {Rat(0), Rat(-1), Rat(1), Rat(0)});
    CHECK(char_poly(rot) == Poly({Rat(1), Rat(0), Rat(1)})); // x^2 + 1

    QMat z3(3, 3);
    CHECK(char_poly(z3) == Poly::power(3)); // x^3

    Prng rng(11);
    for (int t = 0; t < 25; ++t) {
        QMat m = random_matrix(rng, rng.range(1, 4));
        CHECK(char_poly(m) == oracle::char_poly_cofactor(m));
    }
}

TEST_CASE("Cayley-Hamilton on random rational matrices") {
    Prng rng(13);
    for (int t = 0; t < 20; ++t) {
        QMat m = random_matrix(rng, rng.range(1, 4));
        CHECK(poly_at(char_poly(m), m).is_zero());
    }
}

TEST_CASE("sturm_count on half-open intervals") {
    // p = x + 1 on (-inf, 0]  -> 1
    CHECK(sturm_count(Poly({Rat(1), Rat(1)}), XRat::neg_inf(), XRat::at(Rat(0))) == 1);
    // p = x - 1 on (-inf, 0]  -> 0
    CHECK(sturm_count(Poly({Rat(-1), Rat(1)}), XRat::neg_inf(), XRat::at(Rat(0))) == 0);
    // p = x^2 + 3x + 2 = (x+1)(x+2) on (-inf, 0]  -> 2
    CHECK(sturm_count(Poly({Rat(2), Rat(3), Rat(1)}), XRat::neg_inf(), XRat::at(Rat(0))) == 2);
    // half-open endpoints: root at 0 counts, root at lo does not
    Poly x({Rat(0), Rat(1)});
    CHECK(sturm_count(x, XRat::at(Rat(-1)), XRat::at(Rat(0))) == 1);
    CHECK(sturm_count(x, XRat::at(Rat(0)), XRat::at(Rat(1))) == 0);
    CHECK_THROWS(sturm_count(Poly(), XRat::neg_inf(), XRat::pos_inf()));
}

TEST_CASE("sturm_count counts distinct roots of products") {
    // (x-1)(x-2)(x-3) over several windows
    Poly p = Poly({Rat(-1), Rat(1)}) * Poly({Rat(-2), Rat(1)}) * Poly({Rat(-3), Rat(1)});
    CHECK(sturm_count(p, XRat::neg_inf(), XRat::pos_inf()) == 3);
    CHECK(sturm_count(p, XRat::at(Rat(1)), XRat::at(Rat(3))) == 2); // (1, 3] -> 2, 3
    CHECK(sturm_count(p, XRat::at(Rat(3)), XRat::pos_inf()) == 0);
}

TEST_CASE("spectrum_purely_imaginary basic cases") {
    QMat rot(2, 2, {Rat(0), Rat(-1), Rat(1), Rat(0)});
    CHECK(spectrum_purely_imaginary(rot));

    QMat diag(2, 2, {Rat(1), Rat(0), Rat(0), Rat(-1)});
    CHECK(!spectrum_purely_imaginary(diag));

    QMat nil(3, 3);
    nil(0, 1) = Rat(1);
    nil(1, 2) = Rat(1);
    CHECK(spectrum_purely_imaginary(nil));

    // x^2 - 1 even with real roots: even polynomial alone is not enough
    QMat h(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});
    CHECK(!spectrum_purely_imaginary(h));
}

TEST_CASE("spectrum invariants: rotation + commuting nilpotent blocks, trace") {
    Prng rng(17);
    for (int t = 0; t < 20; ++t) {
        // block-diag(R(a), N) with strictly upper triangular N
        Rat a = rng.rat(4, 2);
        int nn = rng.range(1, 3);
        QMat m(2 + nn, 2 + nn);
        m(0, 1) = -a;
        m(1, 0) = a;
        for (int i = 0; i < nn; ++i)
            for (int j = i + 1; j < nn; ++j) m(2 + i, 2 + j) = rng.rat(3, 2);
        CHECK(spectrum_purely_imaginary(m));
    }
    for (int t = 0; t < 20; ++t) {
        QMat m = random_matrix(rng, rng.range(1, 4));
        Rat tr(0);
        for (int i = 0; i < m.rows(); ++i) tr += m(i, i);
        if (!tr.is_zero()) CHECK(!spectrum_purely_imaginary(m));
    }
}

TEST_CASE("pfaffian small cases and degenerate 2-forms") {
    QMat j2(2, 2, {Rat(0), Rat(1), Rat(-1), Rat(0)});
    CHECK(pfaffian(j2) == Rat(1));

    // matrix of e12 - e34
    QMat m(4, 4);
    m(0, 1) = Rat(1);
    m(1, 0) = Rat(-1);
    m(2, 3) = Rat(-1);
    m(3, 2) = Rat(1);
    CHECK(pfaffian(m) == Rat(-1));
    CHECK(oracle::det_cofactor(m) == Rat(1));

    // matrix of e12 + e13, degenerate
    QMat d(4, 4);
    d(0, 1) = Rat(1);
    d(1, 0) = Rat(-1);
    d(0, 2) = Rat(1);
    d(2, 0) = Rat(-1);
    CHECK(pfaffian(d) == Rat(0));
    CHECK(oracle::det_cofactor(d) == Rat(0));

    CHECK_THROWS(pfaffian(QMat(3, 3)));
    QMat notskew(2, 2, {Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK_THROWS(pfaffian(notskew));
}

TEST_CASE("pfaffian squared equals determinant on random skew matrices") {
    Prng rng(23);
    for (int t = 0; t < 200; ++t) {
        QMat m = random_skew(rng, 4);
        Rat pf = pfaffian(m);
        CHECK(pf * pf == oracle::det_cofactor(m));
    }
    for (int t = 0; t < 40; ++t) {
        QMat m = random_skew(rng, 6);
        Rat pf = pfaffian(m);
        CHECK(pf * pf == det(m));
    }
}

TEST_CASE("PiScalar ring and integrality") {
    PiScalar half_pi = PiScalar::monomial(Rat(1, 2), 1);
    PiScalar two_over_pi = PiScalar::monomial(Rat(2), -1);
    CHECK(half_pi * two_over_pi == PiScalar(1));
    CHECK(half_pi.str() == "pi/2");
    CHECK(two_over_pi.str() == "2/pi");
    CHECK(PiScalar::monomial(Rat(8), -3).str() == "8/pi^3");

    CHECK(PiScalar(3).is_integral());
    CHECK(PiScalar(Rat(0)).is_integral());
    CHECK(!PiScalar(Rat(3, 2)).is_integral());
    CHECK(!PiScalar::pi().is_integral());

    PiScalar mixed = PiScalar(Rat(1, 2)) + PiScalar::pi(2) * PiScalar(Rat(3));
    CHECK(mixed.coeff(2) == Rat(3));
    CHECK(mixed.coeff(0) == Rat(1, 2));
    CHECK((mixed - mixed).is_zero());
    CHECK(mixed.str() == "3*pi^2 + 1/2");

    // product of monomials adds exponents
    CHECK(PiScalar::monomial(Rat(3), 2) * PiScalar::monomial(Rat(1, 3), -5) ==
          PiScalar::monomial(Rat(1), -3));
    CHECK(PiScalar::pi(3).inverse().value() == PiScalar::pi(-3));
    CHECK(!(PiScalar::pi() + PiScalar(1)).inverse().has_value());
}

TEST_CASE("rational roots") {
    // (x+1)(x+2) and (2x-1)(x+3)
    auto r1 = rational_roots(Poly({Rat(2), Rat(3), Rat(1)}));
    REQUIRE(r1.has_value());
    CHECK(*r1 == std::vector<Rat>{Rat(-2), Rat(-1)});
    auto r2 = rational_roots(Poly({Rat(-3), Rat(5), Rat(2)}) * Poly({Rat(1)}));
    REQUIRE(r2.has_value());
    CHECK(*r2 == std::vector<Rat>{Rat(-3), Rat(1, 2)});
}
