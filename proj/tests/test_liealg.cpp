#include <doctest.h>

#include "lcslab/catalog.hpp"
#include "lcslab/cohomology.hpp"
#include "lcslab/exterior.hpp"
#include "lcslab/prng.hpp"
#include "oracles.hpp"

using namespace lcslab;

TEST_CASE("validate accepts the table algebras and rejects Jacobi violations") {
    CHECK_NOTHROW(LieAlgebra::validate(3, {{1, 2, {{3, Rat(1)}}}}));        // h3
    CHECK_NOTHROW(LieAlgebra::validate(2, {{1, 2, {{2, Rat(1)}}}}));        // aff(R)
    // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (1,2,3)
    try {
        LieAlgebra::validate(3, {{1, 2, {{3, Rat(1)}}}, {1, 3, {{1, Rat(1)}}}});
        FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& v) {
        REQUIRE(v.defects.size() == 1);
        auto [i, j, k, defect] = v.defects[0];
        CHECK(i == 1);
        CHECK(j == 2);
        CHECK(k == 3);
        CHECK(!is_zero(defect));
    }
}

TEST_CASE("ad matrices") {
    LieAlgebra ab = LieAlgebra::validate(4, {}, "R4");
    Prng rng(3);
    CHECK(ab.ad(rng.rat_vector(4)).is_zero());

    // r'_{3,0}: ad_{e1} rotates (e2, e3): e2 -> -e3, e3 -> e2
    LieAlgebra r3p = catalog_get("r3p_0").algebra;
    QMat a = r3p.ad_basis(1);
    CHECK(a(2, 1) == Rat(-1)); // [e1,e2] = -e3
    CHECK(a(1, 2) == Rat(1));  // [e1,e3] = e2
    CHECK(spectrum_purely_imaginary(a));

    // d4: ad_{e4} acts diagonally with eigenvalues {1,-1,0,0}
    LieAlgebra d4 = catalog_get("d4").algebra;
    QMat b = d4.ad_basis(4);
    CHECK(char_poly(b) == oracle::char_poly_cofactor(b));
    CHECK(char_poly(b) == Poly::power(2) * Poly({Rat(-1), Rat(0), Rat(1)})); // x^2 (x^2 - 1)
    CHECK(!spectrum_purely_imaginary(b));
    // ad_{e1} is nilpotent there
    CHECK(char_poly(d4.ad_basis(1)) == Poly::power(4));
}

TEST_CASE("structural profiles match the recorded table facts") {
    auto p = structural_profile(catalog_get("d4p_0").algebra);
    CHECK(p.unimodular);
    CHECK(p.solvable);
    CHECK(!p.nilpotent);
    CHECK(p.type_I == std::optional<bool>(true));

    auto q = structural_profile(catalog_get("r3_-1").algebra);
    CHECK(q.type_I == std::optional<bool>(false));
    CHECK(q.unimodular);

    LieAlgebra ab = LieAlgebra::validate(4, {}, "R4");
    auto r = structural_profile(ab);
    CHECK(r.unimodular);
    CHECK(r.solvable);
    CHECK(r.nilpotent);
    CHECK(r.type_I == std::optional<bool>(true));
    CHECK(r.center_dim == 4);

    auto s = structural_profile(catalog_get("ex6").algebra);
    CHECK(s.unimodular);
    CHECK(s.solvable);
    CHECK(!s.nilpotent);
    CHECK(s.type_I == std::optional<bool>(false));
}

TEST_CASE("profile flags satisfy the structural implications on the catalog") {
    for (const auto& e : catalog_all()) {
        auto p = structural_profile(e.algebra);
        if (p.nilpotent) CHECK(p.solvable);
        if (p.nilpotent) CHECK(p.type_I == std::optional<bool>(true));
        if (p.type_I == std::optional<bool>(true)) CHECK(p.unimodular);
        CHECK(p.derived_series_dims.back() == (p.solvable ? 0 : p.derived_series_dims.back()));
        // expected fragments from the tables
        if (e.expected.unimodular) CHECK(p.unimodular == *e.expected.unimodular);
        if (e.expected.solvable) CHECK(p.solvable == *e.expected.solvable);
        if (e.expected.nilpotent) CHECK(p.nilpotent == *e.expected.nilpotent);
        if (e.expected.type_I) CHECK(p.type_I == e.expected.type_I);
        if (e.expected.center_dim) CHECK(p.center_dim == *e.expected.center_dim);
    }
}

TEST_CASE("solvable type-I basis criterion extends to random elements") {
    // soundness cross-check of the basis test: 200 random rational X per
    // certified algebra; sound by Lie's theorem (the eigenvalue functions
    // of the adjoint representation of a solvable algebra are linear)
    Prng rng(41);
    for (const char* name : {"d4p_0", "r3p0xR"}) {
        LieAlgebra g = catalog_get(name).algebra;
        REQUIRE(structural_profile(g).type_I == std::optional<bool>(true));
        for (int t = 0; t < 200; ++t)
            CHECK(spectrum_purely_imaginary(g.ad(rng.rat_vector(g.dim(), 5, 3))));
    }
}

TEST_CASE("nilpotent algebras have ad with characteristic polynomial x^n") {
    for (const auto& e : catalog_all()) {
        auto p = structural_profile(e.algebra);
        if (!p.nilpotent) continue;
        for (int j = 1; j <= e.algebra.dim(); ++j)
            CHECK(char_poly(e.algebra.ad_basis(j)) == Poly::power(e.algebra.dim()));
    }
}

TEST_CASE("find_imaginary_transversal") {
    // type-I algebra with a closed basis form: hit immediately
    LieAlgebra d4p = catalog_get("d4p_0").algebra;
    auto a = find_imaginary_transversal(d4p, KForm::monomial(4, {4}));
    REQUIRE(a.has_value());
    CHECK(KForm::monomial(4, {4}).pair(*a) == Rat(1));
    CHECK(spectrum_purely_imaginary(d4p.ad(*a)));

    // six-dim example with theta = e4 + e6
    LieAlgebra ex6 = catalog_get("ex6").algebra;
    KForm theta = KForm::monomial(6, {4}) + KForm::monomial(6, {6});
    auto b = find_imaginary_transversal(ex6, theta);
    REQUIRE(b.has_value());
    CHECK(theta.pair(*b) == Rat(1));
    CHECK(spectrum_purely_imaginary(ex6.ad(*b)));

    // d4, theta = e4: inconclusive over the default budget
    LieAlgebra d4 = catalog_get("d4").algebra;
    CHECK(!find_imaginary_transversal(d4, KForm::monomial(4, {4})).has_value());

    // errors
    CHECK_THROWS_AS(find_imaginary_transversal(d4, KForm(4, 1)), ThetaZero);
    LieAlgebra h3xR = catalog_get("h3xR").algebra;
    CHECK_THROWS_AS(find_imaginary_transversal(h3xR, KForm::monomial(4, {3})), ThetaNotClosed);
}

TEST_CASE("kernel_subalgebra") {
    LieAlgebra ab = LieAlgebra::validate(3, {}, "R3");
    auto sub = kernel_subalgebra(ab, KForm::monomial(3, {1}));
    CHECK(sub.algebra.dim() == 2);
    CHECK(structural_profile(sub.algebra).nilpotent);

    // g_{1,b}, theta = e0 -> h5
    LieAlgebra g1 = catalog_get("g1", {{"b", Rat(1)}}).algebra;
    auto k1 = kernel_subalgebra(g1, KForm::monomial(6, {1}));
    CHECK(k1.algebra.dim() == 5);
    CHECK(invariant_fingerprint(k1.algebra) == invariant_fingerprint(catalog_get("h5").algebra));

    // g_{2,b}, theta = e0 -> the contact algebra h
    LieAlgebra g2 = catalog_get("g2", {{"b", Rat(1)}}).algebra;
    auto k2 = kernel_subalgebra(g2, KForm::monomial(6, {1}));
    CHECK(invariant_fingerprint(k2.algebra) == invariant_fingerprint(catalog_get("h").algebra));

    // Jacobi and dimension on the whole catalog, for every closed basis form
    for (const auto& e : catalog_all())
        for (const auto& theta : closed_one_forms(e.algebra)) {
            auto s = kernel_subalgebra(e.algebra, theta);
            CHECK(s.algebra.dim() == e.algebra.dim() - 1); // validate() checked Jacobi
        }
}

TEST_CASE("fingerprints separate the non-isomorphic family members") {
    auto g10 = catalog_get("g1", {{"b", Rat(0)}});
    auto g11 = catalog_get("g1", {{"b", Rat(1)}});
    auto g12 = catalog_get("g1", {{"b", Rat(2)}});
    auto f10 = invariant_fingerprint(g10.algebra);
    auto f11 = invariant_fingerprint(g11.algebra);
    CHECK(f10.derived_series_dims[0] == 3);
    CHECK(f11.derived_series_dims[0] == 4);
    CHECK(!(f10 == f11));
    // necessary condition for g_{1,b} ~ g_{1,1}, b != 0
    CHECK(invariant_fingerprint(g12.algebra) == f11);

    auto f20 = invariant_fingerprint(catalog_get("g2", {{"b", Rat(0)}}).algebra);
    auto f21 = invariant_fingerprint(catalog_get("g2", {{"b", Rat(1)}}).algebra);
    CHECK(f20.derived_series_dims[0] == 3);
    CHECK(f21.derived_series_dims[0] == 4);
    CHECK(!(f20 == f21));
    CHECK(invariant_fingerprint(catalog_get("g2", {{"b", Rat(5)}}).algebra) == f21);
}

TEST_CASE("fingerprint is basis independent") {
    // h3 x R with basis permuted (3 <-> 4, 1 <-> 2): [e2,e1] = e4
    LieAlgebra permuted =
        LieAlgebra::validate(4, {{1, 2, {{4, Rat(-1)}}}}, "h3xR.permuted");
    CHECK(invariant_fingerprint(permuted) == invariant_fingerprint(catalog_get("h3xR").algebra));
    // and the Betti numbers are the known (1,3,4,3,1)
    CHECK(invariant_fingerprint(permuted).betti == std::vector<int>{1, 3, 4, 3, 1});
}
