#include <doctest.h>

#include "lcslab/errors.hpp"
#include "lcslab/lattice.hpp"
#include "lcslab/poly.hpp"
#include "lcslab/prng.hpp"

using namespace lcslab;

namespace {

PiScalar pi_frac(long num, long den, int exp = 1) {
    return PiScalar::monomial(Rat(num, den), exp);
}

GroupElement elem(HeisenbergKind kind, std::vector<Rat> coords) {
    PiVec v;
    for (const auto& c : coords) v.emplace_back(c);
    return {kind, std::move(v)};
}

GroupElement random_element(Prng& rng, HeisenbergKind kind) {
    int n = kind == HeisenbergKind::H3 ? 3 : 5;
    PiVec v;
    for (int i = 0; i < n; ++i) v.emplace_back(rng.rat(6, 3));
    return {kind, std::move(v)};
}

GroupElement apply(const PiMat& m, const GroupElement& g) {
    return {g.kind, m.apply(g.coords)};
}

} // namespace

TEST_CASE("Heisenberg products match the displayed formulas") {
    // H3: (0,1,0) * (0,0,1) = (1/2, 1, 1)
    auto p3 = group_product(elem(HeisenbergKind::H3, {Rat(0), Rat(1), Rat(0)}),
                            elem(HeisenbergKind::H3, {Rat(0), Rat(0), Rat(1)}));
    CHECK(p3.coords == elem(HeisenbergKind::H3, {Rat(1, 2), Rat(1), Rat(1)}).coords);

    // H5: (0,1,0,0,0) * (0,0,1,0,0) = (1/2, 1, 1, 0, 0)
    auto p5 = group_product(elem(HeisenbergKind::H5, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}),
                            elem(HeisenbergKind::H5, {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}));
    CHECK(p5.coords ==
          elem(HeisenbergKind::H5, {Rat(1, 2), Rat(1), Rat(1), Rat(0), Rat(0)}).coords);

    // g * g^-1 = identity
    Prng rng(31);
    auto g = random_element(rng, HeisenbergKind::H3);
    CHECK(group_product(g, group_inverse(g)).coords == group_identity(HeisenbergKind::H3).coords);
}

TEST_CASE("group axioms on seeded random triples, exact") {
    Prng rng(37);
    for (HeisenbergKind kind : {HeisenbergKind::H3, HeisenbergKind::H5}) {
        for (int t = 0; t < 100; ++t) {
            auto a = random_element(rng, kind);
            auto b = random_element(rng, kind);
            auto c = random_element(rng, kind);
            CHECK(group_product(group_product(a, b), c).coords ==
                  group_product(a, group_product(b, c)).coords);
            CHECK(group_product(a, group_identity(kind)).coords == a.coords);
            CHECK(group_product(group_inverse(a), a).coords == group_identity(kind).coords);
        }
    }
}

TEST_CASE("exp_one_param reproduces the displayed phi(t)") {
    // b = 1/pi, t = pi: rotation at angle pi, shear entry tb = 1
    PiMat a = exp_one_param(g1_derivation(pi_frac(1, 1, -1)), PiScalar::pi());
    CHECK(a(1, 1) == PiScalar(Rat(-1))); // cos pi
    CHECK(a(3, 3) == PiScalar(Rat(-1)));
    CHECK(a(1, 3).is_zero());            // -sin pi
    CHECK(a(3, 1).is_zero());
    CHECK(a(4, 2) == PiScalar(Rat(1)));  // t b
    CHECK(a(0, 0) == PiScalar(Rat(1)));
    CHECK(a(2, 2) == PiScalar(Rat(1)));
    CHECK(a(4, 4) == PiScalar(Rat(1)));

    // nilpotent single Jordan block, t = 2/pi: I + t N
    PiMat n(3, 3);
    n(0, 1) = PiScalar(Rat(1));
    n(1, 2) = PiScalar(Rat(1));
    PiScalar t = pi_frac(2, 1, -1);
    PiMat en = exp_one_param(n, t);
    CHECK(en(0, 1) == t);
    CHECK(en(1, 2) == t);
    CHECK(en(0, 2) == t * t * PiScalar(Rat(1, 2))); // (tN)^2/2 term
    CHECK(en(0, 0) == PiScalar(Rat(1)));

    // b = 1/(2 pi), t = 2 pi: identity rotation block, shear tb = 1
    PiMat a2 = exp_one_param(g1_derivation(pi_frac(1, 2, -1)), pi_frac(2, 1));
    CHECK(a2(1, 1) == PiScalar(Rat(1)));
    CHECK(a2(1, 3).is_zero());
    CHECK(a2(4, 2) == PiScalar(Rat(1)));

    // pi/3 hits the trig table boundary
    CHECK_THROWS_AS(exp_one_param(g1_derivation(pi_frac(3, 1, -1)), pi_frac(1, 3)),
                    UnsupportedAngle);
}

TEST_CASE("phi(t) is a group automorphism in display coordinates") {
    Prng rng(43);
    struct Case {
        PiScalar b, t;
    };
    for (const Case& c : {Case{pi_frac(2, 1, -1), pi_frac(1, 2)}, Case{pi_frac(1, 1, -1), PiScalar::pi()},
                          Case{pi_frac(1, 2, -1), pi_frac(2, 1)}}) {
        PiMat phi = g1_automorphism(c.b, c.t);
        for (int t = 0; t < 25; ++t) {
            auto x = random_element(rng, HeisenbergKind::H5);
            auto y = random_element(rng, HeisenbergKind::H5);
            CHECK(apply(phi, group_product(x, y)).coords ==
                  group_product(apply(phi, x), apply(phi, y)).coords);
        }
    }
    // rho(pi/2) is an automorphism of H3
    PiMat rho = exp_one_param(g2_rho_derivation(), pi_frac(1, 2));
    for (int t = 0; t < 25; ++t) {
        auto x = random_element(rng, HeisenbergKind::H3);
        auto y = random_element(rng, HeisenbergKind::H3);
        CHECK(apply(rho, group_product(x, y)).coords ==
              group_product(apply(rho, x), apply(rho, y)).coords);
    }
}

TEST_CASE("lattice_preserved") {
    CoordinateLattice gamma1{{PiScalar(Rat(1, 2)), PiScalar(1), PiScalar(1), PiScalar(1), PiScalar(1)}};
    // identity preserves everything
    CHECK(lattice_preserved(pi_identity(5), gamma1).preserved);

    // phi(pi/2) with b = 2/pi preserves Gamma_1
    PiMat a = g1_automorphism(pi_frac(2, 1, -1), pi_frac(1, 2));
    auto check = lattice_preserved(a, gamma1);
    CHECK(check.preserved);

    // a matrix with a honest non-integral entry fails and reports it
    PiMat bad = pi_identity(3);
    bad(0, 1) = PiScalar(Rat(1, 2));
    CoordinateLattice z3{{PiScalar(1), PiScalar(1), PiScalar(1)}};
    auto fail = lattice_preserved(bad, z3);
    CHECK(!fail.preserved);
    CHECK(fail.offending_entry.has_value());

    // singular input
    CHECK_THROWS_AS(lattice_preserved(PiMat(3, 3), z3), SingularA);
}

TEST_CASE("cos(pi/3) = 1/2 certified, so phi(pi/3) cannot preserve Gamma_k") {
    // cos(3t) = 4c^3 - 3c at t = pi/3 gives 4c^3 - 3c + 1 = 0, whose roots
    // are -1 and 1/2 (double); cos(pi/3) lies in (0, 1), hence equals 1/2.
    Poly p({Rat(1), Rat(-3), Rat(0), Rat(4)});
    auto roots = rational_roots(p);
    REQUIRE(roots.has_value());
    CHECK(*roots == std::vector<Rat>{Rat(-1), Rat(1, 2)});
    CHECK(sturm_count(squarefree_part(p), XRat::at(Rat(0)), XRat::at(Rat(1))) == 1);
    // the image of (0,1,0,0,0) under phi(pi/3) has x1 = cos(pi/3), and
    // 1/2 is not an integer: the first Gamma_k condition already fails
    CHECK(!PiScalar(Rat(1, 2)).is_integral());
}

TEST_CASE("check_reference_lattices G1 across k and t0") {
    for (int k : {1, 2, 3}) {
        for (const PiScalar& t0 : {pi_frac(1, 2), PiScalar::pi(), pi_frac(2, 1)}) {
            auto rep = check_reference_lattices(LatticeFamily::G1, k, t0);
            CHECK(rep.preserved);
            CHECK(rep.closure_ok);
            REQUIRE(rep.levels.size() == 1);
            CHECK(rep.levels[0].check.preserved);
        }
    }
    CHECK_THROWS_AS(check_reference_lattices(LatticeFamily::G1, 1, pi_frac(1, 3)), UnsupportedT0);
}

TEST_CASE("check_reference_lattices G2 across k, with the critical pi-power bookkeeping") {
    for (int k : {1, 2, 3}) {
        auto rep = check_reference_lattices(LatticeFamily::G2, k);
        CHECK(rep.preserved);
        REQUIRE(rep.levels.size() == 3);
        for (const auto& lvl : rep.levels) CHECK(lvl.check.preserved);
        // the top-level conjugated shear entry is exactly 1:
        // (pi/2)^-1 ... wait, B11^-1 * (t b) * B22 = (pi/2)(4/pi^2)(pi/2) = 1
        CHECK(rep.levels[2].check.conjugated(0, 1) == PiScalar(Rat(1)));
    }
}

TEST_CASE("preservation is closed under products of automorphisms") {
    CoordinateLattice gamma1{{PiScalar(Rat(1, 2)), PiScalar(1), PiScalar(1), PiScalar(1), PiScalar(1)}};
    PiMat a = g1_automorphism(pi_frac(2, 1, -1), pi_frac(1, 2));
    PiMat b = a * a;
    CHECK(lattice_preserved(a, gamma1).preserved);
    CHECK(lattice_preserved(b, gamma1).preserved);
    CHECK(lattice_preserved(a * b, gamma1).preserved);
}
