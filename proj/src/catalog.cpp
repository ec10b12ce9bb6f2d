#include "lcslab/catalog.hpp"

#include "lcslab/errors.hpp"

namespace lcslab {

namespace {

KForm form2(int n, int i, int j, const Rat& c = Rat(1)) { return KForm::monomial(n, {i, j}, c); }
KForm form1(int n, int i, const Rat& c = Rat(1)) { return KForm::monomial(n, {i}, c); }

Rat param(const std::map<std::string, Rat>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw MissingParam(key);
    return it->second;
}

ExpectedProfile profile(bool uni, bool solv, bool nilp, std::optional<bool> type_i,
                        std::optional<int> center = std::nullopt) {
    return {uni, solv, nilp, type_i, center};
}

CatalogEntry make_aff_r() {
    // [e1, e2] = e2, Salamon (0,-12)
    LieAlgebra g = LieAlgebra::validate(2, {{1, 2, {{2, Rat(1)}}}}, "aff_r");
    return {"aff_r", g, std::nullopt, std::nullopt, profile(false, true, false, false, 0),
            "three-dimensional table: aff(R)"};
}

CatalogEntry make_h3() {
    LieAlgebra g = LieAlgebra::validate(3, {{1, 2, {{3, Rat(1)}}}}, "h3");
    return {"h3", g, std::nullopt, std::nullopt, profile(true, true, true, true, 1),
            "three-dimensional table: h_3 = (0,0,-12)"};
}

CatalogEntry make_r3_m1() {
    // [e1,e2] = e2, [e1,e3] = -e3 (e(1,1)); the table's Salamon string has
    // the sign of slot 3 off, the brackets are authoritative
    LieAlgebra g =
        LieAlgebra::validate(3, {{1, 2, {{2, Rat(1)}}}, {1, 3, {{3, Rat(-1)}}}}, "r3_-1");
    return {"r3_-1", g, std::nullopt, std::nullopt, profile(true, true, false, false, 0),
            "three-dimensional table: r_{3,-1} = e(1,1)"};
}

CatalogEntry make_r3p_0() {
    // [e1,e2] = -e3, [e1,e3] = e2, Salamon (0,-13,12); e(2)
    LieAlgebra g =
        LieAlgebra::validate(3, {{1, 2, {{3, Rat(-1)}}}, {1, 3, {{2, Rat(1)}}}}, "r3p_0");
    return {"r3p_0", g, std::nullopt, std::nullopt, profile(true, true, false, true, 0),
            "three-dimensional table: r'_{3,0} = e(2)"};
}

CatalogEntry make_n4() {
    // (0,14,24,0): [e1,e4] = -e2, [e2,e4] = -e3
    LieAlgebra g =
        LieAlgebra::validate(4, {{1, 4, {{2, Rat(-1)}}}, {2, 4, {{3, Rat(-1)}}}}, "n4");
    CatalogEntry e{"n4", g, std::make_pair(form2(4, 1, 3) - form2(4, 2, 4), form1(4, 1)),
                   std::nullopt, profile(true, true, true, true, 1), "four-dimensional type-I table: n_4"};
    return e;
}

CatalogEntry make_d4() {
    // (14,-24,-12,0): [e1,e4] = -e1, [e2,e4] = e2, [e1,e2] = e3
    LieAlgebra g = LieAlgebra::validate(
        4, {{1, 4, {{1, Rat(-1)}}}, {2, 4, {{2, Rat(1)}}}, {1, 2, {{3, Rat(1)}}}}, "d4");
    CatalogEntry e{"d4", g, std::make_pair(form2(4, 1, 2) - form2(4, 3, 4), form1(4, 4)),
                   std::nullopt, profile(true, true, false, false, 1),
                   "transversal counterexample: d_4 = (14,-24,-12,0)"};
    // the often-quoted omega = e12 - e24 has d(omega) = 0 != theta ^ omega
    // under this sign convention; kept as a noted variant
    e.noted_nonverifying.emplace_back(form2(4, 1, 2) - form2(4, 2, 4), form1(4, 4));
    return e;
}

CatalogEntry make_d4p_0() {
    // (24,-14,-12,0): [e2,e4] = -e1, [e1,e4] = e2, [e1,e2] = e3
    LieAlgebra g = LieAlgebra::validate(
        4, {{2, 4, {{1, Rat(-1)}}}, {1, 4, {{2, Rat(1)}}}, {1, 2, {{3, Rat(1)}}}}, "d4p_0");
    return {"d4p_0", g, std::make_pair(form2(4, 1, 2) - form2(4, 3, 4), form1(4, 4)),
            std::nullopt, profile(true, true, false, true, 1), "four-dimensional type-I table: d'_{4,0}"};
}

CatalogEntry make_h3xR() {
    LieAlgebra g = LieAlgebra::validate(4, {{1, 2, {{3, Rat(1)}}}}, "h3xR");
    return {"h3xR", g, std::make_pair(form2(4, 1, 2) - form2(4, 3, 4), form1(4, 4)),
            std::nullopt, profile(true, true, true, true, 2), "four-dimensional type-I table: h_3 x R"};
}

CatalogEntry make_r3p0xR() {
    // (0,-13,12,0)
    LieAlgebra g =
        LieAlgebra::validate(4, {{1, 2, {{3, Rat(-1)}}}, {1, 3, {{2, Rat(1)}}}}, "r3p0xR");
    CatalogEntry e{"r3p0xR", g,
                   std::make_pair(form2(4, 1, 3) - form2(4, 2, 4), form1(4, 4)), std::nullopt,
                   profile(true, true, false, true, 1), "four-dimensional type-I table: r'_{3,0} x R"};
    // the tabulated variant omega = e12 + e13 - e24 has an e12 term breaking the
    // structure equation for these constants; the form above verifies
    e.noted_nonverifying.emplace_back(form2(4, 1, 2) + form2(4, 1, 3) - form2(4, 2, 4),
                                      form1(4, 4));
    return e;
}

CatalogEntry make_h5() {
    LieAlgebra g =
        LieAlgebra::validate(5, {{2, 4, {{1, Rat(1)}}}, {3, 5, {{1, Rat(1)}}}}, "h5");
    return {"h5", g, std::nullopt, form1(5, 1), profile(true, true, true, true, 1),
            "five-dimensional contact table: h_5"};
}

CatalogEntry make_n1() {
    LieAlgebra g = LieAlgebra::validate(
        5, {{3, 4, {{1, Rat(1)}}}, {2, 5, {{1, Rat(1)}}}, {3, 5, {{2, Rat(1)}}}}, "n1");
    return {"n1", g, std::nullopt, form1(5, 1), profile(true, true, true, true, 1),
            "five-dimensional contact table: n_1"};
}

CatalogEntry make_n2() {
    LieAlgebra g = LieAlgebra::validate(5,
                                        {{3, 4, {{1, Rat(1)}}},
                                         {2, 5, {{1, Rat(1)}}},
                                         {3, 5, {{2, Rat(1)}}},
                                         {4, 5, {{3, Rat(1)}}}},
                                        "n2");
    return {"n2", g, std::nullopt, form1(5, 1), profile(true, true, true, true, 1),
            "five-dimensional contact table: n_2"};
}

CatalogEntry make_h() {
    LieAlgebra g = LieAlgebra::validate(5,
                                        {{2, 3, {{1, Rat(1)}}},
                                         {2, 5, {{3, Rat(1)}}},
                                         {3, 5, {{2, Rat(-1)}}},
                                         {4, 5, {{1, Rat(1)}}}},
                                        "h");
    return {"h", g, std::nullopt, form1(5, 1), profile(true, true, false, true, 1),
            "five-dimensional contact table: h"};
}

CatalogEntry make_g1(const Rat& b) {
    // display basis e0..e5 (internal shift +1): [e2,e4]=e1, [e3,e5]=e1,
    // [e0,e2]=e4, [e0,e3]=b e5, [e0,e4]=-e2
    std::vector<BracketEntry> br{{3, 5, {{2, Rat(1)}}},
                                 {4, 6, {{2, Rat(1)}}},
                                 {1, 3, {{5, Rat(1)}}},
                                 {1, 5, {{3, Rat(-1)}}}};
    if (!b.is_zero()) br.push_back({1, 4, {{6, b}}});
    LieAlgebra g = LieAlgebra::validate(6, br, "g1(" + b.str() + ")", 0);
    KForm omega =
        -form2(6, 1, 2) - form2(6, 3, 5) - form2(6, 4, 6); // -e01 - e24 - e35 in display
    return {"g1", g, std::make_pair(omega, form1(6, 1)), std::nullopt,
            profile(true, true, false, true, 1), "contact extension family: g_{1,b} = R x_D h_5"};
}

CatalogEntry make_g2(const Rat& b) {
    // display basis e0..e5: [e2,e3]=e1, [e2,e5]=e3, [e3,e5]=-e2,
    // [e4,e5]=e1, [e0,e5]=b e4, [e0,e2]=e3, [e0,e3]=-e2
    std::vector<BracketEntry> br{{3, 4, {{2, Rat(1)}}},
                                 {3, 6, {{4, Rat(1)}}},
                                 {4, 6, {{3, Rat(-1)}}},
                                 {5, 6, {{2, Rat(1)}}},
                                 {1, 3, {{4, Rat(1)}}},
                                 {1, 4, {{3, Rat(-1)}}}};
    if (!b.is_zero()) br.push_back({1, 6, {{5, b}}});
    LieAlgebra g = LieAlgebra::validate(6, br, "g2(" + b.str() + ")", 0);
    KForm omega = -form2(6, 1, 2) - form2(6, 3, 4) - form2(6, 5, 6); // -e01 - e23 - e45
    return {"g2", g, std::make_pair(omega, form1(6, 1)), std::nullopt,
            profile(true, true, false, true, 1), "contact extension family: g_{2,b} = R x_D h"};
}

CatalogEntry make_ex6() {
    // [e2,e3]=e1, [e2,e5]=e2, [e3,e5]=-e3, [e4,e5]=e1; not of type I
    LieAlgebra g = LieAlgebra::validate(6,
                                        {{2, 3, {{1, Rat(1)}}},
                                         {2, 5, {{2, Rat(1)}}},
                                         {3, 5, {{3, Rat(-1)}}},
                                         {4, 5, {{1, Rat(1)}}}},
                                        "ex6");
    KForm omega = form2(6, 1, 6) - form2(6, 2, 3) - form2(6, 4, 5);
    return {"ex6", g, std::make_pair(omega, form1(6, 6)), std::nullopt,
            profile(true, true, false, false, std::nullopt), "six-dimensional first-kind example"};
}

CatalogEntry make_kf6(const Rat& a, const Rat& b) {
    if (a.is_zero()) throw MissingParam("kf6 requires a != 0");
    // double extension of r'_{3,0} x R by beta = -e14 + e23 and D(a,b),
    // in the displayed basis: s = <e1..e4>, V = e5, U = e6
    LieAlgebra g = LieAlgebra::validate(6,
                                        {{1, 2, {{3, Rat(-1)}}},
                                         {1, 3, {{2, Rat(1)}}},
                                         {1, 4, {{5, Rat(-1)}}},
                                         {2, 3, {{5, Rat(1)}}},
                                         {1, 6, {{4, -a}}},
                                         {2, 6, {{3, -b}}},
                                         {3, 6, {{2, b}}}},
                                        "kf6(" + a.str() + "," + b.str() + ")");
    KForm omega = -form2(6, 1, 4) + form2(6, 2, 3) - form2(6, 5, 6);
    return {"kf6", g, std::make_pair(omega, form1(6, 6)), std::nullopt,
            profile(true, true, false, true, std::nullopt),
            "Kaehler-flat double extension, Omega = -e14 + e23 - e56"};
}

} // namespace

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, Rat>& params) {
    if (name == "aff_r") return make_aff_r();
    if (name == "h3") return make_h3();
    if (name == "r3_-1") return make_r3_m1();
    if (name == "r3p_0") return make_r3p_0();
    if (name == "n4") return make_n4();
    if (name == "d4") return make_d4();
    if (name == "d4p_0") return make_d4p_0();
    if (name == "h3xR") return make_h3xR();
    if (name == "r3p0xR") return make_r3p0xR();
    if (name == "h5") return make_h5();
    if (name == "n1") return make_n1();
    if (name == "n2") return make_n2();
    if (name == "h") return make_h();
    if (name == "g1") return make_g1(param(params, "b"));
    if (name == "g2") return make_g2(param(params, "b"));
    if (name == "ex6") return make_ex6();
    if (name == "kf6") return make_kf6(param(params, "a"), param(params, "b"));
    throw UnknownName(name);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "aff_r", "h3", "r3_-1", "r3p_0", "n4",  "d4",  "d4p_0", "h3xR", "r3p0xR",
        "h5",    "n1", "n2",    "h",     "g1",  "g2",  "ex6",   "kf6"};
    return names;
}

std::vector<CatalogEntry> catalog_all() {
    std::vector<CatalogEntry> all;
    for (const auto& n : catalog_names()) {
        std::map<std::string, Rat> params;
        if (n == "g1" || n == "g2") params["b"] = Rat(1);
        if (n == "kf6") {
            params["a"] = Rat(1);
            params["b"] = Rat(1);
        }
        all.push_back(catalog_get(n, params));
    }
    return all;
}

} // namespace lcslab
