#include "doctest.h"
#include "hopfcat/hrep.hpp"

using namespace hopfcat;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
}

TEST_CASE("module validation catches a non-representation") {
    auto h = fixtures::rational_c2();
    CHECK(validate_hmodule(trivial_hmodule(h)).empty());
    CHECK(validate_hmodule(sign_module_c2(h)).empty());

    // g acting by 2 breaks g*g = e
    HModule bad = scalar_character_module(h, {Scalar::one(Q), Scalar::of(Q, 2)});
    auto report = validate_hmodule(bad);
    REQUIRE_FALSE(report.empty());
    CHECK(report[0].find("representation law") != std::string::npos);
}

TEST_CASE("invariants of small C2 modules") {
    auto f1 = fixtures::rational_c2();
    CHECK(invariants(trivial_hmodule(f1)).cols() == 1);
    CHECK(invariants(sign_module_c2(f1)).cols() == 0);

    // regular module of F_2[C2]: invariants are spanned by e+g
    auto f2 = fixtures::mod2_c2();
    Matrix inv = invariants(regular_hmodule(f2));
    REQUIRE(inv.cols() == 1);
    CHECK(inv.at(0, 0) == Scalar::one(F2));
    CHECK(inv.at(1, 0) == Scalar::one(F2));
}

TEST_CASE("invariants lie in every per-element kernel") {
    auto h = fixtures::sweedler_q();
    HModule m = regular_hmodule(h);
    Matrix inv = invariants(m);
    for (int i = 0; i < h->dim; ++i) {
        Matrix delta = m.action[i] - Matrix::identity(Q, m.dim).scaled(h->counit[i]);
        CHECK((delta * inv).is_zero());
    }
}

TEST_CASE("coinvariants of small comodules") {
    auto f1 = fixtures::rational_c2();
    CHECK(coinvariants(trivial_hcomodule(f1)).cols() == 1);
    CHECK(coinvariants(grouplike_line(f1, 1)).cols() == 0);  // degree g is not coinvariant

    // 2-dim comodule: v1 of degree e, v2 of degree g
    HComodule m{f1, 2, Matrix(Q, 4, 2)};
    m.coaction.at(0 * 2 + 0, 0) = Scalar::one(Q);
    m.coaction.at(1 * 2 + 1, 1) = Scalar::one(Q);
    CHECK(validate_hcomodule(m).empty());
    Matrix coin = coinvariants(m);
    REQUIRE(coin.cols() == 1);
    CHECK(coin.at(0, 0) == Scalar::one(Q));
    CHECK(coin.at(1, 0).is_zero());
}

TEST_CASE("tensor products of modules and comodules") {
    auto f1 = fixtures::rational_c2();
    HModule sign = sign_module_c2(f1);
    HModule two_signs = tensor_hmodules(sign, sign);
    CHECK(validate_hmodule(two_signs).empty());
    CHECK(two_signs.action[1] == Matrix::identity(Q, 1));  // (-1)(-1) = 1

    HModule m = regular_hmodule(f1);
    HModule m_triv = tensor_hmodules(m, trivial_hmodule(f1));
    for (int i = 0; i < 2; ++i) CHECK(m_triv.action[i] == m.action[i]);

    HComodule g_line = grouplike_line(f1, 1);
    HComodule sq = tensor_hcomodules(g_line, g_line);
    CHECK(validate_hcomodule(sq).empty());
    CHECK(coinvariants(sq).cols() == 1);  // degree g^2 = e

    CHECK_THROWS_AS(tensor_hmodules(sign, trivial_hmodule(fixtures::mod2_c2())), std::invalid_argument);
}

TEST_CASE("hom module: action, invariants, identity map") {
    auto f1 = fixtures::rational_c2();
    HModule triv = trivial_hmodule(f1);
    HModule sign = sign_module_c2(f1);

    HModule hom_tt = hom_hmodule(triv, triv);
    CHECK(validate_hmodule(hom_tt).empty());
    CHECK(invariants(hom_tt).cols() == 1);

    // Hom(sign, trivial) carries the sign action, no invariants
    HModule hom_st = hom_hmodule(sign, triv);
    CHECK(validate_hmodule(hom_st).empty());
    CHECK(hom_st.action[1].at(0, 0) == Scalar::of(Q, -1));
    CHECK(invariants(hom_st).cols() == 0);

    // identity is always invariant in Hom(V, V)
    for (auto h : {fixtures::rational_c2(), fixtures::sweedler_q()}) {
        HModule v = regular_hmodule(h);
        HModule hom_vv = hom_hmodule(v, v);
        Vec id_coords = hom_coords_of_map(Matrix::identity(h->field, v.dim));
        Matrix inv = invariants(hom_vv);
        CHECK(in_column_span(inv, Matrix::column(id_coords)));
    }
}

TEST_CASE("hom module invariants coincide with the H-linearity solver") {
    auto h = fixtures::sweedler_q();
    HModule reg = regular_hmodule(h);
    HModule triv = trivial_hmodule(h);
    for (const auto& [v, w] : {std::pair{reg, triv}, {triv, reg}, {reg, reg}, {triv, triv}}) {
        Matrix via_inv = invariants(hom_hmodule(v, w));
        Matrix via_solver = h_linear_maps(v, w);
        CHECK(same_column_span(via_inv, via_solver));
    }
}

TEST_CASE("comodule <-> dual module dictionary") {
    auto f1 = fixtures::rational_c2();
    auto f1_dual = dual_hopf(*f1);

    // trivial comodule: h* acts by h*(1)
    HModule dual_triv = comodule_to_dual_module(trivial_hcomodule(f1), f1_dual);
    CHECK(validate_hmodule(dual_triv).empty());
    for (int i = 0; i < 2; ++i) CHECK(dual_triv.action[i].at(0, 0) == f1->unit[i]);

    // degree-g line: e_g* acts as identity on the line, e_e* as zero
    HModule dual_g = comodule_to_dual_module(grouplike_line(f1, 1), f1_dual);
    CHECK(validate_hmodule(dual_g).empty());
    CHECK(dual_g.action[1].at(0, 0) == Scalar::one(Q));
    CHECK(dual_g.action[0].at(0, 0).is_zero());

    // round trips are exact on structure matrices
    for (const auto& m : {trivial_hcomodule(f1, 2), grouplike_line(f1, 1)}) {
        HComodule back = dual_module_to_comodule(comodule_to_dual_module(m, f1_dual), f1);
        CHECK(back.coaction == m.coaction);
    }

    // coinvariants = invariants of the dual module, as subspaces
    for (const auto& m : {trivial_hcomodule(f1, 2), grouplike_line(f1, 1)}) {
        CHECK(same_column_span(coinvariants(m), invariants(comodule_to_dual_module(m, f1_dual))));
    }
}

TEST_CASE("locally finite part reports cyclic submodule dimensions") {
    auto f2 = fixtures::mod2_c2();
    auto lf = locally_finite_part(regular_hmodule(f2));
    CHECK(lf.cyclic_dims == std::vector<int>{2, 2});  // He = span{e, g}

    auto f1 = fixtures::rational_c2();
    CHECK(locally_finite_part(trivial_hmodule(f1)).cyclic_dims == std::vector<int>{1});
}
