#include <random>

#include "doctest.h"
#include "hopfcat/exactlin.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);

Matrix random_matrix(FieldSpec f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = f.kind == FieldSpec::Kind::Rationals ? Scalar::of(f, num(rng), den(rng))
                                                              : Scalar::of(f, num(rng));
    return m;
}

}  // namespace

TEST_CASE("kernel_basis on the named small cases") {
    // 1x1 zero map over Q: the whole line is the kernel
    Matrix z(Q, 1, 1);
    Matrix k = kernel_basis(z);
    CHECK(k.cols() == 1);
    CHECK(k.at(0, 0) == Scalar::one(Q));

    // injective map: empty kernel basis
    CHECK(kernel_basis(Matrix::identity(F2, 2)).cols() == 0);

    // [[1,1],[1,1]] over Q: kernel spanned by (1,-1)
    Matrix a = Matrix::of(Q, {{1, 1}, {1, 1}});
    Matrix kb = kernel_basis(a);
    REQUIRE(kb.cols() == 1);
    CHECK((a * kb).is_zero());
    CHECK(kb.at(0, 0) * Scalar::of(Q, -1) == kb.at(1, 0));
}

TEST_CASE("solve handles identity, scalar division and unreachable targets") {
    Matrix id = Matrix::identity(Q, 3);
    Matrix b = Matrix::of(Q, {{2}, {-1}, {5}});
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto half = solve(Matrix::of(Q, {{2}}), Matrix::of(Q, {{1}}));
    REQUIRE(half.has_value());
    CHECK(half->at(0, 0) == Scalar::of(Q, 1, 2));

    CHECK_FALSE(solve(Matrix::of(Q, {{0}}), Matrix::of(Q, {{1}})).has_value());

    CHECK_THROWS_AS(solve(Matrix(Q, 2, 2), Matrix(Q, 3, 1)), std::invalid_argument);
}

TEST_CASE("subquotient dimensions") {
    // empty/empty
    Matrix none(Q, 0, 0);
    CHECK(subquotient(none, none).dim == 0);

    // full 2-dim space, no boundaries
    CHECK(subquotient(Matrix::identity(Q, 2), Matrix(Q, 2, 0)).dim == 2);

    // over F2: cycles = span{(1,0),(0,1)}, boundaries = span{(1,1)}
    Matrix z = Matrix::identity(F2, 2);
    Matrix b = Matrix::of(F2, {{1}, {1}});
    auto sq = subquotient(z, b);
    CHECK(sq.dim == 1);

    // boundaries outside the cycle span signal a broken complex
    Matrix zz = Matrix::of(Q, {{1}, {0}});
    Matrix bb = Matrix::of(Q, {{0}, {1}});
    CHECK_THROWS_AS(subquotient(zz, bb), std::domain_error);
}

TEST_CASE("rank-nullity and solve(A, A x) round trips on random matrices") {
    std::mt19937 rng(20240517);
    for (FieldSpec f : {Q, F2}) {
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            Matrix a = random_matrix(f, rows, cols, rng);
            Matrix k = kernel_basis(a);
            CHECK(rank(a) + k.cols() == a.cols());
            CHECK((a * k).is_zero());

            Matrix x = random_matrix(f, cols, 1, rng);
            Matrix b = a * x;
            auto sol = solve(a, b);
            REQUIRE(sol.has_value());
            CHECK(a * *sol == b);
        }
    }
}

TEST_CASE("subquotient dim is stable under column permutations") {
    std::mt19937 rng(7);
    Matrix z = random_matrix(Q, 5, 4, rng);
    Matrix inside = random_matrix(Q, 4, 2, rng);
    Matrix b = z * inside;  // boundaries inside span(z) by construction
    int dim = subquotient(z, b).dim;

    Matrix z_perm = z.cols_subset({3, 1, 0, 2});
    Matrix b_perm = b.cols_subset({1, 0});
    CHECK(subquotient(z_perm, b_perm).dim == dim);
}

TEST_CASE("quotient_map projects onto exact complements") {
    Matrix b = Matrix::of(Q, {{1, 0}, {1, 0}, {0, 1}});
    auto qm = quotient_map(b, 3);
    CHECK(qm.dim == 1);
    // projection kills span(b) and is the identity on the section
    CHECK((qm.projection * b).is_zero());
    CHECK(qm.projection * qm.reps == Matrix::identity(Q, 1));
}

TEST_CASE("serial and OpenMP elimination paths agree bit for bit") {
    std::mt19937 rng(99);
    for (FieldSpec f : {Q, F2}) {
        for (int trial = 0; trial < 8; ++trial) {
            int rows = 20 + static_cast<int>(rng() % 40);
            int cols = 20 + static_cast<int>(rng() % 40);
            Matrix a = random_matrix(f, rows, cols, rng);
            RrefResult s = rref(a, Exec::Serial);
            RrefResult p = rref(a, Exec::Parallel);
            CHECK(s.r == p.r);
            CHECK(s.pivot_cols == p.pivot_cols);
            CHECK(kernel_basis(a, Exec::Serial) == kernel_basis(a, Exec::Parallel));
        }
    }
}

TEST_CASE("inverse and span predicates") {
    Matrix a = Matrix::of(Q, {{2, 1}, {1, 1}});
    Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(Q, 2));
    CHECK_THROWS_AS(inverse(Matrix::of(Q, {{1, 1}, {1, 1}})), std::domain_error);

    Matrix span = Matrix::of(Q, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(in_column_span(span, Matrix::of(Q, {{3}, {-2}, {0}})));
    CHECK_FALSE(in_column_span(span, Matrix::of(Q, {{0}, {0}, {1}})));
    CHECK(same_column_span(span, span.cols_subset({1, 0})));
}
