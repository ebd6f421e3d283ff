#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfib/algebra.hpp"
#include "ncfib/groups.hpp"
#include "test_rng.hpp"

using namespace ncfib;

TEST_CASE("Z2 group algebra") {
    FiniteDimAlgebra z2 = group_algebra({"e", "u"}, {{0, 1}, {1, 0}});
    CHECK(z2.dim == 2);
    Vec u{Scalar(0), Scalar(1)};
    CHECK(z2.multiply(u, u) == z2.unit);
}

TEST_CASE("S3 group algebra") {
    S3Tables s3 = s3_tables();
    FiniteDimAlgebra a = group_algebra(s3.labels, s3.table);
    CHECK(a.dim == 6);
    // u*v = uv but v*u = vu, and they differ
    CHECK(s3.table[s3.u][s3.v] == s3.uv);
    CHECK(s3.table[s3.v][s3.u] == s3.vu);
    CHECK(s3.uv != s3.vu);
    // star(uv) = (uv)^{-1} = v^{-1} u^{-1}, oracle by table inversion
    std::vector<int> inv = group_inverses(s3.table);
    CHECK(a.star[s3.uv][s3.table[inv[s3.v]][inv[s3.u]]] == Scalar(1));
}

TEST_CASE("non-group table rejected with axiom name") {
    // 2x2 table with no identity
    CHECK_THROWS_WITH_AS(group_algebra({"a", "b"}, {{1, 1}, {1, 1}}), doctest::Contains("identity"),
                         Error);
    // broken associativity / latin square violation via out-of-range
    CHECK_THROWS_AS(group_algebra({"a", "b"}, {{0, 1}, {1, 2}}), Error);
}

TEST_CASE("matrix algebra units") {
    FiniteDimAlgebra m2 = matrix_algebra(2);
    Vec e12 = to_dense({{matrix_unit_index(2, 0, 1), Scalar(1)}}, 4);
    Vec e21 = to_dense({{matrix_unit_index(2, 1, 0), Scalar(1)}}, 4);
    Vec e11 = to_dense({{matrix_unit_index(2, 0, 0), Scalar(1)}}, 4);
    CHECK(m2.multiply(e12, e21) == e11);

    FiniteDimAlgebra m3 = matrix_algebra(3);
    Vec f12 = to_dense({{matrix_unit_index(3, 0, 1), Scalar(1)}}, 9);
    CHECK(is_zero(m3.multiply(f12, f12)));
    // unit = sum E_ii is a two-sided identity on all 9 basis elements
    for (int i = 0; i < 9; ++i) {
        Vec b(9);
        b[i] = Scalar(1);
        CHECK(m3.multiply(m3.unit, b) == b);
        CHECK(m3.multiply(b, m3.unit) == b);
    }
}

TEST_CASE("alg_mul examples") {
    S3Tables s3 = s3_tables();
    FiniteDimAlgebra a = group_algebra(s3.labels, s3.table);
    AlgebraElement one{&a, a.unit};
    Vec u(6);
    u[s3.u] = Scalar(1);
    AlgebraElement eu{&a, a.unit + u};  // e + u
    AlgebraElement emu{&a, a.unit - u}; // e - u
    CHECK(is_zero(alg_mul(eu, emu).coords));
    CHECK(alg_mul(eu, one).coords == eu.coords);

    FiniteDimAlgebra m3 = matrix_algebra(3);
    Vec x(9);
    x[matrix_unit_index(3, 0, 1)] = Scalar(1);
    x[matrix_unit_index(3, 1, 0)] = Scalar(1);
    AlgebraElement el{&m3, x};
    Vec expect(9);
    expect[matrix_unit_index(3, 0, 0)] = Scalar(1);
    expect[matrix_unit_index(3, 1, 1)] = Scalar(1);
    CHECK(alg_mul(el, el).coords == expect);

    FiniteDimAlgebra z2 = group_algebra({"e", "u"}, {{0, 1}, {1, 0}});
    AlgebraElement other{&z2, z2.unit};
    CHECK_THROWS_AS(alg_mul(eu, other), Error);
}

TEST_CASE("star properties on random pairs") {
    FiniteDimAlgebra m3 = matrix_algebra(3);
    TestRng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        Vec a = rng.vec(9), b = rng.vec(9);
        CHECK(m3.star_of(m3.star_of(a)) == a);
        CHECK(m3.star_of(m3.multiply(a, b)) == m3.multiply(m3.star_of(b), m3.star_of(a)));
    }
}
