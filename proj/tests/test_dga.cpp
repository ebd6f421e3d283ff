#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfib/examples.hpp"
#include "test_rng.hpp"

using namespace ncfib;

namespace {

FormElement random_form(TestRng& rng, const Calculus& calc, int degree) {
    return calc.from_coords(degree, rng.vec(calc.basis_dim(degree), true));
}

}  // namespace

TEST_CASE("S3 cocycle family") {
    S3Tables t = s3_tables();
    FiniteDimAlgebra alg = group_algebra(t.labels, t.table);

    SUBCASE("correct sign passes on all 36 pairs") {
        GroupCalculusData d = s3_data(&alg, t, Scalar(1));
        CHECK(cocycle_check(d).pass);
    }
    SUBCASE("flipped sign of omega(v) fails with a witness") {
        GroupCalculusData d = s3_data(&alg, t, Scalar(1));
        d.omega[t.v][0] = -d.omega[t.v][0];  // a = +sqrt(3) b instead of -sqrt(3) b
        CocycleReport r = cocycle_check(d);
        CHECK(!r.pass);
        CHECK(r.x >= 0);
        CHECK_THROWS_WITH_AS(group_calculus(d, true), doctest::Contains("cocycle"), Error);
    }
    SUBCASE("b = 1/2 is rejected as disconnected") {
        CHECK_THROWS_WITH_AS(s3_calculus(Scalar(1, 2)), doctest::Contains("disconnected"), Error);
    }
}

TEST_CASE("S3 calculus structure") {
    CalculusBundle b = s3_calculus(Scalar(1));
    const Calculus& c = *b.calc;
    c.check_confluence();
    c.check_calculus_axioms();
    CHECK(c.basis_dim(0) == 6);
    CHECK(c.basis_dim(1) == 12);
    CHECK(c.basis_dim(2) == 6);   // f1^f2 only
    CHECK(c.basis_dim(3) == 0);   // antisymmetric in 2 generators
    CHECK(c.kernel_dim_d0() == 1);

    S3Tables t = s3_tables();
    // du = (omega(u) <| u) . u = -f2 . u
    FormElement du = c.d0(t.u);
    FormElement want = c.zero(1);
    add_term(want, Word{1}, t.u, Scalar(-1));
    CHECK(du == want);
}

TEST_CASE("Z2 calculus") {
    CalculusBundle b = z2_calculus();
    b.calc->check_confluence();
    b.calc->check_calculus_axioms();
    CHECK(b.calc->basis_dim(1) == 2);
    CHECK(b.calc->basis_dim(2) == 0);  // f^f = 0
}

TEST_CASE("M3 inner calculus structure") {
    CalculusBundle b = m3_calculus();
    const Calculus& c = *b.calc;
    c.check_confluence();
    c.check_calculus_axioms();
    CHECK(c.monomials(1).size() == 3);
    CHECK(c.monomials(2).size() == 5);  // ss st su tt tu
    CHECK(c.monomials(3).size() == 7);
    CHECK(c.monomials(4).size() == 9);
    CHECK(c.basis_dim(2) == 45);
    // ker d = commutant of {E12, E21, E33} = {diag(c, c, d)}
    CHECK(c.kernel_dim_d0() == 2);

    // u^u rewrites to s^t
    const auto& n = c.normalize(Word{2, 2});
    REQUIRE(n.size() == 1);
    CHECK(n.at(Word{0, 1}) == Scalar(1));

    // d(E11) = theta E11 - E11 theta = t . E21 - s . E12
    FormElement d11 = c.d0(matrix_unit_index(3, 0, 0));
    FormElement want = c.zero(1);
    add_term(want, Word{1}, matrix_unit_index(3, 1, 0), Scalar(1));
    add_term(want, Word{0}, matrix_unit_index(3, 0, 1), Scalar(-1));
    CHECK(d11 == want);
}

TEST_CASE("M2 inner calculus structure") {
    CalculusBundle b = m2_calculus();
    b.calc->check_confluence();
    b.calc->check_calculus_axioms();
    CHECK(b.calc->monomials(2).size() == 3);  // ss st tt
    CHECK(b.calc->kernel_dim_d0() == 1);
}

TEST_CASE("dropping the u^u rule breaks centrality of theta^theta") {
    auto alg = matrix_algebra(3);
    RewriteSystem rw;
    rw.rules[{1, 0}] = {{Scalar(1), Word{0, 1}}};
    rw.rules[{2, 0}] = {{Scalar(1), Word{0, 2}}};
    rw.rules[{2, 1}] = {{Scalar(1), Word{1, 2}}};
    auto uv = [&](int i, int j) {
        Vec v(9);
        v[matrix_unit_index(3, i, j)] = Scalar(1);
        return v;
    };
    std::vector<std::pair<int, Vec>> theta{{0, uv(0, 1)}, {1, uv(1, 0)}, {2, uv(2, 2)}};
    std::vector<SparseVec> star{{{1, Scalar(-1)}}, {{0, Scalar(-1)}}, {{2, Scalar(-1)}}};
    CHECK_THROWS_WITH_AS(inner_calculus(&alg, {"s", "t", "u"}, theta, rw, star),
                         doctest::Contains("central"), Error);
}

TEST_CASE("graded Leibniz and d^2 on random forms") {
    TestRng rng(31);
    for (const CalculusBundle& b : {s3_calculus(Scalar(1)), m3_calculus(), m2_calculus()}) {
        const Calculus& c = *b.calc;
        for (int trial = 0; trial < 5; ++trial) {
            FormElement a0 = random_form(rng, c, 0), b0 = random_form(rng, c, 0);
            FormElement x1 = random_form(rng, c, 1), y1 = random_form(rng, c, 1);
            // degree 0 x degree 0
            CHECK(d_form(wedge(a0, b0)) == wedge(d_form(a0), b0) + wedge(a0, d_form(b0)));
            // degree 1 x degree 1: d(x^y) = dx^y - x^dy
            CHECK(d_form(wedge(x1, y1)) == wedge(d_form(x1), y1) - wedge(x1, d_form(y1)));
            // degree 0 x degree 1 and 1 x 0
            CHECK(d_form(wedge(a0, x1)) == wedge(d_form(a0), x1) + wedge(a0, d_form(x1)));
            CHECK(d_form(wedge(x1, a0)) == wedge(d_form(x1), a0) - wedge(x1, d_form(a0)));
            // d^2 = 0
            CHECK(d_form(d_form(a0)).is_zero());
            CHECK(d_form(d_form(x1)).is_zero());
        }
    }
}

TEST_CASE("wedge is associative on random forms") {
    TestRng rng(37);
    for (const CalculusBundle& b : {s3_calculus(Scalar(1)), m3_calculus()}) {
        const Calculus& c = *b.calc;
        for (int trial = 0; trial < 5; ++trial) {
            FormElement a0 = random_form(rng, c, 0);
            FormElement x1 = random_form(rng, c, 1), y1 = random_form(rng, c, 1);
            CHECK(wedge(wedge(a0, x1), y1) == wedge(a0, wedge(x1, y1)));
            CHECK(wedge(wedge(x1, a0), y1) == wedge(x1, wedge(a0, y1)));
        }
    }
}

TEST_CASE("star intertwines d on degree 0") {
    for (const CalculusBundle& b : {s3_calculus(Scalar(1)), m3_calculus(), m2_calculus()}) {
        const Calculus& c = *b.calc;
        const FiniteDimAlgebra& alg = c.algebra();
        for (int i = 0; i < alg.dim; ++i) {
            FormElement lhs = star_form(c.d0(i));
            FormElement rhs = c.zero(1);
            for (int k = 0; k < alg.dim; ++k) rhs = rhs + c.d0(k) * alg.star[i][k];
            CHECK(lhs == rhs);  // (da)^* = d(a^*)
        }
    }
}

TEST_CASE("coords round trip") {
    CalculusBundle b = m3_calculus();
    TestRng rng(41);
    for (int n = 0; n <= 3; ++n) {
        Vec v = rng.vec(b.calc->basis_dim(n));
        CHECK(b.calc->coords_of(b.calc->from_coords(n, v)) == v);
    }
}
