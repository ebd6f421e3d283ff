#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncfib/examples.hpp"
#include "test_rng.hpp"

using namespace ncfib;

TEST_CASE("group connection over the Z2 subgroup") {
    ConnectionBundle cb = s3_connection(Scalar(1));
    const BimoduleConnection& conn = *cb.conn;
    conn.check_connection_axioms();
    CHECK(conn.extendability_check(3).pass);
    for (int n = 0; n <= 2; ++n) {
        CHECK(conn.nabla_sigma_identity_check(n).pass);
        CHECK(conn.curvature_composition_check(n).pass);
    }
    CHECK(conn.is_flat());
    CHECK(conn.curvature_left_module_map());
    CHECK(conn.C(0).dim() == 6);
    CHECK(conn.C(1).dim() == 12);
    CHECK(conn.C(2).dim() == 6);

    S3Tables t = s3_tables();
    // nabla(u) = 1 tensor du = 1 tensor (-f2.u) = u tensor f2
    Vec want(12);
    want[conn.C(1).index(1, t.u)] = Scalar(1);
    CHECK(conn.nabla0()[t.u] == want);
}

TEST_CASE("restriction data for the Z2 subgroup") {
    S3Tables t = s3_tables();
    FiniteDimAlgebra algA = group_algebra(t.labels, t.table);
    GroupCalculusData d = s3_data(&algA, t, Scalar(1));
    FiniteDimAlgebra algB = group_algebra({"e", "u"}, {{0, 1}, {1, 0}});
    GroupConnectionData g = group_connection_data(&algB, d, {t.e, t.u});
    REQUIRE(g.w.dim() == 1);
    CHECK(g.w.basis[0] == Vec{Scalar(0), Scalar(1)});
    REQUIRE(g.w_perp.dim() == 1);
    CHECK(g.w_perp.basis[0] == Vec{Scalar(1), Scalar(0)});
    CHECK(g.dataB.omega[1] == Vec{Scalar(1)});
    CHECK(cocycle_check(g.dataB).pass);
}

TEST_CASE("matrix connection") {
    ConnectionBundle cb = matrix_connection();
    const BimoduleConnection& conn = *cb.conn;
    conn.check_connection_axioms();
    CHECK(conn.extendability_check(3).pass);
    for (int n = 0; n <= 2; ++n) {
        CHECK(conn.nabla_sigma_identity_check(n).pass);
        CHECK(conn.curvature_composition_check(n).pass);
    }
    CHECK(conn.is_flat());
    CHECK(conn.curvature_left_module_map());
    CHECK(conn.C(0).dim() == 6);
    CHECK(conn.C(1).dim() == 18);

    // sigma(s' tensor E_ij) = E_ij tensor s and likewise for t'
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < 6; ++i) {
            Vec want(18);
            want[conn.C(1).index(g, i)] = Scalar(1);  // monomials(1) = {s, t, u}
            CHECK(conn.sigma_gen()[g][i] == want);
        }

    // nabla(E11) = E21 tensor t - E12 tensor s
    Vec want(18);
    want[conn.C(1).index(1, 3)] = Scalar(1);
    want[conn.C(1).index(0, 1)] = Scalar(-1);
    CHECK(conn.nabla0()[0] == want);
}

TEST_CASE("non-flat perturbation still satisfies nabla^2 = R ^ id") {
    ConnectionBundle cb = s3_connection(Scalar(1));
    const CochainSpace& c1 = cb.conn->C(1);
    S3Tables t = s3_tables();
    // nabla'(x) = nabla(x) + 1 tensor (f1.u).x, a right-module perturbation
    // with curvature 1 tensor f1^f2.ux
    std::vector<Vec> nabla0 = cb.conn->nabla0();
    for (int x = 0; x < 6; ++x)
        nabla0[x] = nabla0[x] +
                    c1.push_elem(cb.algA->unit, cb.calcA->basis_form(Word{0}, t.table[t.u][x]));
    BimoduleConnection pert(cb.bim.get(), cb.calcA.get(), cb.calcB.get(), nabla0,
                            cb.conn->sigma_gen());
    pert.check_connection_axioms();
    CHECK(!pert.is_flat());
    CHECK(!pert.curvature().is_zero());
    for (int n = 0; n <= 2; ++n) CHECK(pert.curvature_composition_check(n).pass);
}

TEST_CASE("corrupted sigma fails the connection compatibility checks") {
    ConnectionBundle cb = matrix_connection();
    std::vector<std::vector<Vec>> sg = cb.conn->sigma_gen();
    for (Vec& v : sg[0])
        for (Scalar& c : v) c *= Scalar(2);
    BimoduleConnection bad(cb.bim.get(), cb.calcA.get(), cb.calcB.get(), cb.conn->nabla0(), sg);
    CHECK_THROWS_WITH_AS(bad.check_connection_axioms(), doctest::Contains("Leibniz"), Error);
}

TEST_CASE("bimodule validation rejects a broken action table") {
    ConnectionBundle cb = matrix_connection();
    Bimodule broken = *cb.bim;
    broken.right_action[0][0] = {{3, Scalar(1)}};  // E11 . E11 = E21: not associative
    CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("cochain push respects the tensor relation on random elements") {
    TestRng rng(53);
    for (ConnectionBundle cb : {s3_connection(Scalar(1)), matrix_connection()}) {
        const CochainSpace& c1 = cb.conn->C(1);
        const FiniteDimAlgebra& A = *cb.algA;
        for (int trial = 0; trial < 10; ++trial) {
            Vec e = rng.vec(cb.bim->dim), a = rng.vec(A.dim);
            FormElement eta = cb.calcA->from_coords(1, rng.vec(cb.calcA->basis_dim(1)));
            Vec lhs = c1.push_elem(cb.bim->act_right(e, a), eta);
            Vec rhs = c1.push_elem(e, left_mul(a, eta));
            CHECK(lhs == rhs);
        }
    }
}
