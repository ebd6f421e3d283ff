#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ncfib/examples.hpp"
#include "ncfib/fibration.hpp"

using namespace ncfib;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("group example end to end") {
    ExampleSpec spec;
    spec.name = "s3_over_z2";
    Report r = run_example(spec);

    CHECK(r.converged_dims == std::vector<int>{1, 2, 1, 0});
    CHECK(r.direct_dims == r.converged_dims);
    CHECK(r.stable_page == 2);
    CHECK(r.fibration_pass);
    CHECK(r.n_dims == std::vector<int>{6, 6, 0, 0});
    CHECK(r.fibre_cohomology_dims == std::vector<int>{2, 2, 0, 0});
    // four one-dimensional cells survive from page 2 on
    CHECK(r.pages[1].r == 2);
    CHECK(r.pages[1].dims[0][0] == 1);
    CHECK(r.pages[1].dims[0][1] == 1);
    CHECK(r.pages[1].dims[1][0] == 1);
    CHECK(r.pages[1].dims[1][1] == 1);
    CHECK(r.sheaf_cohomology_dims[0][0] == 1);
    CHECK(r.sheaf_cohomology_dims[1][0] == 1);
    CHECK(r.sheaf_cohomology_dims[0][1] == 1);
    CHECK(r.sheaf_cohomology_dims[1][1] == 1);
    CHECK(r.ksgns.metric_preserved);
    CHECK(r.ksgns.algebra_map);
    CHECK(r.ksgns.completely_positive);
    CHECK(r.ksgns.cochain_map);
}

TEST_CASE("group example intermediate data") {
    ConnectionBundle cb = s3_connection(Scalar(1));
    Fibration f(cb.conn.get(), 3);
    S3Tables t = s3_tables();

    // ker(d: N_0 -> N_1) is spanned by the classes of e and u.
    Subspace ker = kernel_basis(f.fibre_data().nd[0]);
    CHECK(ker.dim() == 2);
    Vec ve(6), vu(6);
    ve[t.e] = Scalar(1);
    vu[t.u] = Scalar(1);
    CHECK(ker.contains(ve));
    CHECK(ker.contains(vu));
    CHECK(rank(f.fibre_data().nd[0]) == 4);

    CHECK(kernel_basis(f.induced_connection(0)).dim() == 1);
    CHECK(kernel_basis(f.induced_connection(1)).dim() == 1);
}

TEST_CASE("matrix example end to end") {
    ExampleSpec spec;
    spec.name = "m3_over_m2";
    Report r = run_example(spec);

    CHECK(r.fibration_pass);
    CHECK(r.fibre_cohomology_dims == std::vector<int>{4, 4, 0, 0});
    CHECK(r.stable_page == 2);
    CHECK(r.direct_dims == r.converged_dims);
    // In degrees unaffected by the degree-3 truncation the cohomology is
    // (1, 1, 0); the base differential on the coefficient spaces has rank 3
    // in both rows, so nothing survives at p = 1.
    CHECK(r.converged_dims[0] == 1);
    CHECK(r.converged_dims[1] == 1);
    CHECK(r.converged_dims[2] == 0);
    CHECK(r.sheaf_cohomology_dims[0][0] == 1);
    CHECK(r.sheaf_cohomology_dims[0][1] == 1);
    CHECK(r.sheaf_cohomology_dims[1][0] == 0);
    CHECK(r.sheaf_cohomology_dims[1][1] == 0);
    CHECK(r.ksgns.metric_preserved);
    CHECK(!r.ksgns.algebra_map);
    CHECK(r.ksgns.completely_positive);
    CHECK(r.ksgns.cochain_map);
}

TEST_CASE("matrix example intermediate data") {
    ConnectionBundle cb = matrix_connection();
    Fibration f(cb.conn.get(), 3);
    for (int q = 0; q < 2; ++q) {
        CHECK(f.fibre_cohomology(q).dim() == 4);
        CHECK(kernel_basis(f.induced_connection(q)).dim() == 1);
        CHECK(rank(f.induced_connection(q)) == 3);
    }
}

TEST_CASE("invalid example requests are rejected") {
    ExampleSpec spec;
    spec.name = "s3_over_z2";
    spec.b = Scalar(1, 2);
    CHECK_THROWS_WITH_AS(run_example(spec), doctest::Contains("disconnected"), Error);

    spec.b = Scalar(1);
    spec.name = "nonsense";
    CHECK_THROWS_WITH_AS(run_example(spec), doctest::Contains("unknown example"), Error);
}

TEST_CASE("cocycle family derivation") {
    CocycleFamily fam = solve_s3_cocycle_family();
    const Scalar r3 = Scalar::sqrt_of(3);

    CHECK(fam.omega_u[0].is_zero());
    CHECK(fam.omega_u[1].c == std::vector<Scalar>{Scalar(1)});
    CHECK(fam.omega_v[0].c == std::vector<Scalar>{Scalar(0), -r3});
    CHECK(fam.omega_v[1].c == std::vector<Scalar>{Scalar(0), Scalar(1)});

    for (const auto* res : {&fam.residual_uu, &fam.residual_vv, &fam.residual_braid})
        for (const Poly& p : *res) CHECK(p.is_zero());

    // Flipping the sign of the first omega(v) entry leaves a linear residual.
    CHECK(!fam.residual_vv_wrong_sign[0].is_zero());
    CHECK(fam.residual_vv_wrong_sign[1].c == std::vector<Scalar>{Scalar(0), Scalar(3)});
}

TEST_CASE("report serialization round trip and schema errors") {
    ExampleSpec spec;
    Report r = run_example(spec);
    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK(report_to_text(r, 1).find("page r=2") == std::string::npos);
    CHECK(report_to_text(r).find("page r=2") != std::string::npos);

    CHECK_THROWS_WITH_AS(report_from_json("{nope"), doctest::Contains("invalid JSON"), Error);
    CHECK_THROWS_WITH_AS(report_from_json("{\"schema_version\": 99}"),
                         doctest::Contains("unsupported schema_version"), Error);
    CHECK_THROWS_WITH_AS(report_from_json("{\"schema_version\": 1}"),
                         doctest::Contains("schema violation"), Error);
}

TEST_CASE("golden fixtures") {
    ExampleSpec s3;
    s3.name = "s3_over_z2";
    CHECK(report_to_json(run_example(s3)) == slurp(std::string(NCFIB_FIXTURE_DIR) + "/s3_over_z2.json"));
    ExampleSpec m;
    m.name = "m3_over_m2";
    CHECK(report_to_json(run_example(m)) == slurp(std::string(NCFIB_FIXTURE_DIR) + "/m3_over_m2.json"));
}
