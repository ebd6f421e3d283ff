#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ncfib/examples.hpp"
#include "ncfib/spectral.hpp"
#include "random_complex.hpp"
#include "test_rng.hpp"

using namespace ncfib;

namespace {

void check_page_invariants(const FilteredComplex& fc, int max_r) {
    for (int r = 1; r <= max_r; ++r) {
        SpectralPage pg = page(fc, r);
        SpectralPage next = page(fc, r + 1);
        for (const auto& [pq, cell] : pg.cells) {
            auto [p, q] = pq;
            CHECK(p >= 0);
            CHECK(q >= 0);
            // d_r squares to zero whenever the composite stays in range.
            Matrix out = pg.d(p, q);
            Matrix out2 = pg.d(p + r, q - r + 1);
            if (out2.cols() == out.rows() && out2.rows() > 0) CHECK((out2 * out).is_zero());
            // The next page is the cohomology of this one.
            Matrix into = pg.d(p - r, q + r - 1);
            int expect = kernel_basis(out).dim() - (into.rows() == cell.dim() ? rank(into) : 0);
            CHECK(next.dim(p, q) == expect);
        }
    }
}

}  // namespace

TEST_CASE("group example spectral sequence") {
    ConnectionBundle cb = s3_connection(Scalar(1));
    Fibration f(cb.conn.get(), 3);
    const FilteredComplex& fc = f.complex();

    // First page agrees with the fibre-side computation of the quotients.
    SpectralPage e1 = page(fc, 1);
    for (int q = 0; q < 3; ++q) CHECK(e1.dim(0, q) == f.fibre_cohomology(q).dim());
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; p + q < 3; ++q) CHECK(e1.dim(p, q) == f.sheaf_space_dim(p, q));

    // Second page: exactly the four one-dimensional corner cells.
    SpectralPage e2 = page(fc, 2);
    for (const auto& [pq, cell] : e2.cells) {
        bool corner = pq.first <= 1 && pq.second <= 1;
        CHECK(cell.dim() == (corner ? 1 : 0));
    }

    check_page_invariants(fc, 4);

    StableResult st = stabilize(fc);
    CHECK(st.stable_page == 2);
    CHECK(converged_cohomology(fc) == std::vector<int>{1, 2, 1, 0});
}

TEST_CASE("matrix example spectral sequence") {
    ConnectionBundle cb = matrix_connection();
    Fibration f(cb.conn.get(), 3);
    const FilteredComplex& fc = f.complex();

    SpectralPage e1 = page(fc, 1);
    for (int q = 0; q < 3; ++q) CHECK(e1.dim(0, q) == f.fibre_cohomology(q).dim());
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; p + q < 3; ++q) CHECK(e1.dim(p, q) == f.sheaf_space_dim(p, q));
    CHECK(e1.dim(1, 0) == 8);
    CHECK(e1.dim(1, 1) == 8);
    CHECK(e1.dim(2, 0) == 12);

    // The page-1 differential out of (1,0) matches the sheaf-sequence map
    // of the induced connection: rank 5, so the (1,0) and (1,1) cells die.
    CHECK(rank(e1.d(1, 0)) == rank(f.sheaf_d(1, 0)));
    CHECK(rank(e1.d(1, 0)) == 5);
    SpectralPage e2 = page(fc, 2);
    CHECK(e2.dim(0, 0) == 1);
    CHECK(e2.dim(0, 1) == 1);
    CHECK(e2.dim(1, 0) == 0);
    CHECK(e2.dim(1, 1) == 0);
    CHECK(e2.dim(2, 0) == 0);

    check_page_invariants(fc, 4);

    StableResult st = stabilize(fc);
    CHECK(st.stable_page == 2);
    std::vector<int> dims = converged_cohomology(fc);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 1);
    CHECK(dims[2] == 0);
}

TEST_CASE("one-column filtration degenerates to the direct cohomology") {
    FilteredComplex fc;
    fc.dims = {2, 2};
    Matrix d(2, 2);
    d.at(0, 0) = Scalar(1);
    fc.d = {d};
    Subspace full0{2, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    Subspace zero{2, {}};
    fc.filt = {{full0, zero, zero}, {full0, zero, zero}};
    fc.validate();

    SpectralPage e1 = page(fc, 1);
    std::vector<CohomologySpace> h = direct_cohomology(fc.dims, fc.d);
    CHECK(e1.dim(0, 0) == h[0].dim());
    CHECK(e1.dim(0, 1) == h[1].dim());
    CHECK(e1.dim(1, 0) == 0);
    StableResult st = stabilize(fc);
    CHECK(st.stable_page == 1);
    CHECK(converged_cohomology(fc) == std::vector<int>{1, 1});
}

TEST_CASE("stabilize refuses an insufficient page budget") {
    ConnectionBundle cb = s3_connection(Scalar(1));
    FilteredComplex fc = build_filtered_complex(*cb.conn, 3);
    CHECK_THROWS_WITH_AS(stabilize(fc, 2), doctest::Contains("pages"), Error);
}

TEST_CASE("direct cohomology rejects a non-complex") {
    std::vector<int> dims = {1, 1, 1};
    Matrix one(1, 1);
    one.at(0, 0) = Scalar(1);
    CHECK_THROWS_WITH_AS(direct_cohomology(dims, {one, one}),
                         doctest::Contains("d compose d"), Error);
}

TEST_CASE("zero differential gives the whole space back") {
    std::vector<int> dims = {3, 2};
    std::vector<CohomologySpace> h = direct_cohomology(dims, {Matrix(2, 3)});
    CHECK(h[0].dim() == 3);
    CHECK(h[1].dim() == 2);
}

TEST_CASE("convergence on random filtered complexes") {
    TestRng rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        FilteredComplex fc = random_filtered_complex(rng);
        // converged_cohomology raises if the diagonal sums ever disagree
        // with the directly computed cohomology.
        std::vector<int> dims = converged_cohomology(fc);
        CHECK(int(dims.size()) == fc.max_degree() + 1);
        if (trial % 10 == 0) check_page_invariants(fc, fc.max_degree() + 2);
    }
}
