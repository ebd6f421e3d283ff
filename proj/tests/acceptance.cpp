// End-to-end acceptance suite: one line per criterion, exact equality
// throughout. Exits nonzero if any criterion fails.
#include <iostream>
#include <sstream>
#include <vector>

#include "ncfib/examples.hpp"
#include "ncfib/fibration.hpp"
#include "ncfib/spectral.hpp"
#include "random_complex.hpp"

using namespace ncfib;

namespace {

int failures = 0;

void report_line(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string dims_str(const std::vector<int>& v, size_t count) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < count && i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
    return out.str();
}

void criterion1() {
    Report r = run_example({"s3_over_z2", Scalar(1), 3});
    bool ok = r.converged_dims.size() >= 3 && r.converged_dims[0] == 1 &&
              r.converged_dims[1] == 2 && r.converged_dims[2] == 1 && r.stable_page == 2;
    // all four surviving sheaf-cohomology cells are one-dimensional
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) ok &= r.sheaf_cohomology_dims[p][q] == 1;
    report_line(1, "group example end-to-end", ok,
                "converged " + dims_str(r.converged_dims, 3) + ", stable page " +
                    std::to_string(r.stable_page));
}

void criterion2() {
    ConnectionBundle cb = matrix_connection();
    Fibration f(cb.conn.get(), 3);
    Report r = run_example({"m3_over_m2", Scalar(1), 3});

    bool intermediates = true;
    for (int q = 0; q < 2; ++q) {
        intermediates &= f.fibre_cohomology(q).dim() == 4;
        intermediates &= kernel_basis(f.induced_connection(q)).dim() == 1;
        intermediates &= rank(f.induced_connection(q)) == 3;
    }
    int h1_cells = f.sheaf_cohomology(1, 0).dim();
    bool h1_expected = f.sheaf_cohomology(1, 0).dim() == 5 && f.sheaf_cohomology(1, 1).dim() == 5;
    bool converged_expected = r.converged_dims.size() >= 3 && r.converged_dims[0] == 1 &&
                              r.converged_dims[1] == 6 && r.converged_dims[2] == 5;
    bool ok = intermediates && h1_expected && converged_expected;
    std::ostringstream detail;
    detail << "fibre H dims 4/4 " << (intermediates ? "ok" : "MISMATCH")
           << "; expected converged (1, 6, 5) but computed "
           << dims_str(r.converged_dims, 3) << "; expected degree-one coefficient cohomology 5 "
           << "but computed " << h1_cells
           << " (the base differential on the coefficient spaces has rank 5 with kernel "
           << kernel_basis(f.sheaf_d(1, 0)).dim()
           << " equal to the incoming image, so the quotient vanishes)";
    report_line(2, "matrix example end-to-end", ok, detail.str());
}

void criterion3() {
    bool ok = true;
    for (const char* name : {"s3_over_z2", "m3_over_m2"}) {
        Report r = run_example({name, Scalar(1), 3});
        ok &= r.converged_dims == r.direct_dims;  // cross-checked internally too
    }
    TestRng rng(20260824);
    int trials = 100;
    for (int trial = 0; trial < trials && ok; ++trial) {
        FilteredComplex fc = random_filtered_complex(rng);
        std::vector<int> conv = converged_cohomology(fc);
        std::vector<CohomologySpace> direct = direct_cohomology(fc.dims, fc.d);
        for (size_t k = 0; k < conv.size(); ++k) ok &= conv[k] == direct[k].dim();
    }
    report_line(3, "limiting diagonal sums equal direct cohomology", ok,
                "both examples plus " + std::to_string(trials) + " random filtered complexes");
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (ConnectionBundle cb : {s3_connection(Scalar(1)), matrix_connection()}) {
        cb.conn->check_connection_axioms();
        for (int n = 0; n <= 2; ++n) {
            ok &= cb.conn->curvature_composition_check(n).pass;
            ok &= cb.conn->nabla_sigma_identity_check(n).pass;
        }
        ok &= cb.conn->extendability_check(3).pass;
    }
    // deliberately non-flat right-module perturbation of the group connection
    ConnectionBundle cb = s3_connection(Scalar(1));
    S3Tables t = s3_tables();
    std::vector<Vec> nabla0 = cb.conn->nabla0();
    for (int x = 0; x < 6; ++x)
        nabla0[x] = nabla0[x] + cb.conn->C(1).push_elem(
                                    cb.algA->unit, cb.calcA->basis_form(Word{0}, t.table[t.u][x]));
    BimoduleConnection pert(cb.bim.get(), cb.calcA.get(), cb.calcB.get(), nabla0,
                            cb.conn->sigma_gen());
    ok &= !pert.is_flat();
    for (int n = 0; n <= 2; ++n) ok &= pert.curvature_composition_check(n).pass;
    report_line(4, "connection identity suite (including a non-flat perturbation)", ok);
}

void criterion5() {
    bool ok = true;
    for (ConnectionBundle cb : {s3_connection(Scalar(1)), matrix_connection()}) {
        FilteredComplex fc = build_filtered_complex(*cb.conn, 3);
        try {
            fc.validate();  // all four filtration axioms at every (m, n)
        } catch (const Error&) {
            ok = false;
        }
    }
    report_line(5, "filtration axioms for both examples up to degree 3", ok);
}

void criterion6() {
    bool ok = true;
    for (ConnectionBundle cb : {s3_connection(Scalar(1)), matrix_connection()}) {
        FibrationVerdict v = is_fibration(*cb.conn, 3);
        ok &= v.pass;
        for (const auto& c : v.cells) ok &= c.iso;
    }
    ConnectionBundle cb = matrix_connection();
    std::vector<std::vector<Vec>> sg = cb.conn->sigma_gen();
    sg[1] = sg[0];
    BimoduleConnection bad(cb.bim.get(), cb.calcA.get(), cb.calcB.get(), cb.conn->nabla0(), sg);
    FibrationVerdict v = is_fibration(bad, 3);
    ok &= !v.pass && !v.witness.empty();
    report_line(6, "comparison map is an isomorphism; corrupted braiding is caught", ok,
                "mutant witness: " + v.witness);
}

void criterion7() {
    ConnectionBundle g = s3_connection(Scalar(1));
    InnerProduct gip = s3_inner_product(g);
    Vec ge0(6);
    ge0[s3_tables().e] = Scalar(1);
    Matrix gphi = ksgns_map(gip, ge0);

    ConnectionBundle m = matrix_connection();
    InnerProduct mip = matrix_inner_product(m);
    Vec me0 = matrix_e0();
    Matrix mphi = ksgns_map(mip, me0);

    bool ok = metric_preservation_check(*g.conn, gip).pass &&
              metric_preservation_check(*m.conn, mip).pass;
    ok &= is_algebra_map(*g.algB, *g.algA, gphi).pass;
    ok &= !is_algebra_map(*m.algB, *m.algA, mphi).pass;

    Vec unit_image = mphi.apply(m.algB->unit);
    Vec four_id(9);
    for (int i = 0; i < 3; ++i) four_id[matrix_unit_index(3, i, i)] = Scalar(4);
    bool unit_expected = unit_image == four_id;
    ok &= unit_expected;

    FiniteDimAlgebra m2 = matrix_algebra(2);
    Matrix transpose_map(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            transpose_map.at(matrix_unit_index(2, j, i), matrix_unit_index(2, i, j)) = Scalar(1);
    ok &= completely_positive_check(*m.algB, *m.algA, mphi).pass;
    ok &= !completely_positive_check(m2, m2, transpose_map).pass;
    ok &= cochain_map_check(*m.conn, mip, me0, 3).pass;

    std::string unit_str = "diag(";
    for (int i = 0; i < 3; ++i)
        unit_str += unit_image[matrix_unit_index(3, i, i)].str() + (i < 2 ? ", " : ")");
    report_line(7, "positive-map suite", ok,
                "expected phi(unit) = 4 * identity but computed " + unit_str +
                    " = conjugate-transpose of the cyclic vector times itself; all other "
                    "checks pass");
}

void criterion8() {
    bool ok = true;
    try {
        CocycleFamily fam = solve_s3_cocycle_family();
        for (const auto* res : {&fam.residual_uu, &fam.residual_vv, &fam.residual_braid})
            for (const Poly& p : *res) ok &= p.is_zero();
        ok &= !fam.residual_vv_wrong_sign[0].is_zero();
    } catch (const Error&) {
        ok = false;
    }
    bool rejected = false;
    try {
        s3_calculus(Scalar(1, 2));
    } catch (const Error&) {
        rejected = true;
    }
    ok &= rejected;
    report_line(8, "cocycle family residuals vanish; b = 1/2 rejected", ok);
}

void criterion9() {
    bool ok = true;
    for (CalculusBundle b : {s3_calculus(Scalar(1)), m3_calculus()}) {
        const Calculus& c = *b.calc;
        try {
            c.check_confluence();
            c.check_calculus_axioms();
        } catch (const Error&) {
            ok = false;
            continue;
        }
        // graded Leibniz and d^2 = 0 up to degree 3, wedge associativity
        for (int p = 1; p <= 2; ++p)
            for (const auto& [w, i] : c.enumerate_basis(p)) {
                FormElement x = c.basis_form(w, i);
                ok &= d_form(d_form(x)).is_zero();
                for (const auto& [w2, j] : c.enumerate_basis(3 - p)) {
                    FormElement y = c.basis_form(w2, j);
                    FormElement lhs = d_form(wedge(x, y));
                    FormElement rhs = wedge(d_form(x), y) +
                                      wedge(x, d_form(y)) * Scalar(p % 2 ? -1 : 1);
                    ok &= lhs == rhs;
                }
            }
        const auto b1 = c.enumerate_basis(1);
        for (size_t i = 0; i < b1.size(); i += 3)
            for (size_t j = 0; j < b1.size(); j += 3)
                for (size_t k = 0; k < b1.size(); k += 3) {
                    FormElement x = c.basis_form(b1[i].first, b1[i].second);
                    FormElement y = c.basis_form(b1[j].first, b1[j].second);
                    FormElement z = c.basis_form(b1[k].first, b1[k].second);
                    ok &= wedge(wedge(x, y), z) == wedge(x, wedge(y, z));
                }
    }
    report_line(9, "calculus axiom suite on both examples up to degree 3", ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
