#ifndef NCFIB_KSGNS_HPP
#define NCFIB_KSGNS_HPP

#include "ncfib/connection.hpp"

namespace ncfib {

/// A-valued inner product <x bar, y> on a B-A bimodule. The scalar field is
/// real, so the pairing is plain bilinear; the star twists only live at the
/// algebra level.
struct InnerProduct {
    const Bimodule* bim = nullptr;
    std::vector<std::vector<Vec>> pairing;  // pairing[i][j] = <e_i bar, e_j> in A

    Vec pair(const Vec& x, const Vec& y) const;
    /// Right A-linearity, the middle-B twist <(b x) bar, y> = <x bar, b* y>,
    /// and <x bar, y>* = <y bar, x>, all on bases. Throws Error naming the
    /// violated axiom.
    void validate() const;
};

/// phi(b) = <e0 bar, b e0>, as a dim A x dim B matrix in algebra coordinates.
Matrix ksgns_map(const InnerProduct& ip, const Vec& e0);

/// d<e1 bar, e2> = <e1 bar, nabla(e2)_(1)> nabla(e2)_(2)
///               + nabla(e1)_(2)^* <nabla(e1)_(1) bar, e2> on all basis pairs.
CheckReport metric_preservation_check(const BimoduleConnection& conn, const InnerProduct& ip);

/// phi(1) = 1 and phi(b b') = phi(b) phi(b') on basis pairs.
CheckReport is_algebra_map(const FiniteDimAlgebra& algB, const FiniteDimAlgebra& algA,
                           const Matrix& phi);

/// Left-multiplication operator of a in the algebra's own coordinates. For
/// matrix and group algebras the basis is orthonormal for the trace form,
/// making this a faithful star representation.
Matrix left_regular_rep(const FiniteDimAlgebra& alg, const Vec& a);

struct PsdReport {
    bool psd = true;
    Vec witness;  // when not psd: v with v^T m v < 0
};

/// Exact positive semidefiniteness of a symmetric matrix by congruence
/// elimination (Schur complements with exact pivot signs). Throws on a
/// non-symmetric input.
PsdReport psd_check(const Matrix& m);

/// Complete positivity of phi : B -> A via positive semidefiniteness of the
/// block Gram matrix [rep_A(phi(b_i^* b_j))]_{ij} over the B basis — the
/// Choi criterion when B is a matrix algebra, the positive-definite-function
/// criterion when B is a group algebra.
CheckReport completely_positive_check(const FiniteDimAlgebra& algB,
                                      const FiniteDimAlgebra& algA, const Matrix& phi);

/// phi extended to forms: phi(xi) = (<,> tensor id)(e0 bar tensor
/// sigma(xi tensor e0)), one degree at a time.
FormElement ksgns_form_map(const BimoduleConnection& conn, const InnerProduct& ip, const Vec& e0,
                           const FormElement& xi);

/// d(phi(xi)) = phi(d xi) on Omega^n_B bases for n < max_degree. Requires
/// nabla(e0) = 0 and metric preservation; either failing raises an Error
/// identifying the violated hypothesis.
CheckReport cochain_map_check(const BimoduleConnection& conn, const InnerProduct& ip,
                              const Vec& e0, int max_degree);

}  // namespace ncfib

#endif
