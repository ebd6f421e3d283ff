#ifndef NCFIB_EXAMPLES_HPP
#define NCFIB_EXAMPLES_HPP

#include <memory>

#include "ncfib/connection.hpp"
#include "ncfib/dga.hpp"
#include "ncfib/groups.hpp"
#include "ncfib/ksgns.hpp"
#include "ncfib/report.hpp"

namespace ncfib {

/// A calculus together with shared ownership of its underlying algebra.
struct CalculusBundle {
    std::shared_ptr<FiniteDimAlgebra> alg;
    std::shared_ptr<Calculus> calc;
};

/// Cocycle data for the S3 calculus family with parameter b: V = C^2,
/// rho(u) = diag(1,-1), rho(v) = 1/2 [[-1, r3], [r3, 1]] (r3 = sqrt 3),
/// omega(u) = (0, 1), omega(v) = (-r3 b, b), extended by the cocycle rule.
GroupCalculusData s3_data(const FiniteDimAlgebra* alg, const S3Tables& t, const Scalar& b);

/// The calculus on C[S3] from s3_data; throws for b = 1/2 (disconnected).
CalculusBundle s3_calculus(const Scalar& b);

/// The calculus on C[Z2] with one generator f, omega(u) = 1, f^f = 0.
CalculusBundle z2_calculus();

/// Inner calculus on M3 with central generators s, t, u, theta = E12 s +
/// E21 t + E33 u, and rules ts=st, us=su, ut=tu, uu=st.
CalculusBundle m3_calculus();

/// Inner calculus on M2 with central generators s, t, theta = E12 s + E21 t,
/// and rule ts=st.
CalculusBundle m2_calculus();

/// E = C[S3] as a C[Z2]-C[S3] bimodule over the subgroup {e, u}, with
/// nabla(x) = 1 tensor dx and sigma(xi tensor x) = 1 tensor xi.x.
ConnectionBundle s3_connection(const Scalar& b);

/// E = M_{2,3} as an M2-M3 bimodule with nabla(e0 a) = e0 tensor da for
/// e0 = [[2,0,0],[0,2,0]], sigma(s' tensor e0) = e0 tensor s and
/// sigma(t' tensor e0) = e0 tensor t. Construction verifies the
/// well-definedness requirement e0 tensor d(E_3i) = 0.
ConnectionBundle matrix_connection();

/// <x bar, y> = x^* y = x^{-1} y on the group bimodule of s3_connection.
InnerProduct s3_inner_product(const ConnectionBundle& cb);

/// <x bar, y> = x^* y on the M_{2,3} bimodule of matrix_connection.
InnerProduct matrix_inner_product(const ConnectionBundle& cb);

/// e0 = [[2,0,0],[0,2,0]] in the E basis of matrix_connection.
Vec matrix_e0();

/// One end-to-end run request. Known names: s3_over_z2 (parameter b, which
/// must differ from 1/2) and m3_over_m2.
struct ExampleSpec {
    std::string name = "s3_over_z2";
    Scalar b = Scalar(1);
    int max_degree = 3;
};

/// Runs one builtin example end to end: fibration analysis, spectral pages,
/// convergence against direct cohomology, and the inner-product map checks.
Report run_example(const ExampleSpec& spec);

/// Univariate polynomial in the family parameter b with exact coefficients.
struct Poly {
    std::vector<Scalar> c;  // c[k] is the coefficient of b^k

    bool is_zero() const;
    Poly operator+(const Poly& o) const;
    Poly scaled(const Scalar& s) const;
    std::string str() const;
};

/// The one-parameter cocycle family on S3 with the deduction residuals. Each
/// residual is the cocycle extension of omega over a word that multiplies to
/// the identity, so a valid family must make it vanish identically in b.
struct CocycleFamily {
    std::vector<Poly> omega_u, omega_v;       // two components each
    std::vector<Poly> residual_uu;            // u u = e
    std::vector<Poly> residual_vv;            // v v = e
    std::vector<Poly> residual_braid;         // omega(u v u) - omega(v u v)
    std::vector<Poly> residual_vv_wrong_sign; // with the first omega(v) entry negated
};

/// Solves the S3 family: omega(u) = (0, 1), omega(v) = (-sqrt3 b, b). Verifies
/// that all residuals vanish identically in b and that flipping the sign of
/// the first omega(v) component breaks the v v = e relation; throws Error if
/// either machine check fails.
CocycleFamily solve_s3_cocycle_family();

}  // namespace ncfib

#endif
