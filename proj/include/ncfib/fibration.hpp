#ifndef NCFIB_FIBRATION_HPP
#define NCFIB_FIBRATION_HPP

#include <map>
#include <string>
#include <vector>

#include "ncfib/connection.hpp"

namespace ncfib {

/// A cochain complex C^0 .. C^N with a decreasing filtration. The complex is
/// truncated at degree N: the differential out of C^N is treated as zero.
struct FilteredComplex {
    std::vector<int> dims;                   // dim C^n
    std::vector<Matrix> d;                   // d[n]: C^n -> C^{n+1}, n < N
    std::vector<std::vector<Subspace>> filt; // filt[n][m] = F^m C^n, m = 0..N+1

    int max_degree() const { return int(dims.size()) - 1; }
    /// F^m C^n with index clamping: full space for m <= 0, zero for m > n.
    const Subspace& F(int m, int n) const;
    /// d^2 = 0, d(F^m) in F^m, F^{m+1} in F^m, F^0 = C, F^m C^n = 0 for
    /// m > n. Throws Error naming the violated axiom and the (m, n) cell.
    void validate() const;
};

/// C^n = E tensor Omega^n_A with d = nabla^[n] and F^m C^n the image of
/// Omega^m_B tensor E tensor Omega^{n-m}_A under sigma ^ id. Requires the
/// connection to be flat and its sigma to extend through the Omega_B
/// relations.
FilteredComplex build_filtered_complex(const BimoduleConnection& conn, int max_total_degree);

/// ker(d_out) / im(d_in) at one degree, with class representatives stored in
/// the ambient coordinates of the degree.
struct CohomologySpace {
    Subspace ker, im;     // both in ambient coordinates
    QuotientSpace quot;   // ker coordinates modulo im
    std::vector<Vec> reps; // ambient representative per class

    int dim() const { return quot.dim(); }
    /// Quotient coordinates of an ambient cocycle; throws if not in ker.
    Vec class_of(const Vec& ambient) const;
};

CohomologySpace cohomology_at(const Matrix& d_in, const Matrix& d_out);

/// The subquotients of a filtered complex: M_{p,q} = F^p C^{p+q} / F^{p+1},
/// the fibre complex N_q = M_{0,q} with its induced differential, and the
/// fibre cohomology.
struct FibreData {
    FilteredComplex fc;
    std::vector<std::vector<QuotientSpace>> m;  // m[p][q], p + q <= N
    std::vector<QuotientSpace> n;               // n[q] = m[0][q]
    std::vector<Matrix> nd;                     // induced d: N_q -> N_{q+1}
    std::vector<CohomologySpace> hq;            // fibre cohomology per q

    int max_degree() const { return fc.max_degree(); }
    /// M_{p,q} coordinates of an ambient vector lying in F^p C^{p+q}.
    Vec class_in_m(int p, int q, const Vec& ambient) const;
};

FibreData quotients(const FilteredComplex& fc);

struct GMap {
    Matrix g;  // (Omega^p_B tensor_B N_q, basis (B-monomial, N class)) -> M_{p,q}
    bool is_isomorphism = false;
};

struct FibrationVerdict {
    bool pass = true;
    struct Cell {
        int p = 0, q = 0;
        bool iso = false;
    };
    std::vector<Cell> cells;
    std::string witness;
};

/// Analysis of one flat extendable bimodule connection: the filtration, its
/// quotients, the comparison map g, the induced flat connection nabla_q on
/// fibre cohomology, and the cohomology of its sheaf sequence.
class Fibration {
  public:
    Fibration(const BimoduleConnection* conn, int max_total_degree);

    const BimoduleConnection& conn() const { return *conn_; }
    const FilteredComplex& complex() const { return fd_.fc; }
    const FibreData& fibre_data() const { return fd_; }
    const QuotientSpace& M(int p, int q) const { return fd_.m[p][q]; }
    const QuotientSpace& N(int q) const { return fd_.n[q]; }
    const CohomologySpace& fibre_cohomology(int q) const { return fd_.hq[q]; }

    /// g(xi tensor [e tensor eta]) = [(sigma ^ id)(xi tensor e tensor eta)].
    /// Verifies well-definedness on the N-quotient representatives.
    GMap g_map(int p, int q) const;

    /// g is an isomorphism for every cell with p + q <= max degree.
    FibrationVerdict verdict() const;

    /// The commuting square relating d on M_{p,*} with the fibre
    /// differential: [nabla^[p+q]] g = (-1)^p g (id tensor [nabla^[q]]).
    CheckReport commuting_square_check() const;

    /// nabla_q on fibre cohomology, as a matrix H^q -> Omega^1_B tensor H^q
    /// in the (B generator, class) basis. Validates well-definedness on
    /// alternative representatives, the left Leibniz rule and flatness.
    const Matrix& induced_connection(int q) const;

    /// dim of Omega^p_B tensor_B H^q(N).
    int sheaf_space_dim(int p, int q) const;
    /// Differential Omega^p_B tensor H^q -> Omega^{p+1}_B tensor H^q of the
    /// nabla_q sequence.
    Matrix sheaf_d(int p, int q) const;
    /// H^p(B, H^q(N), nabla_q): cohomology of the nabla_q sequence at p.
    CohomologySpace sheaf_cohomology(int p, int q) const;

    /// dim H^{p+q} of the complex M_{p,*} equals dim Omega^p_B tensor H^q(N)
    /// for all in-range cells.
    CheckReport lemma_dimension_check() const;

    /// Left action of a B basis element on H^q classes.
    Matrix b_action_on_hq(int b, int q) const;

  private:
    const BimoduleConnection* conn_;
    FibreData fd_;
    mutable std::map<int, Matrix> nabla_q_cache_;

    // nabla_q applied to an ambient cocycle representative in C^q.
    Vec nabla_q_ambient(int q, const Vec& ambient) const;
    Vec hq_class_of_ambient(int q, const Vec& ambient) const;
};

/// Convenience predicate: builds the fibration analysis and reports whether
/// g is an isomorphism in every cell. Requires flat + extendable only.
FibrationVerdict is_fibration(const BimoduleConnection& conn, int max_total_degree);

}  // namespace ncfib

#endif
