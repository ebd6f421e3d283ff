#ifndef NCFIB_CONNECTION_HPP
#define NCFIB_CONNECTION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncfib/dga.hpp"

namespace ncfib {

/// B-A bimodule given by structure constants for both actions.
struct Bimodule {
    const FiniteDimAlgebra* left_alg = nullptr;   // B
    const FiniteDimAlgebra* right_alg = nullptr;  // A
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVec>> left_action;   // [b][e] -> expansion in E
    std::vector<std::vector<SparseVec>> right_action;  // [e][a] -> expansion in E

    Vec act_left(const Vec& b, const Vec& e) const;
    Vec act_right(const Vec& e, const Vec& a) const;
    /// Associativity of both actions, unit laws, and (be)a = b(ea), all on bases.
    void validate() const;
};

/// C^n = E tensor_A Omega^n_A. Since Omega^n_A is free as a left A-module on
/// its normal monomials, a basis is (monomial, E basis element) with
/// index = mono_index * dim E + e_index.
class CochainSpace {
  public:
    CochainSpace(const Bimodule* bim, const Calculus* calcA, int degree);

    int degree() const { return degree_; }
    int dim() const { return int(monos_.size()) * bim_->dim; }
    int index(int mono_idx, int e_idx) const { return mono_idx * bim_->dim + e_idx; }
    const std::vector<Word>& monomials() const { return monos_; }
    const Bimodule& bimodule() const { return *bim_; }

    /// Coordinates of e_i tensor x: the right algebra coefficients of the
    /// form are commuted to the left and absorbed into E by the right action.
    Vec push(int e_idx, const FormElement& x) const;
    Vec push_elem(const Vec& e, const FormElement& x) const;

    Vec act_left(const Vec& b, const Vec& coords) const;
    Vec act_right(const Vec& coords, const Vec& a) const;

  private:
    const Bimodule* bim_;
    const Calculus* calcA_;
    int degree_;
    std::vector<Word> monos_;
};

/// Omega^p_B tensor_B E with basis (B-monomial, E basis element);
/// index = mono_index * dim E + e_index. Right B-coefficients of forms are
/// absorbed into E through the left action.
class TensorBE {
  public:
    TensorBE(const Bimodule* bim, const Calculus* calcB, int degree);

    int degree() const { return degree_; }
    int dim() const { return int(monos_.size()) * bim_->dim; }
    int index(int mono_idx, int e_idx) const { return mono_idx * bim_->dim + e_idx; }
    const std::vector<Word>& monomials() const { return monos_; }

    Vec push(const FormElement& xi, int e_idx) const;  // xi tensor e_i
    Vec act_left(const Vec& b, const Vec& coords) const;
    Vec act_right(const Vec& coords, const Vec& a) const;

  private:
    const Bimodule* bim_;
    const Calculus* calcB_;
    int degree_;
    std::vector<Word> monos_;
};

struct CheckReport {
    bool pass = true;
    std::string witness;
};

/// Right bimodule connection (nabla_E, sigma_E) on a B-A bimodule, stored as
/// nabla on the E basis and sigma on (B generator, E basis) pairs; all higher
/// extensions are derived.
class BimoduleConnection {
  public:
    BimoduleConnection(const Bimodule* bim, const Calculus* calcA, const Calculus* calcB,
                      std::vector<Vec> nabla0, std::vector<std::vector<Vec>> sigma_gen);

    const Bimodule& bimodule() const { return *bim_; }
    const Calculus& calcA() const { return *calcA_; }
    const Calculus& calcB() const { return *calcB_; }
    const std::vector<Vec>& nabla0() const { return nabla0_; }
    const std::vector<std::vector<Vec>>& sigma_gen() const { return sigma_gen_; }

    const CochainSpace& C(int n) const;
    const TensorBE& BE(int p) const;

    /// coords in C^m wedged on the right with a degree-k form over A,
    /// landing in C^{m+k}.
    Vec wedge_into(int from_degree, const Vec& coords, const FormElement& x) const;

    /// nabla^[n] = id tensor d + nabla ^ id : C^n -> C^{n+1}.
    const Matrix& nabla_matrix(int n) const;
    /// sigma extended recursively: Omega^p_B tensor_B E -> C^p.
    const Matrix& sigma_matrix(int p) const;
    /// R_E = nabla^[1] nabla : C^0 -> C^2.
    Matrix curvature() const;

    /// Right Leibniz rule, sigma being a bimodule map, the bimodule-connection
    /// compatibility nabla(be) = sigma(db tensor e) + b nabla(e), and
    /// well-definedness of the tensor-over-A representation. Throws Error.
    void check_connection_axioms() const;

    /// The recursive extension of sigma factors through the Omega_B rewrite
    /// relations for every word of length <= max_degree.
    CheckReport extendability_check(int max_degree) const;

    /// nabla^[n] sigma = sigma(d tensor id) + (-1)^n (sigma ^ id)(id tensor nabla).
    CheckReport nabla_sigma_identity_check(int n) const;

    /// nabla^[n+1] nabla^[n] = R_E ^ id (holds for any connection).
    CheckReport curvature_composition_check(int n) const;

    bool curvature_left_module_map() const;
    bool is_flat() const { return curvature().is_zero(); }

  private:
    const Bimodule* bim_;
    const Calculus* calcA_;
    const Calculus* calcB_;
    std::vector<Vec> nabla0_;
    std::vector<std::vector<Vec>> sigma_gen_;
    mutable std::map<int, CochainSpace> c_cache_;
    mutable std::map<int, TensorBE> be_cache_;
    mutable std::map<int, Matrix> nabla_cache_, sigma_cache_;

    Vec sigma_word(const Word& w, int e_idx) const;  // arbitrary (non-normal) words
    Vec sigma_wedge_gen(int gen, const Vec& c_coords, int c_degree) const;
};

/// Everything owning everything: used by the builtin examples.
struct ConnectionBundle {
    std::shared_ptr<FiniteDimAlgebra> algA, algB;
    std::shared_ptr<Calculus> calcA, calcB;
    std::shared_ptr<Bimodule> bim;
    std::shared_ptr<BimoduleConnection> conn;
};

/// E = CX as a CG-CX bimodule for a subgroup G (given by element indices
/// into the big group), with nabla(x) = 1 tensor dx and
/// sigma(xi tensor x) = 1 tensor xi.x. The subgroup calculus is the
/// restriction of omega to W = span omega(G); the complement W-perp is taken
/// with respect to the standard dot product, which must be rho-invariant, and
/// must be closed under the G-action.
ConnectionBundle group_connection(std::shared_ptr<FiniteDimAlgebra> algA,
                                  std::shared_ptr<Calculus> calcA, const GroupCalculusData& dataA,
                                  const std::vector<int>& subgroup);

/// Data the group construction derives along the way; exposed for tests.
struct GroupConnectionData {
    Subspace w;       // span of omega over the subgroup, inside the generator space
    Subspace w_perp;  // orthogonal complement
    GroupCalculusData dataB;
};
GroupConnectionData group_connection_data(const FiniteDimAlgebra* algB,
                                          const GroupCalculusData& dataA,
                                          const std::vector<int>& subgroup);

}  // namespace ncfib

#endif
