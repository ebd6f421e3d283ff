#ifndef NCFIB_DGA_HPP
#define NCFIB_DGA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncfib/algebra.hpp"

namespace ncfib {

/// A word in generator indices; degree = length.
using Word = std::vector<int>;

/// Adjacent-pair rewrite rules: the word (a, b) rewrites to a linear
/// combination of words. An empty combination means the pair is zero.
/// Rules are required to terminate (each oriented toward the normal order)
/// and confluence is checked exhaustively on low-degree words.
struct RewriteSystem {
    std::map<std::pair<int, int>, std::vector<std::pair<Scalar, Word>>> rules;

    bool applies(int a, int b) const { return rules.count({a, b}) > 0; }
};

class Calculus;

/// Homogeneous differential form in normal form: a sum of
/// scalar * (generator monomial) * (algebra basis element).
struct FormElement {
    const Calculus* calc = nullptr;
    int degree = 0;
    std::map<std::pair<Word, int>, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FormElement& o) const {
        return calc == o.calc && degree == o.degree && terms == o.terms;
    }
    FormElement operator+(const FormElement& o) const;
    FormElement operator-(const FormElement& o) const;
    FormElement operator*(const Scalar& c) const;
    std::string str() const;
};

/// A first-order differential calculus together with its explicit
/// higher-degree rewrite rules, commutation rules between the algebra and
/// the generator 1-forms, and the exterior derivative data.
class Calculus {
  public:
    Calculus(const FiniteDimAlgebra* alg, std::vector<std::string> gen_names, RewriteSystem rewrite);
    // Stored forms point back at their calculus, so copies and moves must
    // re-target those pointers.
    Calculus(const Calculus& o) { *this = o; }
    Calculus(Calculus&& o) noexcept { *this = std::move(o); }
    Calculus& operator=(const Calculus& o);
    Calculus& operator=(Calculus&& o) noexcept;

    const FiniteDimAlgebra& algebra() const { return *alg_; }
    int gen_count() const { return int(gen_names_.size()); }
    const std::vector<std::string>& gen_names() const { return gen_names_; }
    const RewriteSystem& rewrite() const { return rewrite_; }

    // x_i * g_j = sum_k c (g_k * x_i): how an algebra basis element moves left
    // to right past a generator. Defaults to central generators.
    void set_commutation(std::vector<std::vector<SparseVec>> comm,
                         std::vector<std::vector<SparseVec>> rev_comm);
    // g_j * x_i = sum_k c (x_i * g_k), the inverse move.
    const SparseVec& comm(int alg_idx, int gen) const { return comm_[alg_idx][gen]; }
    const SparseVec& rev_comm(int alg_idx, int gen) const { return rev_comm_[alg_idx][gen]; }

    void set_d0(std::vector<FormElement> d0) {
        d0_ = std::move(d0);
        for (FormElement& f : d0_) f.calc = this;
    }
    void set_dgen(std::vector<FormElement> dgen) {
        dgen_ = std::move(dgen);
        for (FormElement& f : dgen_) f.calc = this;
    }
    void set_star_gen(std::vector<SparseVec> star_gen) { star_gen_ = std::move(star_gen); }

    const FormElement& d0(int alg_idx) const { return d0_[alg_idx]; }
    const FormElement& dgen(int gen) const { return dgen_[gen]; }
    const std::vector<SparseVec>& star_gen() const { return star_gen_; }

    /// Unique normal form of a word as a combination of normal monomials.
    const std::map<Word, Scalar>& normalize(const Word& w) const;
    bool is_normal(const Word& w) const;

    /// Deterministic ordered list of normal monomials of degree n.
    const std::vector<Word>& monomials(int n) const;
    int mono_index(int n, const Word& w) const;

    /// Ordered basis of Omega^n as (monomial, algebra basis) pairs;
    /// index = mono_index * algebra dim + algebra index.
    std::vector<std::pair<Word, int>> enumerate_basis(int n) const;
    int basis_dim(int n) const { return int(monomials(n).size()) * alg_->dim; }
    int basis_index(int n, const Word& w, int alg_idx) const {
        return mono_index(n, w) * alg_->dim + alg_idx;
    }

    FormElement zero(int degree) const { return FormElement{this, degree, {}}; }
    FormElement mono_form(const Word& w) const;             // w * 1
    FormElement basis_form(const Word& w, int alg_idx) const;
    FormElement from_coords(int degree, const Vec& coords) const;
    Vec coords_of(const FormElement& x) const;

    /// Confluence on all degree-2 and degree-3 words: every rule application
    /// order yields the same normal form. Throws Error on failure.
    void check_confluence() const;

    /// Checks: Leibniz on algebra basis pairs, d^2 = 0 on Omega^0/Omega^1
    /// bases, commutation consistency. Throws Error naming the failure.
    void check_calculus_axioms() const;

    /// dim ker(d restricted to degree 0); connected calculi have 1.
    int kernel_dim_d0() const;

  private:
    const FiniteDimAlgebra* alg_;
    std::vector<std::string> gen_names_;
    RewriteSystem rewrite_;
    std::vector<std::vector<SparseVec>> comm_, rev_comm_;
    std::vector<FormElement> d0_, dgen_;
    std::vector<SparseVec> star_gen_;
    mutable std::map<Word, std::map<Word, Scalar>> normal_cache_;
    mutable std::map<int, std::vector<Word>> mono_cache_;
    mutable std::map<int, std::map<Word, int>> mono_index_cache_;
};

/// Adds c * w * e_{alg_idx} to x, normalizing w first.
void add_term(FormElement& x, const Word& w, int alg_idx, const Scalar& c);

FormElement wedge(const FormElement& x, const FormElement& y);
FormElement d_form(const FormElement& x);
FormElement left_mul(const Vec& a, const FormElement& x);
FormElement right_mul(const FormElement& x, const Vec& a);
/// Star on forms of degree 0 or 1: (w.a)^* = a^* . w^*.
FormElement star_form(const FormElement& x);

/// Data describing a group-cocycle calculus: a right representation rho
/// (acting by row vectors, v <| x = v rho(x)) and a cocycle omega given on
/// every group element.
struct GroupCalculusData {
    const FiniteDimAlgebra* alg;          // group algebra
    std::vector<std::vector<int>> table;  // group multiplication table
    std::vector<Matrix> rho;              // per element
    std::vector<Vec> omega;               // per element, in generator coords
    std::vector<std::string> gen_names;
};

struct CocycleReport {
    bool pass = true;
    int x = -1, y = -1;  // witness pair on failure
};

/// Validates that rho is a right representation and omega satisfies
/// omega(xy) = omega(x) <| y + omega(y) on all pairs.
CocycleReport cocycle_check(const GroupCalculusData& data);

/// Calculus on a group algebra from a cocycle; higher degrees are the
/// antisymmetric exterior algebra on the generator space.
Calculus group_calculus(const GroupCalculusData& data, bool connectedness_required);

/// Inner calculus d(a) = theta a - a theta on a matrix-type algebra with
/// central generators. theta is given as terms (generator, algebra coords).
/// Construction fails if theta ^ theta is not central under the supplied
/// rewrite rules.
Calculus inner_calculus(const FiniteDimAlgebra* alg, std::vector<std::string> gen_names,
                        const std::vector<std::pair<int, Vec>>& theta, RewriteSystem rewrite,
                        std::vector<SparseVec> star_gen);

}  // namespace ncfib

#endif
