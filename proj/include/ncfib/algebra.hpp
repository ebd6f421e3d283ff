#ifndef NCFIB_ALGEBRA_HPP
#define NCFIB_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncfib/linalg.hpp"

namespace ncfib {

/// Sparse row: list of (basis index, coefficient).
using SparseVec = std::vector<std::pair<int, Scalar>>;

Vec to_dense(const SparseVec& s, int dim);

/// Finite-dimensional associative unital algebra with a star involution,
/// given by structure constants e_i * e_j = sum_k c[i][j][k] e_k.
/// Associativity, the unit and the star axioms are checked at construction.
struct FiniteDimAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVec>> mul;  // mul[i][j] -> expansion of e_i e_j
    Vec unit;                                 // coordinates of 1
    std::vector<Vec> star;                    // star[i] -> coordinates of e_i^*

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec star_of(const Vec& a) const;
    bool is_unit(const Vec& a) const { return a == unit; }

    void validate() const;  // throws Error naming the failed axiom
};

struct AlgebraElement {
    const FiniteDimAlgebra* parent = nullptr;
    Vec coords;
};

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);

/// Group algebra from a multiplication table. table[i][j] = index of g_i g_j;
/// the group axioms are validated and star(g) = g^{-1}.
FiniteDimAlgebra group_algebra(const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table);

/// Full matrix algebra M_n with basis E_{ij} (row-major order), star = transpose.
FiniteDimAlgebra matrix_algebra(int n);

/// Basis index of E_{ij} in matrix_algebra(n), 0-based i, j.
inline int matrix_unit_index(int n, int i, int j) { return i * n + j; }

/// Inverse table of a group algebra built by group_algebra.
std::vector<int> group_inverses(const std::vector<std::vector<int>>& table);

}  // namespace ncfib

#endif
