#ifndef NCFIB_LINALG_HPP
#define NCFIB_LINALG_HPP

#include <optional>
#include <vector>

#include "ncfib/scalar.hpp"

namespace ncfib {

using Vec = std::vector<Scalar>;

/// Dense matrix over Scalar, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Vec column(int j) const;
    Vec apply(const Vec& v) const;  // matrix * vector
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, const Vec& v);
void axpy(const Scalar& c, const Vec& x, Vec& y);  // y += c*x
bool is_zero(const Vec& v);

/// A list of linearly independent vectors spanning a subspace of K^ambient.
struct Subspace {
    int ambient_dim = 0;
    std::vector<Vec> basis;  // column vectors, each of length ambient_dim

    int dim() const { return int(basis.size()); }
    Matrix as_matrix() const { return Matrix::from_columns(ambient_dim, basis); }
    bool contains(const Vec& v) const;
};

/// K^ambient / sub, with a stored complement and the projection onto
/// quotient coordinates. projection*inclusion(sub) = 0 and
/// projection*inclusion(representatives) = identity.
struct QuotientSpace {
    int ambient_dim = 0;
    Subspace sub;
    Subspace representatives;
    Matrix projection;  // dim() x ambient_dim

    int dim() const { return ambient_dim - sub.dim(); }
    Vec project(const Vec& v) const { return projection.apply(v); }
    // Ambient representative of quotient-coordinate vector c.
    Vec lift(const Vec& c) const;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors);
Subspace subspace_sum(const Subspace& u, const Subspace& v);

QuotientSpace quotient(int ambient_dim, const Subspace& sub);

/// Coefficients c with S.basis * c = v, or nullopt if v is outside the span.
std::optional<Vec> solve_in_span(const Subspace& s, const Vec& v);

/// Some solution of a x = y, or nullopt if inconsistent.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& y);

std::optional<Matrix> inverse(const Matrix& m);

/// Quotient u/v for nested subspaces v <= u of the same ambient space,
/// expressed in the coordinates of u's basis. Throws if v is not inside u.
QuotientSpace subquotient(const Subspace& u, const Subspace& v);

/// Coordinates of v in u's basis; throws if v is outside u.
Vec coords_in(const Subspace& u, const Vec& v);

}  // namespace ncfib

#endif
