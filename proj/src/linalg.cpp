#include "ncfib/linalg.hpp"

#include <algorithm>

namespace ncfib {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (int(cols[j].size()) != rows) throw Error("Matrix::from_columns: length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, int(j)) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw Error("Matrix::apply: dimension mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("Matrix::operator*: dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix::operator+: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix::operator-: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw Error("Vec: length mismatch");
    Vec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

Vec operator-(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw Error("Vec: length mismatch");
    Vec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

void axpy(const Scalar& c, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw Error("axpy: length mismatch");
    if (c.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        // First nonzero entry scanning top to bottom: deterministic over an
        // exact field, so downstream bases are reproducible.
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Matrix& m) {
    Matrix copy = m;
    return int(rref(copy).size());
}

Subspace kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    Subspace out{m.cols(), {}};
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(int(i), free);
        out.basis.push_back(std::move(v));
    }
    return out;
}

Subspace image_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    Subspace out{m.rows(), {}};
    for (int p : pivots) out.basis.push_back(m.column(p));
    return out;
}

Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors) {
    return image_basis(Matrix::from_columns(ambient_dim, vectors));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim != v.ambient_dim) throw Error("subspace_sum: ambient mismatch");
    std::vector<Vec> all = u.basis;
    all.insert(all.end(), v.basis.begin(), v.basis.end());
    return span_of(u.ambient_dim, all);
}

std::optional<Vec> solve_in_span(const Subspace& s, const Vec& v) {
    if (int(v.size()) != s.ambient_dim) throw Error("solve_in_span: length mismatch");
    int k = s.dim();
    Matrix aug(s.ambient_dim, k + 1);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < s.ambient_dim; ++i) aug.at(i, j) = s.basis[j][i];
    for (int i = 0; i < s.ambient_dim; ++i) aug.at(i, k) = v[i];
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    Vec c(k);
    for (size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug.at(int(i), k);
    return c;
}

bool Subspace::contains(const Vec& v) const { return solve_in_span(*this, v).has_value(); }

std::optional<Vec> solve_linear(const Matrix& a, const Vec& y) {
    if (int(y.size()) != a.rows()) throw Error("solve_linear: length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = y[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec c(a.cols());
    for (size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug.at(int(i), a.cols());
    return c;
}

Vec coords_in(const Subspace& u, const Vec& v) {
    auto c = solve_in_span(u, v);
    if (!c) throw Error("coords_in: vector outside subspace");
    return *c;
}

Vec QuotientSpace::lift(const Vec& c) const {
    if (int(c.size()) != dim()) throw Error("QuotientSpace::lift: length mismatch");
    Vec out(ambient_dim);
    for (int j = 0; j < dim(); ++j) axpy(c[j], representatives.basis[j], out);
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse: matrix not square");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

QuotientSpace quotient(int ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim != ambient_dim) throw Error("quotient: ambient mismatch");
    int k = sub.dim();
    if (rank(sub.as_matrix()) != k) throw Error("quotient: dependent subspace basis");
    // Representatives: standard basis vectors at coordinates not covered by
    // the subspace pivots.
    Matrix r = sub.as_matrix().transpose();
    std::vector<int> pivots = rref(r);
    std::vector<bool> covered(ambient_dim, false);
    for (int p : pivots) covered[p] = true;
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.sub = sub;
    q.representatives.ambient_dim = ambient_dim;
    for (int i = 0; i < ambient_dim; ++i) {
        if (covered[i]) continue;
        Vec e(ambient_dim);
        e[i] = Scalar(1);
        q.representatives.basis.push_back(std::move(e));
    }
    // projection = last (ambient-k) rows of [sub | reps]^{-1}
    std::vector<Vec> cols = sub.basis;
    cols.insert(cols.end(), q.representatives.basis.begin(), q.representatives.basis.end());
    auto inv = inverse(Matrix::from_columns(ambient_dim, cols));
    if (!inv) throw Error("quotient: internal error, complement not complementary");
    q.projection = Matrix(ambient_dim - k, ambient_dim);
    for (int i = 0; i < ambient_dim - k; ++i)
        for (int j = 0; j < ambient_dim; ++j) q.projection.at(i, j) = inv->at(k + i, j);
    return q;
}

QuotientSpace subquotient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim != v.ambient_dim) throw Error("subquotient: ambient mismatch");
    Subspace v_in_u{u.dim(), {}};
    for (const Vec& w : v.basis) v_in_u.basis.push_back(coords_in(u, w));
    return quotient(u.dim(), v_in_u);
}

}  // namespace ncfib
