#include "ncfib/algebra.hpp"

namespace ncfib {

Vec to_dense(const SparseVec& s, int dim) {
    Vec v(dim);
    for (const auto& [k, c] : s) v[k] += c;
    return v;
}

Vec FiniteDimAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (int(a.size()) != dim || int(b.size()) != dim)
        throw Error("FiniteDimAlgebra::multiply: length mismatch");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& [k, s] : mul[i][j]) out[k] += c * s;
        }
    }
    return out;
}

Vec FiniteDimAlgebra::star_of(const Vec& a) const {
    Vec out(dim);
    for (int i = 0; i < dim; ++i) axpy(a[i].conjugate(), star[i], out);
    return out;
}

void FiniteDimAlgebra::validate() const {
    auto basis = [&](int i) {
        Vec v(dim);
        v[i] = Scalar(1);
        return v;
    };
    for (int i = 0; i < dim; ++i) {
        if (multiply(unit, basis(i)) != basis(i) || multiply(basis(i), unit) != basis(i))
            throw Error("algebra: unit is not a two-sided identity at basis " + labels[i]);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Vec lhs = multiply(multiply(basis(i), basis(j)), basis(k));
                Vec rhs = multiply(basis(i), multiply(basis(j), basis(k)));
                if (lhs != rhs)
                    throw Error("algebra: associativity fails at (" + labels[i] + "," + labels[j] +
                                "," + labels[k] + ")");
            }
    for (int i = 0; i < dim; ++i)
        if (star_of(star[i]) != basis(i))
            throw Error("algebra: star is not involutive at basis " + labels[i]);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec lhs = star_of(multiply(basis(i), basis(j)));
            Vec rhs = multiply(star[j], star[i]);
            if (lhs != rhs)
                throw Error("algebra: star anti-homomorphism fails at (" + labels[i] + "," +
                            labels[j] + ")");
        }
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.parent != b.parent) throw Error("alg_mul: parent algebra mismatch");
    return {a.parent, a.parent->multiply(a.coords, b.coords)};
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.parent != b.parent) throw Error("alg_add: parent algebra mismatch");
    return {a.parent, a.coords + b.coords};
}

std::vector<int> group_inverses(const std::vector<std::vector<int>>& table) {
    int n = int(table.size());
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && table[e][i] == i && table[i][e] == i;
        if (ok) id = e;
    }
    if (id < 0) throw Error("group table: no identity element");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[i][j] == id && table[j][i] == id) inv[i] = j;
        if (inv[i] < 0) throw Error("group table: element " + std::to_string(i) + " has no inverse");
    }
    return inv;
}

FiniteDimAlgebra group_algebra(const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table) {
    int n = int(elements.size());
    if (int(table.size()) != n) throw Error("group table: wrong number of rows");
    for (const auto& row : table) {
        if (int(row.size()) != n) throw Error("group table: wrong row length");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("group table: entry out of range (closure fails)");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error("group table: associativity fails at (" + elements[i] + "," +
                                elements[j] + "," + elements[k] + ")");
    std::vector<int> inv = group_inverses(table);  // checks identity and inverses

    FiniteDimAlgebra alg;
    alg.dim = n;
    alg.labels = elements;
    alg.mul.assign(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) alg.mul[i][j] = {{table[i][j], Scalar(1)}};
    int id = table.empty() ? 0 : inv[0] >= 0 ? table[0][inv[0]] : 0;
    alg.unit.assign(n, Scalar(0));
    alg.unit[id] = Scalar(1);
    alg.star.assign(n, Vec(n, Scalar(0)));
    for (int i = 0; i < n; ++i) alg.star[i][inv[i]] = Scalar(1);
    alg.validate();
    return alg;
}

FiniteDimAlgebra matrix_algebra(int n) {
    if (n < 1) throw Error("matrix_algebra: n must be >= 1");
    FiniteDimAlgebra alg;
    alg.dim = n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            alg.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    alg.mul.assign(alg.dim, std::vector<SparseVec>(alg.dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // E_ij E_kl = delta_jk E_il
                    if (j == k)
                        alg.mul[matrix_unit_index(n, i, j)][matrix_unit_index(n, k, l)] = {
                            {matrix_unit_index(n, i, l), Scalar(1)}};
                }
    alg.unit.assign(alg.dim, Scalar(0));
    for (int i = 0; i < n; ++i) alg.unit[matrix_unit_index(n, i, i)] = Scalar(1);
    alg.star.assign(alg.dim, Vec(alg.dim, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            alg.star[matrix_unit_index(n, i, j)][matrix_unit_index(n, j, i)] = Scalar(1);
    alg.validate();
    return alg;
}

}  // namespace ncfib
