#include "ncfib/ksgns.hpp"

namespace ncfib {

namespace {

Vec unit_vec(int dim, int idx) {
    Vec v(dim);
    v[idx] = Scalar(1);
    return v;
}

}  // namespace

Vec InnerProduct::pair(const Vec& x, const Vec& y) const {
    const int dim = bim->dim;
    if (int(x.size()) != dim || int(y.size()) != dim)
        throw Error("InnerProduct::pair: dimension mismatch");
    Vec out(bim->right_alg->dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            if (!y[j].is_zero()) axpy(x[i].conjugate() * y[j], pairing[i][j], out);
    }
    return out;
}

void InnerProduct::validate() const {
    const FiniteDimAlgebra& a = *bim->right_alg;
    const FiniteDimAlgebra& b = *bim->left_alg;
    const int dim = bim->dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (a.star_of(pairing[i][j]) != pairing[j][i])
                throw Error("inner product: star symmetry fails at (" + bim->labels[i] + ", " +
                            bim->labels[j] + ")");
            for (int k = 0; k < a.dim; ++k) {
                Vec ek = unit_vec(a.dim, k);
                if (pair(unit_vec(dim, i), bim->act_right(unit_vec(dim, j), ek)) !=
                    a.multiply(pairing[i][j], ek))
                    throw Error("inner product: right linearity fails at (" + bim->labels[i] +
                                ", " + bim->labels[j] + ") * " + a.labels[k]);
            }
            for (int k = 0; k < b.dim; ++k) {
                Vec bk = unit_vec(b.dim, k);
                if (pair(bim->act_left(bk, unit_vec(dim, i)), unit_vec(dim, j)) !=
                    pair(unit_vec(dim, i), bim->act_left(b.star_of(bk), unit_vec(dim, j))))
                    throw Error("inner product: middle twist fails at " + b.labels[k] + " (" +
                                bim->labels[i] + ", " + bim->labels[j] + ")");
            }
        }
}

Matrix ksgns_map(const InnerProduct& ip, const Vec& e0) {
    const FiniteDimAlgebra& b = *ip.bim->left_alg;
    Matrix phi(ip.bim->right_alg->dim, b.dim);
    for (int j = 0; j < b.dim; ++j) {
        Vec col = ip.pair(e0, ip.bim->act_left(unit_vec(b.dim, j), e0));
        for (int i = 0; i < phi.rows(); ++i) phi.at(i, j) = col[i];
    }
    return phi;
}

CheckReport metric_preservation_check(const BimoduleConnection& conn, const InnerProduct& ip) {
    const Bimodule& bim = conn.bimodule();
    const Calculus& ca = conn.calcA();
    const CochainSpace& c1 = conn.C(1);
    const int dim = bim.dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            FormElement lhs = d_form(ca.from_coords(0, ip.pairing[i][j]));
            FormElement rhs = ca.zero(1);
            // <e_i bar, nabla(e_j)_(1)> nabla(e_j)_(2)
            const Vec& nj = conn.nabla0()[j];
            for (int idx = 0; idx < c1.dim(); ++idx) {
                if (nj[idx].is_zero()) continue;
                int mi = idx / dim, k = idx % dim;
                rhs = rhs + left_mul(ip.pairing[i][k], ca.mono_form(c1.monomials()[mi])) * nj[idx];
            }
            // nabla(e_i)_(2)^* <nabla(e_i)_(1) bar, e_j>
            const Vec& ni = conn.nabla0()[i];
            for (int idx = 0; idx < c1.dim(); ++idx) {
                if (ni[idx].is_zero()) continue;
                int mi = idx / dim, k = idx % dim;
                FormElement gstar = star_form(ca.mono_form(c1.monomials()[mi]));
                rhs = rhs + right_mul(gstar, ip.pairing[k][j]) * ni[idx].conjugate();
            }
            if (!(lhs == rhs))
                return {false, "metric preservation fails at (" + bim.labels[i] + ", " +
                                   bim.labels[j] + ")"};
        }
    return {true, ""};
}

CheckReport is_algebra_map(const FiniteDimAlgebra& algB, const FiniteDimAlgebra& algA,
                           const Matrix& phi) {
    if (phi.apply(algB.unit) != algA.unit) return {false, "phi(1) is not the identity"};
    for (int i = 0; i < algB.dim; ++i)
        for (int j = 0; j < algB.dim; ++j) {
            Vec prod = algB.multiply(unit_vec(algB.dim, i), unit_vec(algB.dim, j));
            if (phi.apply(prod) !=
                algA.multiply(phi.column(i), phi.column(j)))
                return {false, "phi is not multiplicative at (" + algB.labels[i] + ", " +
                                   algB.labels[j] + ")"};
        }
    return {true, ""};
}

Matrix left_regular_rep(const FiniteDimAlgebra& alg, const Vec& a) {
    Matrix out(alg.dim, alg.dim);
    for (int j = 0; j < alg.dim; ++j) {
        Vec col = alg.multiply(a, unit_vec(alg.dim, j));
        for (int i = 0; i < alg.dim; ++i) out.at(i, j) = col[i];
    }
    return out;
}

PsdReport psd_check(const Matrix& m0) {
    const int n = m0.rows();
    if (m0.cols() != n) throw Error("psd_check: matrix not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m0.at(i, j) != m0.at(j, i)) throw Error("psd_check: matrix not symmetric");
    Matrix m = m0;
    Matrix l = Matrix::identity(n);  // accumulated congruence: m = l * m0 * l^T
    std::vector<bool> done(n, false);
    auto witness_of = [&](const Vec& reduced) {
        return l.transpose().apply(reduced);
    };
    while (true) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && !m.at(i, i).is_zero()) p = i;
        if (p < 0) break;
        if (m.at(p, p).sign() < 0) return {false, witness_of(unit_vec(n, p))};
        Scalar inv = m.at(p, p).inverse();
        for (int i = 0; i < n; ++i) {
            if (i == p || done[i] || m.at(i, p).is_zero()) continue;
            Scalar f = m.at(i, p) * inv;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(p, j);
                l.at(i, j) -= f * l.at(p, j);
            }
            for (int j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, p);
        }
        done[p] = true;
    }
    // All remaining diagonal entries are zero: any remaining off-diagonal
    // entry gives a strictly negative direction.
    for (int p = 0; p < n; ++p) {
        if (done[p]) continue;
        for (int k = 0; k < n; ++k) {
            if (done[k] || k == p || m.at(p, k).is_zero()) continue;
            // q(t e_p + e_k) = 2 t m[p][k]; pick t so the value is -1.
            Vec v(n);
            v[p] = -(Scalar(1, 2) * m.at(p, k).inverse());
            v[k] = Scalar(1);
            return {false, witness_of(v)};
        }
    }
    return {true, {}};
}

CheckReport completely_positive_check(const FiniteDimAlgebra& algB,
                                      const FiniteDimAlgebra& algA, const Matrix& phi) {
    if (phi.rows() != algA.dim || phi.cols() != algB.dim)
        throw Error("completely_positive_check: phi shape mismatch");
    const int nb = algB.dim, na = algA.dim;
    Matrix k(nb * na, nb * na);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            Vec prod = algB.multiply(algB.star_of(unit_vec(nb, i)), unit_vec(nb, j));
            Matrix block = left_regular_rep(algA, phi.apply(prod));
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < na; ++b) k.at(i * na + a, j * na + b) = block.at(a, b);
        }
    if (k != k.transpose()) return {false, "phi is not compatible with the star structures"};
    PsdReport psd = psd_check(k);
    if (!psd.psd) return {false, "the Gram matrix of phi has a negative direction"};
    return {true, ""};
}

FormElement ksgns_form_map(const BimoduleConnection& conn, const InnerProduct& ip, const Vec& e0,
                           const FormElement& xi) {
    const Bimodule& bim = conn.bimodule();
    const Calculus& ca = conn.calcA();
    const Calculus& cb = conn.calcB();
    const int n = xi.degree;
    const int dim = bim.dim;
    if (n == 0) {
        FormElement out = ca.zero(0);
        for (const auto& [key, c] : xi.terms) {
            Vec a = ip.pair(e0, bim.act_left(unit_vec(bim.left_alg->dim, key.second), e0));
            for (int k = 0; k < int(a.size()); ++k)
                if (!a[k].is_zero()) out = out + ca.basis_form(Word{}, k) * (c * a[k]);
        }
        return out;
    }
    // Move the right B-coefficient of each term across the tensor product
    // onto e0, apply the extended sigma, and pair away the E leg.
    Vec v(conn.BE(n).dim());
    for (const auto& [key, c] : xi.terms) {
        Vec e = bim.act_left(unit_vec(bim.left_alg->dim, key.second), e0);
        int mi = cb.mono_index(n, key.first);
        for (int k = 0; k < dim; ++k) v[conn.BE(n).index(mi, k)] += c * e[k];
    }
    Vec img = conn.sigma_matrix(n).apply(v);
    FormElement out = ca.zero(n);
    for (int idx = 0; idx < int(img.size()); ++idx) {
        if (img[idx].is_zero()) continue;
        int mi = idx / dim, k = idx % dim;
        Vec a = ip.pair(e0, unit_vec(dim, k));
        out = out + left_mul(a, ca.mono_form(conn.C(n).monomials()[mi])) * img[idx];
    }
    return out;
}

CheckReport cochain_map_check(const BimoduleConnection& conn, const InnerProduct& ip,
                              const Vec& e0, int max_degree) {
    const Calculus& cb = conn.calcB();
    Vec nab(conn.C(1).dim());
    for (int k = 0; k < conn.bimodule().dim; ++k) axpy(e0[k], conn.nabla0()[k], nab);
    if (!is_zero(nab)) throw Error("cochain map check: nabla(e0) is nonzero");
    CheckReport metric = metric_preservation_check(conn, ip);
    if (!metric.pass)
        throw Error("cochain map check: the connection does not preserve the inner product (" +
                    metric.witness + ")");
    for (int n = 0; n < max_degree; ++n)
        for (const auto& [w, b] : cb.enumerate_basis(n)) {
            FormElement xi = cb.basis_form(w, b);
            FormElement lhs = d_form(ksgns_form_map(conn, ip, e0, xi));
            FormElement rhs = ksgns_form_map(conn, ip, e0, d_form(xi));
            if (!(lhs == rhs))
                return {false, "d phi != phi d at degree " + std::to_string(n) + " on " +
                                   xi.str()};
        }
    return {true, ""};
}

}  // namespace ncfib
