#include "ncfib/fibration.hpp"

#include <algorithm>
#include <string>

namespace ncfib {

namespace {

Subspace full_space(int dim) {
    Subspace s{dim, {}};
    for (int i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = Scalar(1);
        s.basis.push_back(std::move(e));
    }
    return s;
}

Vec unit_vec(int dim, int idx) {
    Vec v(dim);
    v[idx] = Scalar(1);
    return v;
}

std::string cell_str(int m, int n) {
    return "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

}  // namespace

const Subspace& FilteredComplex::F(int m, int n) const {
    if (n < 0 || n > max_degree()) throw Error("FilteredComplex::F: degree out of range");
    m = std::clamp(m, 0, int(filt[n].size()) - 1);
    return filt[n][m];
}

void FilteredComplex::validate() const {
    const int N = max_degree();
    if (int(d.size()) != N) throw Error("filtered complex: wrong number of differentials");
    for (int n = 0; n + 2 <= N; ++n)
        if (!(d[n + 1] * d[n]).is_zero())
            throw Error("filtered complex: d∘d != 0 at degree " + std::to_string(n));
    for (int n = 0; n <= N; ++n) {
        if (filt[n][0].dim() != dims[n])
            throw Error("filtered complex: F^0 is not the whole space at degree " +
                        std::to_string(n));
        for (int m = n + 1; m < int(filt[n].size()); ++m)
            if (filt[n][m].dim() != 0)
                throw Error("filtered complex: F^m nonzero above the degree at " + cell_str(m, n));
        for (int m = 0; m + 1 < int(filt[n].size()); ++m)
            for (const Vec& v : filt[n][m + 1].basis)
                if (!filt[n][m].contains(v))
                    throw Error("filtered complex: filtration not decreasing at " +
                                cell_str(m + 1, n));
    }
    for (int n = 0; n < N; ++n)
        for (int m = 1; m <= n; ++m)
            for (const Vec& v : filt[n][m].basis)
                if (!F(m, n + 1).contains(d[n].apply(v)))
                    throw Error("filtered complex: d does not preserve F^m at " + cell_str(m, n));
}

FilteredComplex build_filtered_complex(const BimoduleConnection& conn, int max_total_degree) {
    if (!conn.is_flat()) throw Error("filtered complex: connection has nonzero curvature");
    CheckReport ext = conn.extendability_check(max_total_degree);
    if (!ext.pass) throw Error("filtered complex: " + ext.witness);

    const int N = max_total_degree;
    const Calculus& cA = conn.calcA();
    const Calculus& cB = conn.calcB();
    FilteredComplex fc;
    for (int n = 0; n <= N; ++n) fc.dims.push_back(conn.C(n).dim());
    for (int n = 0; n < N; ++n) fc.d.push_back(conn.nabla_matrix(n));
    fc.filt.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        fc.filt[n].push_back(full_space(fc.dims[n]));
        for (int m = 1; m <= N + 1; ++m) {
            if (m > n) {
                fc.filt[n].push_back(Subspace{fc.dims[n], {}});
                continue;
            }
            std::vector<Vec> span;
            const Matrix& sm = conn.sigma_matrix(m);
            const int nb = int(cB.monomials(m).size());
            for (int mi = 0; mi < nb; ++mi)
                for (int i = 0; i < conn.bimodule().dim; ++i) {
                    Vec col = sm.column(conn.BE(m).index(mi, i));
                    for (const auto& [w, a] : cA.enumerate_basis(n - m))
                        span.push_back(conn.wedge_into(m, col, cA.basis_form(w, a)));
                }
            fc.filt[n].push_back(span_of(fc.dims[n], span));
        }
    }
    fc.validate();
    return fc;
}

Vec CohomologySpace::class_of(const Vec& ambient) const {
    return quot.project(coords_in(ker, ambient));
}

CohomologySpace cohomology_at(const Matrix& d_in, const Matrix& d_out) {
    if (d_in.rows() != d_out.cols()) throw Error("cohomology_at: shape mismatch");
    CohomologySpace h;
    h.ker = kernel_basis(d_out);
    h.im = image_basis(d_in);
    h.quot = subquotient(h.ker, h.im);  // throws if im is not inside ker
    for (const Vec& r : h.quot.representatives.basis) {
        Vec amb(h.ker.ambient_dim);
        for (int j = 0; j < h.ker.dim(); ++j) axpy(r[j], h.ker.basis[j], amb);
        h.reps.push_back(std::move(amb));
    }
    return h;
}

Vec FibreData::class_in_m(int p, int q, const Vec& ambient) const {
    return m[p][q].project(coords_in(fc.F(p, p + q), ambient));
}

FibreData quotients(const FilteredComplex& fc) {
    const int N = fc.max_degree();
    FibreData fd;
    fd.fc = fc;
    fd.m.resize(N + 1);
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            fd.m[p].push_back(subquotient(fc.F(p, p + q), fc.F(p + 1, p + q)));
    for (int q = 0; q <= N; ++q) fd.n.push_back(fd.m[0][q]);
    for (int q = 0; q < N; ++q) {
        Matrix nd(fd.n[q + 1].dim(), fd.n[q].dim());
        for (int j = 0; j < fd.n[q].dim(); ++j) {
            Vec img = fd.n[q + 1].project(fc.d[q].apply(fd.n[q].representatives.basis[j]));
            for (int i = 0; i < nd.rows(); ++i) nd.at(i, j) = img[i];
        }
        fd.nd.push_back(std::move(nd));
    }
    for (int q = 0; q <= N; ++q) {
        Matrix d_in = q > 0 ? fd.nd[q - 1] : Matrix(fd.n[0].dim(), 0);
        Matrix d_out = q < N ? fd.nd[q] : Matrix(0, fd.n[q].dim());
        fd.hq.push_back(cohomology_at(d_in, d_out));
    }
    return fd;
}

Fibration::Fibration(const BimoduleConnection* conn, int max_total_degree)
    : conn_(conn), fd_(quotients(build_filtered_complex(*conn, max_total_degree))) {}

GMap Fibration::g_map(int p, int q) const {
    const Calculus& cA = conn_->calcA();
    const Calculus& cB = conn_->calcB();
    const Matrix& sp = conn_->sigma_matrix(p);
    const int dimE = conn_->bimodule().dim;
    const int nb = int(cB.monomials(p).size());
    const int ndim = fd_.n[q].dim();
    const auto& monos_q = cA.monomials(q);

    auto image_of = [&](int mi, const Vec& ambient) {
        Vec v(conn_->C(p + q).dim());
        for (int t = 0; t < int(ambient.size()); ++t) {
            if (ambient[t].is_zero()) continue;
            int tm = t / dimE, i = t % dimE;
            Vec s = sp.column(conn_->BE(p).index(mi, i));
            axpy(ambient[t], conn_->wedge_into(p, s, cA.mono_form(monos_q[tm])), v);
        }
        return v;
    };

    // Well-definedness over the N-quotient: F^1 C^q must land in F^{p+1}.
    for (int mi = 0; mi < nb; ++mi)
        for (const Vec& f1 : fd_.fc.F(1, q).basis)
            if (!fd_.fc.F(p + 1, p + q).contains(image_of(mi, f1)))
                throw Error("g map: not well defined on fibre classes at " + cell_str(p, q));

    GMap out;
    out.g = Matrix(fd_.m[p][q].dim(), nb * ndim);
    for (int mi = 0; mi < nb; ++mi)
        for (int j = 0; j < ndim; ++j) {
            Vec col = fd_.class_in_m(p, q, image_of(mi, fd_.n[q].representatives.basis[j]));
            for (int r = 0; r < out.g.rows(); ++r) out.g.at(r, mi * ndim + j) = col[r];
        }
    out.is_isomorphism = out.g.rows() == out.g.cols() && rank(out.g) == out.g.rows();
    return out;
}

FibrationVerdict Fibration::verdict() const {
    FibrationVerdict v;
    for (int p = 0; p <= fd_.max_degree(); ++p)
        for (int q = 0; p + q <= fd_.max_degree(); ++q) {
            bool iso = false;
            std::string why = "g is not an isomorphism at " + cell_str(p, q);
            try {
                iso = g_map(p, q).is_isomorphism;
            } catch (const Error& e) {
                why = e.what();
            }
            v.cells.push_back({p, q, iso});
            if (!iso && v.pass) {
                v.pass = false;
                v.witness = why;
            }
        }
    return v;
}

CheckReport Fibration::commuting_square_check() const {
    const int N = fd_.max_degree();
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q < N; ++q) {
            GMap g1 = g_map(p, q), g2 = g_map(p, q + 1);
            const int ndim = fd_.n[q].dim();
            const int nb = int(conn_->calcB().monomials(p).size());
            const Scalar sign = (p % 2 == 0) ? Scalar(1) : Scalar(-1);
            for (int mi = 0; mi < nb; ++mi)
                for (int j = 0; j < ndim; ++j) {
                    // [nabla] of the g image
                    Vec mcls = g1.g.column(mi * ndim + j);
                    Vec amb(fd_.fc.dims[p + q]);
                    for (int t = 0; t < fd_.m[p][q].dim(); ++t) {
                        if (mcls[t].is_zero()) continue;
                        Vec rep(fd_.fc.dims[p + q]);
                        const Vec& rc = fd_.m[p][q].representatives.basis[t];
                        for (int s = 0; s < int(rc.size()); ++s)
                            axpy(rc[s], fd_.fc.F(p, p + q).basis[s], rep);
                        axpy(mcls[t], rep, amb);
                    }
                    Vec lhs = fd_.class_in_m(p, q + 1, fd_.fc.d[p + q].apply(amb));
                    // g of (id tensor [nabla])
                    Vec src(g2.g.cols());
                    Vec ndcol = fd_.nd[q].column(j);
                    for (int k = 0; k < fd_.n[q + 1].dim(); ++k)
                        src[mi * fd_.n[q + 1].dim() + k] = sign * ndcol[k];
                    if (lhs != g2.g.apply(src))
                        return {false, "commuting square fails at " + cell_str(p, q)};
                }
        }
    return {true, ""};
}

Vec Fibration::hq_class_of_ambient(int q, const Vec& ambient) const {
    return fd_.hq[q].class_of(fd_.n[q].project(ambient));
}

Vec Fibration::nabla_q_ambient(int q, const Vec& ambient) const {
    const int hdim = fd_.hq[q].dim();
    const int gens = conn_->calcB().gen_count();
    Vec out(gens * hdim);
    if (q == fd_.max_degree()) return out;  // truncated: d = 0 at the top

    const Calculus& cA = conn_->calcA();
    const Vec y = fd_.fc.d[q].apply(ambient);

    // Decompose dx as a combination of sigma(g tensor e_i) ^ (basis of
    // Omega^q_A), then read off g tensor [[e_i tensor eta]].
    struct Label {
        int g, i, basis;
    };
    std::vector<Label> labels;
    std::vector<Vec> cols;
    const Matrix& s1 = conn_->sigma_matrix(1);
    const auto basisA = cA.enumerate_basis(q);
    for (int g = 0; g < gens; ++g)
        for (int i = 0; i < conn_->bimodule().dim; ++i) {
            Vec s = s1.column(conn_->BE(1).index(g, i));
            for (int t = 0; t < int(basisA.size()); ++t) {
                labels.push_back({g, i, t});
                cols.push_back(
                    conn_->wedge_into(1, s, cA.basis_form(basisA[t].first, basisA[t].second)));
            }
        }
    auto c = solve_linear(Matrix::from_columns(int(y.size()), cols), y);
    if (!c)
        throw Error("induced connection: no sigma decomposition of the differential at degree " +
                    std::to_string(q));
    for (size_t t = 0; t < labels.size(); ++t) {
        if ((*c)[t].is_zero()) continue;
        Vec z = conn_->C(q).push(labels[t].i,
                                 cA.basis_form(basisA[labels[t].basis].first,
                                               basisA[labels[t].basis].second));
        Vec h = hq_class_of_ambient(q, z);
        for (int k = 0; k < hdim; ++k) out[labels[t].g * hdim + k] += (*c)[t] * h[k];
    }
    return out;
}

Matrix Fibration::b_action_on_hq(int b, int q) const {
    const CohomologySpace& h = fd_.hq[q];
    const int dimB = conn_->calcB().algebra().dim;
    Matrix out(h.dim(), h.dim());
    for (int j = 0; j < h.dim(); ++j) {
        Vec amb = conn_->C(q).act_left(unit_vec(dimB, b), fd_.n[q].lift(h.reps[j]));
        Vec cls = hq_class_of_ambient(q, amb);
        for (int i = 0; i < h.dim(); ++i) out.at(i, j) = cls[i];
    }
    return out;
}

const Matrix& Fibration::induced_connection(int q) const {
    auto it = nabla_q_cache_.find(q);
    if (it != nabla_q_cache_.end()) return it->second;

    const CohomologySpace& h = fd_.hq[q];
    const Calculus& cB = conn_->calcB();
    const int hdim = h.dim(), gens = cB.gen_count(), dimB = cB.algebra().dim;
    Matrix m(gens * hdim, hdim);
    for (int j = 0; j < hdim; ++j) {
        Vec col = nabla_q_ambient(q, fd_.n[q].lift(h.reps[j]));
        for (int r = 0; r < m.rows(); ++r) m.at(r, j) = col[r];
    }

    // Well-definedness: representatives may change by a coboundary of the
    // fibre complex or by an element of F^1; both must map to zero.
    for (const Vec& w : h.im.basis)
        if (!is_zero(nabla_q_ambient(q, fd_.n[q].lift(w))))
            throw Error("induced connection: depends on the coboundary representative at degree " +
                        std::to_string(q));
    for (const Vec& f1 : fd_.fc.F(1, q).basis)
        if (!is_zero(nabla_q_ambient(q, f1)))
            throw Error("induced connection: depends on the F^1 representative at degree " +
                        std::to_string(q));

    // Left Leibniz: nabla_q(b h) = [db] tensor h + b nabla_q(h).
    for (int b = 0; b < dimB; ++b) {
        Matrix bact = b_action_on_hq(b, q);
        for (int j = 0; j < hdim; ++j) {
            Vec lhs = m.apply(bact.column(j));
            Vec rhs(gens * hdim);
            for (const auto& [key, c] : cB.d0(b).terms) {
                const auto& [w, b2] = key;
                Vec hv = b_action_on_hq(b2, q).column(j);
                for (int k = 0; k < hdim; ++k) rhs[w[0] * hdim + k] += c * hv[k];
            }
            for (int g = 0; g < gens; ++g) {
                FormElement bg = left_mul(unit_vec(dimB, b), cB.mono_form(Word{g}));
                for (const auto& [key, c] : bg.terms) {
                    const auto& [w, b2] = key;
                    for (int k = 0; k < hdim; ++k) {
                        const Scalar& c2 = m.at(g * hdim + k, j);
                        if (c2.is_zero()) continue;
                        Vec hv = b_action_on_hq(b2, q).column(k);
                        for (int t = 0; t < hdim; ++t) rhs[w[0] * hdim + t] += c * c2 * hv[t];
                    }
                }
            }
            if (lhs != rhs)
                throw Error("induced connection: left Leibniz rule fails at degree " +
                            std::to_string(q));
        }
    }

    const Matrix& stored = nabla_q_cache_.emplace(q, std::move(m)).first->second;
    if (!(sheaf_d(1, q) * sheaf_d(0, q)).is_zero())
        throw Error("induced connection: nonzero curvature at degree " + std::to_string(q));
    return stored;
}

int Fibration::sheaf_space_dim(int p, int q) const {
    return int(conn_->calcB().monomials(p).size()) * fd_.hq[q].dim();
}

Matrix Fibration::sheaf_d(int p, int q) const {
    const Matrix& nq = induced_connection(q);
    const Calculus& cB = conn_->calcB();
    const int hdim = fd_.hq[q].dim(), gens = cB.gen_count();
    const auto& monos = cB.monomials(p);
    const Scalar sign = (p % 2 == 0) ? Scalar(1) : Scalar(-1);
    std::map<int, Matrix> bact;
    auto act = [&](int b) -> const Matrix& {
        auto it = bact.find(b);
        if (it == bact.end()) it = bact.emplace(b, b_action_on_hq(b, q)).first;
        return it->second;
    };

    Matrix out(sheaf_space_dim(p + 1, q), sheaf_space_dim(p, q));
    for (int mi = 0; mi < int(monos.size()); ++mi) {
        FormElement dw = d_form(cB.mono_form(monos[mi]));
        for (int j = 0; j < hdim; ++j) {
            Vec col(out.rows());
            for (const auto& [key, c] : dw.terms) {
                const auto& [w, b] = key;
                Vec hv = act(b).column(j);
                int wi = cB.mono_index(p + 1, w);
                for (int k = 0; k < hdim; ++k) col[wi * hdim + k] += c * hv[k];
            }
            for (int g = 0; g < gens; ++g) {
                FormElement wg = wedge(cB.mono_form(monos[mi]), cB.mono_form(Word{g}));
                for (int k = 0; k < hdim; ++k) {
                    const Scalar& c2 = nq.at(g * hdim + k, j);
                    if (c2.is_zero()) continue;
                    for (const auto& [key, c] : wg.terms) {
                        const auto& [w, b] = key;
                        Vec hv = act(b).column(k);
                        int wi = cB.mono_index(p + 1, w);
                        for (int t = 0; t < hdim; ++t)
                            col[wi * hdim + t] += sign * c2 * c * hv[t];
                    }
                }
            }
            for (int r = 0; r < out.rows(); ++r) out.at(r, mi * hdim + j) = col[r];
        }
    }
    return out;
}

CohomologySpace Fibration::sheaf_cohomology(int p, int q) const {
    Matrix d_in = p > 0 ? sheaf_d(p - 1, q) : Matrix(sheaf_space_dim(0, q), 0);
    Matrix d_out = sheaf_d(p, q);
    return cohomology_at(d_in, d_out);
}

CheckReport Fibration::lemma_dimension_check() const {
    const int N = fd_.max_degree();
    for (int p = 0; p <= N; ++p) {
        // Cohomology of the complex M_{p,*} with the induced differential.
        std::vector<Matrix> md;
        for (int q = 0; p + q < N; ++q) {
            Matrix d(fd_.m[p][q + 1].dim(), fd_.m[p][q].dim());
            for (int j = 0; j < fd_.m[p][q].dim(); ++j) {
                Vec amb(fd_.fc.dims[p + q]);
                const Vec& rc = fd_.m[p][q].representatives.basis[j];
                for (int s = 0; s < int(rc.size()); ++s)
                    axpy(rc[s], fd_.fc.F(p, p + q).basis[s], amb);
                Vec img = fd_.class_in_m(p, q + 1, fd_.fc.d[p + q].apply(amb));
                for (int i = 0; i < d.rows(); ++i) d.at(i, j) = img[i];
            }
            md.push_back(std::move(d));
        }
        // Cells on the top anti-diagonal p + q = N see an artificially
        // truncated column complex (the next differential would leave the
        // stored degree range), so only interior cells are compared.
        for (int q = 0; p + q < N; ++q) {
            Matrix d_in = q > 0 ? md[q - 1] : Matrix(fd_.m[p][0].dim(), 0);
            Matrix d_out = q < int(md.size()) ? md[q] : Matrix(0, fd_.m[p][q].dim());
            int dim_m = cohomology_at(d_in, d_out).dim();
            if (dim_m != sheaf_space_dim(p, q))
                return {false, "fibre cohomology of M differs from Omega^p tensor H^q at " +
                                   cell_str(p, q) + ": " + std::to_string(dim_m) + " vs " +
                                   std::to_string(sheaf_space_dim(p, q))};
        }
    }
    return {true, ""};
}

FibrationVerdict is_fibration(const BimoduleConnection& conn, int max_total_degree) {
    if (!conn.is_flat()) return {false, {}, "connection has nonzero curvature"};
    CheckReport ext = conn.extendability_check(max_total_degree);
    if (!ext.pass) return {false, {}, ext.witness};
    Fibration f(&conn, max_total_degree);
    return f.verdict();
}

}  // namespace ncfib
