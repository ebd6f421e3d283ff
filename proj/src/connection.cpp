#include "ncfib/connection.hpp"

#include <algorithm>
#include <sstream>

namespace ncfib {

namespace {

Vec unit_vec(int dim, int idx) {
    Vec v(dim);
    v[idx] = Scalar(1);
    return v;
}

// w . x_a = sum c x_a . w': every letter moves past the algebra basis element
// independently (the commutation rules keep the algebra element fixed).
std::vector<std::pair<Scalar, Word>> pass_right_to_left(const Calculus& calc, const Word& w,
                                                        int alg_idx) {
    std::vector<std::pair<Scalar, Word>> res{{Scalar(1), Word{}}};
    for (int g : w) {
        std::vector<std::pair<Scalar, Word>> next;
        for (const auto& [c, v] : res)
            for (const auto& [k, ck] : calc.rev_comm(alg_idx, g)) {
                Word v2 = v;
                v2.push_back(k);
                next.emplace_back(c * ck, std::move(v2));
            }
        res = std::move(next);
    }
    return res;
}

std::string word_str(const Calculus& calc, const Word& w) {
    std::string s;
    for (int g : w) {
        if (!s.empty()) s += "^";
        s += calc.gen_names()[g];
    }
    return s.empty() ? "1" : s;
}

}  // namespace

Vec Bimodule::act_left(const Vec& b, const Vec& e) const {
    Vec out(dim);
    for (int i = 0; i < left_alg->dim; ++i) {
        if (b[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (e[j].is_zero()) continue;
            for (const auto& [k, c] : left_action[i][j]) out[k] += b[i] * e[j] * c;
        }
    }
    return out;
}

Vec Bimodule::act_right(const Vec& e, const Vec& a) const {
    Vec out(dim);
    for (int j = 0; j < dim; ++j) {
        if (e[j].is_zero()) continue;
        for (int i = 0; i < right_alg->dim; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& [k, c] : right_action[j][i]) out[k] += e[j] * a[i] * c;
        }
    }
    return out;
}

void Bimodule::validate() const {
    if (!left_alg || !right_alg) throw Error("bimodule: missing acting algebra");
    if (int(left_action.size()) != left_alg->dim || int(right_action.size()) != dim)
        throw Error("bimodule: action table size mismatch");

    auto basis = [&](int idx) { return unit_vec(dim, idx); };
    for (int i = 0; i < dim; ++i) {
        if (act_left(left_alg->unit, basis(i)) != basis(i))
            throw Error("bimodule: left unit does not act as identity");
        if (act_right(basis(i), right_alg->unit) != basis(i))
            throw Error("bimodule: right unit does not act as identity");
    }
    for (int b1 = 0; b1 < left_alg->dim; ++b1)
        for (int b2 = 0; b2 < left_alg->dim; ++b2) {
            Vec prod = to_dense(left_alg->mul[b1][b2], left_alg->dim);
            for (int i = 0; i < dim; ++i) {
                Vec lhs = act_left(prod, basis(i));
                Vec rhs = act_left(unit_vec(left_alg->dim, b1),
                                   act_left(unit_vec(left_alg->dim, b2), basis(i)));
                if (lhs != rhs) throw Error("bimodule: left action is not associative");
            }
        }
    for (int a1 = 0; a1 < right_alg->dim; ++a1)
        for (int a2 = 0; a2 < right_alg->dim; ++a2) {
            Vec prod = to_dense(right_alg->mul[a1][a2], right_alg->dim);
            for (int i = 0; i < dim; ++i) {
                Vec lhs = act_right(basis(i), prod);
                Vec rhs = act_right(act_right(basis(i), unit_vec(right_alg->dim, a1)),
                                    unit_vec(right_alg->dim, a2));
                if (lhs != rhs) throw Error("bimodule: right action is not associative");
            }
        }
    for (int b = 0; b < left_alg->dim; ++b)
        for (int a = 0; a < right_alg->dim; ++a)
            for (int i = 0; i < dim; ++i) {
                Vec eb = unit_vec(left_alg->dim, b), ea = unit_vec(right_alg->dim, a);
                if (act_right(act_left(eb, basis(i)), ea) != act_left(eb, act_right(basis(i), ea)))
                    throw Error("bimodule: left and right actions do not commute");
            }
}

CochainSpace::CochainSpace(const Bimodule* bim, const Calculus* calcA, int degree)
    : bim_(bim), calcA_(calcA), degree_(degree), monos_(calcA->monomials(degree)) {}

Vec CochainSpace::push(int e_idx, const FormElement& x) const {
    if (x.degree != degree_) throw Error("cochain push: degree mismatch");
    Vec out(dim());
    for (const auto& [key, c] : x.terms) {
        const auto& [w, a] = key;
        const SparseVec& ra = bim_->right_action[e_idx][a];
        if (ra.empty()) continue;
        for (const auto& [cp, wp] : pass_right_to_left(*calcA_, w, a))
            for (const auto& [m, cm] : calcA_->normalize(wp)) {
                int mi = calcA_->mono_index(degree_, m);
                for (const auto& [j, cj] : ra) out[index(mi, j)] += c * cp * cm * cj;
            }
    }
    return out;
}

Vec CochainSpace::push_elem(const Vec& e, const FormElement& x) const {
    Vec out(dim());
    for (int i = 0; i < bim_->dim; ++i)
        if (!e[i].is_zero()) axpy(e[i], push(i, x), out);
    return out;
}

Vec CochainSpace::act_left(const Vec& b, const Vec& coords) const {
    Vec out(dim());
    for (int mi = 0; mi < int(monos_.size()); ++mi)
        for (int j = 0; j < bim_->dim; ++j) {
            const Scalar& c = coords[index(mi, j)];
            if (c.is_zero()) continue;
            for (int bi = 0; bi < bim_->left_alg->dim; ++bi) {
                if (b[bi].is_zero()) continue;
                for (const auto& [k, ck] : bim_->left_action[bi][j])
                    out[index(mi, k)] += c * b[bi] * ck;
            }
        }
    return out;
}

Vec CochainSpace::act_right(const Vec& coords, const Vec& a) const {
    Vec out(dim());
    for (int mi = 0; mi < int(monos_.size()); ++mi) {
        FormElement ma = right_mul(calcA_->mono_form(monos_[mi]), a);
        for (int j = 0; j < bim_->dim; ++j) {
            const Scalar& c = coords[index(mi, j)];
            if (!c.is_zero()) axpy(c, push(j, ma), out);
        }
    }
    return out;
}

TensorBE::TensorBE(const Bimodule* bim, const Calculus* calcB, int degree)
    : bim_(bim), calcB_(calcB), degree_(degree), monos_(calcB->monomials(degree)) {}

Vec TensorBE::push(const FormElement& xi, int e_idx) const {
    if (xi.degree != degree_) throw Error("tensor push: degree mismatch");
    Vec out(dim());
    for (const auto& [key, c] : xi.terms) {
        const auto& [w, b] = key;
        int mi = calcB_->mono_index(degree_, w);
        for (const auto& [j, cj] : bim_->left_action[b][e_idx]) out[index(mi, j)] += c * cj;
    }
    return out;
}

Vec TensorBE::act_left(const Vec& b, const Vec& coords) const {
    Vec out(dim());
    for (int mi = 0; mi < int(monos_.size()); ++mi) {
        FormElement bm = left_mul(b, calcB_->mono_form(monos_[mi]));
        for (int i = 0; i < bim_->dim; ++i) {
            const Scalar& c = coords[index(mi, i)];
            if (!c.is_zero()) axpy(c, push(bm, i), out);
        }
    }
    return out;
}

Vec TensorBE::act_right(const Vec& coords, const Vec& a) const {
    Vec out(dim());
    for (int mi = 0; mi < int(monos_.size()); ++mi)
        for (int i = 0; i < bim_->dim; ++i) {
            const Scalar& c = coords[index(mi, i)];
            if (c.is_zero()) continue;
            for (int ai = 0; ai < bim_->right_alg->dim; ++ai) {
                if (a[ai].is_zero()) continue;
                for (const auto& [j, cj] : bim_->right_action[i][ai])
                    out[index(mi, j)] += c * a[ai] * cj;
            }
        }
    return out;
}

BimoduleConnection::BimoduleConnection(const Bimodule* bim, const Calculus* calcA,
                                       const Calculus* calcB, std::vector<Vec> nabla0,
                                       std::vector<std::vector<Vec>> sigma_gen)
    : bim_(bim),
      calcA_(calcA),
      calcB_(calcB),
      nabla0_(std::move(nabla0)),
      sigma_gen_(std::move(sigma_gen)) {
    if (int(nabla0_.size()) != bim_->dim) throw Error("connection: nabla size mismatch");
    if (int(sigma_gen_.size()) != calcB_->gen_count())
        throw Error("connection: sigma size mismatch");
}

const CochainSpace& BimoduleConnection::C(int n) const {
    auto it = c_cache_.find(n);
    if (it == c_cache_.end())
        it = c_cache_.emplace(n, CochainSpace(bim_, calcA_, n)).first;
    return it->second;
}

const TensorBE& BimoduleConnection::BE(int p) const {
    auto it = be_cache_.find(p);
    if (it == be_cache_.end()) it = be_cache_.emplace(p, TensorBE(bim_, calcB_, p)).first;
    return it->second;
}

Vec BimoduleConnection::wedge_into(int from_degree, const Vec& coords,
                                   const FormElement& x) const {
    const CochainSpace& src = C(from_degree);
    const CochainSpace& dst = C(from_degree + x.degree);
    Vec out(dst.dim());
    for (int mi = 0; mi < int(src.monomials().size()); ++mi) {
        FormElement w = wedge(calcA_->mono_form(src.monomials()[mi]), x);
        for (int j = 0; j < bim_->dim; ++j) {
            const Scalar& c = coords[src.index(mi, j)];
            if (!c.is_zero()) axpy(c, dst.push(j, w), out);
        }
    }
    return out;
}

const Matrix& BimoduleConnection::nabla_matrix(int n) const {
    auto it = nabla_cache_.find(n);
    if (it != nabla_cache_.end()) return it->second;
    const CochainSpace& src = C(n);
    const CochainSpace& dst = C(n + 1);
    Matrix m(dst.dim(), src.dim());
    for (int mi = 0; mi < int(src.monomials().size()); ++mi) {
        FormElement mono = calcA_->mono_form(src.monomials()[mi]);
        FormElement dm = d_form(mono);
        for (int i = 0; i < bim_->dim; ++i) {
            Vec col = dst.push(i, dm);
            col = col + wedge_into(1, nabla0_[i], mono);
            for (int r = 0; r < dst.dim(); ++r) m.at(r, src.index(mi, i)) = col[r];
        }
    }
    return nabla_cache_.emplace(n, std::move(m)).first->second;
}

Vec BimoduleConnection::sigma_wedge_gen(int gen, const Vec& c_coords, int c_degree) const {
    const CochainSpace& src = C(c_degree);
    const CochainSpace& dst = C(c_degree + 1);
    Vec out(dst.dim());
    for (int mi = 0; mi < int(src.monomials().size()); ++mi) {
        FormElement mono = calcA_->mono_form(src.monomials()[mi]);
        for (int j = 0; j < bim_->dim; ++j) {
            const Scalar& c = c_coords[src.index(mi, j)];
            if (c.is_zero()) continue;
            const Vec& sg = sigma_gen_[gen][j];
            for (int m1 = 0; m1 < int(C(1).monomials().size()); ++m1) {
                FormElement lead = calcA_->mono_form(C(1).monomials()[m1]);
                for (int k = 0; k < bim_->dim; ++k) {
                    const Scalar& c2 = sg[C(1).index(m1, k)];
                    if (c2.is_zero()) continue;
                    axpy(c * c2, dst.push(k, wedge(lead, mono)), out);
                }
            }
        }
    }
    return out;
}

const Matrix& BimoduleConnection::sigma_matrix(int p) const {
    auto it = sigma_cache_.find(p);
    if (it != sigma_cache_.end()) return it->second;
    Matrix m;
    if (p == 0) {
        m = Matrix::identity(C(0).dim());
    } else {
        const Matrix& prev = sigma_matrix(p - 1);
        const TensorBE& src = BE(p);
        m = Matrix(C(p).dim(), src.dim());
        for (int mi = 0; mi < int(src.monomials().size()); ++mi) {
            const Word& w = src.monomials()[mi];
            Word rest(w.begin() + 1, w.end());
            int ri = calcB_->mono_index(p - 1, rest);
            for (int i = 0; i < bim_->dim; ++i) {
                Vec col = sigma_wedge_gen(w[0], prev.column(BE(p - 1).index(ri, i)), p - 1);
                for (int r = 0; r < int(col.size()); ++r) m.at(r, src.index(mi, i)) = col[r];
            }
        }
    }
    return sigma_cache_.emplace(p, std::move(m)).first->second;
}

Vec BimoduleConnection::sigma_word(const Word& w, int e_idx) const {
    if (w.empty()) return unit_vec(C(0).dim(), C(0).index(0, e_idx));
    Word rest(w.begin() + 1, w.end());
    return sigma_wedge_gen(w[0], sigma_word(rest, e_idx), int(rest.size()));
}

Matrix BimoduleConnection::curvature() const { return nabla_matrix(1) * nabla_matrix(0); }

void BimoduleConnection::check_connection_axioms() const {
    const int dimE = bim_->dim;
    const FiniteDimAlgebra& A = calcA_->algebra();
    const FiniteDimAlgebra& B = calcB_->algebra();

    // The basis (monomial, E basis) realizes E tensor_A Omega^n: the relation
    // (e.a) tensor m = e tensor a.m must hold on coordinates.
    for (int n = 1; n <= 2; ++n) {
        const CochainSpace& Cn = C(n);
        for (int mi = 0; mi < int(Cn.monomials().size()); ++mi) {
            FormElement mono = calcA_->mono_form(Cn.monomials()[mi]);
            for (int a = 0; a < A.dim; ++a) {
                FormElement am = left_mul(unit_vec(A.dim, a), mono);
                for (int i = 0; i < dimE; ++i) {
                    Vec lhs(Cn.dim());
                    for (const auto& [j, cj] : bim_->right_action[i][a]) lhs[Cn.index(mi, j)] = cj;
                    if (lhs != Cn.push(i, am))
                        throw Error("connection: tensor-over-A relation fails at " +
                                    bim_->labels[i] + " * " + A.labels[a]);
                }
            }
        }
    }

    // nabla(e.a) = nabla(e).a + e tensor da
    const CochainSpace& C1 = C(1);
    for (int i = 0; i < dimE; ++i)
        for (int a = 0; a < A.dim; ++a) {
            Vec lhs(C1.dim());
            for (const auto& [j, cj] : bim_->right_action[i][a]) axpy(cj, nabla0_[j], lhs);
            Vec rhs = C1.act_right(nabla0_[i], unit_vec(A.dim, a)) + C1.push(i, calcA_->d0(a));
            if (lhs != rhs)
                throw Error("connection: right Leibniz rule fails at " + bim_->labels[i] + " * " +
                            A.labels[a]);
        }

    const Matrix& S1 = sigma_matrix(1);
    for (int g = 0; g < calcB_->gen_count(); ++g)
        for (int i = 0; i < dimE; ++i) {
            for (int b = 0; b < B.dim; ++b) {
                Vec eb = unit_vec(B.dim, b);
                Vec src = BE(1).push(left_mul(eb, calcB_->mono_form(Word{g})), i);
                if (S1.apply(src) != C1.act_left(eb, sigma_gen_[g][i]))
                    throw Error("connection: sigma is not a left module map at " + B.labels[b] +
                                " * (" + calcB_->gen_names()[g] + " tensor " + bim_->labels[i] +
                                ")");
            }
            for (int a = 0; a < A.dim; ++a) {
                Vec lhs(C1.dim());
                for (const auto& [j, cj] : bim_->right_action[i][a]) axpy(cj, sigma_gen_[g][j], lhs);
                if (lhs != C1.act_right(sigma_gen_[g][i], unit_vec(A.dim, a)))
                    throw Error("connection: sigma is not a right module map at (" +
                                calcB_->gen_names()[g] + " tensor " + bim_->labels[i] + ") * " +
                                A.labels[a]);
            }
        }

    // nabla(b.e) = sigma(db tensor e) + b.nabla(e)
    for (int b = 0; b < B.dim; ++b)
        for (int i = 0; i < dimE; ++i) {
            Vec lhs(C1.dim());
            for (const auto& [j, cj] : bim_->left_action[b][i]) axpy(cj, nabla0_[j], lhs);
            Vec rhs = S1.apply(BE(1).push(calcB_->d0(b), i)) +
                      C1.act_left(unit_vec(B.dim, b), nabla0_[i]);
            if (lhs != rhs)
                throw Error("connection: left twisted Leibniz rule fails at " + B.labels[b] +
                            " * " + bim_->labels[i]);
        }
}

CheckReport BimoduleConnection::extendability_check(int max_degree) const {
    const int gens = calcB_->gen_count();
    std::vector<Word> words{{}};
    for (int len = 1; len <= max_degree; ++len) {
        std::vector<Word> next;
        for (const Word& w : words)
            for (int g = 0; g < gens; ++g) {
                Word w2 = w;
                w2.push_back(g);
                next.push_back(std::move(w2));
            }
        words = std::move(next);
        for (const Word& w : words)
            for (int i = 0; i < bim_->dim; ++i) {
                Vec lhs = sigma_word(w, i);
                Vec rhs(C(len).dim());
                for (const auto& [m, c] : calcB_->normalize(w)) axpy(c, sigma_word(m, i), rhs);
                if (lhs != rhs)
                    return {false, "sigma does not factor through relations at " +
                                       word_str(*calcB_, w) + " tensor " + bim_->labels[i]};
            }
    }
    return {true, ""};
}

CheckReport BimoduleConnection::nabla_sigma_identity_check(int n) const {
    const Matrix& Sn = sigma_matrix(n);
    const Matrix& Sn1 = sigma_matrix(n + 1);
    const Matrix& Nn = nabla_matrix(n);
    const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (int mi = 0; mi < int(BE(n).monomials().size()); ++mi) {
        const Word& w = BE(n).monomials()[mi];
        FormElement dmono = d_form(calcB_->mono_form(w));
        for (int i = 0; i < bim_->dim; ++i) {
            Vec lhs = Nn.apply(Sn.column(BE(n).index(mi, i)));
            Vec rhs = Sn1.apply(BE(n + 1).push(dmono, i));
            for (int m1 = 0; m1 < int(C(1).monomials().size()); ++m1)
                for (int j = 0; j < bim_->dim; ++j) {
                    const Scalar& c = nabla0_[i][C(1).index(m1, j)];
                    if (c.is_zero()) continue;
                    Vec s = wedge_into(n, Sn.column(BE(n).index(mi, j)),
                                       calcA_->mono_form(C(1).monomials()[m1]));
                    axpy(sign * c, s, rhs);
                }
            if (lhs != rhs)
                return {false, "nabla/sigma compatibility fails at " + word_str(*calcB_, w) +
                                   " tensor " + bim_->labels[i] + " in degree " +
                                   std::to_string(n)};
        }
    }
    return {true, ""};
}

CheckReport BimoduleConnection::curvature_composition_check(int n) const {
    Matrix lhs = nabla_matrix(n + 1) * nabla_matrix(n);
    Matrix r = curvature();
    const CochainSpace& src = C(n);
    for (int mi = 0; mi < int(src.monomials().size()); ++mi) {
        FormElement mono = calcA_->mono_form(src.monomials()[mi]);
        for (int i = 0; i < bim_->dim; ++i) {
            Vec rhs = wedge_into(2, r.column(i), mono);
            if (lhs.column(src.index(mi, i)) != rhs)
                return {false, "nabla^2 differs from R ^ id at " +
                                   word_str(*calcA_, src.monomials()[mi]) + " tensor " +
                                   bim_->labels[i]};
        }
    }
    return {true, ""};
}

bool BimoduleConnection::curvature_left_module_map() const {
    Matrix r = curvature();
    const FiniteDimAlgebra& B = calcB_->algebra();
    for (int b = 0; b < B.dim; ++b)
        for (int i = 0; i < bim_->dim; ++i) {
            Vec lhs(C(2).dim());
            for (const auto& [j, cj] : bim_->left_action[b][i]) axpy(cj, r.column(j), lhs);
            if (lhs != C(2).act_left(unit_vec(B.dim, b), r.column(i))) return false;
        }
    return true;
}

GroupConnectionData group_connection_data(const FiniteDimAlgebra* algB,
                                          const GroupCalculusData& dataA,
                                          const std::vector<int>& subgroup) {
    const int gens = int(dataA.gen_names.size());

    // The standard dot product must be invariant so that the orthogonal
    // complement construction is equivariant.
    for (const Matrix& r : dataA.rho)
        if (r * r.transpose() != Matrix::identity(gens))
            throw Error("group connection: rho does not preserve the standard dot product");

    std::vector<Vec> ws;
    for (int g : subgroup) ws.push_back(dataA.omega[g]);
    GroupConnectionData out;
    out.w = span_of(gens, ws);
    out.w_perp = kernel_basis(out.w.as_matrix().transpose());

    for (int g : subgroup)
        for (const Vec& v : out.w_perp.basis)
            if (!out.w_perp.contains(dataA.rho[g].transpose().apply(v)))
                throw Error("group connection: the complement of W is not stable under " +
                            dataA.alg->labels[g]);

    GroupCalculusData& dB = out.dataB;
    dB.alg = algB;
    const int m = int(subgroup.size());
    dB.table.assign(m, std::vector<int>(m));
    std::vector<int> local(dataA.table.size(), -1);
    for (int i = 0; i < m; ++i) local[subgroup[i]] = i;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int prod = dataA.table[subgroup[i]][subgroup[j]];
            if (local[prod] < 0) throw Error("group connection: subgroup is not closed");
            dB.table[i][j] = local[prod];
        }

    const int wd = out.w.dim();
    if (wd == 1)
        dB.gen_names = {"f"};
    else
        for (int k = 0; k < wd; ++k) dB.gen_names.push_back("w" + std::to_string(k + 1));
    for (int i = 0; i < m; ++i) {
        int g = subgroup[i];
        std::vector<Vec> cols;
        for (const Vec& wk : out.w.basis)
            cols.push_back(coords_in(out.w, dataA.rho[g].transpose().apply(wk)));
        dB.rho.push_back(Matrix::from_columns(wd, cols).transpose());
        dB.omega.push_back(coords_in(out.w, dataA.omega[g]));
    }
    return out;
}

ConnectionBundle group_connection(std::shared_ptr<FiniteDimAlgebra> algA,
                                  std::shared_ptr<Calculus> calcA, const GroupCalculusData& dataA,
                                  const std::vector<int>& subgroup) {
    ConnectionBundle out;
    out.algA = algA;
    out.calcA = calcA;

    // Build the subgroup algebra first; its calculus is the restriction of
    // omega to W = span omega(subgroup).
    std::vector<std::string> labels;
    for (int g : subgroup) labels.push_back(algA->labels[g]);
    std::vector<int> local(dataA.table.size(), -1);
    for (int i = 0; i < int(subgroup.size()); ++i) local[subgroup[i]] = i;
    std::vector<std::vector<int>> table(subgroup.size(), std::vector<int>(subgroup.size()));
    for (size_t i = 0; i < subgroup.size(); ++i)
        for (size_t j = 0; j < subgroup.size(); ++j) {
            int prod = dataA.table[subgroup[i]][subgroup[j]];
            if (local[prod] < 0) throw Error("group connection: subgroup is not closed");
            table[i][j] = local[prod];
        }
    out.algB = std::make_shared<FiniteDimAlgebra>(group_algebra(labels, table));

    GroupConnectionData gcd = group_connection_data(out.algB.get(), dataA, subgroup);
    out.calcB = std::make_shared<Calculus>(group_calculus(gcd.dataB, false));

    auto bim = std::make_shared<Bimodule>();
    bim->left_alg = out.algB.get();
    bim->right_alg = algA.get();
    bim->dim = algA->dim;
    bim->labels = algA->labels;
    bim->left_action.assign(out.algB->dim, std::vector<SparseVec>(bim->dim));
    bim->right_action.assign(bim->dim, std::vector<SparseVec>(algA->dim));
    for (size_t b = 0; b < subgroup.size(); ++b)
        for (int e = 0; e < bim->dim; ++e)
            bim->left_action[b][e] = {{dataA.table[subgroup[b]][e], Scalar(1)}};
    for (int e = 0; e < bim->dim; ++e)
        for (int a = 0; a < algA->dim; ++a)
            bim->right_action[e][a] = {{dataA.table[e][a], Scalar(1)}};
    bim->validate();
    out.bim = bim;

    // nabla(x) = 1 tensor dx, sigma(f_k tensor x) = 1 tensor f_k.x
    CochainSpace c1(bim.get(), calcA.get(), 1);
    std::vector<Vec> nabla0;
    for (int x = 0; x < algA->dim; ++x) nabla0.push_back(c1.push_elem(algA->unit, calcA->d0(x)));
    std::vector<std::vector<Vec>> sigma_gen(gcd.w.dim());
    for (int k = 0; k < gcd.w.dim(); ++k)
        for (int x = 0; x < algA->dim; ++x) {
            FormElement f = calcA->zero(1);
            for (int j = 0; j < int(gcd.w.basis[k].size()); ++j)
                add_term(f, Word{j}, x, gcd.w.basis[k][j]);
            sigma_gen[k].push_back(c1.push_elem(algA->unit, f));
        }

    out.conn = std::make_shared<BimoduleConnection>(bim.get(), out.calcA.get(), out.calcB.get(),
                                                    std::move(nabla0), std::move(sigma_gen));
    return out;
}

}  // namespace ncfib
