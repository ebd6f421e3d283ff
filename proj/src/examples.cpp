#include "ncfib/examples.hpp"

#include "ncfib/fibration.hpp"
#include "ncfib/spectral.hpp"

namespace ncfib {

GroupCalculusData s3_data(const FiniteDimAlgebra* alg, const S3Tables& t, const Scalar& b) {
    const Scalar r3 = Scalar::sqrt_of(3), half(1, 2);
    Matrix ru = Matrix::identity(2), rv(2, 2);
    ru.at(1, 1) = Scalar(-1);
    rv.at(0, 0) = -half;
    rv.at(0, 1) = half * r3;
    rv.at(1, 0) = half * r3;
    rv.at(1, 1) = half;

    GroupCalculusData d;
    d.alg = alg;
    d.table = t.table;
    d.gen_names = {"f1", "f2"};
    d.rho.assign(6, Matrix());
    d.rho[t.e] = Matrix::identity(2);
    d.rho[t.u] = ru;
    d.rho[t.v] = rv;
    d.rho[t.uv] = ru * rv;
    d.rho[t.vu] = rv * ru;
    d.rho[t.uvu] = ru * rv * ru;

    // omega on generators; products extended by omega(xy) = omega(x) <| y + omega(y)
    auto act = [&](const Vec& w, int y) { return d.rho[y].transpose().apply(w); };
    d.omega.assign(6, Vec(2));
    d.omega[t.u] = {Scalar(0), Scalar(1)};
    d.omega[t.v] = {-r3 * b, b};
    d.omega[t.uv] = act(d.omega[t.u], t.v) + d.omega[t.v];
    d.omega[t.vu] = act(d.omega[t.v], t.u) + d.omega[t.u];
    d.omega[t.uvu] = act(d.omega[t.uv], t.u) + d.omega[t.u];
    return d;
}

CalculusBundle s3_calculus(const Scalar& b) {
    S3Tables t = s3_tables();
    auto alg = std::make_shared<FiniteDimAlgebra>(group_algebra(t.labels, t.table));
    GroupCalculusData d = s3_data(alg.get(), t, b);
    auto calc = std::make_shared<Calculus>(group_calculus(d, true));
    return {alg, calc};
}

CalculusBundle z2_calculus() {
    auto alg = std::make_shared<FiniteDimAlgebra>(group_algebra({"e", "u"}, {{0, 1}, {1, 0}}));
    GroupCalculusData d;
    d.alg = alg.get();
    d.table = {{0, 1}, {1, 0}};
    d.gen_names = {"f"};
    Matrix neg(1, 1);
    neg.at(0, 0) = Scalar(-1);
    d.rho = {Matrix::identity(1), neg};
    d.omega = {Vec{Scalar(0)}, Vec{Scalar(1)}};
    auto calc = std::make_shared<Calculus>(group_calculus(d, true));
    return {alg, calc};
}

CalculusBundle m3_calculus() {
    auto alg = std::make_shared<FiniteDimAlgebra>(matrix_algebra(3));
    const int s = 0, t = 1, u = 2;
    RewriteSystem rw;
    rw.rules[{t, s}] = {{Scalar(1), Word{s, t}}};
    rw.rules[{u, s}] = {{Scalar(1), Word{s, u}}};
    rw.rules[{u, t}] = {{Scalar(1), Word{t, u}}};
    rw.rules[{u, u}] = {{Scalar(1), Word{s, t}}};

    auto unit_vec = [&](int i, int j) {
        Vec v(9);
        v[matrix_unit_index(3, i, j)] = Scalar(1);
        return v;
    };
    std::vector<std::pair<int, Vec>> theta{
        {s, unit_vec(0, 1)}, {t, unit_vec(1, 0)}, {u, unit_vec(2, 2)}};
    std::vector<SparseVec> star{{{t, Scalar(-1)}}, {{s, Scalar(-1)}}, {{u, Scalar(-1)}}};
    auto calc = std::make_shared<Calculus>(
        inner_calculus(alg.get(), {"s", "t", "u"}, theta, rw, star));
    return {alg, calc};
}

CalculusBundle m2_calculus() {
    auto alg = std::make_shared<FiniteDimAlgebra>(matrix_algebra(2));
    const int s = 0, t = 1;
    RewriteSystem rw;
    rw.rules[{t, s}] = {{Scalar(1), Word{s, t}}};
    auto unit_vec = [&](int i, int j) {
        Vec v(4);
        v[matrix_unit_index(2, i, j)] = Scalar(1);
        return v;
    };
    std::vector<std::pair<int, Vec>> theta{{s, unit_vec(0, 1)}, {t, unit_vec(1, 0)}};
    std::vector<SparseVec> star{{{t, Scalar(-1)}}, {{s, Scalar(-1)}}};
    auto calc =
        std::make_shared<Calculus>(inner_calculus(alg.get(), {"s'", "t'"}, theta, rw, star));
    return {alg, calc};
}

ConnectionBundle s3_connection(const Scalar& b) {
    S3Tables t = s3_tables();
    auto alg = std::make_shared<FiniteDimAlgebra>(group_algebra(t.labels, t.table));
    GroupCalculusData d = s3_data(alg.get(), t, b);
    auto calc = std::make_shared<Calculus>(group_calculus(d, true));
    return group_connection(alg, calc, d, {t.e, t.u});
}

ConnectionBundle matrix_connection() {
    ConnectionBundle out;
    CalculusBundle a = m3_calculus(), b = m2_calculus();
    out.algA = a.alg;
    out.calcA = a.calc;
    out.algB = b.alg;
    out.calcB = b.calc;

    // E = M_{2,3} with basis E_ij (i < 2, j < 3), index 3i + j.
    auto bim = std::make_shared<Bimodule>();
    bim->left_alg = out.algB.get();
    bim->right_alg = out.algA.get();
    bim->dim = 6;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            bim->labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    bim->left_action.assign(4, std::vector<SparseVec>(6));
    bim->right_action.assign(6, std::vector<SparseVec>(9));
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j)
                    if (l == i) bim->left_action[2 * k + l][3 * i + j] = {{3 * k + j, Scalar(1)}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (j == k) bim->right_action[3 * i + j][3 * k + l] = {{3 * i + l, Scalar(1)}};
    bim->validate();
    out.bim = bim;

    Vec e0(6);
    e0[0] = e0[4] = Scalar(2);  // e0 = 2 E11 + 2 E22
    CochainSpace c1(bim.get(), out.calcA.get(), 1);

    // Well-definedness of nabla(e0 a) = e0 tensor da: a is only determined up
    // to the right annihilator of e0, so e0 tensor d(E_3i) must vanish.
    for (int i = 0; i < 3; ++i) {
        Vec z = c1.push_elem(e0, out.calcA->d0(matrix_unit_index(3, 2, i)));
        if (!is_zero(z))
            throw Error("matrix connection: e0 tensor d(E_3" + std::to_string(i + 1) +
                        ") does not vanish, nabla is ill-defined");
    }

    const Scalar half(1, 2);
    std::vector<Vec> nabla0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            nabla0.push_back(c1.push_elem(e0, out.calcA->d0(matrix_unit_index(3, i, j)) * half));
    // sigma(s' tensor E_ij) = (e0 tensor s) . (1/2 E_ij), likewise t' -> t.
    std::vector<std::vector<Vec>> sigma_gen(2);
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                sigma_gen[g].push_back(
                    c1.push_elem(e0, out.calcA->basis_form(Word{g}, matrix_unit_index(3, i, j)) * half));

    out.conn = std::make_shared<BimoduleConnection>(bim.get(), out.calcA.get(), out.calcB.get(),
                                                    std::move(nabla0), std::move(sigma_gen));
    return out;
}

InnerProduct s3_inner_product(const ConnectionBundle& cb) {
    S3Tables t = s3_tables();
    std::vector<int> inv = group_inverses(t.table);
    InnerProduct ip;
    ip.bim = cb.bim.get();
    ip.pairing.assign(6, std::vector<Vec>(6, Vec(6)));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) ip.pairing[i][j][t.table[inv[i]][j]] = Scalar(1);
    ip.validate();
    return ip;
}

InnerProduct matrix_inner_product(const ConnectionBundle& cb) {
    // <E_ij bar, E_kl> = E_ji E_kl = delta_ik E_jl in M3.
    InnerProduct ip;
    ip.bim = cb.bim.get();
    ip.pairing.assign(6, std::vector<Vec>(6, Vec(9)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                ip.pairing[3 * i + j][3 * i + l][matrix_unit_index(3, j, l)] = Scalar(1);
    ip.validate();
    return ip;
}

Vec matrix_e0() {
    Vec e0(6);
    e0[0] = e0[4] = Scalar(2);
    return e0;
}

Report run_example(const ExampleSpec& spec) {
    Report r;
    r.example = spec.name;
    r.max_degree = spec.max_degree;

    ConnectionBundle cb;
    InnerProduct ip;
    Vec e0;
    if (spec.name == "s3_over_z2") {
        cb = s3_connection(spec.b);
        ip = s3_inner_product(cb);
        e0 = Vec(6);
        e0[s3_tables().e] = Scalar(1);
        r.b = spec.b.str();
    } else if (spec.name == "m3_over_m2") {
        cb = matrix_connection();
        ip = matrix_inner_product(cb);
        e0 = matrix_e0();
    } else {
        throw Error("run_example: unknown example '" + spec.name + "'");
    }

    Fibration f(cb.conn.get(), spec.max_degree);
    const FilteredComplex& fc = f.complex();
    const int N = fc.max_degree();

    r.complex_dims = fc.dims;
    for (int n = 0; n <= N; ++n) {
        std::vector<int> row;
        for (int m = 0; m <= n + 1; ++m) row.push_back(fc.F(m, n).dim());
        r.filtration_dims.push_back(row);
    }
    for (int p = 0; p <= N; ++p) {
        std::vector<int> m_col, h_col;
        for (int q = 0; p + q <= N; ++q) {
            m_col.push_back(f.M(p, q).dim());
            h_col.push_back(f.sheaf_cohomology(p, q).dim());
        }
        r.m_dims.push_back(m_col);
        r.sheaf_cohomology_dims.push_back(h_col);
    }
    for (int q = 0; q <= N; ++q) {
        r.n_dims.push_back(f.N(q).dim());
        r.fibre_cohomology_dims.push_back(f.fibre_cohomology(q).dim());
    }

    FibrationVerdict v = f.verdict();
    r.fibration_pass = v.pass;
    r.fibration_witness = v.witness;

    StableResult st = stabilize(fc);
    for (const SpectralPage& pg : st.pages) {
        PageReport pr;
        pr.r = pg.r;
        for (int p = 0; p <= N; ++p) {
            std::vector<int> col;
            for (int q = 0; p + q <= N; ++q) col.push_back(pg.dim(p, q));
            pr.dims.push_back(col);
        }
        r.pages.push_back(pr);
    }
    r.stable_page = st.stable_page;
    r.converged_dims = converged_cohomology(fc);
    for (const CohomologySpace& h : direct_cohomology(fc.dims, fc.d))
        r.direct_dims.push_back(h.dim());

    r.ksgns.metric_preserved = metric_preservation_check(*cb.conn, ip).pass;
    Matrix phi = ksgns_map(ip, e0);
    r.ksgns.algebra_map = is_algebra_map(*cb.algB, *cb.algA, phi).pass;
    r.ksgns.completely_positive = completely_positive_check(*cb.algB, *cb.algA, phi).pass;
    r.ksgns.cochain_map = cochain_map_check(*cb.conn, ip, e0, spec.max_degree).pass;
    return r;
}

bool Poly::is_zero() const {
    for (const Scalar& x : c)
        if (!x.is_zero()) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < out.c.size(); ++i) {
        if (i < c.size()) out.c[i] += c[i];
        if (i < o.c.size()) out.c[i] += o.c[i];
    }
    return out;
}

Poly Poly::scaled(const Scalar& s) const {
    Poly out = *this;
    for (Scalar& x : out.c) x *= s;
    return out;
}

std::string Poly::str() const {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c[i].str() + ")";
        if (i == 1) out += "*b";
        if (i > 1) out += "*b^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

CocycleFamily solve_s3_cocycle_family() {
    S3Tables t = s3_tables();
    FiniteDimAlgebra alg = group_algebra(t.labels, t.table);
    // rho does not involve b, so any concrete parameter recovers it.
    GroupCalculusData d = s3_data(&alg, t, Scalar(1));
    const Scalar r3 = Scalar::sqrt_of(3);

    auto pconst = [](const Scalar& s) { return Poly{{s}}; };
    auto pb = [](const Scalar& s) { return Poly{{Scalar(0), s}}; };

    // omega(xy) = rho(y)^T omega(x) + omega(y), one letter at a time.
    auto extend = [&](const std::vector<int>& word,
                      const std::map<int, std::vector<Poly>>& omega) {
        std::vector<Poly> acc{Poly{}, Poly{}};
        for (int g : word) {
            const Matrix& rho = d.rho[g];
            std::vector<Poly> next{Poly{}, Poly{}};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) next[i] = next[i] + acc[j].scaled(rho.at(j, i));
            for (int i = 0; i < 2; ++i) next[i] = next[i] + omega.at(g)[i];
            acc = next;
        }
        return acc;
    };

    CocycleFamily out;
    out.omega_u = {pconst(Scalar(0)), pconst(Scalar(1))};
    out.omega_v = {pb(-r3), pb(Scalar(1))};
    std::map<int, std::vector<Poly>> omega{{t.u, out.omega_u}, {t.v, out.omega_v}};

    out.residual_uu = extend({t.u, t.u}, omega);
    out.residual_vv = extend({t.v, t.v}, omega);
    std::vector<Poly> uvu = extend({t.u, t.v, t.u}, omega);
    std::vector<Poly> vuv = extend({t.v, t.u, t.v}, omega);
    out.residual_braid = {uvu[0] + vuv[0].scaled(Scalar(-1)), uvu[1] + vuv[1].scaled(Scalar(-1))};

    std::map<int, std::vector<Poly>> wrong = omega;
    wrong[t.v] = {pb(r3), pb(Scalar(1))};
    out.residual_vv_wrong_sign = extend({t.v, t.v}, wrong);

    for (const std::vector<Poly>* res :
         {&out.residual_uu, &out.residual_vv, &out.residual_braid})
        for (const Poly& p : *res)
            if (!p.is_zero())
                throw Error("solve_s3_cocycle_family: relation residual " + p.str() +
                            " does not vanish");
    if (out.residual_vv_wrong_sign[0].is_zero() && out.residual_vv_wrong_sign[1].is_zero())
        throw Error("solve_s3_cocycle_family: sign flip of omega(v) went undetected");
    return out;
}

}  // namespace ncfib
