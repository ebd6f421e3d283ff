#include "ncfib/spectral.hpp"

#include <string>

namespace ncfib {

namespace {

std::string cell_str(int p, int q) {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

// Z_r^{p,q} = {x in F^p C^{p+q} : dx in F^{p+r} C^{p+q+1}}, in the ambient
// coordinates of C^{p+q}. The filtration accessor clamps indices, so p may
// be negative (full space) or beyond the degree (zero). At the top degree
// the differential is treated as zero and Z_r = F^p.
Subspace approximant(const FilteredComplex& fc, int p, int q, int r) {
    int n = p + q;
    if (n < 0 || n > fc.max_degree()) return Subspace{0, {}};
    const Subspace& fp = fc.F(p, n);
    if (n == fc.max_degree()) return fp;
    const Subspace& tgt = fc.F(p + r, n + 1);
    // x = fp * c with d x in span(tgt): kernel of [d*fp | -tgt] gives the
    // coefficient pairs; read off the fp part.
    std::vector<Vec> cols;
    cols.reserve(fp.dim() + tgt.dim());
    for (const Vec& v : fp.basis) cols.push_back(fc.d[n].apply(v));
    for (const Vec& v : tgt.basis) cols.push_back(v);
    Subspace pairs = kernel_basis(Matrix::from_columns(fc.dims[n + 1], cols));
    std::vector<Vec> xs;
    for (const Vec& c : pairs.basis) {
        Vec x(fc.dims[n]);
        for (int j = 0; j < fp.dim(); ++j) axpy(c[j], fp.basis[j], x);
        xs.push_back(std::move(x));
    }
    return span_of(fc.dims[n], xs);
}

}  // namespace

int SpectralPage::dim(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? 0 : it->second.dim();
}

Matrix SpectralPage::d(int p, int q) const {
    auto it = d_r.find({p, q});
    return it == d_r.end() ? Matrix(0, dim(p, q)) : it->second;
}

Vec SpectralPage::lift(int p, int q, const Vec& cls) const {
    auto zc = z.find({p, q});
    auto cc = cells.find({p, q});
    if (zc == z.end() || cc == cells.end()) throw Error("SpectralPage::lift: no such cell");
    Vec in_z = cc->second.lift(cls);
    Vec out(zc->second.ambient_dim);
    for (int j = 0; j < zc->second.dim(); ++j) axpy(in_z[j], zc->second.basis[j], out);
    return out;
}

SpectralPage page(const FilteredComplex& fc, int r) {
    if (r < 1) throw Error("page: page index must be at least 1");
    const int N = fc.max_degree();
    SpectralPage pg;
    pg.r = r;
    for (int n = 0; n <= N; ++n) {
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            Subspace num = approximant(fc, p, q, r);
            // Denominator: boundaries from r-1 steps down the filtration
            // plus the deeper approximant; both lie inside the numerator.
            std::vector<Vec> den;
            if (n > 0) {
                Subspace src = approximant(fc, p - r + 1, q + r - 2, r - 1);
                for (const Vec& v : src.basis) den.push_back(fc.d[n - 1].apply(v));
            }
            Subspace deeper = approximant(fc, p + 1, q - 1, r - 1);
            for (const Vec& v : deeper.basis) den.push_back(v);
            Subspace den_span = span_of(fc.dims[n], den);
            pg.cells.emplace(std::make_pair(p, q), subquotient(num, den_span));
            pg.z.emplace(std::make_pair(p, q), std::move(num));
        }
    }
    // Differentials: d_r[x] = [dx], with dx read in the coordinates of the
    // target numerator (it lies there by construction).
    for (const auto& [pq, cell] : pg.cells) {
        auto [p, q] = pq;
        int n = p + q, tp = p + r, tq = q - r + 1;
        auto tgt = pg.cells.find({tp, tq});
        if (n == N || tq < 0 || tgt == pg.cells.end()) {
            pg.d_r.emplace(pq, Matrix(0, cell.dim()));
            continue;
        }
        Matrix d(tgt->second.dim(), cell.dim());
        for (int j = 0; j < cell.dim(); ++j) {
            Vec x = pg.lift(p, q, [&] {
                Vec e(cell.dim());
                e[j] = Scalar(1);
                return e;
            }());
            Vec img = tgt->second.project(coords_in(pg.z.at({tp, tq}), fc.d[n].apply(x)));
            for (int i = 0; i < d.rows(); ++i) d.at(i, j) = img[i];
        }
        pg.d_r.emplace(pq, std::move(d));
    }
    return pg;
}

StableResult stabilize(const FilteredComplex& fc, int max_pages) {
    const int last = fc.max_degree() + 2;
    if (last > max_pages)
        throw Error("stabilize: would need " + std::to_string(last) + " pages, more than " +
                    std::to_string(max_pages));
    StableResult out;
    for (int r = 1; r <= last; ++r) out.pages.push_back(page(fc, r));
    const SpectralPage& einf = out.pages.back();
    for (const auto& [pq, cell] : einf.cells) out.e_inf[pq] = cell.dim();
    auto same_dims = [&](const SpectralPage& a) {
        for (const auto& [pq, d] : out.e_inf)
            if (a.dim(pq.first, pq.second) != d) return false;
        return true;
    };
    int stable = last;
    while (stable > 1 && same_dims(out.pages[stable - 2])) --stable;
    out.stable_page = stable;
    return out;
}

std::vector<CohomologySpace> direct_cohomology(const std::vector<int>& dims,
                                               const std::vector<Matrix>& d) {
    const int N = int(dims.size()) - 1;
    if (int(d.size()) < N) throw Error("direct_cohomology: missing differentials");
    for (int n = 0; n < N; ++n)
        if (d[n].cols() != dims[n] || d[n].rows() != dims[n + 1])
            throw Error("direct_cohomology: differential shape mismatch at degree " +
                        std::to_string(n));
    for (int n = 0; n + 1 < N; ++n)
        if (!(d[n + 1] * d[n]).is_zero())
            throw Error("direct_cohomology: d compose d is nonzero at degree " +
                        std::to_string(n));
    std::vector<CohomologySpace> h;
    for (int n = 0; n <= N; ++n) {
        Matrix d_in = n > 0 ? d[n - 1] : Matrix(dims[0], 0);
        Matrix d_out = n < N ? d[n] : Matrix(0, dims[n]);
        h.push_back(cohomology_at(d_in, d_out));
    }
    return h;
}

std::vector<int> converged_cohomology(const FilteredComplex& fc) {
    StableResult st = stabilize(fc);
    const int N = fc.max_degree();
    std::vector<int> sums(N + 1, 0);
    for (const auto& [pq, d] : st.e_inf) sums[pq.first + pq.second] += d;
    std::vector<CohomologySpace> direct = direct_cohomology(fc.dims, fc.d);
    for (int k = 0; k <= N; ++k)
        if (sums[k] != direct[k].dim())
            throw Error("converged cohomology: diagonal sum " + std::to_string(sums[k]) +
                        " differs from direct cohomology " + std::to_string(direct[k].dim()) +
                        " at degree " + std::to_string(k));
    return sums;
}

}  // namespace ncfib
