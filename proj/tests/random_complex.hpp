#ifndef NCFIB_TESTS_RANDOM_COMPLEX_HPP
#define NCFIB_TESTS_RANDOM_COMPLEX_HPP

#include <algorithm>

#include "ncfib/fibration.hpp"
#include "test_rng.hpp"

namespace ncfib {

/// A random bounded filtered complex with d^2 = 0 by construction: the
/// complex is a direct sum of singleton generators and two-term pairs
/// x -> y, each generator carrying a filtration weight <= its degree with
/// weight(y) >= weight(x); a random unipotent filtration-preserving change
/// of basis is then applied in every degree.
inline FilteredComplex random_filtered_complex(TestRng& rng) {
    int top = rng.uniform(1, 3);
    std::vector<std::vector<int>> weights(top + 1);  // per degree, per generator
    std::vector<std::vector<std::pair<int, int>>> pairs(top);  // (src idx, dst idx)
    for (int n = 0; n <= top; ++n)
        for (int k = rng.uniform(0, 2); k > 0; --k) weights[n].push_back(rng.uniform(0, n));
    for (int n = 0; n < top; ++n)
        for (int k = rng.uniform(0, 2); k > 0; --k) {
            int wx = rng.uniform(0, n);
            weights[n].push_back(wx);
            weights[n + 1].push_back(rng.uniform(wx, n + 1));
            pairs[n].push_back({int(weights[n].size()) - 1, int(weights[n + 1].size()) - 1});
        }
    // Sort generators by decreasing weight so filtration subspaces are
    // spanned by basis prefixes.
    std::vector<std::vector<int>> order(top + 1);  // order[n][new idx] = old idx
    for (int n = 0; n <= top; ++n) {
        order[n].resize(weights[n].size());
        for (size_t i = 0; i < order[n].size(); ++i) order[n][i] = int(i);
        std::stable_sort(order[n].begin(), order[n].end(),
                         [&](int a, int b) { return weights[n][a] > weights[n][b]; });
    }
    FilteredComplex fc;
    for (int n = 0; n <= top; ++n) fc.dims.push_back(int(weights[n].size()));
    for (int n = 0; n < top; ++n) {
        Matrix d(fc.dims[n + 1], fc.dims[n]);
        for (auto [src, dst] : pairs[n]) {
            int i = int(std::find(order[n + 1].begin(), order[n + 1].end(), dst) -
                        order[n + 1].begin());
            int j = int(std::find(order[n].begin(), order[n].end(), src) - order[n].begin());
            d.at(i, j) = Scalar(1);
        }
        fc.d.push_back(std::move(d));
    }
    fc.filt.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        for (int m = 0; m <= top + 1; ++m) {
            Subspace f{fc.dims[n], {}};
            for (int i = 0; i < fc.dims[n]; ++i) {
                if (weights[n][order[n][i]] < m) continue;
                Vec e(fc.dims[n]);
                e[i] = Scalar(1);
                f.basis.push_back(std::move(e));
            }
            fc.filt[n].push_back(std::move(f));
        }
    }
    // Unipotent change of basis sending each generator into the span of
    // generators of greater or equal weight (so every F^m is preserved).
    for (int n = 0; n <= top; ++n) {
        Matrix t = Matrix::identity(fc.dims[n]);
        for (int j = 0; j < fc.dims[n]; ++j)
            for (int i = 0; i < j; ++i)
                if (rng.uniform(0, 1)) t.at(i, j) = rng.rational();
        auto tinv = inverse(t);
        if (!tinv) throw Error("random_filtered_complex: unipotent matrix not invertible");
        if (n > 0) fc.d[n - 1] = t * fc.d[n - 1];
        if (n < top) fc.d[n] = fc.d[n] * *tinv;
        for (auto& f : fc.filt[n])
            for (auto& v : f.basis) v = t.apply(v);
    }
    fc.validate();
    return fc;
}

}  // namespace ncfib

#endif
