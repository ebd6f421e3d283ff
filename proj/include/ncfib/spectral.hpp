#ifndef NCFIB_SPECTRAL_HPP
#define NCFIB_SPECTRAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "ncfib/fibration.hpp"

namespace ncfib {

/// One page of the spectral sequence of a filtered cochain complex.
///
/// Cell (p, q) is the subquotient
///   E_r^{p,q} = Z_r^{p,q} / (d Z_{r-1}^{p-r+1,q+r-2} + Z_{r-1}^{p+1,q-1}),
/// where Z_r^{p,q} = {x in F^p C^{p+q} : dx in F^{p+r} C^{p+q+1}}. The
/// numerator basis is kept in the ambient coordinates of C^{p+q}; the
/// quotient is expressed in numerator coordinates.
struct SpectralPage {
    int r = 1;
    std::map<std::pair<int, int>, Subspace> z;          // numerator, ambient coords
    std::map<std::pair<int, int>, QuotientSpace> cells; // in numerator coordinates
    std::map<std::pair<int, int>, Matrix> d_r;          // cell(p,q) -> cell(p+r, q+1-r)

    int dim(int p, int q) const;
    /// The differential out of cell (p, q); a zero-row matrix when the
    /// target lies outside the stored range.
    Matrix d(int p, int q) const;
    /// Ambient representative in C^{p+q} of a class in cell (p, q).
    Vec lift(int p, int q, const Vec& cls) const;
};

/// Page r >= 1 of the spectral sequence, computed independently of the
/// other pages via the standard approximant subspaces.
SpectralPage page(const FilteredComplex& fc, int r);

struct StableResult {
    int stable_page = 1;                      // dims constant from here on
    std::map<std::pair<int, int>, int> e_inf; // limiting cell dimensions
    std::vector<SpectralPage> pages;          // pages 1 .. max_degree + 2
};

/// Computes pages up to r = max_degree + 2 (beyond which every
/// differential leaves the first quadrant, so the dimensions are final)
/// and reports the first page from which all cell dimensions are stable.
/// Throws if more than max_pages pages would be needed.
StableResult stabilize(const FilteredComplex& fc, int max_pages = 32);

/// H^k = ker d_k / im d_{k-1} of an explicit complex; validates d
/// composition and shapes. d[k] maps degree k to degree k+1; the
/// differential out of the top degree is taken to be zero.
std::vector<CohomologySpace> direct_cohomology(const std::vector<int>& dims,
                                               const std::vector<Matrix>& d);

/// Per-degree cohomology dimensions obtained as the diagonal sums
/// H^k = sum_{p+q=k} dim E_inf^{p,q}, cross-checked against
/// direct_cohomology of the underlying complex; a mismatch (which would
/// contradict the convergence theorem) raises an Error.
std::vector<int> converged_cohomology(const FilteredComplex& fc);

}  // namespace ncfib

#endif
