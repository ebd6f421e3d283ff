#ifndef NCFIB_REPORT_HPP
#define NCFIB_REPORT_HPP

#include <string>
#include <vector>

namespace ncfib {

/// Dimension lattice of one spectral page; dims[p][q] for p + q <= N.
struct PageReport {
    int r = 0;
    std::vector<std::vector<int>> dims;

    bool operator==(const PageReport&) const = default;
};

struct KsgnsReport {
    bool metric_preserved = false;
    bool algebra_map = false;
    bool completely_positive = false;
    bool cochain_map = false;

    bool operator==(const KsgnsReport&) const = default;
};

/// The full record of one example run. Everything the text and JSON outputs
/// show is stored here, so both renderings share a single source of truth.
struct Report {
    int schema_version = 1;
    std::string example;
    std::string b;  // group-family parameter; empty when not applicable
    int max_degree = 3;

    std::vector<int> complex_dims;                        // dim C^n
    std::vector<std::vector<int>> filtration_dims;        // [n][m] = dim F^m C^n
    std::vector<std::vector<int>> m_dims;                 // [p][q] = dim M_{p,q}
    std::vector<int> n_dims;                              // dim N_q
    std::vector<int> fibre_cohomology_dims;               // dim H^q(N)
    std::vector<std::vector<int>> sheaf_cohomology_dims;  // [p][q] = dim H^p(B, H^q)

    bool fibration_pass = false;
    std::string fibration_witness;

    std::vector<PageReport> pages;
    int stable_page = 0;
    std::vector<int> converged_dims;
    std::vector<int> direct_dims;

    KsgnsReport ksgns;

    bool operator==(const Report&) const = default;
};

/// Serialize to the versioned JSON schema (schema_version field included).
std::string report_to_json(const Report& r);
/// Parse a report back; throws Error on schema violations or an unknown
/// schema_version.
Report report_from_json(const std::string& text);

/// Human-readable rendering with aligned lattice tables. At most page_cap
/// spectral pages are printed (all of them when page_cap < 0).
std::string report_to_text(const Report& r, int page_cap = -1);

}  // namespace ncfib

#endif
