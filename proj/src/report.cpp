#include "ncfib/report.hpp"

#include <json.hpp>
#include <sstream>

#include "ncfib/scalar.hpp"

namespace ncfib {

using nlohmann::json;

namespace {

json page_to_json(const PageReport& p) {
    return json{{"r", p.r}, {"dims", p.dims}};
}

PageReport page_from_json(const json& j) {
    PageReport p;
    p.r = j.at("r").get<int>();
    p.dims = j.at("dims").get<std::vector<std::vector<int>>>();
    return p;
}

/// Render dims[p][q] as a lattice with q decreasing down the rows and p
/// increasing along the columns, every column right-aligned.
void print_lattice(std::ostringstream& out, const std::vector<std::vector<int>>& dims,
                   const std::string& indent) {
    int pmax = int(dims.size());
    int qmax = 0;
    for (const auto& col : dims) qmax = std::max(qmax, int(col.size()));
    if (pmax == 0 || qmax == 0) {
        out << indent << "(empty)\n";
        return;
    }
    auto cell = [&](int p, int q) -> std::string {
        if (p < int(dims.size()) && q < int(dims[p].size()))
            return std::to_string(dims[p][q]);
        return ".";
    };
    size_t width = 1;
    for (int p = 0; p < pmax; ++p)
        for (int q = 0; q < qmax; ++q) width = std::max(width, cell(p, q).size());
    for (int q = qmax - 1; q >= 0; --q) {
        out << indent << "q=" << q << " |";
        for (int p = 0; p < pmax; ++p) {
            std::string c = cell(p, q);
            out << " " << std::string(width - c.size(), ' ') << c;
        }
        out << "\n";
    }
    out << indent << "    +" << std::string((width + 1) * pmax, '-') << "\n";
    out << indent << "     ";
    for (int p = 0; p < pmax; ++p) {
        std::string c = "p=" + std::to_string(p);
        out << " " << (c.size() > width ? c : std::string(width - c.size(), ' ') + c);
    }
    out << "\n";
}

void print_list(std::ostringstream& out, const std::vector<int>& v) {
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
}

}  // namespace

std::string report_to_json(const Report& r) {
    json j{{"schema_version", r.schema_version},
           {"example", r.example},
           {"b", r.b},
           {"max_degree", r.max_degree},
           {"complex_dims", r.complex_dims},
           {"filtration_dims", r.filtration_dims},
           {"m_dims", r.m_dims},
           {"n_dims", r.n_dims},
           {"fibre_cohomology_dims", r.fibre_cohomology_dims},
           {"sheaf_cohomology_dims", r.sheaf_cohomology_dims},
           {"fibration", json{{"pass", r.fibration_pass}, {"witness", r.fibration_witness}}},
           {"stable_page", r.stable_page},
           {"converged_dims", r.converged_dims},
           {"direct_dims", r.direct_dims},
           {"ksgns", json{{"metric_preserved", r.ksgns.metric_preserved},
                          {"algebra_map", r.ksgns.algebra_map},
                          {"completely_positive", r.ksgns.completely_positive},
                          {"cochain_map", r.ksgns.cochain_map}}}};
    json pages = json::array();
    for (const auto& p : r.pages) pages.push_back(page_to_json(p));
    j["pages"] = pages;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("report: invalid JSON: ") + e.what());
    }
    try {
        Report r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != 1)
            throw Error("report: unsupported schema_version " +
                        std::to_string(r.schema_version));
        r.example = j.at("example").get<std::string>();
        r.b = j.at("b").get<std::string>();
        r.max_degree = j.at("max_degree").get<int>();
        r.complex_dims = j.at("complex_dims").get<std::vector<int>>();
        r.filtration_dims = j.at("filtration_dims").get<std::vector<std::vector<int>>>();
        r.m_dims = j.at("m_dims").get<std::vector<std::vector<int>>>();
        r.n_dims = j.at("n_dims").get<std::vector<int>>();
        r.fibre_cohomology_dims = j.at("fibre_cohomology_dims").get<std::vector<int>>();
        r.sheaf_cohomology_dims =
            j.at("sheaf_cohomology_dims").get<std::vector<std::vector<int>>>();
        r.fibration_pass = j.at("fibration").at("pass").get<bool>();
        r.fibration_witness = j.at("fibration").at("witness").get<std::string>();
        for (const auto& p : j.at("pages")) r.pages.push_back(page_from_json(p));
        r.stable_page = j.at("stable_page").get<int>();
        r.converged_dims = j.at("converged_dims").get<std::vector<int>>();
        r.direct_dims = j.at("direct_dims").get<std::vector<int>>();
        const json& k = j.at("ksgns");
        r.ksgns.metric_preserved = k.at("metric_preserved").get<bool>();
        r.ksgns.algebra_map = k.at("algebra_map").get<bool>();
        r.ksgns.completely_positive = k.at("completely_positive").get<bool>();
        r.ksgns.cochain_map = k.at("cochain_map").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("report: schema violation: ") + e.what());
    }
}

std::string report_to_text(const Report& r, int page_cap) {
    std::ostringstream out;
    out << "example: " << r.example;
    if (!r.b.empty()) out << "  (b = " << r.b << ")";
    out << "\nmax degree: " << r.max_degree << "\n\n";

    out << "complex dims C^n: ";
    print_list(out, r.complex_dims);
    out << "\nfiltration dims F^m C^n (rows n, columns m):\n";
    for (size_t n = 0; n < r.filtration_dims.size(); ++n) {
        out << "  n=" << n << ":";
        for (int v : r.filtration_dims[n]) out << " " << v;
        out << "\n";
    }

    out << "\nM_{p,q} dims:\n";
    print_lattice(out, r.m_dims, "  ");
    out << "fibre dims N_q: ";
    print_list(out, r.n_dims);
    out << "\nfibre cohomology dims H^q(N): ";
    print_list(out, r.fibre_cohomology_dims);
    out << "\nsheaf cohomology dims H^p(B, H^q(N)):\n";
    print_lattice(out, r.sheaf_cohomology_dims, "  ");

    out << "fibration: " << (r.fibration_pass ? "pass" : "FAIL");
    if (!r.fibration_witness.empty()) out << "  (" << r.fibration_witness << ")";
    out << "\n";

    int shown = 0;
    for (const auto& p : r.pages) {
        if (page_cap >= 0 && shown >= page_cap) break;
        out << "\npage r=" << p.r << ":\n";
        print_lattice(out, p.dims, "  ");
        ++shown;
    }
    out << "\nstable page: " << r.stable_page << "\n";
    out << "converged dims: ";
    print_list(out, r.converged_dims);
    out << "\ndirect cohomology dims: ";
    print_list(out, r.direct_dims);
    out << "\n\nksgns: metric_preserved=" << (r.ksgns.metric_preserved ? "yes" : "no")
        << " algebra_map=" << (r.ksgns.algebra_map ? "yes" : "no")
        << " completely_positive=" << (r.ksgns.completely_positive ? "yes" : "no")
        << " cochain_map=" << (r.ksgns.cochain_map ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace ncfib
