// Command-line front end: run a builtin example end to end, or validate a
// user-supplied calculus description.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ncfib/examples.hpp"

using namespace ncfib;
using nlohmann::json;

namespace {

/// Thrown for config-file problems (I/O, JSON, schema); exits with code 2,
/// while math-level Errors from the library exit with code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

Scalar scalar_field(const json& j, const std::string& what) {
    if (!j.is_string()) throw ConfigError(what + ": expected a scalar string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

int gen_index(const std::vector<std::string>& names, const std::string& g,
              const std::string& what) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == g) return int(i);
    throw ConfigError(what + ": unknown generator '" + g + "'");
}

struct CheckResult {
    std::string kind;
    std::vector<int> omega_dims;  // dim of each form degree 0..max
    int kernel_dim_d0 = 0;
    bool connected = false;
};

/// Build and validate a calculus described by a config file. The schema is
/// documented in docs/config-schema.md.
CheckResult run_check(const json& cfg, int max_degree) {
    if (!cfg.is_object()) throw ConfigError("config: top level must be an object");
    if (!cfg.contains("schema_version") || cfg.at("schema_version") != 1)
        throw ConfigError("config: schema_version must be 1");
    if (!cfg.contains("kind") || !cfg.at("kind").is_string())
        throw ConfigError("config: missing string field 'kind'");
    const std::string kind = cfg.at("kind").get<std::string>();

    CheckResult out;
    out.kind = kind;
    std::optional<FiniteDimAlgebra> alg;
    std::optional<Calculus> calc;

    try {
        if (kind == "group") {
            for (const char* key : {"labels", "table", "generators", "rho", "omega"})
                if (!cfg.contains(key))
                    throw ConfigError(std::string("config: missing field '") + key + "'");
            auto labels = cfg.at("labels").get<std::vector<std::string>>();
            auto table = cfg.at("table").get<std::vector<std::vector<int>>>();
            alg.emplace(group_algebra(labels, table));

            GroupCalculusData d;
            d.alg = &*alg;
            d.table = table;
            d.gen_names = cfg.at("generators").get<std::vector<std::string>>();
            const int k = int(d.gen_names.size()), n = int(labels.size());
            if (int(cfg.at("rho").size()) != n || int(cfg.at("omega").size()) != n)
                throw ConfigError("config: rho and omega need one entry per group element");
            for (int g = 0; g < n; ++g) {
                const json& rj = cfg.at("rho").at(g);
                Matrix m(k, k);
                if (int(rj.size()) != k) throw ConfigError("config: rho matrix shape");
                for (int i = 0; i < k; ++i) {
                    if (int(rj.at(i).size()) != k) throw ConfigError("config: rho matrix shape");
                    for (int jj = 0; jj < k; ++jj)
                        m.at(i, jj) = scalar_field(rj.at(i).at(jj), "config: rho");
                }
                d.rho.push_back(m);
                const json& oj = cfg.at("omega").at(g);
                if (int(oj.size()) != k) throw ConfigError("config: omega vector shape");
                Vec w(k);
                for (int i = 0; i < k; ++i) w[i] = scalar_field(oj.at(i), "config: omega");
                d.omega.push_back(w);
            }
            bool connected_required = cfg.value("connected", false);
            calc.emplace(group_calculus(d, connected_required));
        } else if (kind == "inner") {
            for (const char* key : {"matrix_size", "generators", "rules", "theta", "star"})
                if (!cfg.contains(key))
                    throw ConfigError(std::string("config: missing field '") + key + "'");
            int size = cfg.at("matrix_size").get<int>();
            if (size < 1) throw ConfigError("config: matrix_size must be positive");
            alg.emplace(matrix_algebra(size));
            auto gens = cfg.at("generators").get<std::vector<std::string>>();

            RewriteSystem rw;
            for (const json& rule : cfg.at("rules")) {
                auto lhs = rule.at("lhs").get<std::vector<std::string>>();
                if (lhs.size() != 2)
                    throw ConfigError("config: rule left side must have two generators");
                int a = gen_index(gens, lhs[0], "config: rules");
                int b = gen_index(gens, lhs[1], "config: rules");
                std::vector<std::pair<Scalar, Word>> rhs;
                for (const json& term : rule.at("rhs")) {
                    Word w;
                    for (const json& g : term.at("word"))
                        w.push_back(gen_index(gens, g.get<std::string>(), "config: rules"));
                    rhs.emplace_back(scalar_field(term.at("coeff"), "config: rules"), w);
                }
                rw.rules[{a, b}] = rhs;
            }

            std::vector<std::pair<int, Vec>> theta;
            for (const json& term : cfg.at("theta")) {
                int g = gen_index(gens, term.at("gen").get<std::string>(), "config: theta");
                const json& cj = term.at("coords");
                if (int(cj.size()) != alg->dim)
                    throw ConfigError("config: theta coords must have dim " +
                                      std::to_string(alg->dim));
                Vec v(alg->dim);
                for (int i = 0; i < alg->dim; ++i) v[i] = scalar_field(cj.at(i), "config: theta");
                theta.emplace_back(g, v);
            }

            std::vector<SparseVec> star;
            if (int(cfg.at("star").size()) != int(gens.size()))
                throw ConfigError("config: star needs one entry per generator");
            for (const json& entry : cfg.at("star")) {
                SparseVec sv;
                for (const json& term : entry)
                    sv.emplace_back(gen_index(gens, term.at("gen").get<std::string>(),
                                              "config: star"),
                                    scalar_field(term.at("coeff"), "config: star"));
                star.push_back(sv);
            }
            calc.emplace(inner_calculus(&*alg, gens, theta, rw, star));
        } else {
            throw ConfigError("config: unknown kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    calc->check_confluence();
    calc->check_calculus_axioms();
    for (int n = 0; n <= max_degree; ++n) out.omega_dims.push_back(calc->basis_dim(n));
    out.kernel_dim_d0 = calc->kernel_dim_d0();
    out.connected = out.kernel_dim_d0 == 1;
    return out;
}

void print_check(const CheckResult& r, const std::string& format) {
    if (format == "json") {
        json j{{"schema_version", 1},
               {"kind", r.kind},
               {"omega_dims", r.omega_dims},
               {"kernel_dim_d0", r.kernel_dim_d0},
               {"connected", r.connected}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "kind: " << r.kind << "\nform space dims:";
    for (int v : r.omega_dims) std::cout << " " << v;
    std::cout << "\nkernel of d at degree 0: " << r.kernel_dim_d0
              << "\nconnected: " << (r.connected ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with differential calculi, bimodule "
                 "connections and spectral sequences"};
    app.require_subcommand(1);

    std::string format = "text";
    int max_degree = 3;
    int page_cap = -1;
    std::string b_text = "1";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-degree", max_degree, "Top form degree to compute")
        ->check(CLI::Range(1, 6));
    app.add_option("--b", b_text, "Group family parameter, e.g. 1 or -2/3");
    app.add_option("--pages", page_cap, "Maximum number of spectral pages to print");

    std::string example_name, config_path;
    CLI::App* example = app.add_subcommand("example", "Run a builtin example");
    example->fallthrough();
    example->add_option("name", example_name, "s3 or matrix")->required();
    CLI::App* check = app.add_subcommand("check", "Validate a calculus config file");
    check->fallthrough();
    check->add_option("config", config_path, "Path to a JSON config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (example->parsed()) {
            ExampleSpec spec;
            if (example_name == "s3" || example_name == "s3_over_z2")
                spec.name = "s3_over_z2";
            else if (example_name == "matrix" || example_name == "m3_over_m2")
                spec.name = "m3_over_m2";
            else {
                std::cerr << "unknown example '" << example_name << "' (try s3 or matrix)\n";
                return 2;
            }
            spec.max_degree = max_degree;
            spec.b = Scalar::parse(b_text);
            Report r = run_example(spec);
            if (format == "json")
                std::cout << report_to_json(r);
            else
                std::cout << report_to_text(r, page_cap);
        } else {
            std::ifstream in(config_path);
            if (!in.good()) {
                std::cerr << "cannot read config file '" << config_path << "'\n";
                return 2;
            }
            json cfg;
            try {
                cfg = json::parse(in);
            } catch (const json::exception& e) {
                std::cerr << "config: invalid JSON: " << e.what() << "\n";
                return 2;
            }
            print_check(run_check(cfg, max_degree), format);
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
