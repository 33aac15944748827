// Command-line front end: bound evaluation, Smith normal form, family
// graphs, BFS certification, exhaustive search, and the acceptance suite.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure.

#include "mac/bounds.hpp"
#include "mac/cayley.hpp"
#include "mac/families.hpp"
#include "mac/lattice.hpp"
#include "mac/search.hpp"
#include "mac/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

std::string str(const mac::Int& v) { return v.str(); }

// "r=2 z=0 k=5" for the general bound.
void parse_rzk(const std::string& text, long& r, long& z, long& k) {
    r = z = 0;
    k = -1;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + tok);
        const std::string key = tok.substr(0, eq);
        const long value = std::stol(tok.substr(eq + 1));
        if (key == "r") r = value;
        else if (key == "z") z = value;
        else if (key == "k") k = value;
        else throw std::invalid_argument("unknown key for the general bound: " + key);
    }
    if (k < 0) throw std::invalid_argument("missing k");
}

json graph_json(const mac::MixedCayleyGraph& G) {
    auto coords = [](const std::vector<mac::GroupElement>& v) {
        json a = json::array();
        for (const auto& g : v) a.push_back(g.coords);
        return a;
    };
    return {{"group", mac::format_group(G.group)},
            {"order", G.order},
            {"r", G.undirected_degree},
            {"z", G.directed_degree},
            {"involutions", coords(G.gens.involutions)},
            {"pairs", coords(G.gens.pairs)},
            {"directed", coords(G.gens.directed)}};
}

int cmd_bound(const std::string& form, const std::string& spec_text, bool explain,
              bool as_json) {
    mac::Int value;
    std::vector<mac::BoundTerm> terms;
    if (form == "general") {
        long r, z, k;
        parse_rzk(spec_text, r, z, k);
        value = mac::moore_mixed_general(r, z, k);
        if (explain) {
            mac::Int prev2 = 1, prev1 = r + z;
            terms.push_back({"layer 0", prev2});
            terms.push_back({"layer 1", prev1});
            for (long i = 2; i <= k; ++i) {
                mac::Int next = mac::Int(r + z - 1) * prev1 + mac::Int(z) * prev2;
                terms.push_back({"layer " + std::to_string(i), next});
                prev2 = prev1;
                prev1 = next;
            }
        }
    } else {
        const mac::DegreeSpec spec = mac::parse_degree_spec(spec_text);
        if (form == "mac") {
            if (!spec.r_odd.empty() || !spec.z_ord.empty())
                throw std::invalid_argument(
                    "bound mac takes only r_a, r_w, z_w, k; use bound improved for "
                    "finite-order classes");
            value = mac::mac_bound(spec.r_alpha, spec.r_omega, spec.z_omega, spec.k);
            if (explain)
                for (long i = 0; i <= spec.k; ++i)
                    terms.push_back(
                        {"term i=" + std::to_string(i),
                         mac::binomial(spec.r_omega + spec.z_omega + i, i) *
                             mac::binomial(spec.r_alpha + spec.r_omega, spec.k - i)});
        } else if (form == "improved") {
            value = mac::mac_bound_improved(spec);
            if (explain) terms = mac::mac_bound_improved_terms(spec);
        } else {
            throw std::invalid_argument("unknown bound form: " + form);
        }
    }
    if (as_json) {
        json out = {{"form", form}, {"spec", spec_text}, {"value", str(value)}};
        if (explain) {
            json t = json::array();
            for (const auto& term : terms) t.push_back({{"label", term.label}, {"value", str(term.value)}});
            out["terms"] = t;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (explain)
            for (const auto& term : terms)
                std::cout << term.label << ": " << term.value << "\n";
        std::cout << value << "\n";
    }
    return 0;
}

int cmd_snf(const std::string& path, bool as_json) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    const mac::IntMatrix M = mac::read_matrix(*in);
    const mac::SmithDecomposition snf = mac::smith_normal_form(M);
    const mac::GroupPresentation pres = mac::group_from_matrix(M);
    if (as_json) {
        auto mat = [](const mac::IntMatrix& A) {
            json rows = json::array();
            for (Eigen::Index i = 0; i < A.rows(); ++i) {
                json row = json::array();
                for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(str(A(i, j)));
                rows.push_back(row);
            }
            return rows;
        };
        json images = json::array();
        for (const auto& g : pres.generator_images) images.push_back(g.coords);
        std::cout << json{{"U", mat(snf.U)},
                          {"S", mat(snf.S)},
                          {"V", mat(snf.V)},
                          {"group", mac::format_group(pres.group)},
                          {"generator_images", images}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "U =\n";
        mac::write_matrix(std::cout, snf.U);
        std::cout << "S =\n";
        mac::write_matrix(std::cout, snf.S);
        std::cout << "V =\n";
        mac::write_matrix(std::cout, snf.V);
        std::cout << "group " << mac::format_group(pres.group) << "\n";
        for (std::size_t i = 0; i < pres.generator_images.size(); ++i) {
            std::cout << "e" << i + 1 << " -> ";
            const auto& c = pres.generator_images[i].coords;
            for (std::size_t j = 0; j < c.size(); ++j)
                std::cout << (j ? "," : "") << c[j];
            if (c.empty()) std::cout << "0";
            std::cout << "\n";
        }
    }
    return 0;
}

json certificate_json(const mac::MixedCayleyGraph& G) {
    const mac::BfsResult bfs = mac::bfs_layers(G, 0);
    const long d = bfs.eccentricity;
    json cert = graph_json(G);
    cert["diameter"] = d;
    cert["distance_profile"] = bfs.layer_sizes;
    if (d >= 1) {
        const mac::DegreeSpec induced = mac::induced_degree_spec(G, d);
        cert["degree_spec"] = mac::format_degree_spec(induced);
        cert["improved_bound"] = str(mac::mac_bound_improved(induced));
    }
    return cert;
}

int cmd_family(const std::string& name, long k, const std::string& out_path) {
    const mac::FamilyGraph f = mac::family_by_name(name, k);
    json cert = certificate_json(f.graph);
    cert["claimed_k"] = f.claimed_diameter;
    cert["claimed_order"] = f.claimed_order;
    cert["measured_k"] = cert["diameter"];
    if (out_path.empty()) {
        mac::write_graph(std::cout, f.graph);
        std::cerr << cert.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path);
        mac::write_graph(out, f.graph);
        std::cout << cert.dump(2) << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& path, const std::string& dot_path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    const mac::MixedCayleyGraph G = mac::read_graph(*in);
    std::cout << certificate_json(G).dump(2) << "\n";
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw std::invalid_argument("cannot open " + dot_path);
        mac::write_dot(dot, G);
    }
    return 0;
}

int cmd_search(const mac::SearchSpec& spec, bool as_json) {
    const mac::SearchResult result = mac::search_optimal(
        spec, [](const std::string& line) { std::cerr << line << "\n"; });
    json witnesses = json::array();
    for (const auto& w : result.witnesses) {
        json entry = {{"group", mac::format_group(w.group)}};
        auto coords = [](const std::vector<mac::GroupElement>& v) {
            json a = json::array();
            for (const auto& g : v) a.push_back(g.coords);
            return a;
        };
        entry["involutions"] = coords(w.gens.involutions);
        entry["pairs"] = coords(w.gens.pairs);
        entry["directed"] = coords(w.gens.directed);
        witnesses.push_back(entry);
    }
    const json out = {{"best_n", result.best_n},
                      {"witnesses", witnesses},
                      {"pruned_groups", result.pruned_groups},
                      {"examined_sets", result.examined_sets}};
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "best N = " << result.best_n << "\n";
        for (const auto& w : witnesses)
            std::cout << "witness " << w.dump() << "\n";
        std::cout << "pruned groups: " << result.pruned_groups
                  << ", examined sets: " << result.examined_sets << "\n";
    }
    return result.best_n > 0 ? 0 : 3;
}

int cmd_verify_all(const std::string& filter) {
    bool all_pass = true;
    const auto results = mac::run_acceptance(filter, [&](const mac::CriterionResult& r) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " " << r.name;
        std::printf("  (%.2fs)", r.seconds);
        if (!r.pass) std::cout << "  " << r.detail;
        std::cout << "\n" << std::flush;
        all_pass &= r.pass;
    });
    if (results.empty()) {
        std::cerr << "no criterion matches filter '" << filter << "'\n";
        return 2;
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moore-type bounds and optimal mixed Abelian Cayley graphs"};
    app.require_subcommand(1);

    std::string bound_form, bound_spec;
    bool bound_explain = false, bound_json = false;
    auto* bound = app.add_subcommand("bound", "evaluate a Moore-type bound");
    bound->add_option("form", bound_form, "general | mac | improved")->required();
    bound->add_option("spec", bound_spec,
                      "degree spec, e.g. \"r_a=1 z[3]=2 k=7\" (general form uses r= z= k=)")
        ->required();
    bound->add_flag("--explain", bound_explain, "print the per-term breakdown");
    bound->add_flag("--json", bound_json);

    std::string snf_path;
    bool snf_json = false;
    auto* snf = app.add_subcommand("snf", "Smith normal form of a square integer matrix");
    snf->add_option("matrix-file", snf_path, "matrix file, '-' for stdin")->required();
    snf->add_flag("--json", snf_json);

    std::string family_name, family_out;
    long family_k = 0;
    auto* family = app.add_subcommand("family", "emit a certified family graph");
    family->add_option("--name", family_name, "base4 | diamond | ttile | t")->required();
    family->add_option("--k", family_k, "diameter parameter")->required();
    family->add_option("--out", family_out, "graph file destination (default stdout)");

    std::string certify_path, certify_dot;
    auto* certify = app.add_subcommand("certify", "BFS-certify a graph description file");
    certify->add_option("graph-file", certify_path, "graph file, '-' for stdin")->required();
    certify->add_option("--dot", certify_dot, "also write a DOT rendering here");

    mac::SearchSpec spec;
    bool no_prune = false, search_json = false;
    std::int64_t n_max = 0;
    auto* search = app.add_subcommand("search", "bound-pruned exhaustive search");
    search->add_option("--r-alpha", spec.r_alpha)->required();
    search->add_option("--r-omega", spec.r_omega)->required();
    search->add_option("--z-omega", spec.z_omega)->required();
    search->add_option("--k", spec.k)->required();
    search->add_option("--n-max", n_max, "override the starting order");
    search->add_flag("--no-prune", no_prune);
    spec.all_witnesses = false;  // CLI default: report the first witness only
    search->add_flag("--all-witnesses", spec.all_witnesses);
    search->add_option("--jobs", spec.jobs, "concurrent group workers");
    search->add_flag("--json", search_json);

    std::string verify_filter;
    auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
    verify->add_option("--filter", verify_filter, "run only criteria whose name contains this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(bound_form, bound_spec, bound_explain, bound_json);
        if (snf->parsed()) return cmd_snf(snf_path, snf_json);
        if (family->parsed()) return cmd_family(family_name, family_k, family_out);
        if (certify->parsed()) return cmd_certify(certify_path, certify_dot);
        if (search->parsed()) {
            spec.prune = !no_prune;
            if (n_max > 0) spec.n_max = n_max;
            return cmd_search(spec, search_json);
        }
        if (verify->parsed()) return cmd_verify_all(verify_filter);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
