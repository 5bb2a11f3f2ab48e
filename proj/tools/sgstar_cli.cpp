// Command-line surface for the sgstar library. Every analysis subcommand prints
// one JSON report to stdout; `construct` and `switch` print a graph file.
// Exit codes: 0 success, 1 violated certificate, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sgstar/sgstar.hpp"

namespace {

using nlohmann::json;
using namespace sgstar;

constexpr const char* kVersion = "0.1.0";

SignedGraph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin, "<stdin>");
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    return read_graph(in, path);
}

ExactScalar parse_mu(const std::string& text) {
    try {
        return ExactScalar::parse(text);
    } catch (const Error& e) {
        throw Error(std::string("--mu: ") + e.what());
    }
}

json descriptor_json(const EigenvalueDescriptor& d) {
    json j;
    j["multiplicity"] = d.multiplicity;
    if (d.exact) {
        j["exact"] = true;
        j["value"] = d.value.str();
        if (d.main) j["is_main"] = *d.main;
    } else {
        j["exact"] = false;
        j["approx"] = true;
        j["value"] = d.approx;
    }
    return j;
}

json bound_json(const BoundReport& r) {
    json j;
    j["bound_name"] = r.bound_name;
    j["applicable"] = r.applicable;
    j["n"] = r.n;
    j["t"] = r.t;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.applicable) {
        j["bound_value"] = r.bound_value.get_str();
        j["holds"] = r.holds;
        j["attained"] = r.attained;
    }
    return j;
}

json class_value_json(const ClassValue& c) {
    json j;
    j["vacuous"] = c.vacuous;
    if (!c.vacuous) j["value"] = c.value;
    return j;
}

json vertex_set_json(const VertexSet& s) { return json(s.members()); }

json report(const std::string& command, json inputs, json results) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["version"] = kVersion;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_spectrum(const std::string& file) {
    SignedGraph g = load_graph(file);
    SpectrumReport rep = spectrum(g);
    json eigenvalues = json::array();
    for (const auto& d : rep.descriptors) eigenvalues.push_back(descriptor_json(d));
    emit(report("spectrum", {{"file", file}}, {{"n", rep.n}, {"eigenvalues", eigenvalues}}));
    return 0;
}

int run_multiplicity(const std::string& file, const std::string& mu_text) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    int k = multiplicity(g, mu);
    emit(report("multiplicity", {{"file", file}, {"mu", mu.str()}},
                {{"multiplicity", k}, {"n", g.order()}}));
    return 0;
}

int run_bounds(const std::string& file, const std::string& mu_text) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    if (multiplicity(g, mu) == 0)
        throw NotAnEigenvalue("mu = " + mu.str() + " is not an eigenvalue");

    json bounds = json::array();
    std::vector<BoundReport> reports = {
        naive_bound_check(g, mu),
        cubic_bound_check(g, mu),
        nonmain_bound_check(g, mu),
        quadratic_bound_check(g, mu),
    };
    BoundReport seidel;
    seidel.bound_name = "seidel_absolute";
    seidel.n = g.order();
    try {
        std::optional<long> witness_net_degree;
        if (auto w = net_regular_witness(g)) witness_net_degree = w->second;
        seidel = seidel_absolute_check(spectrum(g), witness_net_degree);
    } catch (const ShapeMismatch& e) {
        seidel.reason = e.what();
    }
    reports.push_back(seidel);

    bool violated = false;
    for (const auto& r : reports) {
        bounds.push_back(bound_json(r));
        if (r.applicable && !r.holds) violated = true;
    }
    emit(report("bounds", {{"file", file}, {"mu", mu.str()}}, {{"bounds", bounds}}));
    return violated ? 1 : 0;
}

int run_star_set(const std::string& file, const std::string& mu_text) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    StarPartition p = find_star_set(g, mu);
    auto verification = verify_star_set(g, mu, p.star_set);
    json results;
    results["star_set"] = vertex_set_json(p.star_set);
    results["complement"] = vertex_set_json(p.complement);
    results["k"] = p.k();
    results["t"] = p.t();
    results["verified"] = verification.ok;
    emit(report("star-set", {{"file", file}, {"mu", mu.str()}}, results));
    return verification.ok ? 0 : 1;
}

int run_verify_star_set(const std::string& file, const std::string& mu_text,
                        const std::vector<int>& set) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    auto verification = verify_star_set(g, mu, VertexSet(set));
    json results;
    results["ok"] = verification.ok;
    if (!verification.ok) {
        results["violation"] = verification.violation;
        if (verification.offending)
            results["offending"] = {verification.offending->first, verification.offending->second};
    }
    emit(report("verify-star-set", {{"file", file}, {"mu", mu.str()}, {"set", json(set)}}, results));
    return verification.ok ? 0 : 1;
}

int run_extend(const std::string& file, const std::string& mu_text, size_t max_cliques,
               size_t max_size, const std::string& emit_dir) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    ExtensionLimits limits;
    if (max_cliques > 0) limits.max_cliques = max_cliques;
    if (max_size > 0) limits.max_size = max_size;
    ExtensionCatalog catalog = max_extensions(g, mu, limits);

    json vectors = json::array();
    for (const auto& v : catalog.vectors) {
        json b = json::array();
        for (int8_t x : v.b) b.push_back(static_cast<int>(x));
        vectors.push_back(b);
    }
    json cliques = json::array();
    for (const auto& c : catalog.cliques) cliques.push_back(c);

    json results;
    results["good_vector_count"] = catalog.vectors.size();
    results["good_vectors"] = vectors;
    results["cliques"] = cliques;
    results["truncated"] = catalog.truncated;

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        json emitted = json::array();
        for (size_t i = 0; i < catalog.cliques.size(); ++i) {
            std::vector<GoodVector> clique;
            for (int idx : catalog.cliques[i]) clique.push_back(catalog.vectors[idx]);
            StarPartition p = realize_extension(g, mu, clique);
            char name[32];
            std::snprintf(name, sizeof(name), "extension_%03zu.sg", i);
            std::filesystem::path path = std::filesystem::path(emit_dir) / name;
            std::ofstream out(path);
            write_graph(out, p.g);
            emitted.push_back(path.string());
        }
        results["emitted"] = emitted;
    }

    json inputs = {{"file", file}, {"mu", mu.str()}};
    if (max_cliques > 0) inputs["max_cliques"] = max_cliques;
    if (max_size > 0) inputs["max_size"] = max_size;
    if (!emit_dir.empty()) inputs["emit_dir"] = emit_dir;
    emit(report("extend", inputs, results));
    return 0;
}

int run_srg(const std::string& file) {
    SignedGraph g = load_graph(file);
    SrgCheckResult check = srg_check(g);
    json results;
    results["accepted"] = check.accepted;
    if (!check.accepted) {
        results["rejection"] = check.rejection;
    } else {
        json params;
        params["degree"] = check.params.degree;
        if (check.params.net_degree) params["net_degree"] = *check.params.net_degree;
        params["a"] = class_value_json(check.params.a);
        params["b"] = class_value_json(check.params.b);
        params["c"] = class_value_json(check.params.c);
        results["parameters"] = params;
        try {
            results["half_sum_consequence"] = half_sum_consequence_check(check.params);
        } catch (const VacuousClass& e) {
            results["half_sum_consequence"] = nullptr;
            results["half_sum_note"] = e.what();
        }
        try {
            results["eigenvalue_count"] = to_string(eigenvalue_count_check(g));
        } catch (const PreconditionFailed& e) {
            results["eigenvalue_count"] = nullptr;
            results["eigenvalue_count_note"] = e.what();
        }
        results["extremal_parameters_note"] =
            "at bound attainment: a=(6*beta*mu-2+s+3*gamma*s)/(3*beta), "
            "b=(-6*beta*mu-2-s+3*gamma*s)/(3*beta), c=(3*gamma*s-2)/(3*beta); "
            "beta, gamma, s are expansion coefficients not computable from the "
            "graph alone and are not evaluated";
    }
    emit(report("srg", {{"file", file}}, results));
    return 0;
}

int run_switch(const std::string& file, const std::vector<int>& set) {
    SignedGraph g = load_graph(file);
    write_graph(std::cout, switched(g, VertexSet(set)));
    return 0;
}

int run_nonmain(const std::string& file, const std::string& mu_text) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    bool main_flag = is_main(g, mu);
    emit(report("nonmain", {{"file", file}, {"mu", mu.str()}},
                {{"is_main", main_flag}, {"is_nonmain", !main_flag}}));
    return 0;
}

int run_certify(const std::string& file, const std::string& mu_text) {
    SignedGraph g = load_graph(file);
    ExactScalar mu = parse_mu(mu_text);
    StarPartition p = find_star_set(g, mu);
    RankCertificate cubic = cubic_rank_certificate(p);
    RankCertificate quad = quadratic_rank_certificate(p);
    BoundReport quad_bound = quadratic_bound_check(g, mu);

    json results;
    results["cubic"] = {{"rank", cubic.rank},
                        {"dim_h3", cubic.dim.get_str()},
                        {"independent", cubic.independent}};
    results["quadratic"] = {{"rank", quad.rank},
                            {"dim_h2", quad.dim.get_str()},
                            {"independent", quad.independent},
                            {"gram_identity", quad.gram_identity}};
    results["quadratic_bound_applicable"] = quad_bound.applicable;
    emit(report("certify", {{"file", file}, {"mu", mu.str()}}, results));

    // The cubic independence and the Gram identity must always hold; the quadratic independence is only
    // promised when the quadratic bound applies.
    bool violated = !cubic.independent || !quad.gram_identity ||
                    (quad_bound.applicable && !quad.independent);
    return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral multiplicity bounds for signed graphs via star complements"};
    app.require_subcommand(1);

    std::string file, mu_text, emit_dir;
    std::vector<int> set;
    size_t max_cliques = 0, max_size = 0;
    int neg_count = 1;

    auto* c_spectrum = app.add_subcommand("spectrum", "exact spectrum report");
    c_spectrum->add_option("file", file, "graph file, or - for stdin")->required();

    auto* c_mult = app.add_subcommand("multiplicity", "exact eigenvalue multiplicity");
    c_mult->add_option("file", file)->required();
    c_mult->add_option("--mu", mu_text, "exact scalar, e.g. 2, -7/3, 1/2+3/4*sqrt(2)")->required();

    auto* c_bounds = app.add_subcommand("bounds", "all multiplicity bound reports");
    c_bounds->add_option("file", file)->required();
    c_bounds->add_option("--mu", mu_text)->required();

    auto* c_star = app.add_subcommand("star-set", "greedy star set with verification");
    c_star->add_option("file", file)->required();
    c_star->add_option("--mu", mu_text)->required();

    auto* c_verify = app.add_subcommand("verify-star-set", "check a candidate star set");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--mu", mu_text)->required();
    c_verify->add_option("--set", set, "comma-separated vertex list")->delimiter(',');

    auto* c_extend = app.add_subcommand("extend", "good vectors and maximal extensions");
    c_extend->add_option("file", file, "star complement graph file")->required();
    c_extend->add_option("--mu", mu_text)->required();
    c_extend->add_option("--max-cliques", max_cliques, "stop after this many cliques");
    c_extend->add_option("--max-size", max_size, "cap clique size");
    c_extend->add_option("--emit-dir", emit_dir, "write realized extensions here");

    auto* c_construct = app.add_subcommand("construct", "generate a named graph");
    c_construct->require_subcommand(1);
    auto* c_quad = c_construct->add_subcommand("quadrangle", "4-cycle with odd negative edges");
    c_quad->add_option("--neg", neg_count, "number of negative edges (1 or 3)")
        ->check(CLI::IsMember({1, 3}));
    c_construct->add_subcommand("e8", "Gram signed graph of the E8 positive roots");

    auto* c_srg = app.add_subcommand("srg", "strong regularity check and parameters");
    c_srg->add_option("file", file)->required();

    auto* c_switch = app.add_subcommand("switch", "switch the graph at a vertex set");
    c_switch->add_option("file", file)->required();
    c_switch->add_option("--set", set, "comma-separated vertex list")->delimiter(',');

    auto* c_nonmain = app.add_subcommand("nonmain", "main/non-main classification");
    c_nonmain->add_option("file", file)->required();
    c_nonmain->add_option("--mu", mu_text)->required();

    auto* c_certify = app.add_subcommand("certify", "cubic and quadratic rank certificates");
    c_certify->add_option("file", file)->required();
    c_certify->add_option("--mu", mu_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_spectrum)) return run_spectrum(file);
        if (app.got_subcommand(c_mult)) return run_multiplicity(file, mu_text);
        if (app.got_subcommand(c_bounds)) return run_bounds(file, mu_text);
        if (app.got_subcommand(c_star)) return run_star_set(file, mu_text);
        if (app.got_subcommand(c_verify)) return run_verify_star_set(file, mu_text, set);
        if (app.got_subcommand(c_extend))
            return run_extend(file, mu_text, max_cliques, max_size, emit_dir);
        if (app.got_subcommand(c_construct)) {
            if (c_construct->got_subcommand("quadrangle"))
                write_graph(std::cout, quadrangle(neg_count));
            else
                write_graph(std::cout, e8_signed_graph());
            return 0;
        }
        if (app.got_subcommand(c_srg)) return run_srg(file);
        if (app.got_subcommand(c_switch)) return run_switch(file, set);
        if (app.got_subcommand(c_nonmain)) return run_nonmain(file, mu_text);
        if (app.got_subcommand(c_certify)) return run_certify(file, mu_text);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
