// Command-line front end for the signed-graph frustration toolkit.
//
// Exit codes: 0 on success (and on verdicts that hold), 1 on property
// violations (e.g. `critical` on a non-critical graph), 2 on malformed
// input, exhausted budgets, and uncertified results.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "sgfrust/sgfrust.hpp"

using namespace sgfrust;

namespace {

double default_budget_seconds()
{
    if (const char* env = std::getenv("SGFRUST_BUDGET")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 30.0;
}

void emit(const Report& report, bool json)
{
    if (json) std::cout << report.to_json().dump(2) << "\n";
}

int fail_with(const std::string& kind, const std::string& message, bool json)
{
    if (json) {
        nlohmann::json doc;
        doc["error"] = {{"kind", kind}, {"message", message}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message << "\n";
    }
    return 2;
}

nlohmann::json stats_json(const SolverStats& stats)
{
    return {{"nodes", stats.nodes}, {"seconds", stats.seconds}};
}

int cmd_gen(const std::string& family, int k, const std::string& out, bool json)
{
    auto kind = family_kind_from_string(family);
    if (!kind) return fail_with("usage", "unknown family '" + family + "'", json);
    auto fam = generate(FamilySpec{*kind, k});
    if (!out.empty()) {
        save_graph_file(out, fam.graph, fam.sigma);
        return 0;
    }
    if (json)
        std::cout << graph_to_json(fam.graph, fam.sigma).dump(2) << "\n";
    else
        std::cout << serialize_graph(fam.graph, fam.sigma);
    return 0;
}

int cmd_frustration(const std::string& file, const std::string& method, bool all_signatures,
                    double budget, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    Report report;
    report.command = "frustration";
    report.input_digest = graph_digest(g, sigma);
    report.payload["method"] = method;

    if (method == "oracle") {
        if (all_signatures)
            return fail_with("usage", "--all-signatures needs the enum method", json);
        int index = frustration_deletion_oracle(g, sigma);
        report.payload["index"] = index;
        emit(report, json);
        if (!json) std::cout << "index: " << index << " (deletion oracle)\n";
        return 0;
    }

    FrustrationResult res;
    if (method == "bnb") {
        if (all_signatures)
            return fail_with("usage", "--all-signatures needs the enum method", json);
        res = frustration_bnb(g, sigma, BnbOptions{budget});
    } else if (method == "enum") {
        res = frustration_switch_enum(g, sigma, all_signatures);
    } else {
        return fail_with("usage", "unknown method '" + method + "'", json);
    }

    if (res.certified && !verify_min_signature(g, sigma, res.witness, res.index))
        throw InternalInconsistencyError("solver witness failed re-verification");

    report.certified = res.certified;
    report.payload["index"] = res.index;
    report.payload["witness"] = res.witness.edges;
    if (res.all_min_signatures) {
        auto& arr = report.payload["all_min_signatures"] = nlohmann::json::array();
        for (const auto& s : *res.all_min_signatures) {
            if (!verify_min_signature(g, sigma, s, res.index))
                throw InternalInconsistencyError("minimum signature failed re-verification");
            arr.push_back(s.edges);
        }
    }
    report.stats = stats_json(res.stats);
    if (!res.certified) {
        emit(report, json);
        if (!json)
            std::cout << "budget exhausted; best incumbent " << res.index
                      << " is not certified\n";
        return 2;
    }
    emit(report, json);
    if (!json) {
        std::cout << "index: " << res.index << "\n";
        std::cout << "witness:";
        for (const auto& e : res.witness.edges) std::cout << " " << e;
        std::cout << "\n";
        if (res.all_min_signatures)
            std::cout << "minimum signatures: " << res.all_min_signatures->size() << "\n";
    }
    return 0;
}

int cmd_balance(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto cert = is_balanced(g, sigma);
    if (!verify_balance_certificate(g, sigma, cert))
        throw InternalInconsistencyError("balance certificate failed re-verification");
    Report report;
    report.command = "balance";
    report.input_digest = graph_digest(g, sigma);
    report.payload["balanced"] = cert.balanced;
    if (cert.balanced)
        report.payload["switch_witness"] = cert.switch_witness->vertices;
    else
        report.payload["negative_circuit"] = *cert.circuit_witness;
    emit(report, json);
    if (!json) {
        if (cert.balanced) {
            std::cout << "balanced; switch at:";
            for (const auto& v : cert.switch_witness->vertices) std::cout << " " << v;
            std::cout << "\n";
        } else {
            std::cout << "unbalanced; negative circuit:";
            for (const auto& e : *cert.circuit_witness) std::cout << " " << e;
            std::cout << "\n";
        }
    }
    return cert.balanced ? 0 : 1;
}

int cmd_critical(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    CriticalityReport rep;
    try {
        rep = is_critical(g, sigma);
    } catch (const BudgetExceededError&) {
        rep = is_critical_bnb(g, sigma, BnbOptions{default_budget_seconds()});
    }
    for (const auto& [id, sig] : rep.per_edge)
        if (!sig.contains(id) || !verify_min_signature(g, sigma, sig, rep.index))
            throw InternalInconsistencyError("per-edge witness failed re-verification");

    Report report;
    report.command = "critical";
    report.input_digest = graph_digest(g, sigma);
    report.certified = rep.certified;
    report.payload["index"] = rep.index;
    report.payload["critical"] = rep.critical;
    if (rep.failing_edge) report.payload["failing_edge"] = *rep.failing_edge;
    auto& per_edge = report.payload["per_edge"] = nlohmann::json::object();
    for (const auto& [id, sig] : rep.per_edge) per_edge[id] = sig.edges;
    report.stats = stats_json(rep.stats);
    emit(report, json);
    if (!rep.certified) {
        if (!json) std::cout << "budget exhausted; verdict not certified\n";
        return 2;
    }
    if (!json) {
        std::cout << "index: " << rep.index << "\n";
        if (rep.critical)
            std::cout << "critical: yes\n";
        else
            std::cout << "critical: no (deleting " << *rep.failing_edge
                      << " keeps the index)\n";
    }
    return rep.critical ? 0 : 1;
}

int cmd_sstar(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto verdict = in_s_star(g, sigma);
    Report report;
    report.command = "sstar";
    report.input_digest = graph_digest(g, sigma);
    report.payload["member"] = verdict.member;
    if (verdict.witness) {
        if (!verify_disjoint_negative_circuits(g, sigma, verdict.witness->first,
                                               verdict.witness->second))
            throw InternalInconsistencyError("disjoint circuit pair failed re-verification");
        report.payload["disjoint_negative_circuits"] = {verdict.witness->first,
                                                        verdict.witness->second};
    }
    emit(report, json);
    if (!json) {
        if (verdict.member) {
            std::cout << "member of S*: yes\n";
        } else {
            std::cout << "member of S*: no; edge-disjoint negative circuits:\n";
            for (const auto* c : {&verdict.witness->first, &verdict.witness->second}) {
                std::cout << " ";
                for (const auto& e : *c) std::cout << " " << e;
                std::cout << "\n";
            }
        }
    }
    return verdict.member ? 0 : 1;
}

int cmd_classify(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto result = classify_low_critical(g, sigma);
    Report report;
    report.command = "classify";
    report.input_digest = graph_digest(g, sigma);
    report.payload["index"] = result.index;
    report.payload["archetype"] = to_string(result.archetype);
    auto& steps = report.payload["reduction"] = nlohmann::json::array();
    for (const auto& s : result.steps)
        steps.push_back({{"op", s.kind == ReductionStep::Kind::suppress ? "suppress" : "collapse"},
                         {"vertex", s.vertex}});
    emit(report, json);
    if (!json)
        std::cout << "index " << result.index << ", archetype " << to_string(result.archetype)
                  << " after " << result.steps.size() << " reduction steps\n";
    return 0;
}

int cmd_decompose(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto witness = decompose_exhaustive(g, sigma);
    Report report;
    report.command = "decompose";
    report.input_digest = graph_digest(g, sigma);
    report.payload["decomposable"] = witness.has_value();
    if (witness) {
        report.payload["indices"] = witness->indices;
        report.payload["parts"] = witness->parts;
    }
    emit(report, json);
    if (!json) {
        if (witness) {
            std::cout << "decomposable:";
            for (int k : witness->indices) std::cout << " " << k;
            std::cout << "\n";
        } else {
            std::cout << "non-decomposable (certified at this size)\n";
        }
    }
    return witness ? 0 : 1;
}

int cmd_reduce(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto res = reduce_to_irreducible(g, sigma);
    if (json) {
        Report report;
        report.command = "reduce";
        report.input_digest = graph_digest(g, sigma);
        report.payload["graph"] = graph_to_json(res.graph, res.sigma);
        auto& steps = report.payload["reduction"] = nlohmann::json::array();
        for (const auto& s : res.steps)
            steps.push_back(
                {{"op", s.kind == ReductionStep::Kind::suppress ? "suppress" : "collapse"},
                 {"vertex", s.vertex}});
        emit(report, true);
    } else {
        std::cout << serialize_graph(res.graph, res.sigma);
    }
    return 0;
}

int cmd_verify_wall(const std::string& file, bool json)
{
    auto [g, sigma] = load_graph_file(file);
    auto rep = verify_s_star_structure(g, sigma);

    Report report;
    report.command = "verify-wall";
    report.input_digest = graph_digest(g, sigma);
    bool minimum = rep.index == static_cast<int>(sigma.size());
    report.payload["size"] = sigma.size();
    report.payload["index"] = rep.index;
    auto& checks = report.payload["checks"] = nlohmann::json::array();
    checks.push_back({{"name", "signature is minimum"},
                      {"pass", minimum},
                      {"detail", "index " + std::to_string(rep.index)}});
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    bool all = minimum && rep.all_pass();
    report.payload["pass"] = all;
    emit(report, json);
    if (!json) {
        std::cout << (minimum ? "pass" : "FAIL") << "  signature is minimum (index " << rep.index
                  << ", size " << sigma.size() << ")\n";
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact frustration toolkit for signed graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string family;
    std::string out;
    std::string method = "enum";
    int k = 0;
    bool all_signatures = false;
    double budget = default_budget_seconds();
    bool json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "structured output"); };

    auto* gen = app.add_subcommand("gen", "generate a named family member");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("--k", k, "size parameter");
    gen->add_option("-o", out, "output file (.sg or .json)");
    add_json(gen);

    auto* fr = app.add_subcommand("frustration", "exact frustration index with certificates");
    fr->add_option("file", file, "input graph")->required();
    fr->add_option("--method", method, "enum | bnb | oracle")->capture_default_str();
    fr->add_flag("--all-signatures", all_signatures, "collect every minimum signature");
    fr->add_option("--budget", budget, "branch-and-bound budget in seconds");
    add_json(fr);

    auto* bal = app.add_subcommand("balance", "balance with a certificate either way");
    bal->add_option("file", file)->required();
    add_json(bal);

    auto* crit = app.add_subcommand("critical", "criticality with per-edge witnesses");
    crit->add_option("file", file)->required();
    add_json(crit);

    auto* sstar = app.add_subcommand("sstar", "membership in S*");
    sstar->add_option("file", file)->required();
    add_json(sstar);

    auto* cls = app.add_subcommand("classify", "classify a graph of index 1 or 2");
    cls->add_option("file", file)->required();
    add_json(cls);

    auto* dec = app.add_subcommand("decompose", "search for a critical decomposition");
    dec->add_option("file", file)->required();
    add_json(dec);

    auto* red = app.add_subcommand("reduce", "suppress to the irreducible form");
    red->add_option("file", file)->required();
    add_json(red);

    auto* wall = app.add_subcommand("verify-wall", "structural checks for wall members");
    wall->add_option("file", file)->required();
    add_json(wall);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, k, out, json);
        if (fr->parsed()) return cmd_frustration(file, method, all_signatures, budget, json);
        if (bal->parsed()) return cmd_balance(file, json);
        if (crit->parsed()) return cmd_critical(file, json);
        if (sstar->parsed()) return cmd_sstar(file, json);
        if (cls->parsed()) return cmd_classify(file, json);
        if (dec->parsed()) return cmd_decompose(file, json);
        if (red->parsed()) return cmd_reduce(file, json);
        if (wall->parsed()) return cmd_verify_wall(file, json);
    } catch (const BudgetExceededError& e) {
        return fail_with("budget", e.what(), json);
    } catch (const MalformedInputError& e) {
        return fail_with("malformed-input", e.what(), json);
    } catch (const PreconditionError& e) {
        return fail_with("precondition", e.what(), json);
    } catch (const std::exception& e) {
        return fail_with("internal", e.what(), json);
    }
    return 2;
}
