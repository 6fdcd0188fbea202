#pragma once
// Text and JSON formats, report payloads, and certificate verifiers.
//
// The "sg1" text format:
//
//     sg1
//     # comment
//     v <name>
//     e <id> <u> <v> <+|->
//
// Names match [A-Za-z0-9_.-]+, tokens are whitespace separated, vertices are
// declared before the edges that use them. A structured mirror of the same
// fields is accepted as JSON. Serialization is canonical, so parse after
// serialize is the identity.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "balance.hpp"
#include "core.hpp"

namespace sgfrust {

struct ParsedGraph {
    SignedGraph graph;
    Signature sigma;
};

namespace detail {

inline bool valid_name(const std::string& s)
{
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

inline std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

/// Parses the sg1 text format; the signature is the set of edges declared
/// negative. Errors carry line numbers.
inline ParsedGraph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::vector<std::string> vertices;
    std::set<std::string> vertex_seen;
    std::vector<EdgeSpec> edges;
    std::set<std::string> edge_seen;
    std::vector<std::string> negatives;

    auto fail = [&](const std::string& msg) -> void {
        throw MalformedInputError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (!saw_header) {
            if (tokens.size() != 1 || tokens[0] != "sg1") fail("expected header 'sg1'");
            saw_header = true;
            continue;
        }
        if (tokens[0] == "v") {
            if (tokens.size() != 2) fail("vertex line needs exactly one name");
            if (!detail::valid_name(tokens[1])) fail("invalid vertex name '" + tokens[1] + "'");
            if (!vertex_seen.insert(tokens[1]).second)
                fail("duplicate vertex id '" + tokens[1] + "'");
            vertices.push_back(tokens[1]);
        } else if (tokens[0] == "e") {
            if (tokens.size() != 5) fail("edge line needs id, two endpoints and a sign");
            for (int i = 1; i <= 3; ++i)
                if (!detail::valid_name(tokens[i])) fail("invalid name '" + tokens[i] + "'");
            if (!edge_seen.insert(tokens[1]).second)
                fail("duplicate edge id '" + tokens[1] + "'");
            if (!vertex_seen.count(tokens[2]))
                fail("edge endpoint '" + tokens[2] + "' is not a declared vertex");
            if (!vertex_seen.count(tokens[3]))
                fail("edge endpoint '" + tokens[3] + "' is not a declared vertex");
            if (tokens[4].size() != 1 || !sign_from_char(tokens[4][0]))
                fail("unknown sign token '" + tokens[4] + "'");
            Sign s = *sign_from_char(tokens[4][0]);
            edges.push_back({tokens[1], tokens[2], tokens[3], s});
            if (s == Sign::negative) negatives.push_back(tokens[1]);
        } else {
            fail("unknown directive '" + tokens[0] + "'");
        }
    }
    if (!saw_header) {
        lineno = 1;
        fail("expected header 'sg1'");
    }
    return {SignedGraph(std::move(vertices), std::move(edges)), Signature(std::move(negatives))};
}

/// Canonical sg1 document; edge signs are taken from sigma.
inline std::string serialize_graph(const SignedGraph& g, const Signature& sigma)
{
    auto neg = detail::signature_mask(g, sigma);
    std::ostringstream out;
    out << "sg1\n";
    for (const auto& v : g.vertex_ids()) out << "v " << v << "\n";
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        out << "e " << e.id << " " << g.vertex_name(e.u) << " " << g.vertex_name(e.v) << " "
            << (neg[ei] ? '-' : '+') << "\n";
    }
    return out.str();
}

inline nlohmann::json graph_to_json(const SignedGraph& g, const Signature& sigma)
{
    auto neg = detail::signature_mask(g, sigma);
    nlohmann::json doc;
    doc["format"] = "sg1";
    doc["vertices"] = g.vertex_ids();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        edges.push_back({{"id", e.id},
                         {"u", g.vertex_name(e.u)},
                         {"v", g.vertex_name(e.v)},
                         {"sign", std::string(1, neg[ei] ? '-' : '+')}});
    }
    return doc;
}

/// The JSON mirror of the sg1 format.
inline ParsedGraph parse_graph_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "sg1")
        throw MalformedInputError("JSON document must carry format \"sg1\"");
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<std::string> negatives;
    for (const auto& v : doc.value("vertices", nlohmann::json::array())) {
        if (!v.is_string() || !detail::valid_name(v.get<std::string>()))
            throw MalformedInputError("invalid vertex name in JSON document");
        vertices.push_back(v.get<std::string>());
    }
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
        std::string id = e.value("id", "");
        std::string u = e.value("u", "");
        std::string v = e.value("v", "");
        std::string sign = e.value("sign", "");
        if (!detail::valid_name(id) || !detail::valid_name(u) || !detail::valid_name(v))
            throw MalformedInputError("invalid edge record in JSON document");
        if (sign.size() != 1 || !sign_from_char(sign[0]))
            throw MalformedInputError("unknown sign token '" + sign + "' in JSON document");
        edges.push_back({id, u, v, *sign_from_char(sign[0])});
        if (sign[0] == '-') negatives.push_back(id);
    }
    return {SignedGraph(std::move(vertices), std::move(edges)), Signature(std::move(negatives))};
}

/// Reads a graph file; a .json extension selects the JSON mirror.
inline ParsedGraph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return json ? parse_graph_json(buf.str()) : parse_graph(buf.str());
}

inline void save_graph_file(const std::string& path, const SignedGraph& g, const Signature& sigma)
{
    std::ofstream out(path);
    if (!out) throw MalformedInputError("cannot write '" + path + "'");
    bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json)
        out << graph_to_json(g, sigma).dump(2) << "\n";
    else
        out << serialize_graph(g, sigma);
}

/// FNV-1a digest of the canonical document, for report provenance.
inline std::string graph_digest(const SignedGraph& g, const Signature& sigma)
{
    std::string s = serialize_graph(g, sigma);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Machine-readable command report. JSON key order is canonical (sorted).
struct Report {
    std::string command;
    std::string input_digest;
    nlohmann::json payload = nlohmann::json::object();
    nlohmann::json stats = nlohmann::json::object();
    bool certified = true;

    nlohmann::json to_json() const
    {
        nlohmann::json doc;
        doc["command"] = command;
        doc["input_digest"] = input_digest;
        doc["payload"] = payload;
        doc["stats"] = stats;
        doc["certified"] = certified;
        return doc;
    }
};

// ---------------------------------------------------------------------------
// Certificate verifiers: cheap, definition-level checks used before any
// certificate leaves the process.
// ---------------------------------------------------------------------------

/// witness is a minimum signature for the claimed index: right size and
/// deleting it balances the graph.
inline bool verify_min_signature(const SignedGraph& g, const Signature& sigma,
                                 const Signature& witness, int index)
{
    if (static_cast<int>(witness.size()) != index) return false;
    for (const auto& id : witness.edges)
        if (!g.has_edge(id)) return false;
    SignedGraph h = remove_edges(g, witness.edges);
    return is_balanced(h, restrict_signature(sigma, h)).balanced;
}

/// The edge set is a circuit of g: all touched vertices have degree two and
/// the chosen edges are connected.
inline bool verify_circuit(const SignedGraph& g, const std::vector<std::string>& edges)
{
    if (edges.empty()) return false;
    std::map<int, int> degree;
    std::map<int, int> comp;
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v];
        return v;
    };
    std::set<std::string> seen;
    for (const auto& id : edges) {
        if (!seen.insert(id).second) return false;
        auto ei = g.edge_index(id);
        if (!ei) return false;
        const Edge& e = g.edge(*ei);
        if (e.is_loop()) {
            degree[e.u] += 2;
        } else {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        if (!comp.count(e.u)) comp[e.u] = e.u;
        if (!comp.count(e.v)) comp[e.v] = e.v;
        comp[find(e.u)] = find(e.v);
    }
    for (auto [v, d] : degree)
        if (d != 2) return false;
    int root = find(degree.begin()->first);
    for (auto [v, d] : degree)
        if (find(v) != root) return false;
    return true;
}

inline bool verify_negative_circuit(const SignedGraph& g, const Signature& sigma,
                                    const std::vector<std::string>& edges)
{
    if (!verify_circuit(g, edges)) return false;
    int neg = 0;
    for (const auto& id : edges)
        if (sigma.contains(id)) ++neg;
    return neg % 2 == 1;
}

inline bool verify_balance_certificate(const SignedGraph& g, const Signature& sigma,
                                       const BalanceCertificate& cert)
{
    if (cert.balanced)
        return cert.switch_witness && switch_signature(g, sigma, *cert.switch_witness).empty();
    return cert.circuit_witness && verify_negative_circuit(g, sigma, *cert.circuit_witness);
}

inline bool verify_disjoint_negative_circuits(const SignedGraph& g, const Signature& sigma,
                                              const std::vector<std::string>& first,
                                              const std::vector<std::string>& second)
{
    if (!verify_negative_circuit(g, sigma, first)) return false;
    if (!verify_negative_circuit(g, sigma, second)) return false;
    std::set<std::string> a(first.begin(), first.end());
    for (const auto& id : second)
        if (a.count(id)) return false;
    return true;
}

/// The cut induced by u contains the edge and is equilibrated under gamma.
inline bool verify_equilibrated_cut(const SignedGraph& g, const Signature& gamma,
                                    const std::string& edge_id, const SwitchSet& u)
{
    auto ei = g.edge_index(edge_id);
    if (!ei) return false;
    const Edge& e = g.edge(*ei);
    if (e.is_loop()) return false;
    if (u.contains(g.vertex_name(e.u)) == u.contains(g.vertex_name(e.v))) return false;
    return cut_summary(g, gamma, u).equilibrated();
}

}  // namespace sgfrust
