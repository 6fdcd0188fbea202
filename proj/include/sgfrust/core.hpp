#pragma once
// Signed multigraph model: vertices, signed edges (loops and parallel edges
// allowed), signatures, switch sets, edge cuts and connected components.
//
// Everything here is an immutable value; all operations are pure functions.
// Vertex and edge identifiers are caller-supplied strings; construction
// canonicalizes both orders (sorted ids) so downstream enumeration is
// deterministic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgfrust {

class MalformedInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Sign : std::uint8_t { positive = 0, negative = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    return a == b ? Sign::positive : Sign::negative;
}

constexpr char to_char(Sign s) noexcept
{
    return s == Sign::negative ? '-' : '+';
}

inline std::optional<Sign> sign_from_char(char c) noexcept
{
    if (c == '+') return Sign::positive;
    if (c == '-') return Sign::negative;
    return std::nullopt;
}

/// Edge as supplied by a caller. Loops (u == v) are allowed; parallel edges
/// are distinct records that differ only by id.
struct EdgeSpec {
    std::string id;
    std::string u;
    std::string v;
    Sign sign = Sign::positive;
};

/// Validated edge with endpoints resolved to vertex indices (u <= v).
struct Edge {
    std::string id;
    int u = 0;
    int v = 0;
    Sign sign = Sign::positive;

    bool is_loop() const noexcept { return u == v; }
};

/// A set of edge identifiers declared negative. Kept sorted and duplicate
/// free so signatures compare and print deterministically.
struct Signature {
    std::vector<std::string> edges;

    Signature() = default;
    explicit Signature(std::vector<std::string> ids) : edges(std::move(ids))
    {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    std::size_t size() const noexcept { return edges.size(); }
    bool empty() const noexcept { return edges.empty(); }
    bool contains(const std::string& id) const
    {
        return std::binary_search(edges.begin(), edges.end(), id);
    }

    friend bool operator==(const Signature& a, const Signature& b) { return a.edges == b.edges; }
    friend bool operator<(const Signature& a, const Signature& b) { return a.edges < b.edges; }
};

inline Signature symmetric_difference(const Signature& a, const Signature& b)
{
    std::vector<std::string> out;
    std::set_symmetric_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                  std::back_inserter(out));
    return Signature(std::move(out));
}

/// A vertex subset inducing the cut that switching operates on.
struct SwitchSet {
    std::vector<std::string> vertices;

    SwitchSet() = default;
    explicit SwitchSet(std::vector<std::string> ids) : vertices(std::move(ids))
    {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    std::size_t size() const noexcept { return vertices.size(); }
    bool contains(const std::string& id) const
    {
        return std::binary_search(vertices.begin(), vertices.end(), id);
    }

    friend bool operator==(const SwitchSet& a, const SwitchSet& b)
    {
        return a.vertices == b.vertices;
    }
};

struct CutSummary {
    int total = 0;
    int negatives = 0;
    int positives = 0;

    bool equilibrated() const noexcept { return negatives == positives; }
};

class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and canonicalizes. Rejects duplicate vertex ids, duplicate
    /// edge ids and edges with unknown endpoints.
    SignedGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges)
    {
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            if (vertices[i] == vertices[i + 1])
                throw MalformedInputError("duplicate vertex id '" + vertices[i] + "'");
        }
        vertex_ids_ = std::move(vertices);
        for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i)
            vertex_lookup_.emplace(vertex_ids_[i], i);

        std::sort(edges.begin(), edges.end(),
                  [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
        edges_.reserve(edges.size());
        for (const EdgeSpec& spec : edges) {
            auto iu = vertex_lookup_.find(spec.u);
            auto iv = vertex_lookup_.find(spec.v);
            if (iu == vertex_lookup_.end())
                throw MalformedInputError("edge '" + spec.id + "' references unknown vertex '" +
                                          spec.u + "'");
            if (iv == vertex_lookup_.end())
                throw MalformedInputError("edge '" + spec.id + "' references unknown vertex '" +
                                          spec.v + "'");
            if (!edge_lookup_.emplace(spec.id, static_cast<int>(edges_.size())).second)
                throw MalformedInputError("duplicate edge id '" + spec.id + "'");
            Edge e;
            e.id = spec.id;
            e.u = std::min(iu->second, iv->second);
            e.v = std::max(iu->second, iv->second);
            e.sign = spec.sign;
            edges_.push_back(std::move(e));
        }

        incidence_.assign(vertex_ids_.size(), {});
        for (int ei = 0; ei < static_cast<int>(edges_.size()); ++ei) {
            const Edge& e = edges_[ei];
            incidence_[e.u].push_back(ei);
            if (!e.is_loop()) incidence_[e.v].push_back(ei);
        }
    }

    int vertex_count() const noexcept { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::string& vertex_name(int v) const { return vertex_ids_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }

    std::optional<int> vertex_index(const std::string& id) const
    {
        auto it = vertex_lookup_.find(id);
        if (it == vertex_lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<int> edge_index(const std::string& id) const
    {
        auto it = edge_lookup_.find(id);
        if (it == edge_lookup_.end()) return std::nullopt;
        return it->second;
    }

    bool has_vertex(const std::string& id) const { return vertex_lookup_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return edge_lookup_.count(id) != 0; }

    /// Edge indices incident to v. Loops appear once in the list.
    const std::vector<int>& incident_edges(int v) const { return incidence_.at(v); }

    /// Degree with loops counted twice.
    int degree(int v) const
    {
        int d = 0;
        for (int ei : incidence_.at(v)) d += edges_[ei].is_loop() ? 2 : 1;
        return d;
    }

    /// Number of distinct neighbors of v, not counting v itself.
    int neighbor_count(int v) const
    {
        std::set<int> nbrs;
        for (int ei : incidence_.at(v)) {
            const Edge& e = edges_[ei];
            if (e.is_loop()) continue;
            nbrs.insert(e.u == v ? e.v : e.u);
        }
        return static_cast<int>(nbrs.size());
    }

    /// The signature given by the signs stored on the edges.
    Signature declared_signature() const
    {
        std::vector<std::string> neg;
        for (const Edge& e : edges_)
            if (e.sign == Sign::negative) neg.push_back(e.id);
        return Signature(std::move(neg));
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b)
    {
        if (a.vertex_ids_ != b.vertex_ids_) return false;
        if (a.edges_.size() != b.edges_.size()) return false;
        for (std::size_t i = 0; i < a.edges_.size(); ++i) {
            const Edge& x = a.edges_[i];
            const Edge& y = b.edges_[i];
            if (x.id != y.id || x.u != y.u || x.v != y.v || x.sign != y.sign) return false;
        }
        return true;
    }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> edge_lookup_;
    std::vector<std::vector<int>> incidence_;
};

inline SignedGraph build_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges)
{
    return SignedGraph(std::move(vertices), std::move(edges));
}

namespace detail {

/// Edge-membership mask for a signature, indexed by edge index.
inline std::vector<char> signature_mask(const SignedGraph& g, const Signature& sigma)
{
    std::vector<char> mask(g.edge_count(), 0);
    for (const std::string& id : sigma.edges) {
        auto ei = g.edge_index(id);
        if (!ei) throw PreconditionError("signature edge '" + id + "' is not an edge of the graph");
        mask[*ei] = 1;
    }
    return mask;
}

/// Vertex-membership mask for a switch set.
inline std::vector<char> switch_mask(const SignedGraph& g, const SwitchSet& u)
{
    std::vector<char> mask(g.vertex_count(), 0);
    for (const std::string& id : u.vertices) {
        auto vi = g.vertex_index(id);
        if (!vi) throw PreconditionError("switch set vertex '" + id + "' is not in the graph");
        mask[*vi] = 1;
    }
    return mask;
}

inline Signature signature_from_mask(const SignedGraph& g, const std::vector<char>& mask)
{
    std::vector<std::string> ids;
    for (int ei = 0; ei < g.edge_count(); ++ei)
        if (mask[ei]) ids.push_back(g.edge(ei).id);
    return Signature(std::move(ids));
}

/// Connected-component labels over vertices (edges connect their endpoints,
/// loops connect nothing new). Labels are dense, assigned in vertex order.
inline std::vector<int> component_labels(const SignedGraph& g)
{
    std::vector<int> label(g.vertex_count(), -1);
    int next = 0;
    std::vector<int> stack;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (label[root] != -1) continue;
        label[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int ei : g.incident_edges(v)) {
                const Edge& e = g.edge(ei);
                int w = e.u == v ? e.v : e.u;
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace detail

/// The signature obtained by switching at U, i.e. the symmetric difference of
/// sigma with the cut induced by U. Loops never change membership.
inline Signature switch_signature(const SignedGraph& g, const Signature& sigma, const SwitchSet& u)
{
    auto smask = detail::signature_mask(g, sigma);
    auto umask = detail::switch_mask(g, u);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (e.is_loop()) continue;
        if (umask[e.u] != umask[e.v]) smask[ei] = !smask[ei];
    }
    return detail::signature_from_mask(g, smask);
}

/// Counts over the cut induced by U, split by sign relative to sigma.
inline CutSummary cut_summary(const SignedGraph& g, const Signature& sigma, const SwitchSet& u)
{
    auto smask = detail::signature_mask(g, sigma);
    auto umask = detail::switch_mask(g, u);
    CutSummary out;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (e.is_loop()) continue;
        if (umask[e.u] == umask[e.v]) continue;
        ++out.total;
        if (smask[ei])
            ++out.negatives;
        else
            ++out.positives;
    }
    return out;
}

/// Connected components as standalone graphs, ordered by their smallest
/// vertex id. Loops stay with their vertex.
inline std::vector<SignedGraph> components(const SignedGraph& g)
{
    auto label = detail::component_labels(g);
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);

    std::vector<std::vector<std::string>> verts(count);
    std::vector<std::vector<EdgeSpec>> edges(count);
    for (int v = 0; v < g.vertex_count(); ++v) verts[label[v]].push_back(g.vertex_name(v));
    for (const Edge& e : g.edges())
        edges[label[e.u]].push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v), e.sign});

    std::vector<SignedGraph> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) out.emplace_back(std::move(verts[c]), std::move(edges[c]));
    return out;
}

/// Copy with the listed edges removed; vertices are kept.
inline SignedGraph remove_edges(const SignedGraph& g, const std::vector<std::string>& ids)
{
    std::set<std::string> drop(ids.begin(), ids.end());
    for (const std::string& id : ids)
        if (!g.has_edge(id)) throw PreconditionError("cannot remove unknown edge '" + id + "'");
    std::vector<EdgeSpec> keep;
    for (const Edge& e : g.edges())
        if (!drop.count(e.id)) keep.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v), e.sign});
    return SignedGraph(g.vertex_ids(), std::move(keep));
}

/// Copy with the listed vertices (and their incident edges) removed.
inline SignedGraph remove_vertices(const SignedGraph& g, const std::vector<std::string>& ids)
{
    std::set<std::string> drop(ids.begin(), ids.end());
    for (const std::string& id : ids)
        if (!g.has_vertex(id)) throw PreconditionError("cannot remove unknown vertex '" + id + "'");
    std::vector<std::string> verts;
    for (const std::string& v : g.vertex_ids())
        if (!drop.count(v)) verts.push_back(v);
    std::vector<EdgeSpec> keep;
    for (const Edge& e : g.edges()) {
        if (drop.count(g.vertex_name(e.u)) || drop.count(g.vertex_name(e.v))) continue;
        keep.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v), e.sign});
    }
    return SignedGraph(std::move(verts), std::move(keep));
}

/// Subgraph spanned by the given edges. Vertices not touching any kept edge
/// are dropped unless keep_isolated is set.
inline SignedGraph subgraph_from_edges(const SignedGraph& g, const std::vector<std::string>& ids,
                                       bool keep_isolated = false)
{
    std::set<std::string> want(ids.begin(), ids.end());
    std::set<std::string> touched;
    std::vector<EdgeSpec> keep;
    for (const Edge& e : g.edges()) {
        if (!want.count(e.id)) continue;
        want.erase(e.id);
        touched.insert(g.vertex_name(e.u));
        touched.insert(g.vertex_name(e.v));
        keep.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v), e.sign});
    }
    if (!want.empty())
        throw PreconditionError("subgraph references unknown edge '" + *want.begin() + "'");
    std::vector<std::string> verts;
    for (const std::string& v : g.vertex_ids())
        if (keep_isolated || touched.count(v)) verts.push_back(v);
    return SignedGraph(std::move(verts), std::move(keep));
}

/// Restriction of a signature to the edges present in g.
inline Signature restrict_signature(const Signature& sigma, const SignedGraph& g)
{
    std::vector<std::string> keep;
    for (const std::string& id : sigma.edges)
        if (g.has_edge(id)) keep.push_back(id);
    return Signature(std::move(keep));
}

/// Copy of g whose stored edge signs are taken from sigma. Used by surgery
/// operations so the returned graph and signature always agree.
inline SignedGraph rebase_signs(const SignedGraph& g, const Signature& sigma)
{
    auto mask = detail::signature_mask(g, sigma);
    std::vector<EdgeSpec> specs;
    specs.reserve(g.edges().size());
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        specs.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v),
                         mask[ei] ? Sign::negative : Sign::positive});
    }
    return SignedGraph(g.vertex_ids(), std::move(specs));
}

}  // namespace sgfrust
