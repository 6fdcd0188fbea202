#pragma once
// Subdivision and suppression surgery on signed multigraphs, reduction to
// irreducible form, classification of graphs with index one or two, and the
// 2- and 3-edge-sums.
//
// Every operation returns a fresh (graph, signature) pair whose stored edge
// signs agree with the returned signature.

#include <array>

#include "criticality.hpp"
#include "isomorphism.hpp"

namespace sgfrust {

struct SurgeryResult {
    SignedGraph graph;
    Signature sigma;
};

namespace detail {

inline std::string fresh_name(const std::string& base, const std::set<std::string>& taken)
{
    if (!taken.count(base)) return base;
    for (int i = 2;; ++i) {
        std::string cand = base + "." + std::to_string(i);
        if (!taken.count(cand)) return cand;
    }
}

inline std::set<std::string> vertex_name_set(const SignedGraph& g)
{
    return {g.vertex_ids().begin(), g.vertex_ids().end()};
}

inline std::set<std::string> edge_id_set(const SignedGraph& g)
{
    std::set<std::string> out;
    for (const Edge& e : g.edges()) out.insert(e.id);
    return out;
}

/// Edge indices between two (possibly equal) vertices.
inline std::vector<int> bundle_between(const SignedGraph& g, int a, int b)
{
    std::vector<int> out;
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (e.u == lo && e.v == hi) out.push_back(ei);
    }
    return out;
}

}  // namespace detail

/// Subdivides the multiedge between x and y (all of its edges must share one
/// sign s): the bundle is replaced by a new vertex v with a positive bundle
/// v-x and an s-signed bundle v-y of the same multiplicity. Subdividing a
/// loop bundle (x == y) yields the doubled parallel pair.
inline SurgeryResult subdivide_multiedge(const SignedGraph& g, const Signature& sigma,
                                         const std::string& x, const std::string& y)
{
    auto xi = g.vertex_index(x);
    auto yi = g.vertex_index(y);
    if (!xi || !yi) throw PreconditionError("subdivision endpoints must be vertices");
    auto neg = detail::signature_mask(g, sigma);
    auto bundle = detail::bundle_between(g, *xi, *yi);
    if (bundle.empty())
        throw PreconditionError("no multiedge between '" + x + "' and '" + y + "'");
    bool s_neg = neg[bundle.front()];
    for (int ei : bundle)
        if (static_cast<bool>(neg[ei]) != s_neg)
            throw PreconditionError("multiedge between '" + x + "' and '" + y +
                                    "' carries mixed signs");

    auto vtaken = detail::vertex_name_set(g);
    auto etaken = detail::edge_id_set(g);
    std::string nv = detail::fresh_name(x + "." + y + ".v", vtaken);

    std::set<int> drop(bundle.begin(), bundle.end());
    std::vector<EdgeSpec> specs;
    std::vector<std::string> new_sigma;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (drop.count(ei)) continue;
        const Edge& e = g.edge(ei);
        specs.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v),
                         neg[ei] ? Sign::negative : Sign::positive});
        if (neg[ei]) new_sigma.push_back(e.id);
    }
    for (int ei : bundle) {
        const std::string& base = g.edge(ei).id;
        std::string ea = detail::fresh_name(base + ".a", etaken);
        etaken.insert(ea);
        std::string eb = detail::fresh_name(base + ".b", etaken);
        etaken.insert(eb);
        specs.push_back({ea, nv, x, Sign::positive});
        specs.push_back({eb, nv, y, s_neg ? Sign::negative : Sign::positive});
        if (s_neg) new_sigma.push_back(eb);
    }
    std::vector<std::string> verts = g.vertex_ids();
    verts.push_back(nv);
    return {SignedGraph(std::move(verts), std::move(specs)), Signature(std::move(new_sigma))};
}

/// True iff v has exactly two distinct neighbors, no loops, both bundles
/// sign-uniform under sigma and of equal multiplicity.
inline bool can_suppress(const SignedGraph& g, const Signature& sigma, const std::string& v,
                         std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto vi = g.vertex_index(v);
    if (!vi) return fail("unknown vertex");
    auto neg = detail::signature_mask(g, sigma);
    std::set<int> nbrs;
    for (int ei : g.incident_edges(*vi)) {
        const Edge& e = g.edge(ei);
        if (e.is_loop()) return fail("vertex carries a loop");
        nbrs.insert(e.u == *vi ? e.v : e.u);
    }
    if (nbrs.size() != 2) return fail("vertex does not have exactly two neighbors");
    auto it = nbrs.begin();
    int a = *it++;
    int b = *it;
    auto ba = detail::bundle_between(g, *vi, a);
    auto bb = detail::bundle_between(g, *vi, b);
    if (ba.size() != bb.size()) return fail("sides have unequal multiplicities");
    for (const auto& side : {ba, bb}) {
        bool first = neg[side.front()];
        for (int ei : side)
            if (static_cast<bool>(neg[ei]) != first) return fail("a side carries mixed signs");
    }
    return true;
}

/// Inverse of multiedge subdivision: replaces the two bundles at a divalent
/// junction by one bundle whose sign is the product of the side signs.
inline SurgeryResult suppress_vertex(const SignedGraph& g, const Signature& sigma,
                                     const std::string& v)
{
    std::string why;
    if (!can_suppress(g, sigma, v, &why))
        throw PreconditionError("vertex '" + v + "' is not suppressible: " + why);
    int vi = *g.vertex_index(v);
    auto neg = detail::signature_mask(g, sigma);

    std::set<int> nbrs;
    for (int ei : g.incident_edges(vi)) nbrs.insert(g.edge(ei).u == vi ? g.edge(ei).v : g.edge(ei).u);
    auto it = nbrs.begin();
    int a = *it++;
    int b = *it;
    // Merge toward the lexicographically ordered pair (x, y); the surviving
    // ids come from the y side.
    int x = g.vertex_name(a) < g.vertex_name(b) ? a : b;
    int y = x == a ? b : a;
    auto bx = detail::bundle_between(g, vi, x);
    auto by = detail::bundle_between(g, vi, y);

    Sign sx = neg[bx.front()] ? Sign::negative : Sign::positive;
    Sign sy = neg[by.front()] ? Sign::negative : Sign::positive;
    Sign merged = sx * sy;

    std::vector<std::string> keep_ids;
    for (int ei : by) keep_ids.push_back(g.edge(ei).id);
    std::sort(keep_ids.begin(), keep_ids.end());

    std::set<int> drop(bx.begin(), bx.end());
    drop.insert(by.begin(), by.end());
    std::vector<EdgeSpec> specs;
    std::vector<std::string> new_sigma;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (drop.count(ei)) continue;
        const Edge& e = g.edge(ei);
        specs.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v),
                         neg[ei] ? Sign::negative : Sign::positive});
        if (neg[ei]) new_sigma.push_back(e.id);
    }
    for (const std::string& id : keep_ids) {
        specs.push_back({id, g.vertex_name(x), g.vertex_name(y), merged});
        if (merged == Sign::negative) new_sigma.push_back(id);
    }
    std::vector<std::string> verts;
    for (const auto& name : g.vertex_ids())
        if (name != v) verts.push_back(name);
    return {SignedGraph(std::move(verts), std::move(specs)), Signature(std::move(new_sigma))};
}

/// True iff v has exactly one distinct neighbor, no loops, and its bundle
/// consists of t positive and t negative edges.
inline bool can_collapse_loop_branch(const SignedGraph& g, const Signature& sigma,
                                     const std::string& v)
{
    auto vi = g.vertex_index(v);
    if (!vi) return false;
    auto neg = detail::signature_mask(g, sigma);
    std::set<int> nbrs;
    for (int ei : g.incident_edges(*vi)) {
        const Edge& e = g.edge(ei);
        if (e.is_loop()) return false;
        nbrs.insert(e.u == *vi ? e.v : e.u);
    }
    if (nbrs.size() != 1) return false;
    auto bundle = detail::bundle_between(g, *vi, *nbrs.begin());
    int negatives = 0;
    for (int ei : bundle) negatives += neg[ei] ? 1 : 0;
    return negatives * 2 == static_cast<int>(bundle.size()) && negatives >= 1;
}

/// Inverse of subdividing a loop bundle: a pendant vertex joined to x by t
/// positive and t negative parallel edges becomes t negative loops at x.
inline SurgeryResult collapse_loop_branch(const SignedGraph& g, const Signature& sigma,
                                          const std::string& v)
{
    if (!can_collapse_loop_branch(g, sigma, v))
        throw PreconditionError("vertex '" + v + "' is not a collapsible parallel-pair branch");
    int vi = *g.vertex_index(v);
    auto neg = detail::signature_mask(g, sigma);
    int x = -1;
    for (int ei : g.incident_edges(vi)) {
        const Edge& e = g.edge(ei);
        x = e.u == vi ? e.v : e.u;
    }
    auto bundle = detail::bundle_between(g, vi, x);
    std::vector<std::string> loop_ids;
    for (int ei : bundle)
        if (neg[ei]) loop_ids.push_back(g.edge(ei).id);
    std::sort(loop_ids.begin(), loop_ids.end());

    std::set<int> drop(bundle.begin(), bundle.end());
    std::vector<EdgeSpec> specs;
    std::vector<std::string> new_sigma;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (drop.count(ei)) continue;
        const Edge& e = g.edge(ei);
        specs.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v),
                         neg[ei] ? Sign::negative : Sign::positive});
        if (neg[ei]) new_sigma.push_back(e.id);
    }
    for (const std::string& id : loop_ids) {
        specs.push_back({id, g.vertex_name(x), g.vertex_name(x), Sign::negative});
        new_sigma.push_back(id);
    }
    std::vector<std::string> verts;
    for (const auto& name : g.vertex_ids())
        if (name != v) verts.push_back(name);
    return {SignedGraph(std::move(verts), std::move(specs)), Signature(std::move(new_sigma))};
}

/// A signed graph is irreducible when it has a single vertex or is not a
/// proper subdivision of anything: no vertex admits suppression and no
/// pendant parallel-pair branch (the image of a loop subdivision) remains.
inline bool irreducible(const SignedGraph& g, const Signature& sigma)
{
    if (g.vertex_count() == 1) return true;
    for (const auto& v : g.vertex_ids())
        if (can_suppress(g, sigma, v) || can_collapse_loop_branch(g, sigma, v)) return false;
    return true;
}

struct ReductionStep {
    enum class Kind { suppress, collapse } kind;
    std::string vertex;
};

struct ReduceOptions {
    /// Index preservation is re-verified by the solver when the input stays
    /// at or below this size.
    int verify_max_vertices = 20;
};

struct ReduceResult {
    SignedGraph graph;
    Signature sigma;
    std::vector<ReductionStep> steps;
};

/// Undoes subdivisions (canonical id order, restart after each step) until
/// the graph is irreducible: divalent junctions are suppressed, pendant
/// parallel-pair branches collapse back into loops.
inline ReduceResult reduce_to_irreducible(const SignedGraph& g, const Signature& sigma,
                                          const ReduceOptions& opts = {})
{
    ReduceResult out{rebase_signs(g, sigma), sigma, {}};
    bool verify = g.vertex_count() <= opts.verify_max_vertices && g.vertex_count() > 0;
    int before = -1;
    if (verify) before = frustration_switch_enum(g, sigma).index;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::string v : out.graph.vertex_ids()) {
            if (can_suppress(out.graph, out.sigma, v)) {
                auto next = suppress_vertex(out.graph, out.sigma, v);
                out.graph = std::move(next.graph);
                out.sigma = std::move(next.sigma);
                out.steps.push_back({ReductionStep::Kind::suppress, std::move(v)});
                changed = true;
                break;
            }
            if (can_collapse_loop_branch(out.graph, out.sigma, v)) {
                auto next = collapse_loop_branch(out.graph, out.sigma, v);
                out.graph = std::move(next.graph);
                out.sigma = std::move(next.sigma);
                out.steps.push_back({ReductionStep::Kind::collapse, std::move(v)});
                changed = true;
                break;
            }
        }
    }
    if (verify && frustration_switch_enum(out.graph, out.sigma).index != before)
        throw InternalInconsistencyError("reduction changed the frustration index");
    return out;
}

enum class Archetype { neg_c1, neg_c1_disjoint_neg_c1, neg_2c1, neg_k4 };

inline std::string to_string(Archetype a)
{
    switch (a) {
        case Archetype::neg_c1: return "-C1";
        case Archetype::neg_c1_disjoint_neg_c1: return "-C1+-C1";
        case Archetype::neg_2c1: return "-2C1";
        case Archetype::neg_k4: return "-K4";
    }
    return "?";
}

struct ClassificationResult {
    int index = 0;
    Archetype archetype = Archetype::neg_c1;
    std::vector<ReductionStep> steps;
    SignedGraph reduced;
    Signature reduced_sigma;
};

namespace detail {

inline SignedGraph archetype_graph(Archetype a)
{
    switch (a) {
        case Archetype::neg_c1:
            return SignedGraph({"a"}, {{"l1", "a", "a", Sign::negative}});
        case Archetype::neg_c1_disjoint_neg_c1:
            return SignedGraph({"a", "b"}, {{"l1", "a", "a", Sign::negative},
                                            {"l2", "b", "b", Sign::negative}});
        case Archetype::neg_2c1:
            return SignedGraph({"a"}, {{"l1", "a", "a", Sign::negative},
                                       {"l2", "a", "a", Sign::negative}});
        case Archetype::neg_k4: {
            std::vector<std::string> names{"a", "b", "c", "d"};
            std::vector<EdgeSpec> edges;
            for (std::size_t i = 0; i < names.size(); ++i)
                for (std::size_t j = i + 1; j < names.size(); ++j)
                    edges.push_back({names[i] + "-" + names[j], names[i], names[j],
                                     Sign::negative});
            return SignedGraph(names, edges);
        }
    }
    return SignedGraph{};
}

}  // namespace detail

/// Classifies a critical signed graph of index one or two: reduces to
/// irreducible form (suppressions plus parallel-pair collapses, which undo
/// loop subdivisions) and matches the result against the known archetypes up
/// to switching isomorphism. Failure to match is a loud internal error.
inline ClassificationResult classify_low_critical(const SignedGraph& g, const Signature& sigma,
                                                  const EnumOptions& opts = {})
{
    auto rep = is_critical(g, sigma, CriticalityMethod::union_of_signatures, opts);
    if (!rep.critical)
        throw PreconditionError("classification requires a critical signed graph");
    if (rep.index > 2)
        throw PreconditionError("classification covers indices 1 and 2, got " +
                                std::to_string(rep.index));

    ClassificationResult out;
    out.index = rep.index;
    auto reduced = reduce_to_irreducible(g, sigma);
    out.reduced = std::move(reduced.graph);
    out.reduced_sigma = std::move(reduced.sigma);
    out.steps = std::move(reduced.steps);

    // Isolated vertices carry no sign information; drop them before the
    // archetype match.
    {
        std::vector<std::string> ids;
        for (const Edge& e : out.reduced.edges()) ids.push_back(e.id);
        out.reduced = subgraph_from_edges(out.reduced, ids);
    }

    std::vector<Archetype> candidates =
        out.index == 1 ? std::vector<Archetype>{Archetype::neg_c1}
                       : std::vector<Archetype>{Archetype::neg_c1_disjoint_neg_c1,
                                                Archetype::neg_2c1, Archetype::neg_k4};
    for (Archetype a : candidates) {
        auto proto = detail::archetype_graph(a);
        if (switch_isomorphic(out.reduced, out.reduced_sigma, proto, proto.declared_signature())) {
            out.archetype = a;
            return out;
        }
    }
    throw InternalInconsistencyError(
        "critical graph of index " + std::to_string(out.index) +
        " reduced to an unrecognized form; this contradicts the classification theorem");
}

namespace detail {

/// Disjoint-union relabeling: vertices and edges of each part get a prefix.
inline void append_prefixed(const SignedGraph& g, const Signature& sigma,
                            const std::string& prefix, std::vector<std::string>& verts,
                            std::vector<EdgeSpec>& specs, std::vector<std::string>& neg_ids,
                            const std::set<std::string>& drop_edges,
                            const std::set<std::string>& drop_vertices)
{
    auto neg = signature_mask(g, sigma);
    for (const auto& v : g.vertex_ids())
        if (!drop_vertices.count(v)) verts.push_back(prefix + v);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (drop_edges.count(e.id)) continue;
        if (drop_vertices.count(g.vertex_name(e.u)) || drop_vertices.count(g.vertex_name(e.v)))
            continue;
        specs.push_back({prefix + e.id, prefix + g.vertex_name(e.u), prefix + g.vertex_name(e.v),
                         neg[ei] ? Sign::negative : Sign::positive});
        if (neg[ei]) neg_ids.push_back(prefix + e.id);
    }
}

}  // namespace detail

/// 2-edge-sum: deletes one positive edge from each part and joins the freed
/// endpoint pairs by positive edges. Endpoint pairing follows the stored
/// (sorted) endpoint order of the chosen edges.
inline SurgeryResult edge_sum_2(const SignedGraph& h1, const Signature& g1,
                                const std::string& edge1, const SignedGraph& h2,
                                const Signature& g2, const std::string& edge2)
{
    auto e1 = h1.edge_index(edge1);
    auto e2 = h2.edge_index(edge2);
    if (!e1 || !e2) throw PreconditionError("edge-sum edges must exist");
    if (g1.contains(edge1) || g2.contains(edge2))
        throw PreconditionError("edge-sum edges must be positive");
    if (h1.edge(*e1).is_loop() || h2.edge(*e2).is_loop())
        throw PreconditionError("edge-sum edges must not be loops");

    std::vector<std::string> verts;
    std::vector<EdgeSpec> specs;
    std::vector<std::string> neg_ids;
    detail::append_prefixed(h1, g1, "g1.", verts, specs, neg_ids, {edge1}, {});
    detail::append_prefixed(h2, g2, "g2.", verts, specs, neg_ids, {edge2}, {});
    const Edge& a = h1.edge(*e1);
    const Edge& b = h2.edge(*e2);
    specs.push_back({"j1", "g1." + h1.vertex_name(a.u), "g2." + h2.vertex_name(b.u),
                     Sign::positive});
    specs.push_back({"j2", "g1." + h1.vertex_name(a.v), "g2." + h2.vertex_name(b.v),
                     Sign::positive});
    return {SignedGraph(std::move(verts), std::move(specs)), Signature(std::move(neg_ids))};
}

/// 3-edge-sum: deletes one all-positive trivalent vertex from each part and
/// joins the neighbor triples by positive edges, canonically sorted; the
/// pairing of the second triple can be overridden.
inline SurgeryResult edge_sum_3(const SignedGraph& h1, const Signature& g1, const std::string& u1,
                                const SignedGraph& h2, const Signature& g2, const std::string& u2,
                                std::array<int, 3> pairing = {0, 1, 2})
{
    auto collect = [](const SignedGraph& h, const Signature& gg, const std::string& u) {
        auto vi = h.vertex_index(u);
        if (!vi) throw PreconditionError("edge-sum vertex must exist");
        if (h.degree(*vi) != 3) throw PreconditionError("edge-sum vertex must have degree 3");
        std::set<std::string> nbrs;
        for (int ei : h.incident_edges(*vi)) {
            const Edge& e = h.edge(ei);
            if (e.is_loop()) throw PreconditionError("edge-sum vertex must not carry loops");
            if (gg.contains(e.id))
                throw PreconditionError("edges at the edge-sum vertex must be positive");
            nbrs.insert(h.vertex_name(e.u == *vi ? e.v : e.u));
        }
        if (nbrs.size() != 3)
            throw PreconditionError("edge-sum vertex must have three distinct neighbors");
        return std::vector<std::string>(nbrs.begin(), nbrs.end());
    };
    auto n1 = collect(h1, g1, u1);
    auto n2 = collect(h2, g2, u2);
    {
        auto sorted = pairing;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2})
            throw PreconditionError("pairing must be a permutation of 0,1,2");
    }

    std::vector<std::string> verts;
    std::vector<EdgeSpec> specs;
    std::vector<std::string> neg_ids;
    detail::append_prefixed(h1, g1, "g1.", verts, specs, neg_ids, {}, {u1});
    detail::append_prefixed(h2, g2, "g2.", verts, specs, neg_ids, {}, {u2});
    for (int i = 0; i < 3; ++i)
        specs.push_back({"j" + std::to_string(i + 1), "g1." + n1[i], "g2." + n2[pairing[i]],
                         Sign::positive});
    return {SignedGraph(std::move(verts), std::move(specs)), Signature(std::move(neg_ids))};
}

}  // namespace sgfrust
