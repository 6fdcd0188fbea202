#pragma once
// Structural theory of critical signed graphs: edge-disjoint negative
// circuits, membership in the class of graphs all of whose critical
// subgraphs are non-decomposable, exhaustive decomposition search, cyclic
// edge connectivity of cubic graphs, and the combined structural report.

#include "flow.hpp"
#include "surgery.hpp"

namespace sgfrust {

struct DisjointCircuitWitness {
    std::vector<std::string> first;
    std::vector<std::string> second;
};

/// Searches for two edge-disjoint negative circuits: one exists iff some
/// negative circuit leaves the rest of the graph unbalanced. Circuits are
/// streamed, so a witness returns early; certifying absence costs the full
/// enumeration and is subject to the cap.
inline std::optional<DisjointCircuitWitness> two_edge_disjoint_negative_circuits(
    const SignedGraph& g, const Signature& sigma, std::size_t cap = 1000000)
{
    auto neg = detail::signature_mask(g, sigma);
    const int n = g.vertex_count();
    std::vector<char> dropped(g.edge_count(), 0);
    std::vector<int> parent(n);
    std::vector<char> parity(n);
    auto find = [&](int v) {
        char p = 0;
        while (parent[v] != v) {
            p ^= parity[v];
            v = parent[v];
        }
        return std::make_pair(v, p);
    };
    // Balance of the graph minus the marked edges, straight over indices.
    auto balanced_without = [&]() {
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            parity[v] = 0;
        }
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (dropped[ei]) continue;
            const Edge& e = g.edge(ei);
            if (e.is_loop()) {
                if (neg[ei]) return false;
                continue;
            }
            auto [ru, pu] = find(e.u);
            auto [rv, pv] = find(e.v);
            char want = static_cast<char>(pu ^ pv ^ (neg[ei] ? 1 : 0));
            if (ru == rv) {
                if (want) return false;
            } else {
                parent[ru] = rv;
                parity[ru] = want;
            }
        }
        return true;
    };

    std::optional<DisjointCircuitWitness> found;
    std::size_t seen = 0;
    bool over = false;
    detail::enumerate_circuits(g, [&](const std::vector<int>& edges) {
        if (++seen > cap) {
            over = true;
            return false;
        }
        int odd = 0;
        for (int ei : edges) odd ^= neg[ei];
        if (!odd) return true;
        for (int ei : edges) dropped[ei] = 1;
        bool balanced = balanced_without();
        for (int ei : edges) dropped[ei] = 0;
        if (balanced) return true;
        std::vector<std::string> circuit;
        circuit.reserve(edges.size());
        for (int ei : edges) circuit.push_back(g.edge(ei).id);
        std::sort(circuit.begin(), circuit.end());
        SignedGraph rest = remove_edges(g, circuit);
        auto cert = is_balanced(rest, restrict_signature(sigma, rest));
        found = DisjointCircuitWitness{std::move(circuit), *cert.circuit_witness};
        return false;
    });
    if (over)
        throw BudgetExceededError("circuit enumeration exceeded cap of " + std::to_string(cap));
    return found;
}

struct SStarVerdict {
    bool member = false;
    std::optional<DisjointCircuitWitness> witness;  // present iff not a member
};

/// A critical signed graph has only non-decomposable critical subgraphs iff
/// it contains no two edge-disjoint negative circuits.
inline SStarVerdict in_s_star(const SignedGraph& g, const Signature& sigma,
                              const EnumOptions& opts = {}, std::size_t circuit_cap = 1000000)
{
    auto rep = is_critical(g, sigma, CriticalityMethod::union_of_signatures, opts);
    if (!rep.critical)
        throw PreconditionError("S* membership is defined for critical signed graphs");
    SStarVerdict v;
    v.witness = two_edge_disjoint_negative_circuits(g, sigma, circuit_cap);
    v.member = !v.witness.has_value();
    return v;
}

struct TrivialDecompositionHint {
    /// Edge ids of a 1-critical part: a negative loop, or a parallel pair
    /// carrying opposite signs. The remaining edges form the (k-1)-part.
    std::vector<std::string> unit_part;
};

/// Detects the two syntactic reasons a critical graph splits off a 1-critical
/// part. Pure detection; the caller owns the criticality context.
inline std::optional<TrivialDecompositionHint> trivially_decomposable(const SignedGraph& g,
                                                                      const Signature& sigma)
{
    auto neg = detail::signature_mask(g, sigma);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (e.is_loop() && neg[ei]) return TrivialDecompositionHint{{e.id}};
    }
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& a = g.edge(ei);
        if (a.is_loop()) continue;
        for (int ej = ei + 1; ej < g.edge_count(); ++ej) {
            const Edge& b = g.edge(ej);
            if (b.u == a.u && b.v == a.v && neg[ei] != neg[ej])
                return TrivialDecompositionHint{{a.id, b.id}};
        }
    }
    return std::nullopt;
}

struct DecompositionWitness {
    std::vector<std::vector<std::string>> parts;  // edge ids, pairwise disjoint, covering
    std::vector<int> indices;                     // per-part frustration index
};

struct DecomposeCaps {
    int max_edges = 16;
    int max_index = 4;
};

namespace detail {

struct DecomposeContext {
    const SignedGraph* g = nullptr;
    const Signature* sigma = nullptr;
    std::vector<std::string> edge_ids;  // by edge index
    std::map<std::uint32_t, int> critical_index;  // -1 when not critical
    std::map<std::pair<std::uint32_t, int>, bool> infeasible;
    EnumOptions opts;

    std::vector<std::string> ids_of(std::uint32_t mask) const
    {
        std::vector<std::string> out;
        for (int i = 0; i < static_cast<int>(edge_ids.size()); ++i)
            if (mask & (1u << i)) out.push_back(edge_ids[i]);
        return out;
    }

    /// Cheap necessary conditions before paying for a solver call: every
    /// edge must lie on a circuit of the part and every component must be
    /// unbalanced.
    bool plausible_part(std::uint32_t mask) const
    {
        SignedGraph sub = subgraph_from_edges(*g, ids_of(mask));
        Signature ssub = restrict_signature(*sigma, sub);
        for (const auto& e : sub.edges()) {
            if (e.is_loop()) continue;
            SignedGraph cut = remove_edges(sub, {e.id});
            auto labels = component_labels(cut);
            if (labels[e.u] != labels[e.v]) return false;  // bridge
        }
        for (const auto& comp : components(sub))
            if (is_balanced(comp, restrict_signature(ssub, comp)).balanced) return false;
        return true;
    }

    int part_index(std::uint32_t mask)
    {
        auto it = critical_index.find(mask);
        if (it != critical_index.end()) return it->second;
        int value = -1;
        if (plausible_part(mask)) {
            SignedGraph sub = subgraph_from_edges(*g, ids_of(mask));
            Signature ssub = restrict_signature(*sigma, sub);
            auto rep = is_critical(sub, ssub, CriticalityMethod::union_of_signatures, opts);
            if (rep.critical) value = rep.index;
        }
        critical_index.emplace(mask, value);
        return value;
    }

    bool search(std::uint32_t mask, int target, std::vector<std::uint32_t>& parts)
    {
        if (mask == 0) return target == 0;
        if (target <= 0) return false;
        auto key = std::make_pair(mask, target);
        if (infeasible.count(key)) return false;
        std::uint32_t first = mask & (~mask + 1);
        // Submasks of mask containing the first uncovered edge.
        std::uint32_t rest = mask ^ first;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t part = sub | first;
            int k = part_index(part);
            if (k >= 1 && k <= target) {
                parts.push_back(part);
                if (search(mask ^ part, target - k, parts)) return true;
                parts.pop_back();
            }
            if (sub == 0) break;
        }
        infeasible.emplace(key, true);
        return false;
    }
};

}  // namespace detail

/// Exhaustive search for a decomposition into at least two pairwise
/// edge-disjoint critical parts whose indices sum to the index of the input.
/// Absence is certified within the caps; inputs beyond the caps raise a
/// budget error ("unknown" rather than "non-decomposable").
inline std::optional<DecompositionWitness> decompose_exhaustive(const SignedGraph& g,
                                                                const Signature& sigma,
                                                                const DecomposeCaps& caps = {},
                                                                const EnumOptions& opts = {})
{
    if (g.edge_count() > caps.max_edges || g.edge_count() > 32)
        throw BudgetExceededError("decomposition search capped at " +
                                  std::to_string(std::min(caps.max_edges, 32)) +
                                  " edges, graph has " + std::to_string(g.edge_count()));
    auto rep = is_critical(g, sigma, CriticalityMethod::union_of_signatures, opts);
    if (!rep.critical)
        throw PreconditionError("decomposability is defined for critical signed graphs");
    if (rep.index > caps.max_index)
        throw BudgetExceededError("decomposition search capped at index " +
                                  std::to_string(caps.max_index) + ", graph has index " +
                                  std::to_string(rep.index));
    if (rep.index < 2) return std::nullopt;

    detail::DecomposeContext ctx;
    ctx.g = &g;
    ctx.sigma = &sigma;
    ctx.opts = opts;
    for (const auto& e : g.edges()) ctx.edge_ids.push_back(e.id);

    const std::uint32_t full = g.edge_count() == 32 ? 0xffffffffu
                                                    : ((1u << g.edge_count()) - 1u);
    // A proper decomposition has at least two parts, so the part containing
    // the first edge must not be everything.
    std::vector<std::uint32_t> parts;
    std::uint32_t first = full & (~full + 1);
    std::uint32_t rest = full ^ first;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint32_t part = sub | first;
        if (part != full) {
            int k = ctx.part_index(part);
            if (k >= 1 && k < rep.index) {
                parts.push_back(part);
                if (ctx.search(full ^ part, rep.index - k, parts)) break;
                parts.pop_back();
            }
        }
        if (sub == 0) break;
    }
    if (parts.empty()) return std::nullopt;

    DecompositionWitness w;
    for (std::uint32_t mask : parts) {
        w.parts.push_back(ctx.ids_of(mask));
        w.indices.push_back(ctx.part_index(mask));
    }
    // Connected two-part decompositions must overlap in a vertex of degree
    // at least four.
    bool connected = true;
    for (int l : detail::component_labels(g))
        if (l != 0) connected = false;
    if (connected && w.parts.size() == 2) {
        SignedGraph h1 = subgraph_from_edges(g, w.parts[0]);
        SignedGraph h2 = subgraph_from_edges(g, w.parts[1]);
        bool shared = false;
        for (const auto& v : h1.vertex_ids()) {
            if (!h2.has_vertex(v)) continue;
            shared = true;
            if (g.degree(*g.vertex_index(v)) < 4)
                throw InternalInconsistencyError(
                    "decomposition parts share a vertex of degree below four");
        }
        if (!shared)
            throw InternalInconsistencyError("connected decomposition parts share no vertex");
    }
    return w;
}

namespace detail {

/// All chordless circuits (vertex sets inducing exactly the circuit edges),
/// as vertex-index sets. Enumeration count is capped.
inline std::vector<std::vector<int>> chordless_circuits(const SignedGraph& g, std::size_t cap)
{
    std::vector<std::vector<int>> out;
    std::size_t seen = 0;
    bool over = false;
    enumerate_circuits(g, [&](const std::vector<int>& edges) {
        if (++seen > cap) {
            over = true;
            return false;
        }
        std::set<int> verts;
        for (int ei : edges) {
            verts.insert(g.edge(ei).u);
            verts.insert(g.edge(ei).v);
        }
        // Chordless: the vertex set carries no edges beyond the circuit.
        int internal = 0;
        for (const Edge& e : g.edges())
            if (verts.count(e.u) && verts.count(e.v)) ++internal;
        if (internal == static_cast<int>(edges.size()))
            out.emplace_back(verts.begin(), verts.end());
        return true;
    });
    if (over)
        throw BudgetExceededError("circuit enumeration exceeded cap of " + std::to_string(cap));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Cyclic edge connectivity of a cubic graph: the smallest edge cut whose
/// removal leaves at least two components each containing a circuit. Every
/// such cut separates two chordless circuits, so the value is the minimum
/// cut between contracted disjoint chordless circuit pairs. Graphs with no
/// cycle-separating cut report their plain edge connectivity.
inline int cyclic_edge_connectivity(const SignedGraph& g, int max_vertices = 40,
                                    std::size_t circuit_cap = 200000)
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw PreconditionError("cyclic edge connectivity requires a cubic graph");
    if (g.vertex_count() > max_vertices)
        throw BudgetExceededError("cyclic edge connectivity capped at " +
                                  std::to_string(max_vertices) + " vertices");

    auto circuits = detail::chordless_circuits(g, circuit_cap);
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
            const auto& c1 = circuits[i];
            const auto& c2 = circuits[j];
            bool disjoint = true;
            for (int v : c1)
                if (std::binary_search(c2.begin(), c2.end(), v)) disjoint = false;
            if (!disjoint) continue;

            // Contract both circuits and take the minimum cut between them.
            std::vector<int> node(n, -1);
            for (int v : c1) node[v] = 0;
            for (int v : c2) node[v] = 1;
            int next = 2;
            for (int v = 0; v < n; ++v)
                if (node[v] == -1) node[v] = next++;
            std::vector<std::vector<int>> cap(next, std::vector<int>(next, 0));
            for (const Edge& e : g.edges()) {
                if (e.is_loop()) continue;
                int a = node[e.u];
                int b = node[e.v];
                if (a == b) continue;
                ++cap[a][b];
                ++cap[b][a];
            }
            best = std::min(best, detail::max_flow(std::move(cap), 0, 1));
        }
    }
    if (best == std::numeric_limits<int>::max()) return detail::edge_connectivity(g);
    return best;
}

struct SStarStructureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SStarStructureReport {
    std::vector<SStarStructureCheck> checks;
    int index = 0;
    int cyclic_connectivity = -1;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Desk-checkable structural consequences for an irreducible critical signed
/// graph of index at least three: cubic, cyclically 4-edge-connected, and no
/// two edge-disjoint negative circuits. Precondition failures are reported
/// as failing named checks rather than thrown.
inline SStarStructureReport verify_s_star_structure(const SignedGraph& g, const Signature& sigma,
                                                    const EnumOptions& opts = {},
                                                    std::size_t circuit_cap = 1000000)
{
    SStarStructureReport rep;

    bool irr = irreducible(g, sigma);
    rep.checks.push_back({"irreducible", irr, irr ? "" : "a vertex admits suppression"});

    CriticalityReport crit;
    try {
        crit = is_critical(g, sigma, CriticalityMethod::union_of_signatures, opts);
    } catch (const BudgetExceededError&) {
        crit = is_critical_bnb(g, sigma);
    }
    rep.index = crit.index;
    bool crit_ok = crit.critical && crit.index >= 3 && crit.certified;
    rep.checks.push_back({"critical with index >= 3", crit_ok,
                          "index " + std::to_string(crit.index) +
                              (crit.critical ? "" : ", not critical") +
                              (crit.certified ? "" : ", uncertified")});

    bool cubic = g.vertex_count() > 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) cubic = false;
    rep.checks.push_back({"cubic", cubic, ""});

    if (cubic) {
        rep.cyclic_connectivity = cyclic_edge_connectivity(g);
        rep.checks.push_back({"cyclically 4-edge-connected", rep.cyclic_connectivity >= 4,
                              "cyclic edge connectivity " +
                                  std::to_string(rep.cyclic_connectivity)});
    } else {
        rep.checks.push_back({"cyclically 4-edge-connected", false, "not cubic"});
    }

    auto disjoint = two_edge_disjoint_negative_circuits(g, sigma, circuit_cap);
    rep.checks.push_back({"no edge-disjoint negative circuits", !disjoint.has_value(),
                          disjoint ? "found a disjoint pair" : ""});
    return rep;
}

}  // namespace sgfrust
