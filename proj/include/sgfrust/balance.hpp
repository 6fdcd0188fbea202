#pragma once
// Balance decision with a certificate either way, plus enumeration of
// negative circuits under a cap.

#include <cstdint>
#include <optional>

#include "core.hpp"

namespace sgfrust {

/// Either a switch set emptying the signature (balanced) or the edge set of
/// one negative circuit (unbalanced).
struct BalanceCertificate {
    bool balanced = false;
    std::optional<SwitchSet> switch_witness;
    std::optional<std::vector<std::string>> circuit_witness;
};

namespace detail {

/// Two-potential assignment per component, root of each component pinned to
/// potential 0. Returns potentials on success; on conflict fills `circuit`
/// with the edge ids of a negative circuit and returns nullopt.
inline std::optional<std::vector<char>> sign_potentials(const SignedGraph& g,
                                                        const std::vector<char>& neg,
                                                        std::vector<std::string>* circuit)
{
    const int n = g.vertex_count();
    std::vector<char> pot(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> parent_edge(n, -1);
    std::vector<int> parent(n, -1);

    // Negative loops are negative circuits of length one.
    for (const Edge& e : g.edges()) {
        if (e.is_loop() && neg[*g.edge_index(e.id)]) {
            if (circuit) *circuit = {e.id};
            return std::nullopt;
        }
    }

    auto tree_path_to_root = [&](int v) {
        std::vector<int> path;  // edge indices
        while (parent[v] != -1) {
            path.push_back(parent_edge[v]);
            v = parent[v];
        }
        return path;
    };

    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int ei : g.incident_edges(v)) {
                const Edge& e = g.edge(ei);
                if (e.is_loop()) continue;
                int w = e.u == v ? e.v : e.u;
                char want = static_cast<char>(pot[v] ^ (neg[ei] ? 1 : 0));
                if (!seen[w]) {
                    seen[w] = 1;
                    pot[w] = want;
                    parent[w] = v;
                    parent_edge[w] = ei;
                    stack.push_back(w);
                } else if (pot[w] != want) {
                    if (circuit) {
                        // The conflicting edge closes a negative circuit
                        // through the tree paths of its endpoints.
                        std::vector<int> pv = tree_path_to_root(v);
                        std::vector<int> pw = tree_path_to_root(w);
                        std::set<int> sym;
                        for (int x : pv) sym.insert(x);
                        for (int x : pw) {
                            if (sym.count(x))
                                sym.erase(x);
                            else
                                sym.insert(x);
                        }
                        sym.insert(ei);
                        std::vector<std::string> ids;
                        for (int x : sym) ids.push_back(g.edge(x).id);
                        std::sort(ids.begin(), ids.end());
                        *circuit = std::move(ids);
                    }
                    return std::nullopt;
                }
            }
        }
    }
    return pot;
}

}  // namespace detail

/// Decides balance. The balanced witness U satisfies switch(sigma, U) = {}
/// exactly (re-verified before returning); the unbalanced witness is a
/// negative circuit.
inline BalanceCertificate is_balanced(const SignedGraph& g, const Signature& sigma)
{
    auto neg = detail::signature_mask(g, sigma);
    std::vector<std::string> circuit;
    auto pot = detail::sign_potentials(g, neg, &circuit);
    BalanceCertificate cert;
    if (!pot) {
        cert.balanced = false;
        cert.circuit_witness = std::move(circuit);
        return cert;
    }
    std::vector<std::string> inside;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((*pot)[v]) inside.push_back(g.vertex_name(v));
    SwitchSet u(std::move(inside));
    if (!switch_signature(g, sigma, u).empty())
        throw InternalInconsistencyError("balance witness failed re-verification");
    cert.balanced = true;
    cert.switch_witness = std::move(u);
    return cert;
}

namespace detail {

/// Enumerates the edge sets of all circuits (vertex-simple closed walks:
/// loops, digons of parallel edges, longer cycles). Each circuit is anchored
/// at its minimum edge index, so every circuit is produced exactly once.
/// `emit` returns false to abort the enumeration.
template <typename Emit>
inline void enumerate_circuits(const SignedGraph& g, Emit&& emit)
{
    const int m = g.edge_count();
    for (int anchor = 0; anchor < m; ++anchor) {
        const Edge& ae = g.edge(anchor);
        if (ae.is_loop()) {
            if (!emit(std::vector<int>{anchor})) return;
            continue;
        }
        // Walk from ae.v back to ae.u using edges with index > anchor,
        // visiting each vertex at most once.
        std::vector<int> path_edges{anchor};
        std::vector<char> used_vertex(g.vertex_count(), 0);
        used_vertex[ae.u] = 1;
        used_vertex[ae.v] = 1;
        bool abort = false;

        auto dfs = [&](auto&& self, int at) -> void {
            if (abort) return;
            for (int ei : g.incident_edges(at)) {
                if (ei <= anchor) continue;
                const Edge& e = g.edge(ei);
                if (e.is_loop()) continue;
                int next = e.u == at ? e.v : e.u;
                if (next == ae.u) {
                    path_edges.push_back(ei);
                    if (!emit(path_edges)) abort = true;
                    path_edges.pop_back();
                    if (abort) return;
                    continue;
                }
                if (used_vertex[next]) continue;
                used_vertex[next] = 1;
                path_edges.push_back(ei);
                self(self, next);
                path_edges.pop_back();
                used_vertex[next] = 0;
                if (abort) return;
            }
        };
        dfs(dfs, ae.v);
        if (abort) return;
    }
}

}  // namespace detail

/// All distinct negative circuits as sorted edge-id sets, provided their
/// number stays within `cap`; otherwise a budget error naming the cap.
/// The enumeration itself is also capped to keep desk-scale behavior.
inline std::vector<std::vector<std::string>> negative_circuits(const SignedGraph& g,
                                                               const Signature& sigma,
                                                               std::size_t cap = 1000000)
{
    if (cap < 1) throw PreconditionError("negative_circuits cap must be at least 1");
    auto neg = detail::signature_mask(g, sigma);
    std::vector<std::vector<std::string>> out;
    std::size_t enumerated = 0;
    bool over = false;
    detail::enumerate_circuits(g, [&](const std::vector<int>& edges) {
        if (++enumerated > cap * 8 + 1000000) {
            over = true;
            return false;
        }
        int parity = 0;
        for (int ei : edges) parity ^= neg[ei];
        if (parity) {
            std::vector<std::string> ids;
            ids.reserve(edges.size());
            for (int ei : edges) ids.push_back(g.edge(ei).id);
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
            if (out.size() > cap) {
                over = true;
                return false;
            }
        }
        return true;
    });
    if (over)
        throw BudgetExceededError("negative circuit enumeration exceeded cap of " +
                                  std::to_string(cap));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sgfrust
