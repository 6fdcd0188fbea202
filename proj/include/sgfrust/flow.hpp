#pragma once
// Small max-flow / edge-connectivity helpers used by the criticality and
// structure checks. Dense Edmonds-Karp; fine at desk scale.

#include <limits>
#include <queue>

#include "core.hpp"

namespace sgfrust::detail {

/// Max flow on a dense capacity matrix (undirected capacities should be
/// entered symmetrically). The matrix is consumed.
inline int max_flow(std::vector<std::vector<int>> cap, int s, int t)
{
    const int n = static_cast<int>(cap.size());
    int flow = 0;
    while (true) {
        std::vector<int> prev(n, -1);
        std::queue<int> q;
        q.push(s);
        prev[s] = s;
        while (!q.empty() && prev[t] == -1) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w) {
                if (prev[w] == -1 && cap[v][w] > 0) {
                    prev[w] = v;
                    q.push(w);
                }
            }
        }
        if (prev[t] == -1) return flow;
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
        }
        flow += push;
    }
}

/// Unit-capacity adjacency matrix of a signed graph (parallel edges add up,
/// loops are ignored).
inline std::vector<std::vector<int>> capacity_matrix(const SignedGraph& g)
{
    std::vector<std::vector<int>> cap(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        ++cap[e.u][e.v];
        ++cap[e.v][e.u];
    }
    return cap;
}

/// Edge connectivity of the underlying multigraph. Zero for disconnected
/// graphs and graphs with fewer than two vertices.
inline int edge_connectivity(const SignedGraph& g)
{
    if (g.vertex_count() < 2) return 0;
    for (int l : component_labels(g))
        if (l != 0) return 0;
    auto cap = capacity_matrix(g);
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.vertex_count(); ++t) best = std::min(best, max_flow(cap, 0, t));
    return best;
}

}  // namespace sgfrust::detail
