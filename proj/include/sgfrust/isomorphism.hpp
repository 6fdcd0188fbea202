#pragma once
// Switching isomorphism: does some isomorphism of the underlying multigraphs
// carry one signature to a switching-equivalent of the other?
//
// Brute-force backtracking over vertex bijections with degree-profile
// pruning, followed by a parity-coloring check of the sign constraints.
// Meant for small graphs; callers hit a budget error beyond the cap.

#include "frustration.hpp"

namespace sgfrust {

namespace detail {

struct IsoProfile {
    std::vector<std::vector<int>> bundle;      // non-loop multiplicities
    std::vector<std::vector<int>> bundle_neg;  // negatives per bundle
    std::vector<int> loops;                    // loops per vertex
    std::vector<int> loops_neg;                // negative loops per vertex
    std::vector<int> degree;

    IsoProfile(const SignedGraph& g, const Signature& sigma)
    {
        const int n = g.vertex_count();
        bundle.assign(n, std::vector<int>(n, 0));
        bundle_neg.assign(n, std::vector<int>(n, 0));
        loops.assign(n, 0);
        loops_neg.assign(n, 0);
        degree.assign(n, 0);
        auto neg = signature_mask(g, sigma);
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            const Edge& e = g.edge(ei);
            if (e.is_loop()) {
                ++loops[e.u];
                if (neg[ei]) ++loops_neg[e.u];
                degree[e.u] += 2;
                continue;
            }
            ++bundle[e.u][e.v];
            ++bundle[e.v][e.u];
            if (neg[ei]) {
                ++bundle_neg[e.u][e.v];
                ++bundle_neg[e.v][e.u];
            }
            ++degree[e.u];
            ++degree[e.v];
        }
    }

    /// Sorted multiset of incident bundle sizes, a cheap vertex invariant.
    std::vector<int> bundle_shape(int v) const
    {
        std::vector<int> shape;
        for (int w = 0; w < static_cast<int>(bundle.size()); ++w)
            if (bundle[v][w] > 0) shape.push_back(bundle[v][w]);
        std::sort(shape.begin(), shape.end());
        return shape;
    }
};

/// Checks whether phi admits a switch set reconciling the two signatures:
/// every bundle must keep its negative count or flip it to size-minus-count,
/// consistently with a two-coloring of the target vertices.
inline bool signs_consistent(const IsoProfile& p1, const IsoProfile& p2,
                             const std::vector<int>& phi)
{
    const int n = static_cast<int>(phi.size());
    for (int v = 0; v < n; ++v)
        if (p1.loops[v] != p2.loops[phi[v]] || p1.loops_neg[v] != p2.loops_neg[phi[v]])
            return false;

    // Parity constraints between mapped endpoints: 0 = same side, 1 = cut.
    std::vector<std::vector<int>> want(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int s = p1.bundle[a][b];
            if (s == 0) continue;
            int n1 = p1.bundle_neg[a][b];
            int n2 = p2.bundle_neg[phi[a]][phi[b]];
            bool keep = n2 == n1;
            bool flip = n2 == s - n1;
            if (!keep && !flip) return false;
            if (keep && flip) continue;
            want[phi[a]][phi[b]] = want[phi[b]][phi[a]] = keep ? 0 : 1;
        }
    }
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (want[v][w] == -1) continue;
                int c = color[v] ^ want[v][w];
                if (color[w] == -1) {
                    color[w] = c;
                    stack.push_back(w);
                } else if (color[w] != c) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Backtracking search for a multigraph isomorphism; the leaf predicate can
/// impose extra constraints (the sign check). Returns the first accepted map
/// in a deterministic order.
template <typename Leaf>
inline std::optional<std::vector<int>> iso_search(const IsoProfile& p1, const IsoProfile& p2,
                                                  Leaf&& accept)
{
    const int n = static_cast<int>(p1.degree.size());
    if (static_cast<int>(p2.degree.size()) != n) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    // Map vertices in a connectivity-first order so partial bundles prune.
    std::vector<int> order;
    {
        std::vector<char> seen(n, 0);
        auto best_unseen = [&]() {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!seen[v] && (pick == -1 || p1.degree[v] > p1.degree[pick])) pick = v;
            return pick;
        };
        while (static_cast<int>(order.size()) < n) {
            int root = best_unseen();
            seen[root] = 1;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                int v = order[head++];
                for (int w = 0; w < n; ++w) {
                    if (p1.bundle[v][w] > 0 && !seen[w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
                }
            }
        }
    }

    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> dfs = [&](int depth) -> bool {
        if (depth == n) return accept(phi);
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (p1.degree[v] != p2.degree[w]) continue;
            if (p1.loops[v] != p2.loops[w]) continue;
            if (p1.bundle_shape(v) != p2.bundle_shape(w)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int a = order[d];
                if (p1.bundle[v][a] != p2.bundle[w][phi[a]]) ok = false;
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = 1;
            if (dfs(depth + 1)) return true;
            used[w] = 0;
            phi[v] = -1;
        }
        return false;
    };
    if (dfs(0)) return phi;
    return std::nullopt;
}

/// First isomorphism of the underlying multigraphs (signs ignored), or
/// nullopt. Deterministic.
inline std::optional<std::vector<int>> find_graph_isomorphism(const SignedGraph& g1,
                                                              const SignedGraph& g2)
{
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    IsoProfile p1(g1, Signature{});
    IsoProfile p2(g2, Signature{});
    return iso_search(p1, p2, [](const std::vector<int>&) { return true; });
}

}  // namespace detail

/// True iff some isomorphism of the underlying multigraphs maps sigma1 to a
/// signature switching-equivalent to sigma2.
inline bool switch_isomorphic(const SignedGraph& g1, const Signature& sigma1,
                              const SignedGraph& g2, const Signature& sigma2,
                              int max_vertices = 14)
{
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return false;
    const int n = g1.vertex_count();
    if (n == 0) return true;
    if (n > max_vertices)
        throw BudgetExceededError("switching isomorphism capped at " +
                                  std::to_string(max_vertices) + " vertices, got " +
                                  std::to_string(n));

    detail::IsoProfile p1(g1, sigma1);
    detail::IsoProfile p2(g2, sigma2);

    {
        auto d1 = p1.degree;
        auto d2 = p2.degree;
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2) return false;
    }
    // The frustration index is both an isomorphism and a switching invariant.
    if (frustration_switch_enum(g1, sigma1).index != frustration_switch_enum(g2, sigma2).index)
        return false;

    return detail::iso_search(p1, p2, [&](const std::vector<int>& phi) {
               return detail::signs_consistent(p1, p2, phi);
           })
        .has_value();
}

}  // namespace sgfrust
