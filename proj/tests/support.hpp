#pragma once
// Shared fixtures and independent oracles for the test suite. Everything in
// here is deliberately naive: graphs are built by hand and the oracles work
// straight from the definitions, so they stay independent of the library
// paths they are used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sgfrust/core.hpp"

namespace fixtures {

using sgfrust::EdgeSpec;
using sgfrust::Sign;
using sgfrust::Signature;
using sgfrust::SignedGraph;

inline std::string pad2(int n)
{
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

/// Complete graph on named vertices, all edges carrying the given sign.
inline SignedGraph complete(const std::vector<std::string>& names, Sign sign)
{
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            edges.push_back({names[i] + "-" + names[j], names[i], names[j], sign});
    return SignedGraph(names, edges);
}

inline SignedGraph minus_k4() { return complete({"u", "v", "x", "y"}, Sign::negative); }

/// One vertex with k negative loops.
inline SignedGraph neg_loops(int k)
{
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({"l" + pad2(i), "a", "a", Sign::negative});
    return SignedGraph({"a"}, edges);
}

/// Circuit c1..cn with the given signs (signs.size() == n).
inline SignedGraph cycle(const std::vector<Sign>& signs)
{
    int n = static_cast<int>(signs.size());
    std::vector<std::string> names;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n; ++i) names.push_back("c" + pad2(i));
    for (int i = 0; i < n; ++i)
        edges.push_back({"e" + pad2(i + 1), names[i], names[(i + 1) % n], signs[i]});
    return SignedGraph(names, edges);
}

/// Doubled circuit: one positive and one negative edge per consecutive pair.
inline SignedGraph plus_minus_cycle(int n)
{
    std::vector<std::string> names;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n; ++i) names.push_back("c" + pad2(i));
    for (int i = 0; i < n; ++i) {
        edges.push_back({"p" + pad2(i + 1), names[i], names[(i + 1) % n], Sign::positive});
        edges.push_back({"m" + pad2(i + 1), names[i], names[(i + 1) % n], Sign::negative});
    }
    return SignedGraph(names, edges);
}

/// Antibalanced odd wheel: hub joined to an odd circuit, all edges negative.
inline SignedGraph anti_wheel(int k)
{
    int rim = 2 * k + 1;
    std::vector<std::string> names{"h"};
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < rim; ++i) names.push_back("r" + pad2(i));
    for (int i = 0; i < rim; ++i) {
        edges.push_back({"c" + pad2(i), "r" + pad2(i), "r" + pad2((i + 1) % rim), Sign::negative});
        edges.push_back({"s" + pad2(i), "h", "r" + pad2(i), Sign::negative});
    }
    return SignedGraph(names, edges);
}

/// Signed projective cube: hypercube edges positive, antipodal pairs negative.
inline SignedGraph projective_cube(int k)
{
    int n = 1 << k;
    auto label = [&](int v) {
        std::string s;
        for (int b = k - 1; b >= 0; --b) s += (v >> b) & 1 ? '1' : '0';
        return s;
    };
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(label(v));
    std::vector<EdgeSpec> edges;
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < k; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.push_back({"c." + label(v) + "." + label(w), label(v), label(w),
                                        Sign::positive});
        }
        int w = v ^ (n - 1);
        if (v < w)
            edges.push_back({"a." + label(v) + "." + label(w), label(v), label(w), Sign::negative});
    }
    return SignedGraph(names, edges);
}

/// Random signed multigraph (loops and parallel edges included) driven by a
/// seeded engine, so suites are reproducible.
inline SignedGraph random_graph(std::mt19937& rng, int max_vertices = 8, int max_edges = 14)
{
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> ne(0, max_edges);
    int m = ne(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + pad2(i));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < m; ++i) {
        int a = pick(rng);
        int b = coin(rng) < 8 ? a : pick(rng);  // occasional loop
        Sign s = coin(rng) < 50 ? Sign::negative : Sign::positive;
        edges.push_back({"e" + pad2(i), names[a], names[b], s});
    }
    return SignedGraph(names, edges);
}

inline sgfrust::SwitchSet random_switch_set(std::mt19937& rng, const SignedGraph& g)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::string> in;
    for (const auto& v : g.vertex_ids())
        if (coin(rng)) in.push_back(v);
    return sgfrust::SwitchSet(in);
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// Every circuit of g as a sorted edge-id set, found by scanning all edge
/// subsets for connected 2-regular subgraphs. Exponential; tiny graphs only.
inline std::vector<std::vector<std::string>> circuits_by_subsets(const SignedGraph& g)
{
    const int m = g.edge_count();
    std::vector<std::vector<std::string>> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> degree(g.vertex_count(), 0);
        std::set<int> touched;
        for (int ei = 0; ei < m; ++ei) {
            if (!(mask & (1u << ei))) continue;
            const auto& e = g.edge(ei);
            if (e.is_loop()) {
                degree[e.u] += 2;
            } else {
                degree[e.u] += 1;
                degree[e.v] += 1;
            }
            touched.insert(e.u);
            touched.insert(e.v);
        }
        bool regular = true;
        for (int v : touched)
            if (degree[v] != 2) regular = false;
        if (!regular) continue;
        // Connectivity over the chosen edges.
        std::map<int, int> comp;
        std::function<int(int)> find = [&](int v) {
            while (comp[v] != v) v = comp[v];
            return v;
        };
        for (int v : touched) comp[v] = v;
        for (int ei = 0; ei < m; ++ei) {
            if (!(mask & (1u << ei))) continue;
            const auto& e = g.edge(ei);
            comp[find(e.u)] = find(e.v);
        }
        std::set<int> roots;
        for (int v : touched) roots.insert(find(v));
        if (roots.size() != 1) continue;
        std::vector<std::string> ids;
        for (int ei = 0; ei < m; ++ei)
            if (mask & (1u << ei)) ids.push_back(g.edge(ei).id);
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Negative circuits straight from the subsets oracle.
inline std::vector<std::vector<std::string>> negative_circuits_by_subsets(const SignedGraph& g,
                                                                          const Signature& sigma)
{
    std::vector<std::vector<std::string>> out;
    for (auto& c : circuits_by_subsets(g)) {
        int neg = 0;
        for (const auto& id : c)
            if (sigma.contains(id)) ++neg;
        if (neg % 2 == 1) out.push_back(c);
    }
    return out;
}

}  // namespace fixtures
