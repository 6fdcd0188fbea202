#pragma once
// Exact frustration index with certificates.
//
// Three routes are provided and cross-checked in the tests:
//   - frustration_deletion_oracle: definition-level brute force over edge
//     subsets, usable only at very small scale;
//   - frustration_switch_enum: exhaustive switch-set enumeration per
//     component (one vertex pinned, Gray-code walk over the rest);
//   - frustration_bnb: branch and bound over two-state vertex assignments.
//
// Negative loops lie in no edge cut, so they belong to every signature; they
// are charged up front and appended to every witness.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "balance.hpp"
#include "core.hpp"

namespace sgfrust {

struct SolverStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct FrustrationResult {
    int index = 0;
    Signature witness;
    std::optional<std::vector<Signature>> all_min_signatures;
    SolverStats stats;
    /// False only for budget-limited branch-and-bound runs, whose index is
    /// then just the best incumbent.
    bool certified = true;
};

struct EnumOptions {
    int max_component_vertices = 24;
    std::size_t signature_cap = 200000;
};

struct BnbOptions {
    double budget_seconds = 30.0;
};

namespace detail {

struct LocalEdge {
    int a = 0;      // local endpoints
    int b = 0;
    bool neg = false;
    int global = 0;  // edge index in the host graph
};

struct SolveComponent {
    std::vector<int> verts;  // global vertex indices, ascending
    std::vector<LocalEdge> edges;
    std::vector<std::vector<int>> incident;  // local vertex -> edge positions
};

struct SolveProblem {
    std::vector<SolveComponent> comps;
    std::vector<int> negative_loops;  // global edge indices
};

inline SolveProblem make_solve_problem(const SignedGraph& g, const Signature& sigma)
{
    auto neg = signature_mask(g, sigma);
    auto label = component_labels(g);
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);

    SolveProblem p;
    p.comps.resize(count);
    std::vector<int> local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& comp = p.comps[label[v]];
        local[v] = static_cast<int>(comp.verts.size());
        comp.verts.push_back(v);
    }
    for (auto& comp : p.comps) comp.incident.resize(comp.verts.size());
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        if (e.is_loop()) {
            if (neg[ei]) p.negative_loops.push_back(ei);
            continue;
        }
        auto& comp = p.comps[label[e.u]];
        LocalEdge le{local[e.u], local[e.v], neg[ei] != 0, ei};
        comp.incident[le.a].push_back(static_cast<int>(comp.edges.size()));
        comp.incident[le.b].push_back(static_cast<int>(comp.edges.size()));
        comp.edges.push_back(le);
    }
    return p;
}

/// Signature contribution of one component for a given side assignment:
/// the edges whose sign disagrees with the cut.
inline std::vector<int> component_signature(const SolveComponent& comp,
                                            const std::vector<char>& side)
{
    std::vector<int> out;
    for (const LocalEdge& e : comp.edges) {
        bool cut = side[e.a] != side[e.b];
        if (cut != e.neg) out.push_back(e.global);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ComponentEnumResult {
    int minimum = 0;
    std::vector<std::vector<char>> min_sides;  // only the witness unless collecting
    std::uint64_t nodes = 0;
};

/// Exhaustive scan of the 2^(n-1) switch sets of one component, first local
/// vertex pinned outside. Gray-code walk keeps the cost update O(degree).
inline ComponentEnumResult enumerate_component(const SolveComponent& comp, bool collect_all,
                                               std::size_t collect_cap)
{
    const int n = static_cast<int>(comp.verts.size());
    ComponentEnumResult res;
    std::vector<char> side(n, 0);
    int cost = 0;
    for (const LocalEdge& e : comp.edges) cost += e.neg ? 1 : 0;

    res.minimum = cost;
    res.min_sides = {side};
    res.nodes = 1;

    if (n <= 1) return res;
    std::vector<int> best_sig = component_signature(comp, side);
    const std::uint64_t total = 1ull << (n - 1);
    for (std::uint64_t s = 1; s < total; ++s) {
        int flip = 1 + __builtin_ctzll(s);
        side[flip] = !side[flip];
        for (int pos : comp.incident[flip]) {
            const LocalEdge& e = comp.edges[pos];
            bool cut = side[e.a] != side[e.b];
            // The edge just toggled its cut membership.
            cost += (cut != e.neg) ? 1 : -1;
        }
        ++res.nodes;
        if (cost < res.minimum) {
            res.minimum = cost;
            res.min_sides.clear();
            res.min_sides.push_back(side);
            best_sig = component_signature(comp, side);
        } else if (cost == res.minimum && collect_all) {
            if (res.min_sides.size() >= collect_cap)
                throw BudgetExceededError("minimum signature collection exceeded cap of " +
                                          std::to_string(collect_cap));
            res.min_sides.push_back(side);
        } else if (cost == res.minimum) {
            // Keep the side assignment whose signature is lexicographically
            // smallest, so the reported witness is stable.
            auto cand = component_signature(comp, side);
            if (cand < best_sig) {
                res.min_sides.front() = side;
                best_sig = std::move(cand);
            }
        }
    }
    return res;
}

inline Signature assemble_signature(const SignedGraph& g, const std::vector<int>& loop_edges,
                                    const std::vector<std::vector<int>>& parts)
{
    std::vector<std::string> ids;
    for (int ei : loop_edges) ids.push_back(g.edge(ei).id);
    for (const auto& part : parts)
        for (int ei : part) ids.push_back(g.edge(ei).id);
    return Signature(std::move(ids));
}

}  // namespace detail

/// Definition-level brute force: the smallest number of edges whose deletion
/// leaves a balanced signed graph. Only an oracle; refuses graphs with more
/// than cap_edges edges.
inline int frustration_deletion_oracle(const SignedGraph& g, const Signature& sigma,
                                       int cap_edges = 20)
{
    const int m = g.edge_count();
    if (m > cap_edges)
        throw BudgetExceededError("deletion oracle limited to " + std::to_string(cap_edges) +
                                  " edges, graph has " + std::to_string(m));
    auto neg = detail::signature_mask(g, sigma);

    // Union-find with parity over the surviving edges.
    std::vector<int> parent(g.vertex_count());
    std::vector<char> parity(g.vertex_count());
    std::function<std::pair<int, char>(int)> find = [&](int v) -> std::pair<int, char> {
        char p = 0;
        while (parent[v] != v) {
            p ^= parity[v];
            v = parent[v];
        }
        return {v, p};
    };
    auto balanced_without = [&](std::uint32_t drop) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            parent[v] = v;
            parity[v] = 0;
        }
        for (int ei = 0; ei < m; ++ei) {
            if (drop & (1u << ei)) continue;
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

    for (int size = 0; size <= m; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int i : pick) mask |= 1u << i;
            if (balanced_without(mask)) return size;
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw InternalInconsistencyError("deletion oracle found no balancing set");
}

/// Exact index via exhaustive switch-set enumeration per component. With
/// collect_all, every distinct minimum signature is returned.
inline FrustrationResult frustration_switch_enum(const SignedGraph& g, const Signature& sigma,
                                                 bool collect_all = false,
                                                 const EnumOptions& opts = {})
{
    auto t0 = std::chrono::steady_clock::now();
    auto p = detail::make_solve_problem(g, sigma);
    for (const auto& comp : p.comps) {
        if (static_cast<int>(comp.verts.size()) > opts.max_component_vertices)
            throw BudgetExceededError(
                "component with " + std::to_string(comp.verts.size()) +
                " vertices exceeds the enumeration cap of " +
                std::to_string(opts.max_component_vertices) + "; use frustration_bnb");
    }

    FrustrationResult res;
    res.index = static_cast<int>(p.negative_loops.size());
    std::vector<std::vector<int>> witness_parts;
    std::vector<std::vector<std::vector<int>>> all_parts;  // per component

    for (const auto& comp : p.comps) {
        auto ce = detail::enumerate_component(comp, collect_all, opts.signature_cap);
        res.index += ce.minimum;
        res.stats.nodes += ce.nodes;
        std::vector<std::vector<int>> sigs;
        sigs.reserve(ce.min_sides.size());
        for (const auto& side : ce.min_sides) sigs.push_back(detail::component_signature(comp, side));
        std::sort(sigs.begin(), sigs.end());
        witness_parts.push_back(sigs.front());
        if (collect_all) all_parts.push_back(std::move(sigs));
    }
    res.witness = detail::assemble_signature(g, p.negative_loops, witness_parts);

    if (collect_all) {
        std::size_t count = 1;
        for (const auto& sigs : all_parts) {
            if (sigs.empty()) continue;
            count *= sigs.size();
            if (count > opts.signature_cap)
                throw BudgetExceededError("number of minimum signatures exceeds cap of " +
                                          std::to_string(opts.signature_cap));
        }
        std::vector<std::vector<int>> chosen(all_parts.size());
        std::vector<Signature> all;
        std::function<void(std::size_t)> emit = [&](std::size_t at) {
            if (at == all_parts.size()) {
                all.push_back(detail::assemble_signature(g, p.negative_loops, chosen));
                return;
            }
            for (const auto& part : all_parts[at]) {
                chosen[at] = part;
                emit(at + 1);
            }
        };
        emit(0);
        std::sort(all.begin(), all.end());
        res.all_min_signatures = std::move(all);
    }

    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// The complete set of minimum signatures.
inline std::vector<Signature> all_min_signatures(const SignedGraph& g, const Signature& sigma,
                                                 std::size_t cap = 200000, EnumOptions opts = {})
{
    opts.signature_cap = cap;
    auto res = frustration_switch_enum(g, sigma, true, opts);
    return std::move(*res.all_min_signatures);
}

namespace detail {

struct BnbComponent {
    const SolveComponent* comp = nullptr;
    std::vector<int> order;  // local vertices, descending degree then index
    int best = 0;
    std::vector<char> best_side;
    std::uint64_t nodes = 0;
};

inline void bnb_component(BnbComponent& b, const std::chrono::steady_clock::time_point& deadline,
                          bool& timed_out)
{
    const SolveComponent& comp = *b.comp;
    const int n = static_cast<int>(comp.verts.size());
    std::vector<char> side(n, 0);
    std::vector<char> assigned(n, 0);

    // Greedy incumbent in branch order.
    for (int i = 0; i < n; ++i) {
        int v = b.order[i];
        int cost0 = 0;
        int cost1 = 0;
        for (int pos : comp.incident[v]) {
            const LocalEdge& e = comp.edges[pos];
            int o = e.a == v ? e.b : e.a;
            if (!assigned[o]) continue;
            bool cut0 = side[o] != 0;
            cost0 += (cut0 != e.neg) ? 1 : 0;
            cost1 += ((!cut0) != e.neg) ? 1 : 0;
        }
        side[v] = cost1 < cost0 ? 1 : 0;
        assigned[v] = 1;
    }
    int incumbent = 0;
    for (const LocalEdge& e : comp.edges) incumbent += ((side[e.a] != side[e.b]) != e.neg) ? 1 : 0;
    b.best = incumbent;
    b.best_side = side;

    std::fill(assigned.begin(), assigned.end(), 0);
    std::fill(side.begin(), side.end(), 0);

    std::function<void(int, int)> dfs = [&](int depth, int cost) {
        if (timed_out) return;
        ++b.nodes;
        if (std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (depth == n) {
            if (cost < b.best) {
                b.best = cost;
                b.best_side = side;
            }
            return;
        }
        // Lower bound: settled edges plus the best case of every unassigned
        // vertex against its already assigned neighbors.
        int bound = cost;
        for (int i = depth; i < n; ++i) {
            int v = b.order[i];
            int c0 = 0;
            int c1 = 0;
            for (int pos : comp.incident[v]) {
                const LocalEdge& e = comp.edges[pos];
                int o = e.a == v ? e.b : e.a;
                if (!assigned[o]) continue;
                bool cut0 = side[o] != 0;
                c0 += (cut0 != e.neg) ? 1 : 0;
                c1 += ((!cut0) != e.neg) ? 1 : 0;
            }
            bound += std::min(c0, c1);
        }
        if (bound >= b.best) return;

        int v = b.order[depth];
        int last = depth == 0 ? 0 : 1;  // pin the first vertex in order
        for (int s = 0; s <= last; ++s) {
            int added = 0;
            for (int pos : comp.incident[v]) {
                const LocalEdge& e = comp.edges[pos];
                int o = e.a == v ? e.b : e.a;
                if (!assigned[o]) continue;
                bool cut = side[o] != s;
                added += (cut != e.neg) ? 1 : 0;
            }
            side[v] = static_cast<char>(s);
            assigned[v] = 1;
            dfs(depth + 1, cost + added);
            assigned[v] = 0;
            if (timed_out) return;
        }
    };
    dfs(0, 0);
}

}  // namespace detail

/// Exact index via branch and bound over two-state vertex assignments.
/// Exhausting the time budget yields the best incumbent with certified set
/// to false; certified and uncertified results are never conflated.
inline FrustrationResult frustration_bnb(const SignedGraph& g, const Signature& sigma,
                                         const BnbOptions& opts = {})
{
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(opts.budget_seconds));
    auto p = detail::make_solve_problem(g, sigma);

    FrustrationResult res;
    res.index = static_cast<int>(p.negative_loops.size());
    bool timed_out = false;
    std::vector<std::vector<int>> witness_parts;
    for (const auto& comp : p.comps) {
        detail::BnbComponent b;
        b.comp = &comp;
        const int n = static_cast<int>(comp.verts.size());
        b.order.resize(n);
        for (int i = 0; i < n; ++i) b.order[i] = i;
        std::vector<int> deg(n, 0);
        for (const auto& e : comp.edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        std::sort(b.order.begin(), b.order.end(), [&](int a, int c) {
            if (deg[a] != deg[c]) return deg[a] > deg[c];
            return a < c;
        });
        detail::bnb_component(b, deadline, timed_out);
        // On timeout b.best is still an honest incumbent (greedy or better),
        // so the summed index stays a valid upper bound.
        res.index += b.best;
        res.stats.nodes += b.nodes;
        witness_parts.push_back(detail::component_signature(comp, b.best_side));
    }
    res.certified = !timed_out;
    res.witness = detail::assemble_signature(g, p.negative_loops, witness_parts);
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace sgfrust
