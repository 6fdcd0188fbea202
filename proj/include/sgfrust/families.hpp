#pragma once
// Deterministic generators for the named signed-graph families, including
// the brick-wall constructions. Identical specs produce byte-identical
// graphs after serialization.

#include "structure.hpp"

namespace sgfrust {

enum class FamilyKind {
    neg_loops,
    plus_minus,
    anti_complete,
    anti_wheel,
    projective_cube,
    escher_wall,
    escher_wall_prime,
    petersen_sigma1,
    petersen_sigma2,
    octahedron_anti,
};

inline std::string to_string(FamilyKind k)
{
    switch (k) {
        case FamilyKind::neg_loops: return "neg_loops";
        case FamilyKind::plus_minus: return "plus_minus";
        case FamilyKind::anti_complete: return "anti_complete";
        case FamilyKind::anti_wheel: return "anti_wheel";
        case FamilyKind::projective_cube: return "projective_cube";
        case FamilyKind::escher_wall: return "escher_wall";
        case FamilyKind::escher_wall_prime: return "escher_wall_prime";
        case FamilyKind::petersen_sigma1: return "petersen_sigma1";
        case FamilyKind::petersen_sigma2: return "petersen_sigma2";
        case FamilyKind::octahedron_anti: return "octahedron_anti";
    }
    return "?";
}

inline std::optional<FamilyKind> family_kind_from_string(const std::string& s)
{
    for (FamilyKind k :
         {FamilyKind::neg_loops, FamilyKind::plus_minus, FamilyKind::anti_complete,
          FamilyKind::anti_wheel, FamilyKind::projective_cube, FamilyKind::escher_wall,
          FamilyKind::escher_wall_prime, FamilyKind::petersen_sigma1, FamilyKind::petersen_sigma2,
          FamilyKind::octahedron_anti})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

struct FamilySpec {
    FamilyKind kind;
    int parameter = 0;
};

/// Coordinates of a generated wall: grid positions of the surviving
/// vertices, the terminal labels, and the outer boundary as a cyclic vertex
/// walk starting at the first left terminal.
struct WallCoordinates {
    std::map<std::string, std::pair<int, int>> position;  // vertex -> (path, x)
    std::vector<std::string> x_terminals;
    std::vector<std::string> y_terminals;
    std::vector<std::string> boundary;
};

struct GeneratedFamily {
    SignedGraph graph;
    Signature sigma;
    std::string name;
    int expected_index = 0;
    bool expected_critical = true;
    std::optional<WallCoordinates> wall;
};

namespace detail {

inline std::string pad2(int n)
{
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

// ---------------------------------------------------------------------------
// Wall construction
// ---------------------------------------------------------------------------

enum class WallVariant { even, odd, prime };

struct WallRow {
    int lo = 0;
    int hi = 0;
    std::vector<int> verticals;  // x positions after trimming
};

struct WallPlan {
    int k = 0;
    int rows = 0;
    int middle = 0;  // 1-based row index of the widest row
    int width = 0;
    bool suppress_extra_terminals = false;
    std::vector<WallRow> row;                     // index 0 unused
    std::vector<std::pair<int, int>> path_span;   // paths 0..rows
};

/// Lays out the rows of a wall on integer coordinates. Rows shrink by one
/// brick per step away from the widest row; each row keeps only its first
/// and last cap/2 vertical edges when it has more than its cap.
inline WallPlan plan_wall(int k, WallVariant variant)
{
    WallPlan plan;
    plan.k = k;
    plan.width = 2 * (k - 1);
    switch (variant) {
        case WallVariant::even:
            if (k < 4 || k % 2 != 0)
                throw PreconditionError("even wall needs an even size of at least 4");
            plan.rows = k - 1;
            plan.middle = k / 2;
            break;
        case WallVariant::odd:
            if (k < 3 || k % 2 != 1)
                throw PreconditionError("odd wall needs an odd size of at least 3");
            plan.rows = k;
            plan.middle = (k + 1) / 2;
            plan.suppress_extra_terminals = true;
            break;
        case WallVariant::prime:
            if (k < 3 || k % 2 != 1)
                throw PreconditionError("prime wall needs an odd size of at least 3");
            plan.rows = k - 1;
            plan.middle = (k - 1) / 2;
            break;
    }
    plan.row.resize(plan.rows + 1);
    for (int j = 1; j <= plan.rows; ++j) {
        WallRow& r = plan.row[j];
        int d = std::abs(j - plan.middle);
        r.lo = d;
        r.hi = plan.width - d;
        for (int x = r.lo; x <= r.hi; x += 2) r.verticals.push_back(x);
        int outside = std::min(j, plan.rows + 1 - j);
        int cap = variant == WallVariant::odd ? 4 * outside - 2 : 4 * outside;
        if (static_cast<int>(r.verticals.size()) > cap) {
            std::vector<int> kept(r.verticals.begin(), r.verticals.begin() + cap / 2);
            kept.insert(kept.end(), r.verticals.end() - cap / 2, r.verticals.end());
            r.verticals = std::move(kept);
        }
    }
    plan.path_span.resize(plan.rows + 1);
    for (int p = 0; p <= plan.rows; ++p) {
        int lo;
        if (p == 0)
            lo = plan.row[1].lo;
        else if (p == plan.rows)
            lo = plan.row[plan.rows].lo;
        else
            lo = std::min(plan.row[p].lo, plan.row[p + 1].lo);
        plan.path_span[p] = {lo, plan.width - lo};
    }
    return plan;
}

inline std::string wall_vertex(int p, int x)
{
    return "w." + pad2(p) + "." + pad2(x);
}

/// Outer-face walk of the wall grid, clockwise from the top-left terminal
/// (down the left staircase first). Wall edges only.
inline std::vector<std::pair<int, int>> wall_boundary_walk(const WallPlan& plan)
{
    auto vertex_at = [&](int p, int x) {
        return p >= 0 && p <= plan.rows && x >= plan.path_span[p].first &&
               x <= plan.path_span[p].second;
    };
    auto vertical_at = [&](int j, int x) {
        if (j < 1 || j > plan.rows) return false;
        const auto& v = plan.row[j].verticals;
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    // Directions: 0 = E, 1 = S, 2 = W, 3 = N (clockwise).
    auto step_ok = [&](std::pair<int, int> at, int dir) {
        auto [p, x] = at;
        switch (dir) {
            case 0: return vertex_at(p, x + 1);
            case 1: return vertical_at(p + 1, x);
            case 2: return vertex_at(p, x - 1);
            default: return vertical_at(p, x);
        }
    };
    auto advance = [&](std::pair<int, int> at, int dir) {
        auto [p, x] = at;
        switch (dir) {
            case 0: return std::make_pair(p, x + 1);
            case 1: return std::make_pair(p + 1, x);
            case 2: return std::make_pair(p, x - 1);
            default: return std::make_pair(p - 1, x);
        }
    };

    std::pair<int, int> start{0, plan.path_span[0].first};
    int heading = 1;  // south, down the left staircase
    if (!step_ok(start, heading))
        throw InternalInconsistencyError("wall boundary walk cannot leave the first terminal");
    std::vector<std::pair<int, int>> walk{start};
    auto at = advance(start, heading);
    std::size_t guard = 0;
    while (!(at == start)) {
        if (++guard > 10000)
            throw InternalInconsistencyError("wall boundary walk did not close");
        walk.push_back(at);
        // Keep the wall interior on the left: try a right turn first.
        for (int turn : {1, 0, 3, 2}) {
            int dir = (heading + turn) % 4;
            if (step_ok(at, dir)) {
                heading = dir;
                break;
            }
        }
        at = advance(at, heading);
    }
    return walk;
}

/// Builds one wall variant: grid, terminals, negative terminal matching,
/// then suppression of every divalent vertex down to the cubic form.
inline GeneratedFamily build_wall(int k, WallVariant variant)
{
    WallPlan plan = plan_wall(k, variant);

    std::vector<std::string> verts;
    std::vector<EdgeSpec> specs;
    for (int p = 0; p <= plan.rows; ++p) {
        auto [lo, hi] = plan.path_span[p];
        for (int x = lo; x <= hi; ++x) verts.push_back(wall_vertex(p, x));
        for (int x = lo; x < hi; ++x)
            specs.push_back({"h." + pad2(p) + "." + pad2(x), wall_vertex(p, x),
                             wall_vertex(p, x + 1), Sign::positive});
    }
    for (int j = 1; j <= plan.rows; ++j)
        for (int x : plan.row[j].verticals)
            specs.push_back({"v." + pad2(j) + "." + pad2(x), wall_vertex(j - 1, x),
                             wall_vertex(j, x), Sign::positive});

    const int paths = plan.rows + 1;
    std::vector<std::string> xs;  // x_1..x_paths, top to bottom
    std::vector<std::string> ys;  // y_1..y_paths, bottom to top
    for (int i = 0; i < paths; ++i) {
        xs.push_back(wall_vertex(i, plan.path_span[i].first));
        ys.push_back(wall_vertex(paths - 1 - i, plan.path_span[paths - 1 - i].second));
    }

    SignedGraph g(verts, specs);
    Signature sigma;
    if (plan.suppress_extra_terminals) {
        auto s1 = suppress_vertex(g, sigma, xs[paths - 1]);
        auto s2 = suppress_vertex(s1.graph, s1.sigma, ys[paths - 1]);
        g = std::move(s2.graph);
        sigma = std::move(s2.sigma);
        xs.pop_back();
        ys.pop_back();
    }
    if (static_cast<int>(xs.size()) != k)
        throw InternalInconsistencyError("wall has the wrong number of terminal paths");

    {
        std::vector<EdgeSpec> with_sigma;
        for (const Edge& e : g.edges())
            with_sigma.push_back({e.id, g.vertex_name(e.u), g.vertex_name(e.v), e.sign});
        std::vector<std::string> neg_ids;
        for (int i = 1; i <= k; ++i) {
            std::string id = "s." + pad2(i);
            with_sigma.push_back({id, xs[i - 1], ys[i - 1], Sign::negative});
            neg_ids.push_back(id);
        }
        g = SignedGraph(g.vertex_ids(), with_sigma);
        sigma = Signature(neg_ids);
    }

    auto reduced = reduce_to_irreducible(g, sigma, ReduceOptions{0});
    g = std::move(reduced.graph);
    sigma = std::move(reduced.sigma);

    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw InternalInconsistencyError("wall construction produced a non-cubic graph");
    if (static_cast<int>(sigma.size()) != k)
        throw InternalInconsistencyError("wall construction lost negative edges");
    for (const auto& name : xs)
        if (!g.has_vertex(name))
            throw InternalInconsistencyError("wall construction suppressed a terminal");

    GeneratedFamily fam;
    fam.name = std::string(variant == WallVariant::prime ? "escher_wall_prime." : "escher_wall.") +
               std::to_string(k);
    fam.expected_index = k;
    fam.expected_critical = true;

    WallCoordinates coords;
    for (const auto& name : g.vertex_ids()) {
        int p = std::stoi(name.substr(2, 2));
        int x = std::stoi(name.substr(5, 2));
        coords.position.emplace(name, std::make_pair(p, x));
    }
    coords.x_terminals = xs;
    coords.y_terminals = ys;
    for (auto [p, x] : wall_boundary_walk(plan)) {
        std::string name = wall_vertex(p, x);
        if (g.has_vertex(name)) coords.boundary.push_back(name);
    }
    fam.wall = std::move(coords);
    fam.graph = std::move(g);
    fam.sigma = std::move(sigma);
    return fam;
}

// ---------------------------------------------------------------------------
// Petersen fixtures
// ---------------------------------------------------------------------------

inline SignedGraph canonical_petersen()
{
    std::vector<std::string> verts;
    std::vector<EdgeSpec> specs;
    for (int i = 0; i < 5; ++i) verts.push_back("o" + std::to_string(i));
    for (int i = 0; i < 5; ++i) verts.push_back("i" + std::to_string(i));
    for (int i = 0; i < 5; ++i) {
        specs.push_back({"eo." + std::to_string(i), "o" + std::to_string(i),
                         "o" + std::to_string((i + 1) % 5), Sign::positive});
        specs.push_back({"es." + std::to_string(i), "o" + std::to_string(i),
                         "i" + std::to_string(i), Sign::positive});
        specs.push_back({"ei." + std::to_string(i), "i" + std::to_string(i),
                         "i" + std::to_string((i + 2) % 5), Sign::positive});
    }
    return SignedGraph(verts, specs);
}

}  // namespace detail

inline GeneratedFamily generate(const FamilySpec& spec);

/// Even wall of size k (k = 2t >= 4).
inline GeneratedFamily generate_even_wall(int k)
{
    return detail::build_wall(k, detail::WallVariant::even);
}

/// Odd wall of size k (k = 2t+1 >= 3); the two spare divalent terminals are
/// suppressed before the negative matching is added.
inline GeneratedFamily generate_odd_wall(int k)
{
    return detail::build_wall(k, detail::WallVariant::odd);
}

/// The second odd family of wall subgraphs; size 3 gives the Petersen graph.
inline GeneratedFamily generate_wall_prime(int k)
{
    return detail::build_wall(k, detail::WallVariant::prime);
}

/// The signature of the projective cube together with the antipodal-cut
/// family: k+1 pairwise disjoint minimum signatures.
inline std::vector<Signature> projective_cube_disjoint_signatures(int k)
{
    auto fam = generate(FamilySpec{FamilyKind::projective_cube, k});
    std::vector<Signature> out{fam.sigma};
    for (int bit = 0; bit < k; ++bit) {
        std::vector<std::string> inside;
        for (const auto& name : fam.graph.vertex_ids())
            if (name[bit] == '0') inside.push_back(name);
        out.push_back(switch_signature(fam.graph, fam.sigma, SwitchSet(inside)));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() != std::size_t(1) << (k - 1))
            throw InternalInconsistencyError("projective cube signature has the wrong size");
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (symmetric_difference(out[i], out[j]).size() != out[i].size() + out[j].size())
                throw InternalInconsistencyError("projective cube signatures overlap");
    }
    return out;
}

/// Builds the family member described by spec. The metadata carries the
/// expected index and criticality for test harnesses.
inline GeneratedFamily generate(const FamilySpec& spec)
{
    using detail::pad2;
    GeneratedFamily fam;
    const int k = spec.parameter;
    switch (spec.kind) {
        case FamilyKind::neg_loops: {
            if (k < 1) throw PreconditionError("neg_loops needs a parameter of at least 1");
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (int i = 1; i <= k; ++i) {
                edges.push_back({"l" + pad2(i), "a", "a", Sign::negative});
                neg.push_back("l" + pad2(i));
            }
            fam.graph = SignedGraph({"a"}, edges);
            fam.sigma = Signature(neg);
            fam.name = "neg_loops." + std::to_string(k);
            fam.expected_index = k;
            fam.expected_critical = true;
            return fam;
        }
        case FamilyKind::plus_minus: {
            if (k < 1) throw PreconditionError("plus_minus needs a parameter of at least 1");
            std::vector<std::string> verts;
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (int i = 1; i <= k; ++i) verts.push_back("c" + pad2(i));
            for (int i = 0; i < k; ++i) {
                std::string a = verts[i];
                std::string b = verts[(i + 1) % k];
                edges.push_back({"p" + pad2(i + 1), a, b, Sign::positive});
                edges.push_back({"m" + pad2(i + 1), a, b, Sign::negative});
                neg.push_back("m" + pad2(i + 1));
            }
            fam.graph = SignedGraph(verts, edges);
            fam.sigma = Signature(neg);
            fam.name = "plus_minus." + std::to_string(k);
            fam.expected_index = k;
            // A positive loop sits on no negative circuit, so the doubled
            // unit circuit is not critical.
            fam.expected_critical = k >= 2;
            return fam;
        }
        case FamilyKind::anti_complete: {
            if (k < 1) throw PreconditionError("anti_complete needs a parameter of at least 1");
            std::vector<std::string> verts;
            for (int i = 1; i <= k; ++i) verts.push_back("v" + pad2(i));
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    std::string id = verts[i] + "-" + verts[j];
                    edges.push_back({id, verts[i], verts[j], Sign::negative});
                    neg.push_back(id);
                }
            fam.graph = SignedGraph(verts, edges);
            fam.sigma = Signature(neg);
            fam.name = "anti_complete." + std::to_string(k);
            fam.expected_index = (k - 1) * (k - 1) / 4;
            fam.expected_critical = k >= 3;
            return fam;
        }
        case FamilyKind::anti_wheel: {
            if (k < 1) throw PreconditionError("anti_wheel needs a parameter of at least 1");
            int rim = 2 * k + 1;
            std::vector<std::string> verts{"h"};
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (int i = 0; i < rim; ++i) verts.push_back("r" + pad2(i));
            for (int i = 0; i < rim; ++i) {
                edges.push_back({"c" + pad2(i), "r" + pad2(i), "r" + pad2((i + 1) % rim),
                                 Sign::negative});
                edges.push_back({"s" + pad2(i), "h", "r" + pad2(i), Sign::negative});
                neg.push_back("c" + pad2(i));
                neg.push_back("s" + pad2(i));
            }
            fam.graph = SignedGraph(verts, edges);
            fam.sigma = Signature(neg);
            fam.name = "anti_wheel." + std::to_string(k);
            fam.expected_index = k + 1;
            fam.expected_critical = true;
            return fam;
        }
        case FamilyKind::projective_cube: {
            if (k < 1 || k > 12)
                throw PreconditionError("projective_cube supports dimensions 1 through 12");
            int n = 1 << k;
            auto label = [&](int v) {
                std::string s;
                for (int b = 0; b < k; ++b) s += (v >> b) & 1 ? '1' : '0';
                return s;
            };
            std::vector<std::string> verts;
            for (int v = 0; v < n; ++v) verts.push_back(label(v));
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (int v = 0; v < n; ++v) {
                for (int b = 0; b < k; ++b) {
                    int w = v ^ (1 << b);
                    if (v < w)
                        edges.push_back({"c." + label(v) + "." + label(w), label(v), label(w),
                                         Sign::positive});
                }
                int w = v ^ (n - 1);
                if (v < w) {
                    std::string id = "a." + label(v) + "." + label(w);
                    edges.push_back({id, label(v), label(w), Sign::negative});
                    neg.push_back(id);
                }
            }
            fam.graph = SignedGraph(verts, edges);
            fam.sigma = Signature(neg);
            fam.name = "projective_cube." + std::to_string(k);
            fam.expected_index = 1 << (k - 1);
            fam.expected_critical = true;
            return fam;
        }
        case FamilyKind::octahedron_anti: {
            std::vector<std::string> verts{"a1", "a2", "b1", "b2", "c1", "c2"};
            std::vector<EdgeSpec> edges;
            std::vector<std::string> neg;
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j) {
                    if (verts[i][0] == verts[j][0]) continue;  // missing matching
                    std::string id = verts[i] + "-" + verts[j];
                    edges.push_back({id, verts[i], verts[j], Sign::negative});
                    neg.push_back(id);
                }
            fam.graph = SignedGraph(verts, edges);
            fam.sigma = Signature(neg);
            fam.name = "octahedron_anti";
            fam.expected_index = 4;
            fam.expected_critical = true;
            return fam;
        }
        case FamilyKind::escher_wall:
            return k % 2 == 0 ? generate_even_wall(k) : generate_odd_wall(k);
        case FamilyKind::escher_wall_prime:
            return generate_wall_prime(k);
        case FamilyKind::petersen_sigma2: {
            auto prime = generate_wall_prime(3);
            auto petersen = detail::canonical_petersen();
            auto phi = detail::find_graph_isomorphism(prime.graph, petersen);
            if (!phi)
                throw InternalInconsistencyError(
                    "size-3 prime wall is not the Petersen graph");
            // Image of the wall signature under the first isomorphism.
            std::vector<std::string> neg;
            auto mask = detail::signature_mask(prime.graph, prime.sigma);
            for (int ei = 0; ei < prime.graph.edge_count(); ++ei) {
                if (!mask[ei]) continue;
                const Edge& e = prime.graph.edge(ei);
                int a = (*phi)[e.u];
                int b = (*phi)[e.v];
                // Find the Petersen edge joining the mapped endpoints.
                for (const Edge& pe : petersen.edges())
                    if ((pe.u == std::min(a, b)) && (pe.v == std::max(a, b)))
                        neg.push_back(pe.id);
            }
            fam.sigma = Signature(neg);
            fam.graph = rebase_signs(petersen, fam.sigma);
            fam.name = "petersen_sigma2";
            fam.expected_index = 3;
            fam.expected_critical = true;
            if (frustration_switch_enum(fam.graph, fam.sigma).index != 3)
                throw InternalInconsistencyError("petersen_sigma2 fixture has the wrong index");
            return fam;
        }
        case FamilyKind::petersen_sigma1: {
            auto petersen = detail::canonical_petersen();
            std::vector<std::string> ids;
            for (const Edge& e : petersen.edges()) ids.push_back(e.id);
            // First canonical 3-signature that is minimum, critical, and has
            // two edge-disjoint negative circuits.
            const int m = static_cast<int>(ids.size());
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c) {
                        Signature sigma({ids[a], ids[b], ids[c]});
                        if (frustration_switch_enum(petersen, sigma).index != 3) continue;
                        if (!two_edge_disjoint_negative_circuits(petersen, sigma)) continue;
                        if (!is_critical(petersen, sigma).critical) continue;
                        fam.sigma = sigma;
                        fam.graph = rebase_signs(petersen, sigma);
                        fam.name = "petersen_sigma1";
                        fam.expected_index = 3;
                        fam.expected_critical = true;
                        return fam;
                    }
            throw InternalInconsistencyError("no qualifying signature for petersen_sigma1");
        }
    }
    throw PreconditionError("unknown family kind");
}

}  // namespace sgfrust
