#include <catch2/catch.hpp>

#include "sgfrust/families.hpp"
#include "sgfrust/structure.hpp"
#include "support.hpp"

using namespace sgfrust;

namespace {

/// Brute-force cyclic edge connectivity over vertex bipartitions; nullopt
/// when no cut separates two circuits.
std::optional<int> cyclic_connectivity_by_bipartitions(const SignedGraph& g)
{
    const int n = g.vertex_count();
    auto side_has_circuit = [&](std::uint32_t mask) {
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v];
            return v;
        };
        for (const auto& e : g.edges()) {
            if (!(mask & (1u << e.u)) || !(mask & (1u << e.v))) continue;
            if (e.is_loop()) return true;
            int ru = find(e.u);
            int rv = find(e.v);
            if (ru == rv) return true;
            parent[ru] = rv;
        }
        return false;
    };
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        if (!side_has_circuit(mask) || !side_has_circuit(~mask & ((1u << n) - 1))) continue;
        int cut = 0;
        for (const auto& e : g.edges()) {
            if (e.is_loop()) continue;
            bool a = mask & (1u << e.u);
            bool b = mask & (1u << e.v);
            if (a != b) ++cut;
        }
        if (!best || cut < *best) best = cut;
    }
    return best;
}

}  // namespace

TEST_CASE("edge-disjoint negative circuits")
{
    SECTION("the first Petersen signature has a disjoint pair")
    {
        auto p1 = generate(FamilySpec{FamilyKind::petersen_sigma1, 0});
        auto w = two_edge_disjoint_negative_circuits(p1.graph, p1.sigma);
        REQUIRE(w.has_value());
        std::set<std::string> first(w->first.begin(), w->first.end());
        for (const auto& e : w->second) CHECK_FALSE(first.count(e));
    }
    SECTION("the second Petersen signature has none")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK_FALSE(two_edge_disjoint_negative_circuits(p2.graph, p2.sigma).has_value());
    }
    SECTION("two negative loops are already a witness")
    {
        auto g = fixtures::neg_loops(2);
        auto w = two_edge_disjoint_negative_circuits(g, g.declared_signature());
        REQUIRE(w.has_value());
        CHECK(w->first.size() == 1);
        CHECK(w->second.size() == 1);
    }
}

TEST_CASE("membership in S*")
{
    SECTION("Petersen verdicts")
    {
        auto p1 = generate(FamilySpec{FamilyKind::petersen_sigma1, 0});
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK_FALSE(in_s_star(p1.graph, p1.sigma).member);
        CHECK(in_s_star(p2.graph, p2.sigma).member);
    }
    SECTION("-K4 is a member")
    {
        auto g = fixtures::minus_k4();
        CHECK(in_s_star(g, g.declared_signature()).member);
    }
    SECTION("non-critical inputs are rejected")
    {
        auto g = fixtures::complete({"a", "b", "c"}, Sign::positive);
        CHECK_THROWS_AS(in_s_star(g, g.declared_signature()), PreconditionError);
    }
}

TEST_CASE("trivial decomposability detection")
{
    SECTION("a negative loop is a unit part")
    {
        auto g = fixtures::neg_loops(2);
        auto hint = trivially_decomposable(g, g.declared_signature());
        REQUIRE(hint.has_value());
        CHECK(hint->unit_part.size() == 1);
    }
    SECTION("-K4 has no trivial split")
    {
        auto g = fixtures::minus_k4();
        CHECK_FALSE(trivially_decomposable(g, g.declared_signature()).has_value());
    }
    SECTION("a doubled triangle splits at a parallel pair")
    {
        auto g = fixtures::plus_minus_cycle(3);
        auto hint = trivially_decomposable(g, g.declared_signature());
        REQUIRE(hint.has_value());
        CHECK(hint->unit_part.size() == 2);
    }
}

TEST_CASE("exhaustive decomposition")
{
    SECTION("two disjoint unit circuits split (1,1)")
    {
        auto g = build_graph({"a", "b"}, {{"la", "a", "a", Sign::negative},
                                          {"lb", "b", "b", Sign::negative}});
        auto w = decompose_exhaustive(g, g.declared_signature());
        REQUIRE(w.has_value());
        CHECK(w->indices == std::vector<int>{1, 1});
    }
    SECTION("two loops at one vertex split (1,1)")
    {
        auto g = fixtures::neg_loops(2);
        auto w = decompose_exhaustive(g, g.declared_signature());
        REQUIRE(w.has_value());
        CHECK(w->indices == std::vector<int>{1, 1});
    }
    SECTION("a doubled triangle decomposes")
    {
        auto g = fixtures::plus_minus_cycle(3);
        auto w = decompose_exhaustive(g, g.declared_signature());
        REQUIRE(w.has_value());
        CHECK(w->indices.size() >= 2);
        int sum = 0;
        for (int k : w->indices) sum += k;
        CHECK(sum == 3);
    }
    SECTION("-K4 is non-decomposable")
    {
        auto g = fixtures::minus_k4();
        CHECK_FALSE(decompose_exhaustive(g, g.declared_signature()).has_value());
    }
    SECTION("the second Petersen signature is non-decomposable")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK_FALSE(decompose_exhaustive(p2.graph, p2.sigma).has_value());
    }
    SECTION("caps surface as budget errors")
    {
        auto g = fixtures::anti_wheel(3);  // 16 edges, index 4 -- edge cap is 16
        DecomposeCaps caps;
        caps.max_edges = 10;
        CHECK_THROWS_AS(decompose_exhaustive(g, g.declared_signature(), caps),
                        BudgetExceededError);
    }
}

TEST_CASE("multiedge subdivision")
{
    SECTION("a single negative edge becomes a mixed path")
    {
        auto g = build_graph({"x", "y"}, {{"e", "x", "y", Sign::negative}});
        auto res = subdivide_multiedge(g, g.declared_signature(), "x", "y");
        CHECK(res.graph.vertex_count() == 3);
        CHECK(res.graph.edge_count() == 2);
        CHECK(res.sigma.size() == 1);
        // One positive side, one negative side.
        int neg = 0;
        for (const auto& e : res.graph.edges()) neg += res.sigma.contains(e.id);
        CHECK(neg == 1);
    }
    SECTION("subdividing the loop bundle of -2C1 gives the doubled pair")
    {
        auto g = fixtures::neg_loops(2);
        auto res = subdivide_multiedge(g, g.declared_signature(), "a", "a");
        CHECK(res.graph.vertex_count() == 2);
        CHECK(res.graph.edge_count() == 4);
        CHECK(res.sigma.size() == 2);
        for (const auto& e : res.graph.edges()) CHECK_FALSE(e.is_loop());
    }
    SECTION("mixed bundles are rejected")
    {
        auto g = fixtures::plus_minus_cycle(3);
        CHECK_THROWS_AS(subdivide_multiedge(g, g.declared_signature(), "c01", "c02"),
                        PreconditionError);
    }
    SECTION("subdivision preserves index and criticality on random graphs")
    {
        std::mt19937 rng(2718);
        int tried = 0;
        for (int round = 0; round < 120 && tried < 40; ++round) {
            auto g = fixtures::random_graph(rng, 6, 9);
            auto sigma = g.declared_signature();
            // Pick the first sign-uniform bundle.
            std::optional<std::pair<std::string, std::string>> pick;
            for (int u = 0; u < g.vertex_count() && !pick; ++u) {
                for (int v = u; v < g.vertex_count() && !pick; ++v) {
                    std::vector<const Edge*> bundle;
                    for (const auto& e : g.edges())
                        if (e.u == u && e.v == v) bundle.push_back(&e);
                    if (bundle.empty()) continue;
                    bool uniform = true;
                    for (const auto* e : bundle)
                        if (sigma.contains(e->id) != sigma.contains(bundle[0]->id))
                            uniform = false;
                    if (uniform) pick = {g.vertex_name(u), g.vertex_name(v)};
                }
            }
            if (!pick) continue;
            ++tried;
            auto res = subdivide_multiedge(g, sigma, pick->first, pick->second);
            CHECK(frustration_switch_enum(res.graph, res.sigma).index ==
                  frustration_switch_enum(g, sigma).index);
            CHECK(is_critical(res.graph, res.sigma).critical == is_critical(g, sigma).critical);
        }
        REQUIRE(tried >= 20);
    }
}

TEST_CASE("vertex suppression")
{
    SECTION("a mixed two-path collapses to a single negative edge")
    {
        auto g = build_graph({"x", "v", "y"}, {{"a", "x", "v", Sign::positive},
                                               {"b", "v", "y", Sign::negative}});
        auto res = suppress_vertex(g, g.declared_signature(), "v");
        CHECK(res.graph.vertex_count() == 2);
        REQUIRE(res.graph.edge_count() == 1);
        CHECK(res.sigma.size() == 1);
    }
    SECTION("subdividing and suppressing the fresh vertex is the identity")
    {
        std::mt19937 rng(1123);
        int tried = 0;
        for (int round = 0; round < 200 && tried < 25; ++round) {
            auto g = fixtures::random_graph(rng, 6, 9);
            auto sigma = g.declared_signature();
            std::optional<std::pair<std::string, std::string>> pick;
            for (int u = 0; u < g.vertex_count() && !pick; ++u)
                for (int v = u; v < g.vertex_count() && !pick; ++v) {
                    std::vector<const Edge*> bundle;
                    for (const auto& e : g.edges())
                        if (e.u == u && e.v == v) bundle.push_back(&e);
                    if (bundle.empty()) continue;
                    bool uniform = true;
                    for (const auto* e : bundle)
                        if (sigma.contains(e->id) != sigma.contains(bundle[0]->id))
                            uniform = false;
                    if (uniform) pick = {g.vertex_name(u), g.vertex_name(v)};
                }
            if (!pick || pick->first == pick->second) continue;
            ++tried;
            auto sub = subdivide_multiedge(g, sigma, pick->first, pick->second);
            // The fresh junction is the only new vertex.
            std::string fresh;
            for (const auto& name : sub.graph.vertex_ids())
                if (!g.has_vertex(name)) fresh = name;
            REQUIRE(can_suppress(sub.graph, sub.sigma, fresh));
            auto back = suppress_vertex(sub.graph, sub.sigma, fresh);
            CHECK(switch_isomorphic(back.graph, back.sigma, g, sigma));
        }
        REQUIRE(tried >= 10);
    }
    SECTION("two negative sides merge positive")
    {
        auto g = build_graph({"x", "v", "y"}, {{"a", "x", "v", Sign::negative},
                                               {"b", "v", "y", Sign::negative}});
        auto res = suppress_vertex(g, g.declared_signature(), "v");
        CHECK(res.sigma.empty());
    }
    SECTION("unequal multiplicities are not suppressible")
    {
        auto g = build_graph({"x", "v", "y"}, {{"a", "x", "v", Sign::positive},
                                               {"b", "x", "v", Sign::positive},
                                               {"c", "v", "y", Sign::negative}});
        CHECK_FALSE(can_suppress(g, g.declared_signature(), "v"));
        CHECK_THROWS_AS(suppress_vertex(g, g.declared_signature(), "v"), PreconditionError);
    }
}

TEST_CASE("irreducibility and reduction")
{
    SECTION("-K4 is irreducible")
    {
        auto g = fixtures::minus_k4();
        CHECK(irreducible(g, g.declared_signature()));
    }
    SECTION("a subdivision of -K4 is not")
    {
        auto g = fixtures::minus_k4();
        auto res = subdivide_multiedge(g, g.declared_signature(), "u", "v");
        CHECK_FALSE(irreducible(res.graph, res.sigma));
    }
    SECTION("the unit circuit is irreducible")
    {
        auto g = fixtures::neg_loops(1);
        CHECK(irreducible(g, g.declared_signature()));
    }
    SECTION("a long unbalanced circuit reduces to the unit circuit")
    {
        auto g = fixtures::cycle({Sign::negative, Sign::positive, Sign::positive, Sign::positive,
                                  Sign::positive});
        auto res = reduce_to_irreducible(g, g.declared_signature());
        CHECK(res.graph.vertex_count() == 1);
        CHECK(res.graph.edge_count() == 1);
        CHECK(res.sigma.size() == 1);
    }
    SECTION("a doubled mixed path reduces to -2C1")
    {
        auto loops = fixtures::neg_loops(2);
        auto doubled = subdivide_multiedge(loops, loops.declared_signature(), "a", "a");
        auto res = reduce_to_irreducible(doubled.graph, doubled.sigma);
        auto proto = fixtures::neg_loops(2);
        CHECK(switch_isomorphic(res.graph, res.sigma, proto, proto.declared_signature()));
    }
    SECTION("irreducible inputs come back unchanged")
    {
        auto g = fixtures::minus_k4();
        auto res = reduce_to_irreducible(g, g.declared_signature());
        CHECK(res.graph == g);
        CHECK(res.steps.empty());
    }
}

TEST_CASE("classification of low-index critical graphs")
{
    SECTION("any unbalanced circuit is the unit circuit")
    {
        auto g = fixtures::cycle({Sign::negative, Sign::positive, Sign::positive});
        auto res = classify_low_critical(g, g.declared_signature());
        CHECK(res.index == 1);
        CHECK(res.archetype == Archetype::neg_c1);
    }
    SECTION("-K4 subdivided twice classifies as -K4")
    {
        auto g = fixtures::minus_k4();
        auto s1 = subdivide_multiedge(g, g.declared_signature(), "u", "v");
        auto s2 = subdivide_multiedge(s1.graph, s1.sigma, "x", "y");
        auto res = classify_low_critical(s2.graph, s2.sigma);
        CHECK(res.index == 2);
        CHECK(res.archetype == Archetype::neg_k4);
    }
    SECTION("the doubled pair classifies as -2C1")
    {
        auto loops = fixtures::neg_loops(2);
        auto doubled = subdivide_multiedge(loops, loops.declared_signature(), "a", "a");
        auto res = classify_low_critical(doubled.graph, doubled.sigma);
        CHECK(res.archetype == Archetype::neg_2c1);
    }
    SECTION("two disjoint circuits classify as the disjoint union")
    {
        auto g = build_graph({"a", "b", "c"}, {{"la", "a", "a", Sign::negative},
                                               {"e1", "b", "c", Sign::negative},
                                               {"e2", "b", "c", Sign::positive}});
        auto res = classify_low_critical(g, g.declared_signature());
        CHECK(res.archetype == Archetype::neg_c1_disjoint_neg_c1);
    }
    SECTION("high-index inputs are rejected")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK_THROWS_AS(classify_low_critical(p2.graph, p2.sigma), PreconditionError);
    }
    SECTION("classification succeeds on every certified low-critical random graph")
    {
        std::mt19937 rng(9001);
        int classified = 0;
        for (int round = 0; round < 400 && classified < 25; ++round) {
            auto g = fixtures::random_graph(rng, 6, 8);
            auto sigma = g.declared_signature();
            auto rep = is_critical(g, sigma);
            if (!rep.critical || rep.index > 2) continue;
            ++classified;
            CHECK_NOTHROW(classify_low_critical(g, sigma));
        }
        REQUIRE(classified >= 10);
    }
}

TEST_CASE("edge sums")
{
    auto k4 = fixtures::minus_k4();
    auto k4_sigma = k4.declared_signature();

    SECTION("2-sum with a balanced circuit stays critical")
    {
        auto c4 = fixtures::cycle({Sign::positive, Sign::positive, Sign::positive,
                                   Sign::positive});
        // -K4 has no positive edge, so use the matching-signature form.
        Signature gamma({"u-v", "x-y"});
        auto sum = edge_sum_2(k4, gamma, "u-x", c4, c4.declared_signature(), "e01");
        auto rep = is_critical(sum.graph, sum.sigma);
        CHECK(rep.index == 2);
        CHECK(rep.critical);
    }
    SECTION("2-sum with a balanced non-circuit is not critical")
    {
        auto block = fixtures::complete({"a", "b", "c", "d"}, Sign::positive);
        Signature gamma({"u-v", "x-y"});
        auto sum = edge_sum_2(k4, gamma, "u-x", block, block.declared_signature(), "a-b");
        CHECK_FALSE(is_critical(sum.graph, sum.sigma).critical);
    }
    SECTION("negative edges are rejected")
    {
        auto c4 = fixtures::cycle({Sign::positive, Sign::positive, Sign::positive,
                                   Sign::positive});
        CHECK_THROWS_AS(edge_sum_2(k4, k4_sigma, "u-v", c4, c4.declared_signature(), "e01"),
                        PreconditionError);
    }
    SECTION("disjoint-circuit status transfers through 2-sums")
    {
        auto c4 = fixtures::cycle({Sign::positive, Sign::positive, Sign::positive,
                                   Sign::positive});
        for (auto kind : {FamilyKind::petersen_sigma1, FamilyKind::petersen_sigma2}) {
            auto p = generate(FamilySpec{kind, 0});
            std::string pos_edge;
            for (const auto& e : p.graph.edges())
                if (!p.sigma.contains(e.id)) {
                    pos_edge = e.id;
                    break;
                }
            auto sum = edge_sum_2(p.graph, p.sigma, pos_edge, c4, c4.declared_signature(), "e01");
            CHECK(two_edge_disjoint_negative_circuits(sum.graph, sum.sigma).has_value() ==
                  two_edge_disjoint_negative_circuits(p.graph, p.sigma).has_value());
        }
    }
    SECTION("3-sum of Petersen and positive K4 is cubic")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        // A vertex with three positive incident edges.
        std::string u1;
        for (const auto& name : p2.graph.vertex_ids()) {
            int vi = *p2.graph.vertex_index(name);
            bool all_pos = true;
            for (int ei : p2.graph.incident_edges(vi))
                if (p2.sigma.contains(p2.graph.edge(ei).id)) all_pos = false;
            if (all_pos) {
                u1 = name;
                break;
            }
        }
        REQUIRE_FALSE(u1.empty());
        auto block = fixtures::complete({"a", "b", "c", "d"}, Sign::positive);
        auto sum = edge_sum_3(p2.graph, p2.sigma, u1, block, block.declared_signature(), "a");
        for (int v = 0; v < sum.graph.vertex_count(); ++v) CHECK(sum.graph.degree(v) == 3);
        CHECK(two_edge_disjoint_negative_circuits(sum.graph, sum.sigma).has_value() ==
              two_edge_disjoint_negative_circuits(p2.graph, p2.sigma).has_value());
    }
    SECTION("3-sum with a balanced theta-graph stays critical")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        std::string u1;
        for (const auto& name : p2.graph.vertex_ids()) {
            int vi = *p2.graph.vertex_index(name);
            bool all_pos = true;
            for (int ei : p2.graph.incident_edges(vi))
                if (p2.sigma.contains(p2.graph.edge(ei).id)) all_pos = false;
            if (all_pos) {
                u1 = name;
                break;
            }
        }
        REQUIRE_FALSE(u1.empty());
        auto theta = build_graph({"a", "b", "m1", "m2", "m3"},
                                 {{"a1", "a", "m1", Sign::positive},
                                  {"a2", "a", "m2", Sign::positive},
                                  {"a3", "a", "m3", Sign::positive},
                                  {"b1", "m1", "b", Sign::positive},
                                  {"b2", "m2", "b", Sign::positive},
                                  {"b3", "m3", "b", Sign::positive}});
        auto sum = edge_sum_3(p2.graph, p2.sigma, u1, theta, theta.declared_signature(), "a");
        auto rep = is_critical(sum.graph, sum.sigma);
        CHECK(rep.index == 3);
        CHECK(rep.critical);
    }
}

TEST_CASE("switching isomorphism")
{
    SECTION("switching never changes the class")
    {
        std::mt19937 rng(555);
        for (int round = 0; round < 25; ++round) {
            auto g = fixtures::random_graph(rng, 6, 9);
            auto sigma = g.declared_signature();
            auto u = fixtures::random_switch_set(rng, g);
            CHECK(switch_isomorphic(g, sigma, g, switch_signature(g, sigma, u)));
        }
    }
    SECTION("the two Petersen signatures are inequivalent")
    {
        auto p1 = generate(FamilySpec{FamilyKind::petersen_sigma1, 0});
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK_FALSE(switch_isomorphic(p1.graph, p1.sigma, p2.graph, p2.sigma));
    }
    SECTION("relabeled graphs are recognized")
    {
        auto g = fixtures::minus_k4();
        auto h = fixtures::complete({"p", "q", "r", "s"}, Sign::negative);
        CHECK(switch_isomorphic(g, g.declared_signature(), h, h.declared_signature()));
    }
    SECTION("the size cap raises a budget error")
    {
        auto a = generate_odd_wall(3);
        CHECK_THROWS_AS(switch_isomorphic(a.graph, a.sigma, a.graph, a.sigma, 10),
                        BudgetExceededError);
    }
}

TEST_CASE("cyclic edge connectivity")
{
    SECTION("Petersen is cyclically 5-edge-connected")
    {
        auto p = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        CHECK(cyclic_edge_connectivity(p.graph) == 5);
    }
    SECTION("K4 has no cycle-separating cut and reports its connectivity")
    {
        auto g = fixtures::complete({"a", "b", "c", "d"}, Sign::positive);
        CHECK(cyclic_edge_connectivity(g) == 3);
        CHECK_FALSE(cyclic_connectivity_by_bipartitions(g).has_value());
    }
    SECTION("agreement with the bipartition oracle on small cubic graphs")
    {
        // Triangular prism.
        auto prism = build_graph({"a", "b", "c", "x", "y", "z"},
                                 {{"t1", "a", "b", Sign::positive},
                                  {"t2", "b", "c", Sign::positive},
                                  {"t3", "c", "a", Sign::positive},
                                  {"u1", "x", "y", Sign::positive},
                                  {"u2", "y", "z", Sign::positive},
                                  {"u3", "z", "x", Sign::positive},
                                  {"m1", "a", "x", Sign::positive},
                                  {"m2", "b", "y", Sign::positive},
                                  {"m3", "c", "z", Sign::positive}});
        auto oracle = cyclic_connectivity_by_bipartitions(prism);
        REQUIRE(oracle.has_value());
        CHECK(cyclic_edge_connectivity(prism) == *oracle);

        auto p = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        auto po = cyclic_connectivity_by_bipartitions(p.graph);
        REQUIRE(po.has_value());
        CHECK(cyclic_edge_connectivity(p.graph) == *po);

        auto e3 = generate_odd_wall(3);
        auto eo = cyclic_connectivity_by_bipartitions(e3.graph);
        REQUIRE(eo.has_value());
        CHECK(cyclic_edge_connectivity(e3.graph) == *eo);
    }
    SECTION("non-cubic graphs are rejected")
    {
        auto g = fixtures::minus_k4();
        auto sub = subdivide_multiedge(g, g.declared_signature(), "u", "v");
        CHECK_THROWS_AS(cyclic_edge_connectivity(sub.graph), PreconditionError);
    }
}

TEST_CASE("structural report for S* members")
{
    SECTION("the second Petersen signature passes all checks")
    {
        auto p2 = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
        auto rep = verify_s_star_structure(p2.graph, p2.sigma);
        CHECK(rep.all_pass());
        CHECK(rep.cyclic_connectivity == 5);
    }
    SECTION("the first Petersen signature fails only the disjoint-circuit check")
    {
        auto p1 = generate(FamilySpec{FamilyKind::petersen_sigma1, 0});
        auto rep = verify_s_star_structure(p1.graph, p1.sigma);
        CHECK_FALSE(rep.all_pass());
        for (const auto& c : rep.checks) {
            if (c.name == "no edge-disjoint negative circuits")
                CHECK_FALSE(c.pass);
            else
                CHECK(c.pass);
        }
    }
}

TEST_CASE("decompositions imply edge-disjoint negative circuits")
{
    // Each part of a decomposition is unbalanced, so a decomposable critical
    // graph can never be an S* member; checked on every witness found.
    std::mt19937 rng(606);
    int witnesses = 0;
    for (int round = 0; round < 400 && witnesses < 8; ++round) {
        auto g = fixtures::random_graph(rng, 5, 8);
        auto sigma = g.declared_signature();
        auto rep = is_critical(g, sigma);
        if (!rep.critical || rep.index < 2 || rep.index > 4) continue;
        auto w = decompose_exhaustive(g, sigma);
        if (!w) continue;
        ++witnesses;
        CHECK(two_edge_disjoint_negative_circuits(g, sigma).has_value());
        CHECK_FALSE(in_s_star(g, sigma).member);
    }
    REQUIRE(witnesses >= 3);
}

TEST_CASE("disjoint negative circuits span a decomposable 2-critical subgraph")
{
    // The converse direction of the S* characterization on suite graphs.
    std::mt19937 rng(607);
    int found = 0;
    for (int round = 0; round < 300 && found < 8; ++round) {
        auto g = fixtures::random_graph(rng, 6, 9);
        auto sigma = g.declared_signature();
        if (!is_critical(g, sigma).critical) continue;
        auto w = two_edge_disjoint_negative_circuits(g, sigma);
        if (!w) continue;
        ++found;
        std::vector<std::string> both = w->first;
        both.insert(both.end(), w->second.begin(), w->second.end());
        auto sub = subgraph_from_edges(g, both);
        auto ssub = restrict_signature(sigma, sub);
        auto dec = decompose_exhaustive(sub, ssub);
        REQUIRE(dec.has_value());
        CHECK(dec->indices == std::vector<int>{1, 1});
    }
    REQUIRE(found >= 3);
}

TEST_CASE("caps and preconditions are enforced")
{
    auto p = generate(FamilySpec{FamilyKind::petersen_sigma2, 0});
    CHECK_THROWS_AS(cyclic_edge_connectivity(p.graph, 4), BudgetExceededError);
    // The unit circuit has no positive edge at all.
    auto c1 = fixtures::neg_loops(1);
    CHECK_THROWS_AS(equilibrated_cut_for_edge(c1, c1.declared_signature(), "l01"),
                    PreconditionError);
}

TEST_CASE("decomposability is a subdivision invariant")
{
    std::mt19937 rng(808);
    int tried = 0;
    for (int round = 0; round < 300 && tried < 10; ++round) {
        auto g = fixtures::random_graph(rng, 5, 8);
        auto sigma = g.declared_signature();
        auto rep = is_critical(g, sigma);
        if (!rep.critical || rep.index > 4) continue;
        std::optional<std::pair<std::string, std::string>> pick;
        for (int u = 0; u < g.vertex_count() && !pick; ++u)
            for (int v = u; v < g.vertex_count() && !pick; ++v) {
                std::vector<const Edge*> bundle;
                for (const auto& e : g.edges())
                    if (e.u == u && e.v == v) bundle.push_back(&e);
                if (bundle.empty()) continue;
                bool uniform = true;
                for (const auto* e : bundle)
                    if (sigma.contains(e->id) != sigma.contains(bundle[0]->id)) uniform = false;
                if (uniform) pick = {g.vertex_name(u), g.vertex_name(v)};
            }
        if (!pick) continue;
        auto sub = subdivide_multiedge(g, sigma, pick->first, pick->second);
        if (sub.graph.edge_count() > 16) continue;
        ++tried;
        CHECK(decompose_exhaustive(g, sigma).has_value() ==
              decompose_exhaustive(sub.graph, sub.sigma).has_value());
    }
    REQUIRE(tried >= 5);
}
