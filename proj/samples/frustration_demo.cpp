// Minimal library walkthrough: build a signed graph, solve it, inspect the
// certificates.

#include <iostream>

#include "sgfrust/sgfrust.hpp"

int main()
{
    using namespace sgfrust;

    // The all-negative K4: four vertices, every edge negative.
    std::vector<std::string> verts{"u", "v", "x", "y"};
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            edges.push_back({verts[i] + "-" + verts[j], verts[i], verts[j], Sign::negative});
    SignedGraph g(verts, edges);
    Signature sigma = g.declared_signature();

    auto res = frustration_switch_enum(g, sigma, true);
    std::cout << "frustration index: " << res.index << "\n";
    std::cout << "witness:";
    for (const auto& e : res.witness.edges) std::cout << ' ' << e;
    std::cout << "\nminimum signatures: " << res.all_min_signatures->size() << "\n";

    auto rep = is_critical(g, sigma);
    std::cout << "critical: " << (rep.critical ? "yes" : "no") << "\n";

    auto wall = generate_odd_wall(3);
    std::cout << "smallest odd wall: " << wall.graph.vertex_count() << " vertices, index "
              << frustration_switch_enum(wall.graph, wall.sigma).index << "\n";
    return 0;
}
