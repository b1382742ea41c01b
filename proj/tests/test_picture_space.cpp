#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "picspace/picture_space.hpp"
#include "test_graphs.hpp"

using namespace picspace;

TEST_CASE("cellule dimensions") {
    Graph k4 = Graph::complete(4);
    Cellule disc = cellule(k4, Partition::discrete(4));
    CHECK(disc.dimension == 8);
    CHECK(disc.collapsed_edges == 0);

    Cellule indisc = cellule(k4, Partition::indiscrete(4));
    CHECK(indisc.dimension == 8);  // 2*1 + 6
    CHECK(indisc.collapsed_edges == k4.full_edge_set());

    Cellule k2 = cellule(Graph::complete(2), Partition::indiscrete(2));
    CHECK(k2.dimension == 3);

    // Formula 2*(blocks) + (collapsed edges), against a direct recount.
    for (auto& a : Partition::all(4)) {
        Cellule c = cellule(k4, a);
        int collapsed = 0;
        for (int e = 0; e < k4.edge_count(); ++e) {
            auto [u, v] = k4.edge(e);
            if (a.same_block(u, v)) {
                ++collapsed;
                CHECK((c.collapsed_edges & edge_bit(e)) != 0);
            }
        }
        CHECK(c.dimension == 2 * a.block_count() + collapsed);
        CHECK(std::popcount(c.collapsed_edges) == collapsed);
    }
}

TEST_CASE("collapses") {
    Graph k4 = Graph::complete(4);
    EdgeSet tri = edge_set_of(k4, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    CHECK(collapses(k4, Partition(4, {{0, 1, 2}, {3}}), tri));
    CHECK(!collapses(k4, Partition(4, {{0, 1}, {2, 3}}), tri));
    CHECK(collapses(k4, Partition::indiscrete(4), k4.full_edge_set()));
}

TEST_CASE("cellules of the picture variety") {
    Graph k4 = Graph::complete(4);
    CHECK(cellule_in_picture_variety(k4, Partition::discrete(4)));
    CHECK(!cellule_in_picture_variety(k4, Partition::indiscrete(4)));
    // Collapsing only a proper subgraph of the circuit is harmless.
    CHECK(cellule_in_picture_variety(k4, Partition(4, {{0, 1, 2}, {3}})));

    // No circuits in the 4-gon, so every cellule qualifies.
    Graph gon = Graph::polygon(4);
    for (auto& a : Partition::all(4))
        CHECK(cellule_in_picture_variety(gon, a));
}

TEST_CASE("closure order is a partial order") {
    for (const Graph& g : {Graph::complete(4), Graph::polygon(4)}) {
        auto parts = Partition::all(g.vertex_count());
        for (auto& a : parts) CHECK(closure_contains(g, a, a));
        for (auto& a : parts)
            for (auto& b : parts) {
                bool ab = closure_contains(g, a, b);
                if (ab && closure_contains(g, b, a)) CHECK(a == b);
                if (!ab) continue;
                for (auto& c : parts)
                    if (closure_contains(g, b, c))
                        CHECK(closure_contains(g, a, c));
            }
    }
}

TEST_CASE("closure test agrees with the circuit-based form") {
    for (const Graph& g :
         {Graph::complete(4), Graph::polygon(4), Graph::wheel(4),
          henneberg_k4(), parse_graph("1 2\n2 3\n3 4")}) {
        auto parts = Partition::all(g.vertex_count());
        for (auto& a : parts)
            for (auto& b : parts)
                CHECK(closure_contains(g, a, b) ==
                      closure_contains_via_circuits(g, a, b));
    }
}

TEST_CASE("closure examples") {
    Graph k4 = Graph::complete(4);
    Partition d = Partition::discrete(4);
    Partition i = Partition::indiscrete(4);
    // The totally collapsed cellule is not a degeneration of generic
    // pictures: the quotient K4 is a multigraph pseudocircuit.
    CHECK(!closure_contains(k4, d, i));
    CHECK(closure_contains(k4, d, Partition(4, {{0, 1, 2}, {3}})));
    CHECK(!closure_contains(k4, i, d));  // not a refinement

    Graph gon = Graph::polygon(4);
    CHECK(closure_contains(gon, Partition::discrete(4),
                           Partition::indiscrete(4)));
}

TEST_CASE("irreducible components of K4") {
    ComponentReport rep = irreducible_components(Graph::complete(4));
    REQUIRE(rep.components.size() == 2);
    CHECK(rep.components[0].first == Partition::discrete(4));
    CHECK(rep.components[0].second == 8);
    CHECK(rep.components[1].first == Partition::indiscrete(4));
    CHECK(rep.components[1].second == 8);
    CHECK(rep.contains_picture_variety);
}

TEST_CASE("irreducible components of independent graphs") {
    ComponentReport gon = irreducible_components(Graph::polygon(4));
    REQUIRE(gon.components.size() == 1);
    CHECK(gon.components[0].first == Partition::discrete(4));
    CHECK(gon.components[0].second == 8);
    CHECK(gon.contains_picture_variety);

    ComponentReport path = irreducible_components(Graph::path(4));
    REQUIRE(path.components.size() == 1);
    CHECK(path.components[0].first == Partition::discrete(4));
}

TEST_CASE("components are maximal and incomparable") {
    for (const Graph& g : {Graph::wheel(4), henneberg_k4()}) {
        ComponentReport rep = irreducible_components(g);
        int n = g.vertex_count();
        for (auto& [a, dim] : rep.components) {
            CHECK(cellule(g, a).dimension == dim);
            for (auto& b : Partition::all(n))
                if (!(b == a) && closure_contains(g, b, a))
                    CHECK(!closure_contains(g, a, b));
        }
        for (auto& [a, da] : rep.components)
            for (auto& [b, db] : rep.components)
                if (!(a == b)) CHECK(!closure_contains(g, a, b));
        CHECK(rep.contains_picture_variety);
    }
}

TEST_CASE("disconnected graphs combine componentwise") {
    // K4 plus a disjoint edge.
    Graph g = parse_graph(
        "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n5 6");
    ComponentReport rep = irreducible_components(g);
    REQUIRE(rep.components.size() == 2);
    for (auto& [a, dim] : rep.components) {
        CHECK(dim == 12);
        CHECK(cellule(g, a).dimension == dim);
        // 5 and 6 stay separate in every component.
        CHECK(!a.same_block(g.vertex_index("5"), g.vertex_index("6")));
    }
    CHECK(rep.contains_picture_variety);
}

TEST_CASE("Cohen-Macaulay certificate") {
    CHECK(cm_certificate(Graph::polygon(4)));
    CHECK(cm_certificate(Graph::path(5)));
    CHECK(!cm_certificate(Graph::complete(4)));
    CHECK(!cm_certificate(henneberg_k4()));
}
