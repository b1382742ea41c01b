#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "picspace/rigidity.hpp"
#include "test_graphs.hpp"

using namespace picspace;

TEST_CASE("laman independence on the named examples") {
    CHECK(laman_independent(Graph::polygon(4)));
    CHECK(!laman_independent(Graph::complete(4)));  // 6 > 2*4-3

    // Removing edge 35 still leaves the K4 on {1,2,3,4}.
    Graph hk4 = henneberg_k4();
    EdgeSet f = hk4.full_edge_set() & ~edge_set_of(hk4, {{"3", "5"}});
    CHECK(!laman_independent_exhaustive(hk4, f));
    CHECK(!laman_independent(hk4, f));
}

TEST_CASE("pebble game agrees with exhaustive oracle") {
    // All subgraphs of K6 and a random sample from K7.
    Graph k6 = Graph::complete(6);
    for (EdgeSet f = 0; f < (EdgeSet{1} << 15); ++f)
        if (laman_independent(k6, f) != laman_independent_exhaustive(k6, f))
            FAIL("disagreement on K6 subset ", f);

    Graph k7 = Graph::complete(7);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        EdgeSet f = rng() & k7.full_edge_set();
        CHECK(laman_independent(k7, f) ==
              laman_independent_exhaustive(k7, f));
    }
}

TEST_CASE("rigidity rank") {
    CHECK(rigidity_rank(Graph::complete(4)) == 5);
    CHECK(rigidity_rank(Graph::complete(2)) == 1);
    CHECK(rigidity_rank(Graph::wheel(4)) == 7);

    // Rank by exhaustive maximum independent subset, W4.
    Graph w4 = Graph::wheel(4);
    int best = 0;
    for (EdgeSet f = 0; f < (EdgeSet{1} << w4.edge_count()); ++f)
        if (laman_independent_exhaustive(w4, f))
            best = std::max(best, std::popcount(f));
    CHECK(best == 7);
}

TEST_CASE("rank is monotone and submodular on sampled K6 pairs") {
    Graph k6 = Graph::complete(6);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        EdgeSet b = rng() & k6.full_edge_set();
        EdgeSet a = rng() & b;
        int ra = rigidity_rank(k6, a), rb = rigidity_rank(k6, b);
        CHECK(ra <= rb);
        // Submodularity: r(a + e) - r(a) >= r(b + e) - r(b) for a <= b.
        for (int e = 0; e < k6.edge_count(); ++e) {
            if (b & edge_bit(e)) continue;
            CHECK(rigidity_rank(k6, a | edge_bit(e)) - ra >=
                  rigidity_rank(k6, b | edge_bit(e)) - rb);
        }
    }
}

TEST_CASE("is_rigid") {
    CHECK(!is_rigid(Graph::polygon(4)));
    Graph braced = parse_graph("1 2\n2 3\n3 4\n4 1\n2 4");
    CHECK(is_rigid(braced));
    CHECK(is_rigid(Graph::complete(4)));
}

TEST_CASE("rigidity report") {
    Graph k4 = Graph::complete(4);
    RigidityReport rep = rigidity_report(k4, k4.full_edge_set());
    CHECK(!rep.independent);
    CHECK(rep.rank == 5);
    CHECK(rep.rigid);
    REQUIRE(rep.violating_set.has_value());
    int nv = std::popcount(k4.vertex_support(*rep.violating_set));
    CHECK(std::popcount(*rep.violating_set) > 2 * nv - 3);

    Graph gon = Graph::polygon(4);
    RigidityReport rep2 = rigidity_report(gon, gon.full_edge_set());
    CHECK(rep2.independent);
    CHECK(!rep2.violating_set.has_value());
}

TEST_CASE("rigidity circuits: wheels yes, extended K4 no") {
    CHECK(is_rigidity_circuit(Graph::complete(4)));
    CHECK(is_rigidity_circuit(Graph::wheel(4)));
    CHECK(is_rigidity_circuit(Graph::wheel(5)));
    CHECK(!is_rigidity_circuit(henneberg_k4()));
    CHECK(!is_rigidity_circuit(Graph::polygon(4)));
}

TEST_CASE("circuit enumeration in K5") {
    Graph k5 = Graph::complete(5);
    std::vector<EdgeSet> circuits = rigidity_circuits(k5);
    CHECK(circuits.size() == 20);

    int k4_count = 0, w4_count = 0;
    for (EdgeSet c : circuits) {
        int nv = std::popcount(k5.vertex_support(c));
        int ne = std::popcount(c);
        CHECK(ne == 2 * nv - 2);
        for (int e : k5.edge_list(c))
            CHECK(laman_independent(k5, c & ~edge_bit(e)));
        if (nv == 4 && ne == 6)
            ++k4_count;
        else if (nv == 5 && ne == 8)
            ++w4_count;
    }
    CHECK(k4_count == 5);
    CHECK(w4_count == 15);

    CHECK(rigidity_circuits(Graph::polygon(4)).empty());
    CHECK(rigidity_circuits(Graph::complete(4)).size() == 1);
}

TEST_CASE("fundamental-circuit strategy agrees on what it finds") {
    // Above 16 edges the enumerator switches to fundamental circuits;
    // force the small strategy's graph through the large-path code by
    // checking each reported set really is a circuit.
    Graph k7 = Graph::complete(7);
    std::vector<EdgeSet> circuits = rigidity_circuits(k7);
    CHECK(!circuits.empty());
    for (EdgeSet c : circuits) CHECK(is_rigidity_circuit(k7, c));
}

TEST_CASE("pseudocircuit detection") {
    Graph hk4 = henneberg_k4();
    auto dec = is_pseudocircuit(hk4);
    REQUIRE(dec.has_value());
    EdgeSet all = hk4.full_edge_set();
    VertexSet sup = hk4.vertex_support(all);
    CHECK((dec->tree_a | dec->tree_b) == all);
    CHECK((dec->tree_a & dec->tree_b) == 0);
    CHECK(hk4.is_spanning_tree_of(dec->tree_a, sup));
    CHECK(hk4.is_spanning_tree_of(dec->tree_b, sup));
    // The displayed decomposition is among the witnesses.
    EdgeSet t1 = edge_set_of(
        hk4, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}});
    CHECK(hk4.is_spanning_tree_of(t1, sup));
    CHECK(hk4.is_spanning_tree_of(all & ~t1, sup));

    CHECK(is_pseudocircuit(Graph::complete(4)).has_value());
    CHECK(!is_pseudocircuit(Graph::polygon(4)).has_value());
}

TEST_CASE("every rigidity circuit is a pseudocircuit") {
    Graph k5 = Graph::complete(5);
    for (EdgeSet c : rigidity_circuits(k5))
        CHECK(is_pseudocircuit(k5, c).has_value());
    for (int r = 3; r <= 6; ++r)
        CHECK(is_pseudocircuit(Graph::wheel(r)).has_value());
}

TEST_CASE("coupled spanning trees") {
    Graph k4 = Graph::complete(4);
    std::vector<EdgeSet> cpl = coupled_spanning_trees(k4);
    CHECK(cpl.size() == 12);  // the Hamiltonian paths
    std::set<EdgeSet> cpl_set(cpl.begin(), cpl.end());
    for (EdgeSet t : cpl) {
        CHECK(cpl_set.count(k4.full_edge_set() & ~t));
        // Hamiltonian path: degrees are 1,1,2,2.
        std::multiset<int> degs;
        for (int v = 0; v < 4; ++v) degs.insert(k4.valence(t, v));
        CHECK(degs == std::multiset<int>{1, 1, 2, 2});
    }
    // Stars are spanning trees but not coupled.
    EdgeSet star = edge_set_of(k4, {{"1", "2"}, {"1", "3"}, {"1", "4"}});
    CHECK(k4.is_spanning_tree(star));
    CHECK(!cpl_set.count(star));

    CHECK(coupled_spanning_trees(henneberg_k4()).size() == 24);
}

TEST_CASE("multigraph pseudocircuits") {
    Multigraph double_edge({"a", "b"}, {{{0, 1}, 2}});
    CHECK(is_multigraph_pseudocircuit(double_edge));

    Multigraph single({"a", "b"}, {{{0, 1}, 1}});
    CHECK(!is_multigraph_pseudocircuit(single));

    auto [k4q, dropped] = quotient(Graph::complete(4), Partition::discrete(4));
    CHECK(is_multigraph_pseudocircuit(k4q));

    // Triple edge: 3 > 2*2-2.
    Multigraph triple({"a", "b"}, {{{0, 1}, 3}});
    CHECK(!is_multigraph_pseudocircuit(triple));
}

TEST_CASE("two disjoint spanning trees (Tutte/Nash-Williams)") {
    Multigraph double_edge({"a", "b"}, {{{0, 1}, 2}});
    CHECK(has_two_disjoint_spanning_trees(double_edge, 0b11));
    Multigraph single({"a", "b"}, {{{0, 1}, 1}});
    CHECK(!has_two_disjoint_spanning_trees(single, 0b11));

    auto [k4q, d0] = quotient(Graph::complete(4), Partition::discrete(4));
    CHECK(has_two_disjoint_spanning_trees(k4q, 0b1111));
    auto [c4q, d1] = quotient(Graph::polygon(4), Partition::discrete(4));
    CHECK(!has_two_disjoint_spanning_trees(c4q, 0b1111));
}
