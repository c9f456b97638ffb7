#include <doctest.h>

#include <vector>

#include "mlcpm/errors.hpp"
#include "mlcpm/multiplex_network.hpp"
#include "support.hpp"

using namespace mlcpm;

TEST_CASE("builder interns names once") {
    MultiplexNetworkBuilder b;
    NodeIndex a1 = b.add_node("a");
    NodeIndex a2 = b.add_node("a");
    CHECK(a1 == a2);
    CHECK(b.add_node("b") == 1);
    LayerIndex l1 = b.add_layer("L");
    CHECK(b.add_layer("L") == l1);
    MultiplexNetwork net = b.build();
    CHECK(net.node_count() == 2);
    CHECK(net.layer_count() == 1);
    CHECK(net.find_node("a") == NodeIndex{0});
    CHECK(net.find_node("missing") == std::nullopt);
    CHECK(net.find_layer("L") == LayerIndex{0});
    CHECK(net.find_layer("M") == std::nullopt);
}

TEST_CASE("builder rejects self-loops and unknown indices") {
    MultiplexNetworkBuilder b;
    NodeIndex a = b.add_node("a");
    b.add_node("b");
    LayerIndex l = b.add_layer("L");
    CHECK_THROWS_AS(b.add_edge(a, a, l), InvalidArgument);
    CHECK_THROWS_AS(b.add_edge(a, 7, l), InvalidArgument);
    CHECK_THROWS_AS(b.add_edge(a, 1, 3), InvalidArgument);
}

TEST_CASE("layer limit guards the builder") {
    MultiplexNetworkBuilder narrow(2);
    narrow.add_layer("L0");
    narrow.add_layer("L1");
    CHECK_THROWS_AS(narrow.add_layer("L2"), CapacityError);
    narrow.add_layer("L1"); // known names stay fine

    MultiplexNetworkBuilder wide(100);
    for (int i = 0; i < 100; ++i) {
        wide.add_layer("L" + std::to_string(i));
    }
    CHECK(wide.build().layer_count() == 100);
}

TEST_CASE("duplicate edges collapse") {
    MultiplexNetworkBuilder b;
    b.add_edge("a", "b", "L");
    b.add_edge("b", "a", "L");
    b.add_edge("a", "b", "L");
    b.add_edge("a", "b", "M");
    MultiplexNetwork net = b.build();
    CHECK(net.edge_count() == 2);
    CHECK(net.pair_count() == 1);
    CHECK(net.layer_edge_count(0) == 1);
    CHECK(net.layer_edge_count(1) == 1);
}

TEST_CASE("pair and clique layer queries") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    NodeIndex a = *net.find_node("a");
    NodeIndex b = *net.find_node("b");
    NodeIndex c = *net.find_node("c");
    NodeIndex d = *net.find_node("d");

    CHECK(net.pair_layers(a, b).count() == 3);
    CHECK(net.pair_layers(b, a).count() == 3);
    CHECK(net.pair_layers(a, d).empty());

    CHECK(net.clique_layers({a, b, c}).count() == 3);
    CHECK(net.clique_layers({b, c, d}).count() == 2);
    CHECK(net.clique_layers({a, b, c, d}).empty());

    // Fewer than two nodes: the intersection identity.
    CHECK(net.clique_layers({}) == net.full_layer_set());
    CHECK(net.clique_layers({a}) == net.full_layer_set());
    CHECK(net.full_layer_set().count() == 3);
}

TEST_CASE("neighbor lists are sorted unions over layers") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    NodeIndex b = *net.find_node("b");
    auto nb = net.neighbors(b);
    std::vector<NodeIndex> got(nb.begin(), nb.end());
    std::vector<NodeIndex> expected{*net.find_node("a"), *net.find_node("c"),
                                    *net.find_node("d"), *net.find_node("e")};
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    LayerIndex l3 = *net.find_layer("L3");
    auto per_layer = net.layer_neighbors(l3, b);
    std::vector<NodeIndex> got3(per_layer.begin(), per_layer.end());
    std::vector<NodeIndex> expected3{*net.find_node("a"), *net.find_node("c"),
                                     *net.find_node("e")};
    std::sort(expected3.begin(), expected3.end());
    CHECK(got3 == expected3);
}

TEST_CASE("fixture networks are internally consistent") {
    CHECK(mlcpm::testing::make_two_layer_walkthrough().consistent());
    CHECK(mlcpm::testing::make_cxy().consistent());
    CHECK(mlcpm::testing::make_nested().consistent());
    CHECK(mlcpm::testing::make_shared_node_chain().consistent());
    CHECK(mlcpm::testing::make_matching_complement().consistent());
}

TEST_CASE("equality is name-level, not index-level") {
    MultiplexNetworkBuilder b1;
    b1.add_edge("x", "y", "L");
    b1.add_edge("y", "z", "M");
    MultiplexNetwork n1 = b1.build();

    // Same content, different interning order.
    MultiplexNetworkBuilder b2;
    b2.add_node("z");
    b2.add_node("y");
    b2.add_node("x");
    b2.add_layer("M");
    b2.add_layer("L");
    b2.add_edge("y", "z", "M");
    b2.add_edge("x", "y", "L");
    MultiplexNetwork n2 = b2.build();
    CHECK(n1 == n2);

    MultiplexNetworkBuilder b3;
    b3.add_edge("x", "y", "L");
    b3.add_edge("y", "z", "L"); // same pair, different layer
    b3.add_layer("M");
    MultiplexNetwork n3 = b3.build();
    CHECK_FALSE(n1 == n3);

    MultiplexNetworkBuilder b4;
    b4.add_edge("x", "y", "L");
    b4.add_edge("y", "w", "M"); // different node name
    MultiplexNetwork n4 = b4.build();
    CHECK_FALSE(n1 == n4);
}

TEST_CASE("isolated nodes survive the build") {
    MultiplexNetworkBuilder b;
    b.add_node("lonely");
    b.add_edge("a", "b", "L");
    MultiplexNetwork net = b.build();
    CHECK(net.node_count() == 3);
    CHECK(net.neighbors(*net.find_node("lonely")).empty());
}
