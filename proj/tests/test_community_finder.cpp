#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "mlcpm/community_finder.hpp"
#include "mlcpm/errors.hpp"
#include "mlcpm/oracle.hpp"
#include "support.hpp"

using namespace mlcpm;

namespace {

using CommunityKey = std::pair<std::vector<CliqueId>, std::vector<LayerIndex>>;

std::set<CommunityKey> keys(const CommunitySet& cs) {
    std::set<CommunityKey> out;
    for (const Community& c : cs.communities) {
        out.insert({c.cliques, c.shared_layers.indices()});
    }
    return out;
}

CommunitySet run(const MultiplexNetwork& net, int k, int m, OverlapRule rule,
                 const CommunityFinderOptions& options = {}) {
    auto cliques = find_max_cliques(net, CliqueQuery{k, m});
    auto graph = build_clique_adjacency(std::move(cliques), AdjacencyRule{k, m, rule});
    return find_communities(graph, m, options);
}

} // namespace

TEST_CASE("overlap witness: one clique in three communities at m=2") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    CommunitySet cs = run(net, 3, 2, OverlapRule::k_minus_1);
    // Clique table sorted by nodes: 0={a,b,c}, 1={b,c,d}, 2={b,c,e}.
    CHECK(keys(cs) == std::set<CommunityKey>{
                          {{0}, {0, 1, 2}},
                          {{0, 1}, {0, 1}},
                          {{0, 2}, {0, 2}},
                      });
    CHECK(cs.duplicate_emissions == 0);

    int containing_clique0 = 0;
    for (const Community& c : cs.communities) {
        containing_clique0 += std::count(c.cliques.begin(), c.cliques.end(), CliqueId{0});
    }
    CHECK(containing_clique0 == 3);
}

TEST_CASE("overlap witness at m=1 adds the all-clique community") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    CommunitySet cs = run(net, 3, 1, OverlapRule::k_minus_1);
    CHECK(keys(cs) == std::set<CommunityKey>{
                          {{0}, {0, 1, 2}},
                          {{0, 1}, {0, 1}},
                          {{0, 2}, {0, 2}},
                          {{0, 1, 2}, {0}},
                      });
    CHECK(cs.duplicate_emissions == 0);
}

TEST_CASE("hierarchy witness: more nodes, fewer layers") {
    MultiplexNetwork net = mlcpm::testing::make_nested();
    CommunitySet cs = run(net, 3, 2, OverlapRule::k_minus_1);
    CHECK(keys(cs) == std::set<CommunityKey>{
                          {{0}, {0, 1, 2}},
                          {{0, 1}, {0, 1}},
                      });

    // The two-clique community strictly extends the node set and strictly
    // shrinks the layer set.
    REQUIRE(cs.communities.size() == 2);
    const Community* small = &cs.communities[0];
    const Community* big = &cs.communities[1];
    if (small->nodes.size() > big->nodes.size()) {
        std::swap(small, big);
    }
    CHECK(small->nodes.size() == 3);
    CHECK(big->nodes.size() == 4);
    CHECK(std::includes(big->nodes.begin(), big->nodes.end(), small->nodes.begin(),
                        small->nodes.end()));
    CHECK(small->shared_layers.contains(big->shared_layers));
    CHECK(small->shared_layers.count() == 3);
    CHECK(big->shared_layers.count() == 2);
}

TEST_CASE("single-layer chain: two communities share one node") {
    MultiplexNetwork net = mlcpm::testing::make_shared_node_chain();
    CommunitySet cs = run(net, 3, 1, OverlapRule::k_minus_1);
    // Clique table: 0={a,b,c}, 1={b,c,d}, 2={d,e,f}.
    CHECK(keys(cs) == std::set<CommunityKey>{
                          {{0, 1}, {0}},
                          {{2}, {0}},
                      });
    REQUIRE(cs.communities.size() == 2);
    std::vector<NodeIndex> shared;
    std::set_intersection(cs.communities[0].nodes.begin(), cs.communities[0].nodes.end(),
                          cs.communities[1].nodes.begin(), cs.communities[1].nodes.end(),
                          std::back_inserter(shared));
    CHECK(shared.size() == 1);
    CHECK(net.node_name(shared[0]) == "d");
}

TEST_CASE("communities match the exhaustive oracle on random networks") {
    for (int i = 0; i < 40; ++i) {
        oracle::GeneratorSpec spec;
        spec.node_count = 5 + i % 6;
        spec.layer_count = 2 + i % 3;
        spec.edge_probability = 0.4 + 0.1 * (i % 4);
        spec.seed = 2500 + static_cast<std::uint64_t>(i);
        MultiplexNetwork net = oracle::generate(spec);
        for (int k : {3, 4}) {
            for (int m : {1, 2}) {
                if (find_max_cliques(net, CliqueQuery{k, m}).size() > oracle::kMaxCliques) {
                    continue;
                }
                for (OverlapRule rule : {OverlapRule::k_minus_1, OverlapRule::k}) {
                    CommunitySet fast = run(net, k, m, rule);
                    CommunitySet slow = oracle::communities(net, k, m, rule);
                    CHECK(keys(fast) == keys(slow));
                    CHECK(fast.duplicate_emissions == 0);
                }
            }
        }
    }
}

TEST_CASE("community fields are consistent with their recomputation") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    auto cliques = find_max_cliques(net, CliqueQuery{3, 1});
    auto graph = build_clique_adjacency(std::move(cliques), AdjacencyRule{3, 1});
    CommunitySet cs = find_communities(graph, 1);
    for (const Community& c : cs.communities) {
        CHECK(c.shared_layers == community_layers(graph, c));
        CHECK(c.nodes == community_nodes(graph, c));
        CHECK(std::is_sorted(c.cliques.begin(), c.cliques.end()));
        CHECK(std::is_sorted(c.nodes.begin(), c.nodes.end()));
    }
    CHECK(cs.provenance == graph.rule());
}

TEST_CASE("a higher community threshold skips narrow seeds") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    auto cliques = find_max_cliques(net, CliqueQuery{3, 1});
    auto graph = build_clique_adjacency(std::move(cliques), AdjacencyRule{3, 1});
    // Only clique 0 = {a,b,c} spans three layers.
    CommunitySet cs = find_communities(graph, 3);
    CHECK(keys(cs) == std::set<CommunityKey>{{{0}, {0, 1, 2}}});
}

TEST_CASE("per-seed budget turns runaway enumeration into an error") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();

    CommunityFinderOptions tight;
    tight.max_communities_per_seed = 2;
    CHECK_THROWS_AS(run(net, 3, 2, OverlapRule::k_minus_1, tight), CapacityError);

    CommunityFinderOptions enough;
    enough.max_communities_per_seed = 3;
    CHECK(run(net, 3, 2, OverlapRule::k_minus_1, enough).communities.size() == 3);

    CommunityFinderOptions off;
    off.max_communities_per_seed = 0;
    CHECK(run(net, 3, 2, OverlapRule::k_minus_1, off).communities.size() == 3);
}

TEST_CASE("threshold validation") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    auto graph = build_clique_adjacency(find_max_cliques(net, CliqueQuery{3, 1}),
                                        AdjacencyRule{3, 1});
    CHECK_THROWS_AS(find_communities(graph, 0), InvalidArgument);
    CHECK_THROWS_AS(detect(net, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(detect(net, 3, 0), InvalidArgument);
}

TEST_CASE("detect sorts communities for reporting") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    CommunitySet cs = detect(net, 3, 1, OverlapRule::k_minus_1);
    REQUIRE(cs.communities.size() == 4);
    // Size-descending first: the four-node communities precede {a,b,c}.
    CHECK(cs.communities[0].nodes.size() == 5); // {a,b,c,d,e} on L1
    CHECK(cs.communities[1].nodes.size() == 4);
    CHECK(cs.communities[2].nodes.size() == 4);
    CHECK(cs.communities[3].nodes.size() == 3);

    // Ties broken by node names: {a,b,c,d} before {a,b,c,e}.
    CHECK(net.node_name(cs.communities[1].nodes.back()) == "d");
    CHECK(net.node_name(cs.communities[2].nodes.back()) == "e");
}

TEST_CASE("empty clique set yields no communities") {
    MultiplexNetwork net = mlcpm::testing::make_cxy();
    CommunitySet cs = detect(net, 5, 1);
    CHECK(cs.communities.empty());
    CHECK(cs.cliques.empty());
}
