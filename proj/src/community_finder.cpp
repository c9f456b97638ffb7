#include "mlcpm/community_finder.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "mlcpm/errors.hpp"

namespace mlcpm {

namespace {

/// Enumeration of maximal communities from one seed clique. A grows along
/// tree paths of the adjacency graph; candidates are re-filtered against the
/// shrinking common layer set at every step.
///
/// D (processed cliques) is copied into each activation: additions made
/// while expanding one branch apply to later branches of the same loop and
/// to their subtrees, never to the caller. A single D shared across the
/// whole recursion would suppress communities that legitimately reuse a
/// clique in a different combination.
struct CommunitySearch {
    const CliqueAdjacencyGraph& graph;
    std::size_t m_min;
    std::size_t cap; // emissions per seed, 0 = unlimited
    CliqueId seed = 0;
    std::size_t emitted = 0;
    std::vector<Community>* out;
    std::vector<CliqueId> a; // insertion order, sorted on emission

    std::size_t layer_width(CliqueId c) const { return graph.clique(c).layers.count(); }

    void run(const LayerSet& layers_a, const std::vector<CliqueId>& b_set,
             const std::vector<CliqueId>& c_set, std::vector<char> d) {
        std::size_t width = layers_a.count();
        // Maximal iff no extension clique preserves the common layer set.
        // Extension sets are intersections with layers_a, so preservation is
        // count equality.
        auto preserves = [&](CliqueId x) {
            return (layers_a & graph.clique(x).layers).count() == width;
        };
        // A processed clique that preserves layers_a also preserves every
        // descendant layer set (they are subsets of layers_a), clears the
        // candidate filter (every activation keeps at least m layers), and
        // stays processed, so it blocks the guard in the whole subtree.
        if (std::any_of(c_set.begin(), c_set.end(), preserves)) {
            return;
        }
        if (!a.empty() && std::none_of(b_set.begin(), b_set.end(), preserves)) {
            if (cap > 0 && emitted >= cap) {
                throw CapacityError("community budget of " + std::to_string(cap) +
                                    " exhausted for seed clique " + std::to_string(seed));
            }
            ++emitted;
            Community community;
            community.cliques = a;
            std::sort(community.cliques.begin(), community.cliques.end());
            community.shared_layers = layers_a;
            out->push_back(std::move(community));
        }

        std::vector<char> in_a(graph.clique_count(), 0);
        for (CliqueId x : a) {
            in_a[x] = 1;
        }

        for (CliqueId b : b_set) {
            a.push_back(b);
            LayerSet layers_next = layers_a & graph.clique(b).layers;

            auto admits = [&](CliqueId x) {
                return (layers_next & graph.clique(x).layers).count() >= m_min;
            };

            std::vector<CliqueId> child_b;
            std::vector<CliqueId> child_c;
            std::vector<char> routed(graph.clique_count(), 0);
            auto route = [&](CliqueId x) {
                if (x == b || in_a[x] || routed[x] || !admits(x)) {
                    return;
                }
                routed[x] = 1;
                (d[x] ? child_c : child_b).push_back(x);
            };
            // Candidate sources: remaining B entries, the frontier opened by
            // b, and surviving C entries. The same clique can arrive from
            // several sources, hence the routed mask.
            for (CliqueId x : b_set) {
                route(x);
            }
            for (CliqueId x : graph.neighbors(b)) {
                route(x);
            }
            for (CliqueId x : c_set) {
                if (!routed[x] && admits(x)) {
                    routed[x] = 1;
                    child_c.push_back(x);
                }
            }

            run(layers_next, child_b, child_c, d);
            a.pop_back();
            d[b] = 1;
        }
    }
};

} // namespace

CommunitySet find_communities(const CliqueAdjacencyGraph& graph, int m_min,
                              const CommunityFinderOptions& options) {
    if (m_min < 1) {
        throw InvalidArgument("m must be at least 1, got " + std::to_string(m_min));
    }

    CommunitySet result;
    result.cliques = graph.cliques();
    result.provenance = graph.rule();

    std::vector<Community> raw;
    std::vector<char> d(graph.clique_count(), 0);
    for (CliqueId c = 0; c < graph.clique_count(); ++c) {
        // A seed narrower than the threshold cannot join any community:
        // every common layer set through it is a subset of its own.
        if (graph.clique(c).layers.count() >= static_cast<std::size_t>(m_min)) {
            CommunitySearch search{graph, static_cast<std::size_t>(m_min),
                                   options.max_communities_per_seed, c, 0, &raw, {}};
            // With A empty the identity layer set only has to absorb the
            // first intersection, so the seed's own layers serve as it.
            search.run(graph.clique(c).layers, {c}, {}, d);
        }
        d[c] = 1;
    }

    // The recursion is believed duplicate-free; this pass backstops it and
    // reports how much it had to remove.
    std::unordered_set<std::string> seen;
    for (Community& community : raw) {
        std::string key(reinterpret_cast<const char*>(community.cliques.data()),
                        community.cliques.size() * sizeof(CliqueId));
        if (seen.insert(std::move(key)).second) {
            community.nodes = community_nodes(graph, community);
            result.communities.push_back(std::move(community));
        } else {
            ++result.duplicate_emissions;
        }
    }
    return result;
}

LayerSet community_layers(const CliqueAdjacencyGraph& graph, const Community& c) {
    LayerSet acc;
    bool first = true;
    for (CliqueId id : c.cliques) {
        if (first) {
            acc = graph.clique(id).layers;
            first = false;
        } else {
            acc.intersect(graph.clique(id).layers);
        }
    }
    return acc;
}

std::vector<NodeIndex> community_nodes(const CliqueAdjacencyGraph& graph, const Community& c) {
    std::vector<NodeIndex> nodes;
    for (CliqueId id : c.cliques) {
        const auto& member = graph.clique(id).nodes;
        nodes.insert(nodes.end(), member.begin(), member.end());
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

CommunitySet detect(const MultiplexNetwork& net, int k, int m, OverlapRule rule,
                    const CommunityFinderOptions& options) {
    CliqueQuery query{k, m};
    query.validate();
    std::vector<Clique> cliques = find_max_cliques(net, query);
    AdjacencyRule adjacency{k, m, rule};
    CliqueAdjacencyGraph graph = build_clique_adjacency(std::move(cliques), adjacency);
    CommunitySet result = find_communities(graph, m, options);
    sort_communities(net, result);
    return result;
}

void sort_communities(const MultiplexNetwork& net, CommunitySet& result) {
    struct Key {
        std::vector<std::string> node_names;
        std::vector<std::string> layer_names;
        std::size_t index;
    };
    std::vector<Key> keys;
    keys.reserve(result.communities.size());
    for (std::size_t i = 0; i < result.communities.size(); ++i) {
        Key key;
        key.index = i;
        for (NodeIndex v : result.communities[i].nodes) {
            key.node_names.push_back(net.node_name(v));
        }
        std::sort(key.node_names.begin(), key.node_names.end());
        for (LayerIndex l : result.communities[i].shared_layers.indices()) {
            key.layer_names.push_back(net.layer_name(l));
        }
        std::sort(key.layer_names.begin(), key.layer_names.end());
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end(), [&](const Key& x, const Key& y) {
        if (x.node_names.size() != y.node_names.size()) {
            return x.node_names.size() > y.node_names.size();
        }
        if (x.node_names != y.node_names) {
            return x.node_names < y.node_names;
        }
        if (x.layer_names != y.layer_names) {
            return x.layer_names < y.layer_names;
        }
        return result.communities[x.index].cliques < result.communities[y.index].cliques;
    });
    std::vector<Community> ordered;
    ordered.reserve(result.communities.size());
    for (const Key& key : keys) {
        ordered.push_back(std::move(result.communities[key.index]));
    }
    result.communities = std::move(ordered);
}

} // namespace mlcpm
