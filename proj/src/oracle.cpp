#include "mlcpm/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "mlcpm/errors.hpp"

namespace mlcpm::oracle {

namespace {

void check_node_budget(const MultiplexNetwork& net) {
    if (net.node_count() > kMaxNodes) {
        throw CapacityError("oracle handles at most " + std::to_string(kMaxNodes) +
                            " nodes, got " + std::to_string(net.node_count()));
    }
}

/// L(subset) for every node-subset mask, by one-bit extension:
/// L(S ∪ {v}) = L(S) ∩ ⋂_{u ∈ S} L_uv.
std::vector<LayerSet> layer_table(const MultiplexNetwork& net) {
    std::size_t n = net.node_count();
    std::vector<LayerSet> table(std::size_t{1} << n);
    table[0] = net.full_layer_set();
    for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t rest = mask ^ low;
        auto v = static_cast<NodeIndex>(std::countr_zero(low));
        LayerSet l = table[rest];
        for (std::uint32_t r = rest; r; r &= r - 1) {
            l.intersect(net.pair_layers(static_cast<NodeIndex>(std::countr_zero(r)), v));
        }
        table[mask] = std::move(l);
    }
    return table;
}

std::vector<NodeIndex> mask_nodes(std::uint32_t mask) {
    std::vector<NodeIndex> nodes;
    for (std::uint32_t r = mask; r; r &= r - 1) {
        nodes.push_back(static_cast<NodeIndex>(std::countr_zero(r)));
    }
    return nodes;
}

} // namespace

std::vector<Clique> max_cliques(const MultiplexNetwork& net, int k_min, int m_min) {
    CliqueQuery{k_min, m_min}.validate();
    check_node_budget(net);
    std::size_t n = net.node_count();
    std::vector<LayerSet> table = layer_table(net);

    std::vector<Clique> out;
    for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
        if (std::popcount(mask) < k_min) {
            continue;
        }
        std::size_t width = table[mask].count();
        if (width < static_cast<std::size_t>(m_min)) {
            continue;
        }
        bool maximal = true;
        for (NodeIndex v = 0; v < n && maximal; ++v) {
            std::uint32_t bit = std::uint32_t{1} << v;
            if (!(mask & bit) && table[mask | bit].count() == width) {
                maximal = false;
            }
        }
        if (maximal) {
            out.push_back(Clique{mask_nodes(mask), table[mask], 0});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Clique& a, const Clique& b) { return a.nodes < b.nodes; });
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].id = static_cast<CliqueId>(i);
    }
    return out;
}

CommunitySet communities(const MultiplexNetwork& net, int k, int m, OverlapRule rule) {
    std::vector<Clique> cliques = max_cliques(net, k, m);
    if (cliques.size() > kMaxCliques) {
        throw CapacityError("oracle handles at most " + std::to_string(kMaxCliques) +
                            " cliques, got " + std::to_string(cliques.size()));
    }
    std::size_t n = cliques.size();

    // Self-contained adjacency: shared-node count against the rule's
    // threshold plus m common layers, written out directly.
    std::size_t threshold = static_cast<std::size_t>(rule == OverlapRule::k ? k : k - 1);
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t shared = 0;
            for (NodeIndex v : cliques[i].nodes) {
                shared += std::count(cliques[j].nodes.begin(), cliques[j].nodes.end(), v);
            }
            if (shared >= threshold &&
                (cliques[i].layers & cliques[j].layers).count() >= static_cast<std::size_t>(m)) {
                adj[i] |= std::uint32_t{1} << j;
                adj[j] |= std::uint32_t{1} << i;
            }
        }
    }

    auto connected = [&](std::uint32_t mask) {
        std::uint32_t start = mask & (~mask + 1);
        std::uint32_t reach = start;
        while (true) {
            std::uint32_t next = reach;
            for (std::uint32_t r = reach; r; r &= r - 1) {
                next |= adj[std::countr_zero(r)] & mask;
            }
            if (next == reach) {
                return next == mask;
            }
            reach = next;
        }
    };

    CommunitySet result;
    result.cliques = cliques;
    result.provenance = AdjacencyRule{k, m, rule};

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        LayerSet shared;
        bool first = true;
        for (std::uint32_t r = mask; r; r &= r - 1) {
            const LayerSet& l = cliques[std::countr_zero(r)].layers;
            if (first) {
                shared = l;
                first = false;
            } else {
                shared.intersect(l);
            }
        }
        std::size_t width = shared.count();
        if (width < static_cast<std::size_t>(m) || !connected(mask)) {
            continue;
        }
        bool maximal = true;
        for (std::size_t x = 0; x < n && maximal; ++x) {
            std::uint32_t bit = std::uint32_t{1} << x;
            if ((mask & bit) || !(adj[x] & mask)) {
                continue; // already in, or not adjacent to any member
            }
            if ((shared & cliques[x].layers).count() == width) {
                maximal = false;
            }
        }
        if (!maximal) {
            continue;
        }
        Community community;
        for (std::uint32_t r = mask; r; r &= r - 1) {
            community.cliques.push_back(static_cast<CliqueId>(std::countr_zero(r)));
        }
        community.shared_layers = shared;
        std::vector<NodeIndex> nodes;
        for (CliqueId id : community.cliques) {
            nodes.insert(nodes.end(), cliques[id].nodes.begin(), cliques[id].nodes.end());
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        community.nodes = std::move(nodes);
        result.communities.push_back(std::move(community));
    }
    return result;
}

std::vector<std::vector<NodeIndex>> classic_cpm(const MultiplexNetwork& net, int k) {
    if (net.layer_count() != 1) {
        throw InvalidArgument("classic percolation needs a single-layer network");
    }
    if (k < 2) {
        throw InvalidArgument("k must be at least 2, got " + std::to_string(k));
    }
    check_node_budget(net);
    std::size_t n = net.node_count();

    // Every k-node clique of the single layer.
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        std::vector<NodeIndex> nodes = mask_nodes(mask);
        bool ok = true;
        for (std::size_t i = 0; i < nodes.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < nodes.size() && ok; ++j) {
                ok = !net.pair_layers(nodes[i], nodes[j]).empty();
            }
        }
        if (ok) {
            cliques.push_back(mask);
        }
    }

    // Percolation classes: cliques sharing k-1 nodes connect.
    std::vector<std::size_t> parent(cliques.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (std::popcount(cliques[i] & cliques[j]) >= k - 1) {
                parent[find(i)] = find(j);
            }
        }
    }

    std::vector<std::vector<NodeIndex>> out;
    std::vector<std::uint32_t> class_mask;
    std::vector<std::size_t> root_slot(cliques.size(), SIZE_MAX);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        std::size_t root = find(i);
        if (root_slot[root] == SIZE_MAX) {
            root_slot[root] = class_mask.size();
            class_mask.push_back(0);
        }
        class_mask[root_slot[root]] |= cliques[i];
    }
    out.reserve(class_mask.size());
    for (std::uint32_t mask : class_mask) {
        out.push_back(mask_nodes(mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiplexNetwork project_layer(const MultiplexNetwork& net, LayerIndex l) {
    if (l >= net.layer_count()) {
        throw InvalidArgument("layer index out of range");
    }
    MultiplexNetworkBuilder builder;
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        builder.add_node(net.node_name(v));
    }
    LayerIndex projected = builder.add_layer(net.layer_name(l));
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        for (NodeIndex u : net.layer_neighbors(l, v)) {
            if (v < u) {
                builder.add_edge(v, u, projected);
            }
        }
    }
    builder.set_source(net.source().name + "#" + net.layer_name(l), "");
    return builder.build();
}

MultiplexNetwork generate(const GeneratorSpec& spec) {
    if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
        throw InvalidArgument("edge probability must be in [0, 1]");
    }
    MultiplexNetworkBuilder builder(std::max<std::size_t>(spec.layer_count, 64));
    for (std::size_t v = 0; v < spec.node_count; ++v) {
        builder.add_node("n" + std::to_string(v));
    }
    for (std::size_t l = 0; l < spec.layer_count; ++l) {
        builder.add_layer("L" + std::to_string(l));
    }

    // One 32-bit draw per (layer, pair), layer-major then pair-lexicographic.
    // The engine is standard-specified, so the sequence is portable.
    std::mt19937 rng(static_cast<std::mt19937::result_type>(spec.seed));
    auto threshold =
        static_cast<std::uint64_t>(spec.edge_probability * 4294967296.0); // p * 2^32
    for (std::size_t l = 0; l < spec.layer_count; ++l) {
        for (std::size_t a = 0; a < spec.node_count; ++a) {
            for (std::size_t b = a + 1; b < spec.node_count; ++b) {
                std::uint64_t draw = rng() & 0xffffffffu;
                if (draw < threshold) {
                    builder.add_edge(static_cast<NodeIndex>(a), static_cast<NodeIndex>(b),
                                     static_cast<LayerIndex>(l));
                }
            }
        }
    }
    builder.set_source("generated(n=" + std::to_string(spec.node_count) +
                           ",l=" + std::to_string(spec.layer_count) +
                           ",p=" + std::to_string(spec.edge_probability) +
                           ",seed=" + std::to_string(spec.seed) + ")",
                       "");
    return builder.build();
}

MultiplexNetwork relabel(const MultiplexNetwork& net, std::span<const NodeIndex> perm) {
    if (perm.size() != net.node_count()) {
        throw InvalidArgument("permutation size does not match node count");
    }
    std::vector<std::string> new_names(net.node_count());
    std::vector<char> seen(net.node_count(), 0);
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        if (perm[v] >= net.node_count() || seen[perm[v]]) {
            throw InvalidArgument("not a permutation");
        }
        seen[perm[v]] = 1;
        new_names[perm[v]] = net.node_name(v);
    }

    MultiplexNetworkBuilder builder(std::max<std::size_t>(net.layer_count(), 64));
    for (const std::string& name : new_names) {
        builder.add_node(name);
    }
    for (LayerIndex l = 0; l < net.layer_count(); ++l) {
        builder.add_layer(net.layer_name(l));
    }
    for (NodeIndex a = 0; a < net.node_count(); ++a) {
        for (NodeIndex b : net.neighbors(a)) {
            if (a < b) {
                for (LayerIndex l : net.pair_layers(a, b).indices()) {
                    builder.add_edge(perm[a], perm[b], l);
                }
            }
        }
    }
    builder.set_source(net.source().name, net.source().digest);
    return builder.build();
}

} // namespace mlcpm::oracle
