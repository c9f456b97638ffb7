#include "mlcpm/clique_finder.hpp"

#include <algorithm>
#include <string>

#include "mlcpm/errors.hpp"

namespace mlcpm {

void CliqueQuery::validate() const {
    if (k_min < 2) {
        throw InvalidArgument("k must be at least 2, got " + std::to_string(k_min));
    }
    if (m_min < 1) {
        throw InvalidArgument("m must be at least 1, got " + std::to_string(m_min));
    }
}

namespace {

/// Extension node together with L(A ∪ {node}) for the current clique A.
/// Carrying the layer set down the recursion turns every filter and guard
/// into one intersection or one popcount.
struct Ext {
    NodeIndex node;
    LayerSet layers;
};

struct Search {
    const MultiplexNetwork& net;
    const CliqueQuery& query;
    const std::function<void(std::span<const NodeIndex>, const LayerSet&)>& emit;
    std::vector<NodeIndex> clique; // A, ascending

    /// B: nodes that may still start an unexplored extension of A.
    /// C: nodes whose extensions of A were fully explored earlier; they only
    /// veto maximality and prune.
    void run(const LayerSet& layers_a, const std::vector<Ext>& b_set,
             const std::vector<Ext>& c_set) {
        // A is maximal iff it is big enough and no extension node keeps its
        // layer set intact. Extension layer sets are subsets of L(A), so the
        // max over B and C reaches |L(A)| exactly when some count matches.
        if (clique.size() >= static_cast<std::size_t>(query.k_min)) {
            std::size_t width = layers_a.count();
            auto preserves = [width](const Ext& e) { return e.layers.count() == width; };
            if (std::none_of(b_set.begin(), b_set.end(), preserves) &&
                std::none_of(c_set.begin(), c_set.end(), preserves)) {
                emit(clique, layers_a);
            }
        }

        std::size_t m_min = static_cast<std::size_t>(query.m_min);
        for (std::size_t i = 0; i < b_set.size(); ++i) {
            const Ext& b = b_set[i];
            clique.push_back(b.node);

            // L(A ∪ {b, x}) = L(A ∪ {b}) ∩ L(A ∪ {x}) ∩ L_bx.
            auto extend = [&](const Ext& x, std::vector<Ext>& out) {
                LayerSet l = b.layers & x.layers & net.pair_layers(b.node, x.node);
                if (l.count() >= m_min) {
                    out.push_back(Ext{x.node, std::move(l)});
                }
            };

            std::vector<Ext> child_b;
            child_b.reserve(b_set.size() - i - 1);
            for (std::size_t j = i + 1; j < b_set.size(); ++j) {
                extend(b_set[j], child_b);
            }
            std::vector<Ext> child_c;
            child_c.reserve(c_set.size() + i);
            for (const Ext& c : c_set) {
                extend(c, child_c);
            }
            // Earlier loop iterations moved their b into C.
            for (std::size_t j = 0; j < i; ++j) {
                extend(b_set[j], child_c);
            }

            run(b.layers, child_b, child_c);
            clique.pop_back();
        }
    }
};

} // namespace

void for_each_max_clique(
    const MultiplexNetwork& net, const CliqueQuery& query,
    const std::function<void(std::span<const NodeIndex>, const LayerSet&)>& emit) {
    query.validate();

    std::vector<Ext> roots;
    roots.reserve(net.node_count());
    LayerSet full = net.full_layer_set();
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        roots.push_back(Ext{v, full});
    }

    Search search{net, query, emit, {}};
    search.run(full, roots, {});
}

std::vector<Clique> find_max_cliques(const MultiplexNetwork& net, const CliqueQuery& query) {
    std::vector<Clique> out;
    for_each_max_clique(net, query, [&](std::span<const NodeIndex> nodes, const LayerSet& layers) {
        out.push_back(Clique{{nodes.begin(), nodes.end()}, layers, 0});
    });
    std::sort(out.begin(), out.end(),
              [](const Clique& a, const Clique& b) { return a.nodes < b.nodes; });
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].id = static_cast<CliqueId>(i);
    }
    return out;
}

bool is_maximal_clique(const MultiplexNetwork& net, std::span<const NodeIndex> nodes,
                       const CliqueQuery& query) {
    query.validate();
    if (nodes.size() < static_cast<std::size_t>(query.k_min)) {
        return false;
    }
    LayerSet layers = net.clique_layers(nodes);
    std::size_t width = layers.count();
    if (width < static_cast<std::size_t>(query.m_min)) {
        return false;
    }
    // Any extension node is adjacent to every member, in particular the
    // first, so the first member's neighbor list bounds the scan.
    for (NodeIndex v : net.neighbors(nodes[0])) {
        if (std::find(nodes.begin(), nodes.end(), v) != nodes.end()) {
            continue;
        }
        LayerSet extended = layers;
        for (NodeIndex a : nodes) {
            extended.intersect(net.pair_layers(a, v));
        }
        if (extended.count() == width) {
            return false;
        }
    }
    return true;
}

bool is_maximal_clique(const MultiplexNetwork& net, std::initializer_list<NodeIndex> nodes,
                       const CliqueQuery& query) {
    return is_maximal_clique(net, std::span<const NodeIndex>(nodes.begin(), nodes.size()), query);
}

std::vector<NodeIndex> candidate_filter(const MultiplexNetwork& net,
                                        std::span<const NodeIndex> current,
                                        std::span<const NodeIndex> pool, int m_min) {
    LayerSet base = net.clique_layers(current);
    std::vector<NodeIndex> out;
    for (NodeIndex b : pool) {
        LayerSet l = base;
        for (NodeIndex a : current) {
            l.intersect(net.pair_layers(a, b));
        }
        if (l.count() >= static_cast<std::size_t>(m_min)) {
            out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mlcpm
