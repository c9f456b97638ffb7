#ifndef MLCPM_CLIQUE_FINDER_HPP
#define MLCPM_CLIQUE_FINDER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mlcpm/multiplex_network.hpp"

namespace mlcpm {

using CliqueId = std::uint32_t;

/// A maximal multiplex clique: `nodes` form a clique on every layer in
/// `layers`, and `layers` is the exact pairwise intersection (never a
/// subset), so the clique is maximal on m by construction.
struct Clique {
    std::vector<NodeIndex> nodes; // ascending
    LayerSet layers;              // = clique_layers(nodes)
    CliqueId id = 0;              // dense, assigned after enumeration

    friend bool operator==(const Clique& a, const Clique& b) {
        return a.nodes == b.nodes && a.layers == b.layers;
    }
};

/// Thresholds of a run: keep cliques with at least k_min nodes forming a
/// clique on at least m_min common layers.
struct CliqueQuery {
    int k_min = 3;
    int m_min = 1;

    /// k_min must exceed 1 and m_min must be positive.
    void validate() const;
};

/// Streams every maximal clique of the network for the query, in unspecified
/// order, without materializing the whole set. `nodes` is ascending and only
/// valid during the call.
void for_each_max_clique(
    const MultiplexNetwork& net, const CliqueQuery& query,
    const std::function<void(std::span<const NodeIndex> nodes, const LayerSet& layers)>& emit);

/// Collecting wrapper: all maximal cliques, sorted by node vector, with dense
/// ids assigned in that order.
std::vector<Clique> find_max_cliques(const MultiplexNetwork& net, const CliqueQuery& query);

/// Direct check of the maximality characterization: enough nodes, enough
/// common layers, and no single-node extension that keeps the layer count.
/// Independent of the recursive enumeration.
bool is_maximal_clique(const MultiplexNetwork& net, std::span<const NodeIndex> nodes,
                       const CliqueQuery& query);
bool is_maximal_clique(const MultiplexNetwork& net, std::initializer_list<NodeIndex> nodes,
                       const CliqueQuery& query);

/// Members of `pool` that keep `current` extended by them a clique on at
/// least m_min layers. Ascending.
std::vector<NodeIndex> candidate_filter(const MultiplexNetwork& net,
                                        std::span<const NodeIndex> current,
                                        std::span<const NodeIndex> pool, int m_min);

} // namespace mlcpm

#endif
