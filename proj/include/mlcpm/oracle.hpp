#ifndef MLCPM_ORACLE_HPP
#define MLCPM_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mlcpm/community_finder.hpp"
#include "mlcpm/multiplex_network.hpp"

namespace mlcpm::oracle {

/// Hard practicality bounds, enforced with CapacityError so CI time stays
/// bounded. The oracles enumerate every subset.
inline constexpr std::size_t kMaxNodes = 15;
inline constexpr std::size_t kMaxCliques = 15;

/// Exhaustive reference for find_max_cliques: tests every node subset and
/// every single-node extension directly against the maximality
/// characterization. Shares only the data model with the main pipeline.
std::vector<Clique> max_cliques(const MultiplexNetwork& net, int k_min, int m_min);

/// Exhaustive reference for detect(): enumerates every connected subset of
/// the oracle clique set and keeps the maximal constraint-satisfying ones.
CommunitySet communities(const MultiplexNetwork& net, int k, int m,
                         OverlapRule rule = OverlapRule::k_minus_1);

/// Brute-force classic k-clique percolation on a single-layer network:
/// every k-node clique, adjacency at k-1 shared nodes, connected classes,
/// node unions. The network must have exactly one layer.
std::vector<std::vector<NodeIndex>> classic_cpm(const MultiplexNetwork& net, int k);

/// One-layer projection of `net` (same node names, only layer l's edges).
MultiplexNetwork project_layer(const MultiplexNetwork& net, LayerIndex l);

/// Seeded synthetic networks: each layer is an independent Erdős–Rényi draw.
/// Identical spec ⇒ identical network. The source is std::mt19937 consumed
/// layer-major then pair-lexicographic, one 32-bit draw per (layer, pair),
/// edge iff draw < round(p * 2^32); rely on serialized networks rather than
/// seeds when fixing values across implementations with other generators.
struct GeneratorSpec {
    std::size_t node_count = 0;
    std::size_t layer_count = 0;
    double edge_probability = 0.0;
    std::uint64_t seed = 0;
};

MultiplexNetwork generate(const GeneratorSpec& spec);

/// Rebuilds `net` with node interning order permuted: new index of old node
/// v is perm[v]. Names and edges are preserved. For relabel-and-compare
/// tests.
MultiplexNetwork relabel(const MultiplexNetwork& net, std::span<const NodeIndex> perm);

} // namespace mlcpm::oracle

#endif
