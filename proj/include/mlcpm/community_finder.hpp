#ifndef MLCPM_COMMUNITY_FINDER_HPP
#define MLCPM_COMMUNITY_FINDER_HPP

#include <cstdint>
#include <vector>

#include "mlcpm/clique_adjacency.hpp"

namespace mlcpm {

/// A maximal set of adjacency-connected cliques whose common layer set still
/// has at least m layers: adding any adjacent clique would shrink it.
struct Community {
    std::vector<CliqueId> cliques; // ascending
    LayerSet shared_layers;        // intersection of member layer sets
    std::vector<NodeIndex> nodes;  // union of member node sets, ascending

    friend bool operator==(const Community& a, const Community& b) {
        return a.cliques == b.cliques && a.shared_layers == b.shared_layers;
    }
};

struct CommunitySet {
    std::vector<Clique> cliques; // the clique table community ids refer to
    std::vector<Community> communities;
    AdjacencyRule provenance;
    /// Safety-net counter: emissions removed by the post-pass dedup. The
    /// recursion is believed duplicate-free; a nonzero count is logged, not
    /// an error.
    std::size_t duplicate_emissions = 0;
};

struct CommunityFinderOptions {
    /// Communities emitted per seed clique before the enumeration gives up
    /// with CapacityError. 0 disables the guard. The enumeration is
    /// worst-case exponential; this makes it fail loudly instead of hanging.
    std::size_t max_communities_per_seed = 0;
};

/// All maximal communities of the adjacency graph for threshold m_min.
/// Every seed clique is explored once; already-processed cliques suppress
/// rediscovery, and a final dedup by clique set backstops the recursion.
CommunitySet find_communities(const CliqueAdjacencyGraph& graph, int m_min,
                              const CommunityFinderOptions& options = {});

/// Recomputed intersection of the member cliques' layer sets.
LayerSet community_layers(const CliqueAdjacencyGraph& graph, const Community& c);

/// Recomputed union of the member cliques' node sets, ascending.
std::vector<NodeIndex> community_nodes(const CliqueAdjacencyGraph& graph, const Community& c);

/// Full pipeline: enumerate maximal cliques, build the adjacency graph,
/// extract communities. Result is sorted for stable reports (node count
/// descending, then node names, then layer names, then clique ids).
CommunitySet detect(const MultiplexNetwork& net, int k, int m,
                    OverlapRule rule = OverlapRule::k_minus_1,
                    const CommunityFinderOptions& options = {});

/// Sorts communities into the canonical report order used by detect().
void sort_communities(const MultiplexNetwork& net, CommunitySet& result);

} // namespace mlcpm

#endif
