#ifndef MLCPM_CLIQUE_ADJACENCY_HPP
#define MLCPM_CLIQUE_ADJACENCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlcpm/clique_finder.hpp"

namespace mlcpm {

/// Node-overlap threshold used by the adjacency predicate. The definitional
/// form asks for k-1 shared nodes; the stricter k-node variant also exists in
/// the literature, so both are selectable and every output records the choice.
enum class OverlapRule {
    k_minus_1,
    k,
};

std::string_view to_string(OverlapRule rule);
std::optional<OverlapRule> parse_overlap_rule(std::string_view text); // "k-1" | "k"

/// Full adjacency configuration of a run: two cliques are adjacent when they
/// share at least node_overlap_threshold() nodes and at least m layers.
struct AdjacencyRule {
    int k = 3;
    int m = 1;
    OverlapRule overlap = OverlapRule::k_minus_1;

    int node_overlap_threshold() const { return overlap == OverlapRule::k ? k : k - 1; }

    friend bool operator==(const AdjacencyRule&, const AdjacencyRule&) = default;
};

bool adjacent(const Clique& c1, const Clique& c2, const AdjacencyRule& rule);

struct AdjacencyEdge {
    CliqueId a = 0; // a < b
    CliqueId b = 0;
    LayerSet shared_layers; // layers(a) ∩ layers(b)
    std::uint32_t overlap_size = 0;
};

/// Cliques as vertices, adjacency-predicate edges annotated with the shared
/// layer set. Isolated cliques stay as vertices; a lone clique is a
/// legitimate community.
class CliqueAdjacencyGraph {
  public:
    CliqueAdjacencyGraph() = default;
    CliqueAdjacencyGraph(std::vector<Clique> cliques, std::vector<AdjacencyEdge> edges,
                         AdjacencyRule rule);

    std::size_t clique_count() const { return cliques_.size(); }
    const Clique& clique(CliqueId id) const { return cliques_[id]; }
    const std::vector<Clique>& cliques() const { return cliques_; }

    std::span<const CliqueId> neighbors(CliqueId id) const { return neighbor_lists_[id]; }
    const std::vector<AdjacencyEdge>& edges() const { return edges_; }
    const AdjacencyRule& rule() const { return rule_; }

  private:
    std::vector<Clique> cliques_;
    std::vector<AdjacencyEdge> edges_;
    std::vector<std::vector<CliqueId>> neighbor_lists_;
    AdjacencyRule rule_;
};

/// How candidate pairs are generated. Outputs are identical; `subset_buckets`
/// hashes each clique's threshold-sized node subsets so huge clique sets skip
/// the quadratic scan. `automatic` switches on clique count.
enum class PairStrategy {
    automatic,
    all_pairs,
    subset_buckets,
};

CliqueAdjacencyGraph build_clique_adjacency(std::vector<Clique> cliques, const AdjacencyRule& rule,
                                            PairStrategy strategy = PairStrategy::automatic);

/// Graphviz rendering: one box per clique labeled with its nodes and layers,
/// edges labeled with the shared layers.
std::string to_dot(const CliqueAdjacencyGraph& graph, const MultiplexNetwork& net);

} // namespace mlcpm

#endif
