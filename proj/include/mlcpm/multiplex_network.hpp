#ifndef MLCPM_MULTIPLEX_NETWORK_HPP
#define MLCPM_MULTIPLEX_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlcpm/layer_set.hpp"

namespace mlcpm {

using NodeIndex = std::uint32_t;

/// Where a network came from, echoed into reports.
struct SourceInfo {
    std::string name;
    std::string digest;
};

/// Immutable edge-labeled multigraph over a shared node set: one undirected
/// simple graph per layer, no self-loops, no interlayer edges. Node and layer
/// names are interned once at construction; everything downstream works on
/// dense indices. Safe to read from any number of threads.
class MultiplexNetwork {
  public:
    MultiplexNetwork() = default;

    std::size_t node_count() const { return node_names_.size(); }
    std::size_t layer_count() const { return layer_names_.size(); }

    /// Total number of (pair, layer) edge records.
    std::size_t edge_count() const { return edge_count_; }

    /// Number of node pairs connected on at least one layer.
    std::size_t pair_count() const { return pair_map_.size(); }

    std::size_t layer_edge_count(LayerIndex l) const { return layer_edge_counts_[l]; }

    const std::string& node_name(NodeIndex v) const { return node_names_[v]; }
    const std::string& layer_name(LayerIndex l) const { return layer_names_[l]; }

    std::optional<NodeIndex> find_node(std::string_view name) const {
        auto it = node_index_.find(std::string(name));
        if (it == node_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::optional<LayerIndex> find_layer(std::string_view name) const {
        auto it = layer_index_.find(std::string(name));
        if (it == layer_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// L_ab: the set of layers carrying an (a,b) edge. Empty for unconnected
    /// pairs; a and b must differ.
    const LayerSet& pair_layers(NodeIndex a, NodeIndex b) const;

    /// L(S): intersection of pair_layers over all unordered pairs of `nodes`.
    /// Sets with fewer than two nodes yield the full layer set, the identity
    /// of the intersection, so recursions can start from the empty clique.
    LayerSet clique_layers(std::span<const NodeIndex> nodes) const;
    LayerSet clique_layers(std::initializer_list<NodeIndex> nodes) const {
        return clique_layers(std::span<const NodeIndex>(nodes.begin(), nodes.size()));
    }

    /// Nodes sharing at least one layer with v, ascending.
    std::span<const NodeIndex> neighbors(NodeIndex v) const {
        return neighbors_[v];
    }

    /// Neighbors of v within one layer, ascending.
    std::span<const NodeIndex> layer_neighbors(LayerIndex l, NodeIndex v) const {
        return layer_adj_[l][v];
    }

    LayerSet full_layer_set() const { return LayerSet::full(layer_count()); }

    const SourceInfo& source() const { return source_; }

    /// Cross-checks pair_layers against the per-layer adjacency lists.
    bool consistent() const;

    /// Name-level value equality: same node names, layer names, and
    /// (name, name, layer-name) edge set, regardless of interning order.
    bool operator==(const MultiplexNetwork& other) const;

  private:
    friend class MultiplexNetworkBuilder;

    static std::uint64_t pair_key(NodeIndex a, NodeIndex b) {
        if (a > b) {
            std::swap(a, b);
        }
        return (std::uint64_t{a} << 32) | b;
    }

    std::vector<std::string> node_names_;
    std::vector<std::string> layer_names_;
    std::unordered_map<std::string, NodeIndex> node_index_;
    std::unordered_map<std::string, LayerIndex> layer_index_;
    std::unordered_map<std::uint64_t, LayerSet> pair_map_;
    std::vector<std::vector<NodeIndex>> neighbors_;
    std::vector<std::vector<std::vector<NodeIndex>>> layer_adj_; // layer -> node -> sorted
    std::vector<std::size_t> layer_edge_counts_;
    std::size_t edge_count_ = 0;
    SourceInfo source_;
};

/// Single-threaded accumulator for MultiplexNetwork. Duplicate edges collapse
/// silently; self-loops and unregistered ids are rejected.
class MultiplexNetworkBuilder {
  public:
    /// `max_layers` is the configured layer-width limit. The default keeps
    /// every layer set in one machine word; raise it when a dataset really
    /// has more layers (wider sets spill to the heap and run slower).
    explicit MultiplexNetworkBuilder(std::size_t max_layers = 64) : max_layers_(max_layers) {}

    /// Registers a node name; returns the existing index when already known.
    NodeIndex add_node(std::string_view name);

    /// Registers a layer name; errors once the width limit is hit.
    LayerIndex add_layer(std::string_view name);

    /// Records an undirected (a,b) edge on layer l. Idempotent on duplicates.
    /// Self-loops and unknown indices are InvalidArgument.
    void add_edge(NodeIndex a, NodeIndex b, LayerIndex l);

    /// Convenience for generators and parsers: names are auto-registered on
    /// first appearance, then the edge is added as above.
    void add_edge(std::string_view a, std::string_view b, std::string_view layer);

    void set_source(std::string name, std::string digest) {
        source_ = SourceInfo{std::move(name), std::move(digest)};
    }

    std::size_t node_count() const { return net_.node_names_.size(); }
    std::size_t layer_count() const { return net_.layer_names_.size(); }

    /// Finalizes adjacency structures. The builder is spent afterwards.
    MultiplexNetwork build();

  private:
    std::size_t max_layers_;
    MultiplexNetwork net_;
    std::vector<std::pair<std::uint64_t, LayerIndex>> edges_; // (pair key, layer)
    SourceInfo source_;
};

} // namespace mlcpm

#endif
