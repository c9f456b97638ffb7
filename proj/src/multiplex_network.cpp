#include "mlcpm/multiplex_network.hpp"

#include <algorithm>
#include <string>

#include "mlcpm/errors.hpp"

namespace mlcpm {

namespace {

const LayerSet kEmptyLayerSet{};

} // namespace

const LayerSet& MultiplexNetwork::pair_layers(NodeIndex a, NodeIndex b) const {
    auto it = pair_map_.find(pair_key(a, b));
    return it == pair_map_.end() ? kEmptyLayerSet : it->second;
}

LayerSet MultiplexNetwork::clique_layers(std::span<const NodeIndex> nodes) const {
    // Fewer than two nodes: no pairs to intersect, so the identity.
    LayerSet acc = full_layer_set();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            acc.intersect(pair_layers(nodes[i], nodes[j]));
            if (acc.empty()) {
                return acc;
            }
        }
    }
    return acc;
}

bool MultiplexNetwork::consistent() const {
    for (const auto& [key, layers] : pair_map_) {
        if (layers.empty()) {
            return false;
        }
        auto a = static_cast<NodeIndex>(key >> 32);
        auto b = static_cast<NodeIndex>(key & 0xffffffffu);
        if (a >= b || b >= node_count()) {
            return false;
        }
        for (LayerIndex l : layers.indices()) {
            auto row = layer_neighbors(l, a);
            if (!std::binary_search(row.begin(), row.end(), b)) {
                return false;
            }
        }
    }
    std::size_t edges_from_adj = 0;
    for (LayerIndex l = 0; l < layer_count(); ++l) {
        std::size_t degree_sum = 0;
        for (NodeIndex v = 0; v < node_count(); ++v) {
            auto row = layer_neighbors(l, v);
            if (!std::is_sorted(row.begin(), row.end())) {
                return false;
            }
            for (NodeIndex u : row) {
                if (u == v || !pair_layers(u, v).test(l)) {
                    return false;
                }
            }
            degree_sum += row.size();
        }
        if (degree_sum % 2 != 0 || degree_sum / 2 != layer_edge_count(l)) {
            return false;
        }
        edges_from_adj += degree_sum / 2;
    }
    return edges_from_adj == edge_count();
}

bool MultiplexNetwork::operator==(const MultiplexNetwork& other) const {
    if (node_count() != other.node_count() || layer_count() != other.layer_count() ||
        edge_count() != other.edge_count()) {
        return false;
    }
    std::vector<NodeIndex> node_map(node_count());
    for (NodeIndex v = 0; v < node_count(); ++v) {
        auto hit = other.find_node(node_name(v));
        if (!hit) {
            return false;
        }
        node_map[v] = *hit;
    }
    std::vector<LayerIndex> layer_map(layer_count());
    for (LayerIndex l = 0; l < layer_count(); ++l) {
        auto hit = other.find_layer(layer_name(l));
        if (!hit) {
            return false;
        }
        layer_map[l] = *hit;
    }
    for (const auto& [key, layers] : pair_map_) {
        auto a = static_cast<NodeIndex>(key >> 32);
        auto b = static_cast<NodeIndex>(key & 0xffffffffu);
        LayerSet mapped;
        for (LayerIndex l : layers.indices()) {
            mapped.set(layer_map[l]);
        }
        if (other.pair_layers(node_map[a], node_map[b]) != mapped) {
            return false;
        }
    }
    return true;
}

NodeIndex MultiplexNetworkBuilder::add_node(std::string_view name) {
    auto key = std::string(name);
    auto it = net_.node_index_.find(key);
    if (it != net_.node_index_.end()) {
        return it->second;
    }
    auto idx = static_cast<NodeIndex>(net_.node_names_.size());
    net_.node_names_.push_back(key);
    net_.node_index_.emplace(std::move(key), idx);
    return idx;
}

LayerIndex MultiplexNetworkBuilder::add_layer(std::string_view name) {
    auto key = std::string(name);
    auto it = net_.layer_index_.find(key);
    if (it != net_.layer_index_.end()) {
        return it->second;
    }
    if (net_.layer_names_.size() >= max_layers_) {
        throw CapacityError("layer limit of " + std::to_string(max_layers_) +
                            " exceeded by layer \"" + key + "\"");
    }
    auto idx = static_cast<LayerIndex>(net_.layer_names_.size());
    net_.layer_names_.push_back(key);
    net_.layer_index_.emplace(std::move(key), idx);
    return idx;
}

void MultiplexNetworkBuilder::add_edge(NodeIndex a, NodeIndex b, LayerIndex l) {
    if (a == b) {
        throw InvalidArgument("self-loop on node \"" +
                              (a < net_.node_names_.size() ? net_.node_names_[a]
                                                           : std::to_string(a)) +
                              "\"");
    }
    if (a >= net_.node_names_.size() || b >= net_.node_names_.size()) {
        throw InvalidArgument("edge references unregistered node index");
    }
    if (l >= net_.layer_names_.size()) {
        throw InvalidArgument("edge references unregistered layer index");
    }
    edges_.emplace_back(MultiplexNetwork::pair_key(a, b), l);
}

void MultiplexNetworkBuilder::add_edge(std::string_view a, std::string_view b,
                                       std::string_view layer) {
    NodeIndex va = add_node(a);
    NodeIndex vb = add_node(b);
    LayerIndex l = add_layer(layer);
    add_edge(va, vb, l);
}

MultiplexNetwork MultiplexNetworkBuilder::build() {
    std::size_t n = net_.node_names_.size();
    std::size_t layers = net_.layer_names_.size();

    for (const auto& [key, l] : edges_) {
        LayerSet& set = net_.pair_map_[key];
        if (!set.test(l)) {
            set.set(l);
            ++net_.edge_count_;
        }
    }

    net_.layer_edge_counts_.assign(layers, 0);
    net_.neighbors_.assign(n, {});
    net_.layer_adj_.assign(layers, std::vector<std::vector<NodeIndex>>(n));
    for (const auto& [key, set] : net_.pair_map_) {
        auto a = static_cast<NodeIndex>(key >> 32);
        auto b = static_cast<NodeIndex>(key & 0xffffffffu);
        net_.neighbors_[a].push_back(b);
        net_.neighbors_[b].push_back(a);
        for (LayerIndex l : set.indices()) {
            net_.layer_adj_[l][a].push_back(b);
            net_.layer_adj_[l][b].push_back(a);
            ++net_.layer_edge_counts_[l];
        }
    }
    for (auto& row : net_.neighbors_) {
        std::sort(row.begin(), row.end());
    }
    for (auto& per_layer : net_.layer_adj_) {
        for (auto& row : per_layer) {
            std::sort(row.begin(), row.end());
        }
    }

    net_.source_ = std::move(source_);
    edges_.clear();
    return std::move(net_);
}

} // namespace mlcpm
