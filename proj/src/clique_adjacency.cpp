#include "mlcpm/clique_adjacency.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mlcpm/errors.hpp"

namespace mlcpm {

std::string_view to_string(OverlapRule rule) {
    return rule == OverlapRule::k ? "k" : "k-1";
}

std::optional<OverlapRule> parse_overlap_rule(std::string_view text) {
    if (text == "k-1") {
        return OverlapRule::k_minus_1;
    }
    if (text == "k") {
        return OverlapRule::k;
    }
    return std::nullopt;
}

namespace {

std::uint32_t overlap_count(const std::vector<NodeIndex>& a, const std::vector<NodeIndex>& b) {
    std::uint32_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

} // namespace

bool adjacent(const Clique& c1, const Clique& c2, const AdjacencyRule& rule) {
    if ((c1.layers & c2.layers).count() < static_cast<std::size_t>(rule.m)) {
        return false;
    }
    return overlap_count(c1.nodes, c2.nodes) >=
           static_cast<std::uint32_t>(rule.node_overlap_threshold());
}

CliqueAdjacencyGraph::CliqueAdjacencyGraph(std::vector<Clique> cliques,
                                           std::vector<AdjacencyEdge> edges, AdjacencyRule rule)
    : cliques_(std::move(cliques)), edges_(std::move(edges)), rule_(rule) {
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
        cliques_[i].id = static_cast<CliqueId>(i);
    }
    std::sort(edges_.begin(), edges_.end(), [](const AdjacencyEdge& a, const AdjacencyEdge& b) {
        return a.a != b.a ? a.a < b.a : a.b < b.b;
    });
    neighbor_lists_.assign(cliques_.size(), {});
    for (const AdjacencyEdge& e : edges_) {
        neighbor_lists_[e.a].push_back(e.b);
        neighbor_lists_[e.b].push_back(e.a);
    }
    for (auto& row : neighbor_lists_) {
        std::sort(row.begin(), row.end());
    }
}

namespace {

/// Hash buckets keyed by threshold-sized node subsets. Any two cliques with
/// >= t shared nodes share at least one t-subset, so scanning buckets finds
/// every adjacent pair. Cliques whose subset count would explode are compared
/// against everything directly; they are rare by construction.
std::vector<AdjacencyEdge> pairs_by_subsets(const std::vector<Clique>& cliques,
                                            const AdjacencyRule& rule) {
    const std::size_t t = static_cast<std::size_t>(rule.node_overlap_threshold());
    const std::size_t subset_cap = 512; // per-clique subset budget

    auto binomial = [](std::size_t n, std::size_t r) -> std::size_t {
        if (r > n) {
            return 0;
        }
        std::size_t v = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (v > (std::size_t{1} << 40)) {
                return std::size_t(-1);
            }
            v = v * (n - i) / (i + 1);
        }
        return v;
    };

    std::unordered_map<std::string, std::vector<CliqueId>> buckets;
    std::vector<CliqueId> oversized;

    for (CliqueId id = 0; id < cliques.size(); ++id) {
        const auto& nodes = cliques[id].nodes;
        if (nodes.size() < t) {
            continue; // cannot reach the overlap threshold with anything
        }
        if (binomial(nodes.size(), t) > subset_cap) {
            oversized.push_back(id);
            continue;
        }
        // Enumerate t-subsets by index vector.
        std::vector<std::size_t> pick(t);
        for (std::size_t i = 0; i < t; ++i) {
            pick[i] = i;
        }
        while (true) {
            std::string key;
            key.reserve(t * 4);
            for (std::size_t i = 0; i < t; ++i) {
                key.append(reinterpret_cast<const char*>(&nodes[pick[i]]), sizeof(NodeIndex));
            }
            buckets[key].push_back(id);
            std::size_t pos = t;
            while (pos > 0 && pick[pos - 1] == nodes.size() - t + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++pick[pos - 1];
            for (std::size_t i = pos; i < t; ++i) {
                pick[i] = pick[i - 1] + 1;
            }
        }
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<AdjacencyEdge> edges;
    auto consider = [&](CliqueId a, CliqueId b) {
        if (a > b) {
            std::swap(a, b);
        }
        if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
            return;
        }
        if (adjacent(cliques[a], cliques[b], rule)) {
            edges.push_back(AdjacencyEdge{a, b, cliques[a].layers & cliques[b].layers,
                                          overlap_count(cliques[a].nodes, cliques[b].nodes)});
        }
    };

    for (const auto& [key, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                consider(members[i], members[j]);
            }
        }
    }
    for (CliqueId big : oversized) {
        for (CliqueId other = 0; other < cliques.size(); ++other) {
            if (other != big) {
                consider(big, other);
            }
        }
    }
    return edges;
}

std::vector<AdjacencyEdge> pairs_all(const std::vector<Clique>& cliques,
                                     const AdjacencyRule& rule) {
    std::vector<AdjacencyEdge> edges;
    for (CliqueId i = 0; i < cliques.size(); ++i) {
        for (CliqueId j = i + 1; j < cliques.size(); ++j) {
            if (adjacent(cliques[i], cliques[j], rule)) {
                edges.push_back(AdjacencyEdge{i, j, cliques[i].layers & cliques[j].layers,
                                              overlap_count(cliques[i].nodes, cliques[j].nodes)});
            }
        }
    }
    return edges;
}

} // namespace

CliqueAdjacencyGraph build_clique_adjacency(std::vector<Clique> cliques, const AdjacencyRule& rule,
                                            PairStrategy strategy) {
    if (rule.k < 2) {
        throw InvalidArgument("adjacency needs k >= 2");
    }
    if (rule.m < 1) {
        throw InvalidArgument("adjacency needs m >= 1");
    }
    if (strategy == PairStrategy::automatic) {
        strategy = cliques.size() <= 2048 ? PairStrategy::all_pairs : PairStrategy::subset_buckets;
    }
    std::vector<AdjacencyEdge> edges = strategy == PairStrategy::all_pairs
                                           ? pairs_all(cliques, rule)
                                           : pairs_by_subsets(cliques, rule);
    return CliqueAdjacencyGraph(std::move(cliques), std::move(edges), rule);
}

std::string to_dot(const CliqueAdjacencyGraph& graph, const MultiplexNetwork& net) {
    std::ostringstream out;
    out << "graph clique_adjacency {\n";
    out << "  node [shape=box];\n";
    for (const Clique& c : graph.cliques()) {
        out << "  c" << c.id << " [label=\"c" << c.id << ": ";
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            out << (i ? " " : "") << net.node_name(c.nodes[i]);
        }
        out << "\\n";
        auto layers = c.layers.indices();
        for (std::size_t i = 0; i < layers.size(); ++i) {
            out << (i ? " " : "") << net.layer_name(layers[i]);
        }
        out << "\"];\n";
    }
    for (const AdjacencyEdge& e : graph.edges()) {
        out << "  c" << e.a << " -- c" << e.b << " [label=\"";
        auto layers = e.shared_layers.indices();
        for (std::size_t i = 0; i < layers.size(); ++i) {
            out << (i ? " " : "") << net.layer_name(layers[i]);
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace mlcpm
