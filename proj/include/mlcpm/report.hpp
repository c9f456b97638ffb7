#ifndef MLCPM_REPORT_HPP
#define MLCPM_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlcpm/clique_adjacency.hpp"
#include "mlcpm/community_finder.hpp"

namespace mlcpm {

/// Name-level, order-pinned snapshot of one detection run. Two runs over
/// isomorphic inputs produce equal reports, and rendering is byte-stable.
struct CommunityReport {
    struct CliqueRow {
        std::uint32_t id = 0;
        std::vector<std::string> nodes;  // lexicographic
        std::vector<std::string> layers; // lexicographic
        friend bool operator==(const CliqueRow&, const CliqueRow&) = default;
    };

    struct CommunityRow {
        std::vector<std::string> nodes;   // lexicographic
        std::vector<std::string> layers;  // lexicographic
        std::vector<std::uint32_t> cliques; // report-local clique row indices
        friend bool operator==(const CommunityRow&, const CommunityRow&) = default;
    };

    struct AdjacencyRow {
        std::uint32_t a = 0; // clique row indices, a < b
        std::uint32_t b = 0;
        std::vector<std::string> layers;
        std::uint32_t overlap = 0;
        friend bool operator==(const AdjacencyRow&, const AdjacencyRow&) = default;
    };

    std::string source;
    std::string digest;
    int k = 0;
    int m = 0;
    std::string overlap_rule;

    std::size_t node_count = 0;
    std::size_t layer_count = 0;
    std::size_t edge_count = 0;

    std::vector<CliqueRow> cliques;         // node-name lex, then layer lex
    std::vector<AdjacencyRow> edges;        // (a, b) lex
    std::vector<CommunityRow> communities;  // size desc, names lex, layers lex

    friend bool operator==(const CommunityReport&, const CommunityReport&) = default;
};

enum class ReportFormat { plain, structured, dot };

/// Builds the canonical report: clique and community ordering here is the
/// single place determinism is pinned.
CommunityReport make_report(const MultiplexNetwork& net, const CliqueAdjacencyGraph& graph,
                            const CommunitySet& communities);

/// plain: human-readable text. structured: JSON, keys in fixed order.
/// dot: clique adjacency graph with communities as labels.
void write_report(std::ostream& out, const CommunityReport& report, ReportFormat format);
std::string render_report(const CommunityReport& report, ReportFormat format);

/// Inverse of the structured rendering, for round-trip and cross-run tests.
CommunityReport read_report_json(std::string_view text);

/// Clique enumeration without community detection (cliques subcommand).
std::string render_cliques(const MultiplexNetwork& net, const std::vector<Clique>& cliques,
                           ReportFormat format);

/// Short network summary (stats subcommand): counts per layer, totals, digest.
std::string render_stats(const MultiplexNetwork& net);

} // namespace mlcpm

#endif
