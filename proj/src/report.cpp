#include "mlcpm/report.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mlcpm/errors.hpp"
#include "mlcpm/io.hpp"

namespace mlcpm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> node_names(const MultiplexNetwork& net,
                                    const std::vector<NodeIndex>& nodes) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (NodeIndex v : nodes) {
        out.push_back(net.node_name(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> layer_names(const MultiplexNetwork& net, const LayerSet& layers) {
    std::vector<std::string> out;
    for (LayerIndex l : layers.indices()) {
        out.push_back(net.layer_name(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void render_name_list(std::ostream& out, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << (i ? " " : "") << names[i];
    }
}

std::string quoted(const std::string& s) {
    // Good enough for identifiers in DOT labels.
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

CommunityReport make_report(const MultiplexNetwork& net, const CliqueAdjacencyGraph& graph,
                            const CommunitySet& communities) {
    CommunityReport report;
    report.source = net.source().name;
    report.digest = net.source().digest;
    report.k = communities.provenance.k;
    report.m = communities.provenance.m;
    report.overlap_rule = std::string(to_string(communities.provenance.overlap));
    report.node_count = net.node_count();
    report.layer_count = net.layer_count();
    report.edge_count = net.edge_count();

    // Rows are keyed by names so isomorphic inputs produce equal reports;
    // this ordering, not the enumeration order, is the contract.
    std::vector<CommunityReport::CliqueRow> rows;
    rows.reserve(graph.clique_count());
    for (const Clique& c : graph.cliques()) {
        CommunityReport::CliqueRow row;
        row.id = c.id; // table id for now, remapped below
        row.nodes = node_names(net, c.nodes);
        row.layers = layer_names(net, c.layers);
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rows[a].nodes != rows[b].nodes) {
            return rows[a].nodes < rows[b].nodes;
        }
        return rows[a].layers < rows[b].layers;
    });
    std::vector<std::uint32_t> table_to_row(rows.size());
    report.cliques.reserve(rows.size());
    for (std::size_t new_id = 0; new_id < order.size(); ++new_id) {
        CommunityReport::CliqueRow row = std::move(rows[order[new_id]]);
        table_to_row[row.id] = static_cast<std::uint32_t>(new_id);
        row.id = static_cast<std::uint32_t>(new_id);
        report.cliques.push_back(std::move(row));
    }

    for (const AdjacencyEdge& e : graph.edges()) {
        CommunityReport::AdjacencyRow row;
        row.a = table_to_row[e.a];
        row.b = table_to_row[e.b];
        if (row.a > row.b) {
            std::swap(row.a, row.b);
        }
        row.layers = layer_names(net, e.shared_layers);
        row.overlap = e.overlap_size;
        report.edges.push_back(std::move(row));
    }
    std::sort(report.edges.begin(), report.edges.end(),
              [](const CommunityReport::AdjacencyRow& x, const CommunityReport::AdjacencyRow& y) {
                  return x.a != y.a ? x.a < y.a : x.b < y.b;
              });

    for (const Community& community : communities.communities) {
        CommunityReport::CommunityRow row;
        row.nodes = node_names(net, community.nodes);
        row.layers = layer_names(net, community.shared_layers);
        for (CliqueId id : community.cliques) {
            row.cliques.push_back(table_to_row[id]);
        }
        std::sort(row.cliques.begin(), row.cliques.end());
        report.communities.push_back(std::move(row));
    }
    std::sort(report.communities.begin(), report.communities.end(),
              [](const CommunityReport::CommunityRow& x, const CommunityReport::CommunityRow& y) {
                  if (x.nodes.size() != y.nodes.size()) {
                      return x.nodes.size() > y.nodes.size();
                  }
                  if (x.nodes != y.nodes) {
                      return x.nodes < y.nodes;
                  }
                  if (x.layers != y.layers) {
                      return x.layers < y.layers;
                  }
                  return x.cliques < y.cliques;
              });

    return report;
}

namespace {

void write_plain(std::ostream& out, const CommunityReport& r) {
    out << "source: " << r.source << "\n";
    out << "digest: " << r.digest << "\n";
    out << "k: " << r.k << "  m: " << r.m << "  adjacency: " << r.overlap_rule << "\n";
    out << "nodes: " << r.node_count << "  layers: " << r.layer_count
        << "  edges: " << r.edge_count << "\n";
    out << "cliques: " << r.cliques.size() << "\n";
    for (const auto& c : r.cliques) {
        out << "  q" << c.id << ": ";
        render_name_list(out, c.nodes);
        out << " | ";
        render_name_list(out, c.layers);
        out << "\n";
    }
    out << "adjacency edges: " << r.edges.size() << "\n";
    for (const auto& e : r.edges) {
        out << "  q" << e.a << " -- q" << e.b << " | ";
        render_name_list(out, e.layers);
        out << " | overlap " << e.overlap << "\n";
    }
    out << "communities: " << r.communities.size() << "\n";
    std::size_t n = 0;
    for (const auto& c : r.communities) {
        out << "  C" << ++n << " (" << c.nodes.size() << " nodes): ";
        render_name_list(out, c.nodes);
        out << " | ";
        render_name_list(out, c.layers);
        out << " | cliques";
        for (std::uint32_t q : c.cliques) {
            out << " q" << q;
        }
        out << "\n";
    }
}

void write_structured(std::ostream& out, const CommunityReport& r) {
    ordered_json j;
    j["source"] = r.source;
    j["digest"] = r.digest;
    j["k"] = r.k;
    j["m"] = r.m;
    j["overlap_rule"] = r.overlap_rule;
    j["node_count"] = r.node_count;
    j["layer_count"] = r.layer_count;
    j["edge_count"] = r.edge_count;
    j["cliques"] = ordered_json::array();
    for (const auto& c : r.cliques) {
        j["cliques"].push_back(ordered_json{{"id", c.id}, {"nodes", c.nodes}, {"layers", c.layers}});
    }
    j["adjacency"] = ordered_json::array();
    for (const auto& e : r.edges) {
        j["adjacency"].push_back(
            ordered_json{{"a", e.a}, {"b", e.b}, {"layers", e.layers}, {"overlap", e.overlap}});
    }
    j["communities"] = ordered_json::array();
    for (const auto& c : r.communities) {
        j["communities"].push_back(
            ordered_json{{"nodes", c.nodes}, {"layers", c.layers}, {"cliques", c.cliques}});
    }
    out << j.dump(2) << "\n";
}

void write_dot(std::ostream& out, const CommunityReport& r) {
    out << "graph clique_adjacency {\n  node [shape=box];\n";
    // Community membership is annotated on the clique boxes; overlapping
    // membership rules out disjoint clusters.
    std::vector<std::vector<std::size_t>> membership(r.cliques.size());
    for (std::size_t ci = 0; ci < r.communities.size(); ++ci) {
        for (std::uint32_t q : r.communities[ci].cliques) {
            membership[q].push_back(ci + 1);
        }
    }
    for (const auto& c : r.cliques) {
        std::ostringstream label;
        label << "q" << c.id << ": ";
        render_name_list(label, c.nodes);
        label << "\\n";
        render_name_list(label, c.layers);
        if (!membership[c.id].empty()) {
            label << "\\nin:";
            for (std::size_t ci : membership[c.id]) {
                label << " C" << ci;
            }
        }
        out << "  q" << c.id << " [label=" << quoted(label.str()) << "];\n";
    }
    for (const auto& e : r.edges) {
        std::ostringstream label;
        render_name_list(label, e.layers);
        out << "  q" << e.a << " -- q" << e.b << " [label=" << quoted(label.str()) << "];\n";
    }
    out << "}\n";
}

} // namespace

void write_report(std::ostream& out, const CommunityReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::plain:
        write_plain(out, report);
        break;
    case ReportFormat::structured:
        write_structured(out, report);
        break;
    case ReportFormat::dot:
        write_dot(out, report);
        break;
    }
}

std::string render_report(const CommunityReport& report, ReportFormat format) {
    std::ostringstream out;
    write_report(out, report, format);
    return out.str();
}

CommunityReport read_report_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 0, e.what());
    }
    try {
        CommunityReport r;
        r.source = j.at("source").get<std::string>();
        r.digest = j.at("digest").get<std::string>();
        r.k = j.at("k").get<int>();
        r.m = j.at("m").get<int>();
        r.overlap_rule = j.at("overlap_rule").get<std::string>();
        r.node_count = j.at("node_count").get<std::size_t>();
        r.layer_count = j.at("layer_count").get<std::size_t>();
        r.edge_count = j.at("edge_count").get<std::size_t>();
        for (const auto& c : j.at("cliques")) {
            CommunityReport::CliqueRow row;
            row.id = c.at("id").get<std::uint32_t>();
            row.nodes = c.at("nodes").get<std::vector<std::string>>();
            row.layers = c.at("layers").get<std::vector<std::string>>();
            r.cliques.push_back(std::move(row));
        }
        for (const auto& e : j.at("adjacency")) {
            CommunityReport::AdjacencyRow row;
            row.a = e.at("a").get<std::uint32_t>();
            row.b = e.at("b").get<std::uint32_t>();
            row.layers = e.at("layers").get<std::vector<std::string>>();
            row.overlap = e.at("overlap").get<std::uint32_t>();
            r.edges.push_back(std::move(row));
        }
        for (const auto& c : j.at("communities")) {
            CommunityReport::CommunityRow row;
            row.nodes = c.at("nodes").get<std::vector<std::string>>();
            row.layers = c.at("layers").get<std::vector<std::string>>();
            row.cliques = c.at("cliques").get<std::vector<std::uint32_t>>();
            r.communities.push_back(std::move(row));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 0, std::string("report shape: ") + e.what());
    }
}

std::string render_cliques(const MultiplexNetwork& net, const std::vector<Clique>& cliques,
                           ReportFormat format) {
    struct Row {
        std::vector<std::string> nodes;
        std::vector<std::string> layers;
    };
    std::vector<Row> rows;
    rows.reserve(cliques.size());
    for (const Clique& c : cliques) {
        rows.push_back(Row{node_names(net, c.nodes), layer_names(net, c.layers)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.nodes != b.nodes ? a.nodes < b.nodes : a.layers < b.layers;
    });

    std::ostringstream out;
    switch (format) {
    case ReportFormat::plain: {
        out << "source: " << net.source().name << "\n";
        out << "cliques: " << rows.size() << "\n";
        std::size_t i = 0;
        for (const Row& row : rows) {
            out << "  q" << i++ << ": ";
            render_name_list(out, row.nodes);
            out << " | ";
            render_name_list(out, row.layers);
            out << "\n";
        }
        break;
    }
    case ReportFormat::structured: {
        ordered_json j;
        j["source"] = net.source().name;
        j["digest"] = net.source().digest;
        j["cliques"] = ordered_json::array();
        std::size_t i = 0;
        for (const Row& row : rows) {
            j["cliques"].push_back(
                ordered_json{{"id", i++}, {"nodes", row.nodes}, {"layers", row.layers}});
        }
        out << j.dump(2) << "\n";
        break;
    }
    case ReportFormat::dot:
        throw InvalidArgument("clique listings have no dot rendering");
    }
    return out.str();
}

std::string render_stats(const MultiplexNetwork& net) {
    std::ostringstream out;
    out << "source: " << net.source().name << "\n";
    out << "digest: " << net.source().digest << "\n";
    out << "nodes: " << net.node_count() << "\n";
    out << "layers: " << net.layer_count() << "\n";
    out << "edges: " << net.edge_count() << "\n";
    out << "connected pairs: " << net.pair_count() << "\n";
    // Layer rows in name order, independent of interning order.
    std::vector<LayerIndex> order(net.layer_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](LayerIndex a, LayerIndex b) {
        return net.layer_name(a) < net.layer_name(b);
    });
    for (LayerIndex l : order) {
        out << "  layer " << net.layer_name(l) << ": " << net.layer_edge_count(l) << " edges\n";
    }
    return out.str();
}

} // namespace mlcpm
