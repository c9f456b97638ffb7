#include "mlcpm.h"

#include <cstring>
#include <memory>
#include <string>

#include "mlcpm/community_finder.hpp"
#include "mlcpm/errors.hpp"
#include "mlcpm/io.hpp"
#include "mlcpm/oracle.hpp"
#include "mlcpm/report.hpp"

using namespace mlcpm;

struct mlcpm_network {
    std::shared_ptr<const MultiplexNetwork> net;
};

struct mlcpm_result {
    std::shared_ptr<const MultiplexNetwork> net;
    CommunityReport report;
    std::size_t community_count = 0;
    std::size_t clique_count = 0;
};

namespace {

thread_local std::string t_last_error;

int fail(int status, const std::string& message) {
    t_last_error = message;
    return status;
}

int fail(const std::exception& e) {
    const auto* domain = dynamic_cast<const Error*>(&e);
    int status = MLCPM_ERR_INTERNAL;
    if (domain) {
        switch (domain->code()) {
        case Errc::invalid_argument:
            status = MLCPM_ERR_USAGE;
            break;
        case Errc::parse:
            status = MLCPM_ERR_PARSE;
            break;
        case Errc::capacity:
            status = MLCPM_ERR_CAPACITY;
            break;
        case Errc::io:
            status = MLCPM_ERR_IO;
            break;
        }
    }
    return fail(status, e.what());
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int parse_rule(const char* text, OverlapRule* out) {
    if (text == nullptr) {
        *out = OverlapRule::k_minus_1;
        return MLCPM_OK;
    }
    auto rule = parse_overlap_rule(text);
    if (!rule) {
        return fail(MLCPM_ERR_USAGE,
                    std::string("unknown adjacency rule \"") + text + "\", expected k-1 or k");
    }
    *out = *rule;
    return MLCPM_OK;
}

int render_format(const char* text, ReportFormat* out) {
    if (text == nullptr) {
        return fail(MLCPM_ERR_USAGE, "format is null");
    }
    std::string_view f(text);
    if (f == "plain") {
        *out = ReportFormat::plain;
    } else if (f == "structured") {
        *out = ReportFormat::structured;
    } else if (f == "dot") {
        *out = ReportFormat::dot;
    } else {
        return fail(MLCPM_ERR_USAGE, "unknown format \"" + std::string(f) +
                                         "\", expected plain, structured or dot");
    }
    return MLCPM_OK;
}

} // namespace

extern "C" {

const char* mlcpm_last_error(void) { return t_last_error.c_str(); }

const char* mlcpm_version(void) { return MLCPM_VERSION_STRING; }

const char* mlcpm_status_name(int status) {
    switch (status) {
    case MLCPM_OK:
        return "ok";
    case MLCPM_ERR_INTERNAL:
        return "internal";
    case MLCPM_ERR_USAGE:
        return "usage";
    case MLCPM_ERR_PARSE:
        return "parse";
    case MLCPM_ERR_CAPACITY:
        return "capacity";
    case MLCPM_ERR_IO:
        return "io";
    default:
        return "unknown";
    }
}

int mlcpm_network_read_file(const char* path, mlcpm_network** out) {
    if (path == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "path and out must not be null");
    }
    *out = nullptr;
    try {
        auto net = std::make_shared<MultiplexNetwork>(read_multiplex_file(path));
        *out = new mlcpm_network{std::move(net)};
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int mlcpm_network_read_string(const char* text, const char* name, mlcpm_network** out) {
    if (text == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "text and out must not be null");
    }
    *out = nullptr;
    try {
        auto net = std::make_shared<MultiplexNetwork>(
            parse_multiplex(text, name == nullptr ? "" : name));
        *out = new mlcpm_network{std::move(net)};
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

void mlcpm_network_free(mlcpm_network* net) { delete net; }

size_t mlcpm_network_node_count(const mlcpm_network* net) {
    return net == nullptr ? 0 : net->net->node_count();
}

size_t mlcpm_network_layer_count(const mlcpm_network* net) {
    return net == nullptr ? 0 : net->net->layer_count();
}

size_t mlcpm_network_edge_count(const mlcpm_network* net) {
    return net == nullptr ? 0 : net->net->edge_count();
}

int mlcpm_network_render_stats(const mlcpm_network* net, char** out) {
    if (net == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "net and out must not be null");
    }
    try {
        *out = dup_string(render_stats(*net->net));
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int mlcpm_network_write_string(const mlcpm_network* net, char** out) {
    if (net == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "net and out must not be null");
    }
    try {
        *out = dup_string(write_multiplex(*net->net));
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int mlcpm_detect(const mlcpm_network* net, int k, int m, const char* overlap_rule,
                 mlcpm_result** out) {
    if (net == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "net and out must not be null");
    }
    *out = nullptr;
    OverlapRule rule;
    if (int status = parse_rule(overlap_rule, &rule); status != MLCPM_OK) {
        return status;
    }
    try {
        CliqueQuery query{k, m};
        query.validate();
        std::vector<Clique> cliques = find_max_cliques(*net->net, query);
        CliqueAdjacencyGraph graph =
            build_clique_adjacency(std::move(cliques), AdjacencyRule{k, m, rule});
        CommunitySet set = find_communities(graph, m);
        auto result = std::make_unique<mlcpm_result>();
        result->net = net->net;
        result->report = make_report(*net->net, graph, set);
        result->community_count = set.communities.size();
        result->clique_count = graph.clique_count();
        *out = result.release();
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int mlcpm_detect_oracle(const mlcpm_network* net, int k, int m, const char* overlap_rule,
                        mlcpm_result** out) {
    if (net == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "net and out must not be null");
    }
    *out = nullptr;
    OverlapRule rule;
    if (int status = parse_rule(overlap_rule, &rule); status != MLCPM_OK) {
        return status;
    }
    try {
        CliqueQuery query{k, m};
        query.validate();
        CommunitySet set = oracle::communities(*net->net, k, m, rule);
        // The adjacency graph is rebuilt only to shape the report; the
        // communities above are pure brute force.
        CliqueAdjacencyGraph graph = build_clique_adjacency(set.cliques, set.provenance);
        sort_communities(*net->net, set);
        auto result = std::make_unique<mlcpm_result>();
        result->net = net->net;
        result->report = make_report(*net->net, graph, set);
        result->community_count = set.communities.size();
        result->clique_count = set.cliques.size();
        *out = result.release();
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

int mlcpm_enumerate_cliques(const mlcpm_network* net, int k, int m, mlcpm_result** out) {
    if (net == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "net and out must not be null");
    }
    *out = nullptr;
    try {
        CliqueQuery query{k, m};
        query.validate();
        std::vector<Clique> cliques = find_max_cliques(*net->net, query);
        auto result = std::make_unique<mlcpm_result>();
        result->net = net->net;
        result->clique_count = cliques.size();
        // Reuse the report shape with no adjacency computed: the adjacency
        // and community sections stay empty.
        CliqueAdjacencyGraph bare(std::move(cliques), {}, AdjacencyRule{k, m});
        CommunitySet empty;
        empty.provenance = bare.rule();
        result->report = make_report(*net->net, bare, empty);
        *out = result.release();
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

void mlcpm_result_free(mlcpm_result* result) { delete result; }

size_t mlcpm_result_community_count(const mlcpm_result* result) {
    return result == nullptr ? 0 : result->community_count;
}

size_t mlcpm_result_clique_count(const mlcpm_result* result) {
    return result == nullptr ? 0 : result->clique_count;
}

int mlcpm_result_render(const mlcpm_result* result, const char* format, char** out) {
    if (result == nullptr || out == nullptr) {
        return fail(MLCPM_ERR_USAGE, "result and out must not be null");
    }
    ReportFormat f;
    if (int status = render_format(format, &f); status != MLCPM_OK) {
        return status;
    }
    try {
        *out = dup_string(render_report(result->report, f));
        return MLCPM_OK;
    } catch (const std::exception& e) {
        return fail(e);
    }
}

void mlcpm_free_string(char* text) { delete[] text; }

} // extern "C"
