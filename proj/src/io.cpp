#include "mlcpm/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mlcpm/errors.hpp"

namespace mlcpm {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

/// Fields split on commas or runs of whitespace, empties dropped.
std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                fields.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        fields.push_back(std::move(current));
    }
    return fields;
}

enum class Section { type, version, layers, actors, vertices, edges, skip };

// Documents may be wider than the in-memory default; layer sets spill as
// needed. Beyond this a document is rejected as implausible.
constexpr std::size_t kDocumentLayerLimit = 4096;

std::string hex_digest(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

} // namespace

MultiplexNetwork parse_multiplex(std::string_view text, std::string_view name,
                                 std::vector<std::string>* warnings) {
    auto warn = [&](std::string message) {
        if (warnings) {
            warnings->push_back(std::move(message));
        }
    };

    MultiplexNetworkBuilder builder(kDocumentLayerLimit);
    // Bare input is an edge list; sections refine that.
    Section section = Section::edges;
    bool type_seen = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) {
            raw.remove_prefix(3);
        }
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        std::string_view line = trim(raw);
        if (line.empty() || line.starts_with("--")) {
            continue;
        }

        if (line.front() == '#') {
            std::string full = to_upper(trim(line.substr(1)));
            std::string header = full;
            std::string rest; // same-line value, e.g. "#TYPE multiplex"
            if (auto cut = full.find_first_of(" \t,"); cut != std::string::npos) {
                header = full.substr(0, cut);
                rest = std::string(trim(std::string_view(full).substr(cut + 1)));
            }
            if (full.ends_with("ATTRIBUTES")) {
                section = Section::skip; // declarations we carry no data for
            } else if (header == "TYPE") {
                section = Section::type;
                if (!rest.empty()) {
                    type_seen = true;
                    if (rest != "MULTIPLEX" && rest != "MULTILAYER") {
                        warn("line " + std::to_string(line_no) + ": unexpected type \"" + rest +
                             "\", reading as multiplex");
                    }
                }
            } else if (header == "VERSION") {
                section = Section::version;
            } else if (header == "LAYERS") {
                section = Section::layers;
            } else if (header == "ACTORS") {
                section = Section::actors;
            } else if (header == "VERTICES") {
                section = Section::vertices;
            } else if (header == "EDGES") {
                section = Section::edges;
            } else {
                // Unknown sections may carry data rows of their own; none of
                // them may leak into the edge list.
                section = Section::skip;
                warn("line " + std::to_string(line_no) + ": skipping unknown section #" + header);
            }
            continue;
        }

        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) {
            continue; // nothing but delimiters
        }
        switch (section) {
        case Section::type: {
            if (!type_seen) {
                type_seen = true;
                std::string value = to_upper(fields[0]);
                if (value != "MULTIPLEX" && value != "MULTILAYER") {
                    warn("line " + std::to_string(line_no) + ": unexpected type \"" + fields[0] +
                         "\", reading as multiplex");
                }
            }
            break;
        }
        case Section::version:
        case Section::skip:
            break;
        case Section::layers: {
            std::string directedness;
            if (fields.size() >= 2) {
                std::string last = to_upper(fields.back());
                if (last == "DIRECTED" || last == "UNDIRECTED") {
                    directedness = last;
                    fields.pop_back();
                }
            }
            if (fields.size() == 2 && fields[0] != fields[1]) {
                throw ParseError(line_no, 0, "interlayer declarations are not supported");
            }
            if (fields.size() > 2) {
                throw ParseError(line_no, 0, "too many fields in layer declaration");
            }
            builder.add_layer(fields[0]);
            if (directedness == "DIRECTED") {
                warn("line " + std::to_string(line_no) + ": layer \"" + fields[0] +
                     "\" declared DIRECTED; edges are read as undirected");
            }
            break;
        }
        case Section::actors:
            builder.add_node(fields[0]);
            break;
        case Section::vertices:
            builder.add_node(fields[0]);
            if (fields.size() >= 2) {
                builder.add_layer(fields[1]);
            }
            break;
        case Section::edges: {
            if (fields.size() < 3) {
                throw ParseError(line_no, 0,
                                 "edge needs source, target and layer, got " +
                                     std::to_string(fields.size()) + " field(s)");
            }
            if (fields[0] == fields[1]) {
                throw ParseError(line_no, 0, "self-loop on node \"" + fields[0] + "\"");
            }
            builder.add_edge(fields[0], fields[1], fields[2]);
            break;
        }
        }
    }

    builder.set_source(name.empty() ? "<string>" : std::string(name), hex_digest(fnv1a64(text)));
    return builder.build();
}

MultiplexNetwork read_multiplex_file(const std::filesystem::path& path,
                                     std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read " + path.string());
    }
    return parse_multiplex(buffer.str(), path.string(), warnings);
}

std::string write_multiplex(const MultiplexNetwork& net) {
    std::ostringstream out;
    out << "#TYPE multiplex\n\n#LAYERS\n";
    for (LayerIndex l = 0; l < net.layer_count(); ++l) {
        out << net.layer_name(l) << ",UNDIRECTED\n";
    }
    out << "\n#ACTORS\n";
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
        out << net.node_name(v) << "\n";
    }
    out << "\n#EDGES\n";
    for (NodeIndex a = 0; a < net.node_count(); ++a) {
        for (NodeIndex b : net.neighbors(a)) {
            if (a < b) {
                for (LayerIndex l : net.pair_layers(a, b).indices()) {
                    out << net.node_name(a) << "," << net.node_name(b) << ","
                        << net.layer_name(l) << "\n";
                }
            }
        }
    }
    return out.str();
}

} // namespace mlcpm
