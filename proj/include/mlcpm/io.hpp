#ifndef MLCPM_IO_HPP
#define MLCPM_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mlcpm/multiplex_network.hpp"

namespace mlcpm {

/// Parses the sectioned multiplex edge-list format:
///
///   #TYPE multiplex          (optional; "multilayer" is accepted too)
///   #VERSION ...             (ignored)
///   #LAYERS                  (one layer name per line; optional ",UNDIRECTED")
///   #ACTORS / #VERTICES      (node names, optionally with attribute values)
///   #EDGES                   (node,node,layer per line)
///
/// Lines starting with "--" are comments. Unrecognized "#SECTION" headers
/// skip their whole section. Fields split on commas or whitespace. Input
/// with no section headers is treated as an #EDGES body. A DIRECTED type
/// line is accepted and symmetrized; a warning is recorded. Self-loops and
/// malformed lines raise ParseError carrying the 1-based line number.
MultiplexNetwork parse_multiplex(std::string_view text, std::string_view name = "",
                                 std::vector<std::string>* warnings = nullptr);

MultiplexNetwork read_multiplex_file(const std::filesystem::path& path,
                                     std::vector<std::string>* warnings = nullptr);

/// Serializes in the same format (LAYERS, ACTORS, EDGES sections with nodes
/// and layers in interning order). parse(write(net)) == net.
std::string write_multiplex(const MultiplexNetwork& net);

/// FNV-1a, 64-bit. Input digests recorded per network source.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace mlcpm

#endif
