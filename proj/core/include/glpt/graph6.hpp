#pragma once

#include <string>
#include <string_view>

#include "glpt/graph.hpp"

namespace glpt {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// CR/LF are accepted. Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Bit-exact graph6: 1-byte header for n <= 62, "~" + 18-bit header above.
std::string encode_graph6(const Graph& g);

/// Decodes one (non-incremental) sparse6 line, leading ':' required.
/// Read-only: this library never emits sparse6.
Graph parse_sparse6(std::string_view text);

/// Dispatches on the leading ':' to sparse6, else graph6.
Graph parse_graph_line(std::string_view text);

}  // namespace glpt
