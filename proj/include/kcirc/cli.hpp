#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kcirc/multigraph.hpp"

namespace kcirc {

/// Parses the edge-list graph format:
///   # comment to end of line
///   v <vertexId>            declares a (possibly isolated) vertex
///   e <edgeId> <u> <v>      declares an edge; u = v is a loop
/// Identifiers match [A-Za-z0-9_.-]+. Edge endpoints declare their vertices
/// implicitly. Errors carry the offending line number.
MultiGraph parse_graph(const std::string& text);

/// Canonical serialization; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const MultiGraph& g);

/// Runs one CLI invocation (argv without the program name). Returns the exit
/// code: 0 success / property true, 1 property false (verify, equal),
/// 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcirc
