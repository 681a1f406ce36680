#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

constexpr int kExitUsage = 64;

// A constructor expression (see parse_family), a graph6 string, "@path" for
// the first graph6 line of a file, or "-" for stdin. Stdin and files may also
// hold a JSON object with a "g6" member, as printed by `construct`.
Graph resolve_graph(const std::string& spec, std::istream& in);

// Runs one command line (args exclude the program name). JSON goes to out,
// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclebound
