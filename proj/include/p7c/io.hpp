#ifndef P7C_IO_HPP
#define P7C_IO_HPP

#include <iosfwd>
#include <string>

#include "p7c/graph.hpp"
#include "p7c/listcolor.hpp"

namespace p7c {

enum class GraphFormat { kDimacs, kJson };

struct GraphFile {
  Graph graph;
  GraphFormat format = GraphFormat::kDimacs;

  /// External id of vertex 0: 1 for DIMACS, 0 for JSON.
  int id_offset() const { return format == GraphFormat::kDimacs ? 1 : 0; }
};

/// `p edge n m` header, then `e u v` lines (1-indexed); `c` lines are
/// comments. Throws InvalidInput with the offending line number.
Graph parse_dimacs(std::istream& in);
/// {"n": n, "edges": [[u, v], ...], "labels": [...]} with 0-indexed ids.
Graph parse_json(std::istream& in);

/// Picks the format from the first non-blank character ('{' means JSON).
GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

std::string to_dimacs(const Graph& g);
std::string to_json(const Graph& g);

/**
 * Reads `vertex:color` lines, vertex ids shifted by `id_offset`. Blank
 * lines, `c` comments and the solver's decision line are skipped, so solver
 * output can be fed back in directly. Unlisted vertices stay 0.
 */
Coloring parse_coloring(std::istream& in, int n, int id_offset);

}  // namespace p7c

#endif  // P7C_IO_HPP
