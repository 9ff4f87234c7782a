#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hashnet/graph.hpp"
#include "hashnet/network.hpp"
#include "hashnet/records.hpp"

namespace hashnet {

enum class GraphFormat { GraphML, Dot, EdgeCsv };

std::string_view to_string(GraphFormat f);
/// Accepts "graphml", "dot", "edge-csv". Throws UsageError otherwise.
GraphFormat parse_graph_format(std::string_view s);

/// Writes nodes and edges in sorted id order.
///
/// GraphML and DOT nodes carry in_degree (drawn as size), statuses
/// (color), followers (opacity), category and screen_name. Nodes without an
/// account record get zero counts and UNLABELED. Edge CSV is a
/// "source,target" header followed by one row per edge.
void export_graph(const DirectedGraph &g, const std::map<std::string, AccountRecord> &attributes,
                  GraphFormat format, std::ostream &out);

/// Reads an edge CSV written by export_graph. Throws ParseError.
EdgeList read_edge_csv(std::istream &in);

} // namespace hashnet
