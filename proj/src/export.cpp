#include "hashnet/export.hpp"

#include <algorithm>
#include <vector>

#include "hashnet/error.hpp"
#include "hashnet/report.hpp"

namespace hashnet {

namespace {

struct NodeAttrs {
    std::size_t in_degree = 0;
    std::int64_t statuses = 0;
    std::int64_t followers = 0;
    std::string_view category = "UNLABELED";
    std::string screen_name;
};

std::vector<NodeIndex> sorted_nodes(const DirectedGraph &g) {
    std::vector<NodeIndex> order(g.node_count());
    for (NodeIndex v = 0; v < order.size(); ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](NodeIndex a, NodeIndex b) { return g.id(a) < g.id(b); });
    return order;
}

NodeAttrs attrs_for(const DirectedGraph &g, NodeIndex v,
                    const std::map<std::string, AccountRecord> &attributes) {
    NodeAttrs a;
    a.in_degree = g.in().degree(v);
    a.screen_name = g.id(v);
    if (auto it = attributes.find(g.id(v)); it != attributes.end()) {
        a.statuses = it->second.statuses_count_global;
        a.followers = it->second.followers_count_global;
        a.category = to_string(it->second.category);
        if (!it->second.screen_name.empty())
            a.screen_name = it->second.screen_name;
    }
    return a;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        case '\'':
            out += "&apos;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void write_graphml(const DirectedGraph &g, const std::map<std::string, AccountRecord> &attributes,
                   std::ostream &out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
        << "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
        << "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
           "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
        << "  <key id=\"schema_version\" for=\"graph\" attr.name=\"schema_version\" "
           "attr.type=\"int\"/>\n"
        << "  <key id=\"in_degree\" for=\"node\" attr.name=\"in_degree\" attr.type=\"int\"/>\n"
        << "  <key id=\"statuses\" for=\"node\" attr.name=\"statuses\" attr.type=\"long\"/>\n"
        << "  <key id=\"followers\" for=\"node\" attr.name=\"followers\" attr.type=\"long\"/>\n"
        << "  <key id=\"category\" for=\"node\" attr.name=\"category\" attr.type=\"string\"/>\n"
        << "  <key id=\"screen_name\" for=\"node\" attr.name=\"screen_name\" "
           "attr.type=\"string\"/>\n"
        << "  <graph id=\"network\" edgedefault=\"directed\">\n"
        << "    <data key=\"schema_version\">" << kSchemaVersion << "</data>\n";
    for (NodeIndex v : sorted_nodes(g)) {
        NodeAttrs a = attrs_for(g, v, attributes);
        out << "    <node id=\"" << xml_escape(g.id(v)) << "\">"
            << "<data key=\"in_degree\">" << a.in_degree << "</data>"
            << "<data key=\"statuses\">" << a.statuses << "</data>"
            << "<data key=\"followers\">" << a.followers << "</data>"
            << "<data key=\"category\">" << a.category << "</data>"
            << "<data key=\"screen_name\">" << xml_escape(a.screen_name) << "</data>"
            << "</node>\n";
    }
    for (const auto &[s, t] : g.sorted_edge_ids())
        out << "    <edge source=\"" << xml_escape(s) << "\" target=\"" << xml_escape(t)
            << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const DirectedGraph &g, const std::map<std::string, AccountRecord> &attributes,
               std::ostream &out) {
    out << "digraph network {\n"
        << "  graph [schema_version=" << kSchemaVersion << "];\n";
    for (NodeIndex v : sorted_nodes(g)) {
        NodeAttrs a = attrs_for(g, v, attributes);
        out << "  " << dot_quote(g.id(v)) << " [in_degree=" << a.in_degree
            << ", statuses=" << a.statuses << ", followers=" << a.followers
            << ", category=" << dot_quote(a.category)
            << ", screen_name=" << dot_quote(a.screen_name) << "];\n";
    }
    for (const auto &[s, t] : g.sorted_edge_ids())
        out << "  " << dot_quote(s) << " -> " << dot_quote(t) << ";\n";
    out << "}\n";
}

// Splits one CSV record; handles quoted fields without embedded newlines.
std::vector<std::string> split_csv(const std::string &line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted)
        throw ParseError(line_no, "unterminated quoted field");
    return fields;
}

} // namespace

std::string_view to_string(GraphFormat f) {
    switch (f) {
    case GraphFormat::GraphML:
        return "graphml";
    case GraphFormat::Dot:
        return "dot";
    case GraphFormat::EdgeCsv:
        return "edge-csv";
    }
    return "graphml";
}

GraphFormat parse_graph_format(std::string_view s) {
    for (GraphFormat f : {GraphFormat::GraphML, GraphFormat::Dot, GraphFormat::EdgeCsv})
        if (to_string(f) == s)
            return f;
    throw UsageError("unsupported graph format '" + std::string(s) +
                     "' (expected graphml, dot or edge-csv)");
}

void export_graph(const DirectedGraph &g, const std::map<std::string, AccountRecord> &attributes,
                  GraphFormat format, std::ostream &out) {
    switch (format) {
    case GraphFormat::GraphML:
        write_graphml(g, attributes, out);
        break;
    case GraphFormat::Dot:
        write_dot(g, attributes, out);
        break;
    case GraphFormat::EdgeCsv:
        out << "source,target\n";
        for (const auto &[s, t] : g.sorted_edge_ids())
            out << csv_field(s) << ',' << csv_field(t) << '\n';
        break;
    }
}

EdgeList read_edge_csv(std::istream &in) {
    EdgeList edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv(line, line_no);
        if (line_no == 1 && fields.size() == 2 && fields[0] == "source" && fields[1] == "target")
            continue;
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            throw ParseError(line_no, "expected two nonempty fields");
        edges.emplace_back(std::move(fields[0]), std::move(fields[1]));
    }
    return edges;
}

} // namespace hashnet
