#include "mergm/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mergm {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

NodeLevel parse_node_level(const std::string& token, const std::string& path, long line) {
    const std::string t = trim(token);
    if (t == "actor" || t == "Actor" || t == "A" || t == "a") return NodeLevel::Actor;
    if (t == "object" || t == "Object" || t == "O" || t == "o") return NodeLevel::Object;
    throw ParseError(path, line, "unknown node level '" + token + "' (expected actor or object)");
}

TieLevel parse_tie_level(const std::string& token, const std::string& path, long line) {
    const std::string t = trim(token);
    if (t == "A" || t == "a") return TieLevel::A;
    if (t == "B" || t == "b") return TieLevel::B;
    if (t == "X" || t == "x") return TieLevel::X;
    throw ParseError(path, line, "unknown edge level '" + token + "' (expected A, B or X)");
}

}  // namespace

NodeTable read_nodes_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) throw ParseError(path, 1, "missing header row");
    ++line_no;
    std::vector<std::string> header = split_csv(line);
    if (header.size() < 3 || header[0] != "id" || header[1] != "level" || header[2] != "group")
        throw ParseError(path, 1, "node header must start with id,level,group");

    NodeTable table;
    table.attribute_names.assign(header.begin() + 3, header.end());

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() < 3)
            throw ParseError(path, line_no, "node row needs at least id,level,group");
        NodeTableRow row;
        row.id = fields[0];
        if (row.id.empty()) throw ParseError(path, line_no, "empty node id");
        row.level = parse_node_level(fields[1], path, line_no);
        row.group = fields[2];
        if (row.group.empty()) throw ParseError(path, line_no, "empty group for node '" + row.id + "'");
        if (row.level == NodeLevel::Actor) {
            if (fields.size() < 3 + table.attribute_names.size())
                throw ParseError(path, line_no,
                                 "actor '" + row.id + "' is missing attribute columns");
            row.attr_values.assign(fields.begin() + 3,
                                   fields.begin() + 3 + table.attribute_names.size());
            for (std::size_t a = 0; a < row.attr_values.size(); ++a)
                if (row.attr_values[a].empty())
                    throw ParseError(path, line_no,
                                     "actor '" + row.id + "' has empty value for attribute '" +
                                         table.attribute_names[a] + "'");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<EdgeWaveRow> read_edges_csv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) throw ParseError(path, 1, "missing header row");
    ++line_no;
    std::vector<std::string> header = split_csv(line);
    if (header.size() < 4 || header[0] != "level" || header[1] != "from" || header[2] != "to" ||
        header[3] != "wave")
        throw ParseError(path, 1, "edge header must be level,from,to,wave");

    std::vector<EdgeWaveRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() < 4) throw ParseError(path, line_no, "edge row needs level,from,to,wave");
        EdgeWaveRow row;
        row.edge.level = parse_tie_level(fields[0], path, line_no);
        row.edge.from = fields[1];
        row.edge.to = fields[2];
        if (row.edge.from.empty() || row.edge.to.empty())
            throw ParseError(path, line_no, "empty endpoint id");
        try {
            std::size_t used = 0;
            row.wave = std::stoi(fields[3], &used);
            if (used != fields[3].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(path, line_no, "wave must be an integer, got '" + fields[3] + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

LoadedWave load_wave(const std::string& nodes_path, const std::string& edges_path,
                     const LoadOptions& options) {
    NodeTable nodes = read_nodes_csv(nodes_path);
    std::vector<EdgeWaveRow> all_edges = read_edges_csv(edges_path);

    LoadedWave out;
    std::vector<EdgeTableRow> edges;
    for (const EdgeWaveRow& row : all_edges) {
        if (row.wave == options.wave)
            edges.push_back(row.edge);
        else
            ++out.summary.edge_rows_ignored;
    }

    BuildReport report;
    MultilevelNetwork net = build_network(nodes.rows, edges, nodes.attribute_names, &report);

    if (options.min_usage_filter) {
        std::set<std::string> dropped;
        for (int o = 0; o < net.n_objects(); ++o)
            if (net.degree_x_object(o) < 2) dropped.insert(net.object_labels()[o]);
        out.summary.filtered_objects = static_cast<long long>(dropped.size());
        if (!dropped.empty()) {
            std::vector<NodeTableRow> filtered_nodes;
            for (const NodeTableRow& row : nodes.rows)
                if (row.level == NodeLevel::Actor || !dropped.count(row.id))
                    filtered_nodes.push_back(row);
            std::vector<EdgeTableRow> filtered_edges;
            for (const EdgeTableRow& edge : edges)
                if (edge.level == TieLevel::A ||
                    (!dropped.count(edge.from) && !dropped.count(edge.to)))
                    filtered_edges.push_back(edge);
            report = BuildReport{};
            net = build_network(filtered_nodes, filtered_edges, nodes.attribute_names, &report);
        }
    }

    out.summary.n_actors = net.n_actors();
    out.summary.n_objects = net.n_objects();
    out.summary.edges_a = report.edges_a;
    out.summary.edges_b = report.edges_b;
    out.summary.edges_x = report.edges_x;
    out.summary.duplicate_edges = report.duplicate_edges;
    out.network = std::move(net);
    return out;
}

void write_network_csv(const MultilevelNetwork& net, const std::string& nodes_path,
                       const std::string& edges_path, int wave) {
    std::ofstream nodes(nodes_path);
    if (!nodes) throw ParseError(nodes_path, 0, "cannot open file for writing");
    nodes << "id,level,group";
    for (const std::string& name : net.attributes().names()) nodes << "," << name;
    nodes << "\n";
    for (int i = 0; i < net.n_actors(); ++i) {
        nodes << net.actor_labels()[i] << ",actor,"
              << net.partition().group_names[net.partition().actor_group[i]];
        for (int a = 0; a < net.attributes().count(); ++a)
            nodes << "," << net.attributes().value(a, i);
        nodes << "\n";
    }
    for (int o = 0; o < net.n_objects(); ++o) {
        nodes << net.object_labels()[o] << ",object,"
              << net.partition().group_names[net.partition().object_group[o]];
        for (int a = 0; a < net.attributes().count(); ++a) nodes << ",";
        nodes << "\n";
    }

    std::ofstream edges(edges_path);
    if (!edges) throw ParseError(edges_path, 0, "cannot open file for writing");
    edges << "level,from,to,wave\n";
    for (int i = 0; i < net.n_actors(); ++i)
        for (int j = i + 1; j < net.n_actors(); ++j)
            if (net.tie_a(i, j))
                edges << "A," << net.actor_labels()[i] << "," << net.actor_labels()[j] << ","
                      << wave << "\n";
    for (int o = 0; o < net.n_objects(); ++o)
        for (int p = o + 1; p < net.n_objects(); ++p)
            if (net.tie_b(o, p))
                edges << "B," << net.object_labels()[o] << "," << net.object_labels()[p] << ","
                      << wave << "\n";
    for (int i = 0; i < net.n_actors(); ++i)
        for (int o = 0; o < net.n_objects(); ++o)
            if (net.tie_x(i, o))
                edges << "X," << net.actor_labels()[i] << "," << net.object_labels()[o] << ","
                      << wave << "\n";
}

}  // namespace mergm
