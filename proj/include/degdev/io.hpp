#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "degdev/graph.hpp"

namespace degdev {

// Canonical edge-list interchange format:
//   line 1: "<n> <m>", then m lines "<u> <v>" with 0 <= u < v < n.
// Single-space separated ASCII decimal, one record per line. Lines starting
// with '#' are comments and skipped. u >= v, duplicates, vertices out of
// range, and an m mismatch are all rejected.
inline Graph parse_edge_list(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };
    auto parse_two = [](const std::string& line, long long& a, long long& b, const char* what) {
        std::istringstream ss(line);
        std::string tail;
        if (!(ss >> a >> b) || (ss >> tail))
            throw std::invalid_argument(std::string("malformed ") + what + " line: '" + line + "'");
    };

    std::string line;
    if (!next_line(line)) throw std::invalid_argument("empty edge-list input");
    long long n = 0, m = 0;
    parse_two(line, n, m, "header");
    if (n < 0 || m < 0) throw std::invalid_argument("negative n or m in header");

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        long long u = 0, v = 0;
        parse_two(line, u, v, "edge");
        if (u >= v) throw std::invalid_argument("edge endpoints must satisfy u < v: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(line))
        throw std::invalid_argument("trailing data after " + std::to_string(m) + " edges: '" + line + "'");
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

// graph6 decoder (standard 6-bit printable encoding of the upper triangle,
// column-major). Supports n <= 62, which covers everything nauty-scale tools
// exchange at this problem size.
inline Graph parse_graph6(std::string line) {
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw std::invalid_argument("empty graph6 line");
    if (static_cast<unsigned char>(line[0]) == 126)
        throw std::invalid_argument("graph6 graphs with n > 62 are not supported");
    int n = line[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("invalid graph6 size byte");

    const long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(line.size()) != 1 + bytes_needed)
        throw std::invalid_argument("graph6 line has wrong length for n=" + std::to_string(n));

    std::vector<VertexPair> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[1 + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("invalid graph6 data byte");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

// Auto-detecting reader: an input whose first non-comment line starts with a
// digit is an edge list, otherwise a single graph6 line.
inline Graph read_graph(std::istream& in) {
    std::streampos start = in.tellg();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (std::isdigit(static_cast<unsigned char>(line[0]))) {
            in.clear();
            in.seekg(start);
            return parse_edge_list(in);
        }
        return parse_graph6(line);
    }
    throw std::invalid_argument("no graph data in input");
}

}  // namespace degdev
