#include "ramsey_forge/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ramsey_forge/errors.hpp"

namespace rf {

namespace {

std::string next_content_line(std::istream& in, long& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return line;
    }
    return {};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    long line_no = 0;
    std::string header = next_content_line(in, line_no);
    if (header.empty()) throw ParseError("missing edge-list header", line_no);
    std::istringstream hs(header);
    long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("bad header, expected 'n m'", line_no);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long i = 0; i < m; ++i) {
        std::string l = next_content_line(in, line_no);
        if (l.empty()) throw ParseError("unexpected end of edge list", line_no);
        std::istringstream es(l);
        long u, v;
        if (!(es >> u >> v)) throw ParseError("bad edge line, expected 'u v'", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        edges.push_back({int(u), int(v)});
    }
    Graph g = Graph::from_edges(int(n), edges);
    if (g.edge_count() != uint64_t(m)) throw ParseError("duplicate edges in input");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_adjacency_matrix(std::istream& in) {
    long line_no = 0;
    std::vector<std::string> rows;
    for (std::string l = next_content_line(in, line_no); !l.empty(); l = next_content_line(in, line_no)) {
        std::string bits;
        for (char sym : l) {
            if (sym == '0' || sym == '1') bits += sym;
            else if (sym != ' ' && sym != '\t' && sym != '\r')
                throw ParseError("unexpected character in adjacency row", line_no);
        }
        if (!bits.empty()) rows.push_back(bits);
    }
    size_t n = rows.size();
    std::vector<Bitset> adj(n, Bitset(int(n)));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("adjacency matrix is not square");
        for (size_t j = 0; j < n; ++j)
            if (rows[i][j] == '1') adj[i].set(int(j));
    }
    return Graph::from_rows(std::move(adj));
}

void write_adjacency_matrix(std::ostream& out, const Graph& g) {
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (g.adjacent(i, j) ? '1' : '0');
        out << '\n';
    }
}

EdgeColoring read_colored_edge_list(std::istream& in) {
    long line_no = 0;
    std::string header = next_content_line(in, line_no);
    if (header.empty()) throw ParseError("missing coloring header", line_no);
    std::istringstream hs(header);
    long n = -1, m = -1, r = -1;
    if (!(hs >> n >> m >> r) || n < 0 || m < 0 || r < 1) throw ParseError("bad header, expected 'n m r'", line_no);
    std::vector<std::tuple<int, int, int>> entries;
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        std::string l = next_content_line(in, line_no);
        if (l.empty()) throw ParseError("unexpected end of colored edge list", line_no);
        std::istringstream es(l);
        long u, v, c;
        if (!(es >> u >> v >> c)) throw ParseError("bad line, expected 'u v color'", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw ParseError("bad edge", line_no);
        if (c < 1 || c > r) throw ParseError("color out of range", line_no);
        entries.push_back({int(u), int(v), int(c)});
        edges.push_back({int(u), int(v)});
    }
    Graph host = Graph::from_edges(int(n), edges);
    EdgeColoring col = EdgeColoring::graph_host(host, int(r));
    for (auto [u, v, c] : entries) col.set(u, v, c);
    return col;
}

void write_colored_edge_list(std::ostream& out, const EdgeColoring& c) {
    out << c.vertex_count() << ' ' << c.host().edge_count() << ' ' << c.colors() << '\n';
    for (auto [u, v] : c.host().edges()) out << u << ' ' << v << ' ' << c.color(u, v) << '\n';
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return f;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    {
        std::ifstream f = open_or_throw(path);
        try {
            return read_edge_list(f);
        } catch (const ParseError&) {
        }
    }
    std::ifstream f = open_or_throw(path);
    return read_adjacency_matrix(f);
}

EdgeColoring read_coloring_file(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return read_colored_edge_list(f);
}

}  // namespace rf
