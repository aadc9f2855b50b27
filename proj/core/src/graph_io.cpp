#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "ripcert/graph.hpp"

namespace ripcert::graph {

namespace {

// Blank lines and lines whose first non-space character is '#'.
bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            return ch == '#';
        }
    }
    return true;
}

// Parses exactly `count` integers and nothing else from `line`.
std::vector<long long> parse_ints(const std::string& line, std::size_t count, int line_no) {
    std::istringstream iss(line);
    std::vector<long long> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!(iss >> values[i])) {
            throw ParseError("expected " + std::to_string(count) + " integers, got \"" + line + "\"",
                             line_no);
        }
    }
    std::string trailing;
    if (iss >> trailing) {
        throw ParseError("trailing content \"" + trailing + "\"", line_no);
    }
    return values;
}

}  // namespace

RegularGraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;

    long long n = 0;
    long long d = 0;
    long long m = 0;
    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) {
            continue;
        }
        const auto header = parse_ints(line, 3, line_no);
        n = header[0];
        d = header[1];
        m = header[2];
        if (n <= 0 || d <= 0 || m < 0) {
            throw ParseError("header values must be positive (n d m)", line_no);
        }
        have_header = true;
    }
    if (!have_header) {
        throw ParseError("missing header line \"n d m\"", line_no == 0 ? 1 : line_no);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(n));
    while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) {
            continue;
        }
        const auto pair = parse_ints(line, 2, line_no);
        const long long u = pair[0];
        const long long v = pair[1];
        if (u == v) {
            throw ParseError("self-loop edge " + std::to_string(u) + " " + std::to_string(v),
                             line_no);
        }
        if (u < 0 || v < u || v >= n) {
            throw ParseError("edge endpoints must satisfy 0 <= u < v < n", line_no);
        }
        auto& row = seen[static_cast<std::size_t>(u)];
        if (std::find(row.begin(), row.end(), static_cast<int>(v)) != row.end()) {
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                             line_no);
        }
        row.push_back(static_cast<int>(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long long>(edges.size()) < m) {
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                         line_no);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_comment_or_blank(line)) {
            throw ParseError("unexpected content after " + std::to_string(m) + " edges", line_no);
        }
    }

    try {
        return RegularGraph::from_edges(static_cast<int>(n), static_cast<int>(d),
                                        std::move(edges));
    } catch (const ParameterError& err) {
        // Degree mismatches surface here; there is no single offending line.
        throw ParseError(std::string("invalid graph: ") + err.what());
    }
}

RegularGraph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file " + path.string());
    }
    return read_graph(in);
}

void write_graph(const RegularGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.degree() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_graph(const RegularGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open graph file " + path.string() + " for writing");
    }
    write_graph(g, out);
    if (!out) {
        throw ParseError("failed writing graph file " + path.string());
    }
}

}  // namespace ripcert::graph
