#include "sgc/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sgc {

GraphParseError::GraphParseError(std::size_t line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

namespace {

// Significant lines only: comments stripped, blanks skipped.
std::vector<std::pair<std::size_t, std::string>> significant_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.emplace_back(line_no, std::string(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, std::size_t line_no, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw GraphParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw GraphParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

int parse_vertex(const std::string& tok, std::size_t line_no, int n) {
    int v = parse_int(tok, line_no, "a vertex index");
    if (v < 0 || v >= n)
        throw GraphParseError(line_no, "vertex " + std::to_string(v) + " out of range 0.." +
                                           std::to_string(n - 1));
    return v;
}

}  // namespace

SignedGraph parse_graph_text(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw GraphParseError(1, "empty graph description");

    auto head = tokens_of(lines[0].second);
    if (head[0] != "vertices")
        throw GraphParseError(lines[0].first, "expected 'vertices <n>' first");
    if (head.size() != 2) throw GraphParseError(lines[0].first, "expected 'vertices <n>'");
    int n = parse_int(head[1], lines[0].first, "a vertex count");
    if (n < 0) throw GraphParseError(lines[0].first, "negative vertex count");

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [line_no, line] = lines[i];
        auto toks = tokens_of(line);
        const std::string& kw = toks[0];
        if (kw == "edge") {
            if (toks.size() != 4)
                throw GraphParseError(line_no, "expected 'edge <u> <v> +|-'");
            int u = parse_vertex(toks[1], line_no, n);
            int v = parse_vertex(toks[2], line_no, n);
            if (toks[3] != "+" && toks[3] != "-")
                throw GraphParseError(line_no, "edge sign must be '+' or '-'");
            if (u == v)
                throw GraphParseError(line_no,
                                      "link endpoints must differ; declare a loop instead");
            edges.push_back(Edge::link(u, v, toks[3] == "+" ? 1 : -1));
        } else if (kw == "negloop" || kw == "posloop" || kw == "halfedge") {
            if (toks.size() != 2)
                throw GraphParseError(line_no, "expected '" + kw + " <v>'");
            int v = parse_vertex(toks[1], line_no, n);
            if (kw == "negloop")
                edges.push_back(Edge::negative_loop(v));
            else if (kw == "posloop")
                edges.push_back(Edge::positive_loop(v));
            else
                edges.push_back(Edge::half_edge(v));
        } else if (kw == "vertices") {
            throw GraphParseError(line_no, "duplicate vertices line");
        } else {
            throw GraphParseError(line_no, "unknown keyword '" + kw + "'");
        }
    }
    return build_graph(n, std::move(edges));
}

std::string write_graph_text(const SignedGraph& g) {
    std::string out = "vertices " + std::to_string(g.vertex_count) + "\n";
    for (const Edge& e : g.edges) {
        switch (e.kind) {
            case EdgeKind::PositiveLink:
                out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " +\n";
                break;
            case EdgeKind::NegativeLink:
                out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " -\n";
                break;
            case EdgeKind::PositiveLoop:
                out += "posloop " + std::to_string(e.u) + "\n";
                break;
            case EdgeKind::NegativeLoop:
                out += "negloop " + std::to_string(e.u) + "\n";
                break;
            case EdgeKind::HalfEdge:
                out += "halfedge " + std::to_string(e.u) + "\n";
                break;
        }
    }
    return out;
}

IncidenceMatrix parse_incidence_text(std::string_view text) {
    auto lines = significant_lines(text);
    IncidenceMatrix m;
    std::vector<std::int8_t> entries;
    int cols = -1;
    for (auto& [line_no, line] : lines) {
        auto toks = tokens_of(line);
        if (cols == -1)
            cols = static_cast<int>(toks.size());
        else if (static_cast<int>(toks.size()) != cols)
            throw GraphParseError(line_no, "ragged matrix row: expected " + std::to_string(cols) +
                                               " entries, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            int v = parse_int(t, line_no, "a matrix entry");
            if (v < -127 || v > 127)
                throw GraphParseError(line_no, "matrix entry out of range: " + t);
            entries.push_back(static_cast<std::int8_t>(v));
        }
        ++m.rows;
    }
    m.cols = cols == -1 ? 0 : cols;
    m.entries = std::move(entries);
    return m;
}

std::string write_incidence_text(const IncidenceMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += " ";
            out += std::to_string(static_cast<int>(m.at(r, c)));
        }
        out += "\n";
    }
    return out;
}

bool looks_like_edge_list(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) return false;
    auto toks = tokens_of(lines[0].second);
    return !toks.empty() && toks[0] == "vertices";
}

}  // namespace sgc
