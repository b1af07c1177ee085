#include "chigap/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chigap {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_number(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        // n <= 68719476735 per the format; Graph caps n at int range anyway.
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

int decode_byte(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw std::invalid_argument("graph6: byte out of range: code " + std::to_string(u));
    return u - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_number(out, n);
    int acc = 0, nbits = 0;
    for (VertexId v = 1; v < n; ++v) {
        for (VertexId u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    std::size_t pos = 0;
    long long n = 0;
    if (decode_byte(line[0]) != 63) {
        n = decode_byte(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && decode_byte(line[1]) != 63) {
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated vertex count");
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(line[i]);
        pos = 4;
    } else {
        if (line.size() < 8) throw std::invalid_argument("graph6: truncated vertex count");
        for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(line[i]);
        pos = 8;
    }
    if (n > (1 << 20))
        throw std::invalid_argument("graph6: vertex count " + std::to_string(n) +
                                    " beyond supported size");
    const long long nbits = n * (n - 1) / 2;
    const std::size_t expect = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != expect)
        throw std::invalid_argument("graph6: body length " + std::to_string(line.size() - pos) +
                                    ", expected " + std::to_string(expect) + " for n=" +
                                    std::to_string(n));
    std::vector<std::pair<VertexId, VertexId>> edges;
    int acc = 0, have = 0;
    std::size_t at = pos;
    for (VertexId v = 1; v < n; ++v) {
        for (VertexId u = 0; u < v; ++u) {
            if (have == 0) {
                acc = decode_byte(line[at++]);
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) edges.emplace_back(u, v);
            --have;
        }
    }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == kGraph6Header) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

namespace {

// Strips comments and splits the stream into integer tokens, tracking line
// numbers for diagnostics.
struct TokenReader {
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::optional<long long> next() {
        for (;;) {
            while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            if (pos_ >= line_.size() || line_[pos_] == '#') {
                if (!std::getline(in_, line_)) return std::nullopt;
                ++lineno_;
                pos_ = 0;
                continue;
            }
            std::size_t start = pos_;
            while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
                   line_[pos_] != '#')
                ++pos_;
            std::string tok = line_.substr(start, pos_ - start);
            try {
                std::size_t used = 0;
                long long value = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return value;
            } catch (const std::exception&) {
                throw std::invalid_argument("edge list: line " + std::to_string(lineno_) +
                                            ": expected integer, got '" + tok + "'");
            }
        }
    }

    long long require(const char* what) {
        auto v = next();
        if (!v)
            throw std::invalid_argument(std::string("edge list: unexpected end of input, expected ") +
                                        what);
        return *v;
    }

    int line() const { return lineno_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
    int lineno_ = 0;
};

}  // namespace

std::vector<Graph> read_edge_list(std::istream& in) {
    std::vector<Graph> out;
    TokenReader tokens(in);
    for (;;) {
        auto first = tokens.next();
        if (!first) break;
        long long n = *first;
        long long m = tokens.require("edge count");
        if (n < 0 || n > (1 << 20))
            throw std::invalid_argument("edge list: bad vertex count " + std::to_string(n));
        if (m < 0)
            throw std::invalid_argument("edge list: bad edge count " + std::to_string(m));
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (long long i = 0; i < m; ++i) {
            long long u = tokens.require("edge endpoint");
            long long v = tokens.require("edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge list: edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range for n=" +
                                            std::to_string(n));
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
        out.push_back(Graph::from_edges(static_cast<int>(n), edges));
    }
    return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::optional<GraphFormat> detect_format(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty()) continue;
        if (line == kGraph6Header) return GraphFormat::graph6;
        if (line[0] == '#') return GraphFormat::edge_list;
        unsigned char c = static_cast<unsigned char>(line[0]);
        if (c >= 63 && c <= 126) return GraphFormat::graph6;
        return GraphFormat::edge_list;
    }
    return std::nullopt;
}

std::vector<Graph> read_graphs(std::istream& in, std::optional<GraphFormat> format) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (!format) format = detect_format(text);
    if (!format) return {};
    std::istringstream replay(text);
    return *format == GraphFormat::graph6 ? read_graph6(replay) : read_edge_list(replay);
}

}  // namespace chigap
