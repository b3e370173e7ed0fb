#include "clawfree/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "clawfree/catalog.hpp"

namespace clawfree {

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | g.indicator(i, j);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (std::size_t k = 0; k < text.size(); ++k) {
        unsigned char ch = static_cast<unsigned char>(text[k]);
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("graph6: malformed byte at position " +
                                        std::to_string(k));
    }
    int n = text[0] - 63;
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: vertex count exceeds 62");
    int bits_needed = pair_count(n);
    int payload_bytes = (bits_needed + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + payload_bytes)
        throw std::invalid_argument("graph6: expected " + std::to_string(1 + payload_bytes) +
                                    " bytes, got " + std::to_string(text.size()));
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
        }
    return Graph::from_edges(n, es);
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> es;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (!(ls >> n) || n < 0 || n > kMaxVertices)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected vertex count in [0, 62]");
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": trailing tokens after vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected two endpoints");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing tokens");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": loop edge " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": endpoint out of range");
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count line");
    return Graph::from_edges(n, es);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Graph parse_graph_literal(const std::string& literal) {
    if (!literal.empty() && literal[0] == '@') {
        std::ifstream f(literal.substr(1));
        if (!f) throw std::invalid_argument("cannot open file '" + literal.substr(1) + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        std::string content = buf.str();
        // an edge list starts with a bare integer line; anything else is graph6
        std::istringstream probe(content);
        std::string first;
        while (std::getline(probe, first)) {
            auto hash = first.find('#');
            if (hash != std::string::npos) first.erase(hash);
            first = strip(first);
            if (!first.empty()) break;
        }
        bool numeric = !first.empty();
        for (char c : first)
            if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
        if (numeric) return parse_edgelist(content);
        return parse_graph6(first);
    }
    if (catalog::is_catalog_name(literal)) return catalog::named(literal);
    return parse_graph6(literal);
}

}  // namespace clawfree
