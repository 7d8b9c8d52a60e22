#pragma once

// graph6 codec (n <= 62, single-byte header form) and a line-oriented
// edge-list format:  "n <N>" then one "u v" pair per line, 1-based.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "srm/graph.hpp"

namespace srm {

inline std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6_encode: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw std::invalid_argument("graph6_decode: multi-byte sizes (n > 62) not supported");
    if (first < 63 || first > 125) throw std::invalid_argument("graph6_decode: invalid size byte");
    const int n = first - 63;
    if (n < 1) throw std::invalid_argument("graph6_decode: vertex count must be >= 1");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes)
        throw std::invalid_argument("graph6_decode: body length mismatch");
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: invalid body byte");
        const int word = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const int on = (word >> b) & 1;
            if (bit >= nbits) {
                if (on) throw std::invalid_argument("graph6_decode: nonzero padding bits");
                continue;
            }
            if (on) {
                // bit index -> column-order pair (u, v)
                std::size_t j = bit;
                int v = 2;
                while (j >= static_cast<std::size_t>(v - 1)) { j -= v - 1; ++v; }
                g.add_edge_in_place(static_cast<int>(j) + 1, v);
            }
        }
    }
    return g;
}

inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (auto [u, v] : edges(g)) out << u << " " << v << "\n";
    return out.str();
}

inline Graph edge_list_decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    Graph g(1);
    bool have_n = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (!have_n) {
            int value;
            if (tok != "n" || !(ls >> value))
                throw std::invalid_argument("edge_list_decode: expected leading \"n <count>\" line");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("edge_list_decode: trailing tokens on size line");
            n = value;
            g = Graph(n);  // validates n >= 1
            have_n = true;
            continue;
        }
        int u, v;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw std::invalid_argument("edge_list_decode: malformed edge line: " + line);
        std::string extra;
        if (es >> extra) throw std::invalid_argument("edge_list_decode: trailing tokens on edge line");
        g.add_edge_in_place(u, v);  // validates range and u != v
    }
    if (!have_n) throw std::invalid_argument("edge_list_decode: missing \"n <count>\" line");
    return g;
}

// First meaningful byte decides: "n" starts an edge list, everything else
// (including the optional ">>graph6<<" header) is treated as graph6.
inline Graph parse_graph_auto(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (k == text.size()) throw std::invalid_argument("parse_graph_auto: empty input");
    if (text[k] == 'n' && k + 1 < text.size() &&
        std::isspace(static_cast<unsigned char>(text[k + 1])))
        return edge_list_decode(text.substr(k));
    // strip leading whitespace/newlines for the g6 path too
    std::string_view rest = text.substr(k);
    std::size_t end = rest.find('\n');
    return graph6_decode(end == std::string_view::npos ? rest : rest.substr(0, end));
}

}  // namespace srm
