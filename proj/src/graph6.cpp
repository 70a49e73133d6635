#include "graph6.hpp"

#include <istream>
#include <sstream>

namespace hc {

MultiGraph parse_graph6(const std::string& line) {
    if (line.empty()) throw parse_error("empty graph6 record", 0);
    for (int i = 0; i < int(line.size()); ++i) {
        unsigned char c = line[i];
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range 63..126", i);
    }
    unsigned char header = line[0];
    if (header == 126) throw parse_error("long-form graph6 (n > 62) not supported", 0);
    int n = header - 63;
    int nbits = n * (n - 1) / 2;
    int need = (nbits + 5) / 6;
    if (int(line.size()) < 1 + need)
        throw parse_error("truncated graph6 bit stream", int(line.size()));
    if (int(line.size()) > 1 + need)
        throw parse_error("trailing bytes after graph6 record", 1 + need);

    MultiGraph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = bit / 6, pos = 5 - bit % 6;
            int value = (line[1 + group] - 63) >> pos & 1;
            if (value) g.add_edge(i, j);
        }
    for (int pad = nbits; pad < 6 * need; ++pad) {
        int group = pad / 6, pos = 5 - pad % 6;
        if ((line[1 + group] - 63) >> pos & 1)
            throw parse_error("nonzero graph6 padding bit", 1 + group);
    }
    return g;
}

std::string write_graph6(const MultiGraph& g) {
    if (!g.simple()) throw std::invalid_argument("graph6 cannot encode parallel edges");
    int n = g.n();
    if (n > 62) throw cap_error("short-form graph6 limited to n <= 62");
    std::string out;
    out.push_back(char(63 + n));
    int bit = 0;
    char cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= char(1 << (5 - bit));
            if (++bit == 6) {
                out.push_back(char(63 + cur));
                cur = 0;
                bit = 0;
            }
        }
    if (bit) out.push_back(char(63 + cur));
    return out;
}

MultiGraph parse_multi_edge_list(const std::string& line) {
    auto semi = line.find(';');
    if (semi == std::string::npos) throw parse_error("edge list record needs 'n;'", 0);
    int n;
    try {
        size_t used = 0;
        n = std::stoi(line.substr(0, semi), &used);
        while (used < semi && isspace((unsigned char)line[used])) ++used;
        if (used != semi) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
        throw parse_error("bad vertex count before ';'", 0);
    }
    if (n < 0 || n > kMaxVertices) throw parse_error("vertex count outside 0..64", 0);

    MultiGraph g(n);
    std::istringstream rest(line.substr(semi + 1));
    std::string tok;
    const int off = int(semi) + 1;  // token offsets reported from the list start
    while (rest >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
            throw parse_error("edge token '" + tok + "' is not u-v", off);
        int u, v;
        try {
            u = std::stoi(tok.substr(0, dash));
            v = std::stoi(tok.substr(dash + 1));
        } catch (const std::exception&) {
            throw parse_error("edge token '" + tok + "' is not u-v", off);
        }
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex index outside 0.." + std::to_string(n - 1) + " in '" + tok + "'",
                              off);
        if (u == v) throw parse_error("loop " + tok + " not allowed", off);
        if (g.multiplicity(u, v) >= 2)
            throw parse_error("multiplicity above 2 for pair " + tok, off);
        g.add_edge(u, v);
    }
    return g;
}

std::string write_multi_edge_list(const MultiGraph& g) {
    std::string out = std::to_string(g.n()) + ";";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int m = 0; m < g.multiplicity(u, v); ++m)
                out += " " + std::to_string(u) + "-" + std::to_string(v);
    return out;
}

MultiGraph parse_graph_line(const std::string& line) {
    if (line.find(';') != std::string::npos) return parse_multi_edge_list(line);
    return parse_graph6(line);
}

std::vector<MultiGraph> read_graph_stream(std::istream& in) {
    std::vector<MultiGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph_line(line));
    }
    return out;
}

}  // namespace hc
