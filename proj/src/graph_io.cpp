#include "vmc/graph_io.hpp"

#include <sstream>

namespace vmc {

std::string to_graph6(const Graph& g) {
    const long n = g.size();
    if (n > 258047) throw resource_error("graph6: too many vertices");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 0x3f) + 63));
        out.push_back((char)(((n >> 6) & 0x3f) + 63));
        out.push_back((char)((n & 0x3f) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adj(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back((char)((acc << (6 - nb)) + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw input_error("graph6: truncated input");
    };
    need(1);
    long n;
    if ((unsigned char)s[pos] == 126) {
        ++pos;
        need(3);
        n = 0;
        for (int k = 0; k < 3; ++k) {
            int c = s[pos++] - 63;
            if (c < 0 || c > 63) throw input_error("graph6: bad byte");
            n = (n << 6) | c;
        }
    } else {
        n = s[pos++] - 63;
        if (n < 0 || n > 62) throw input_error("graph6: bad header byte");
    }
    std::vector<Label> verts;
    verts.reserve(n);
    for (long i = 0; i < n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::pair<Label, Label>> edges;
    int acc = 0, nb = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            if (nb == 0) {
                need(1);
                acc = s[pos++] - 63;
                if (acc < 0 || acc > 63) throw input_error("graph6: bad byte");
                nb = 6;
            }
            --nb;
            if ((acc >> nb) & 1) edges.emplace_back(std::to_string(i), std::to_string(j));
        }
    return Graph::from_edges(std::move(verts), edges);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (const auto& v : g.labels()) os << "  \"" << v << "\";\n";
    for (const auto& [a, b] : g.edges()) os << "  \"" << a << "\" -- \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream os;
    for (const auto& v : g.labels()) {
        os << v << ":";
        for (const auto& w : g.neighbors(v)) os << " " << w;
        os << "\n";
    }
    return os.str();
}

Graph from_adjacency_text(const std::string& text) {
    GraphBuilder b;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw input_error("adjacency text: missing ':'");
        std::string v = line.substr(0, colon);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
        if (v.empty()) throw input_error("adjacency text: empty vertex name");
        b.add_vertex(v);
        std::istringstream rest(line.substr(colon + 1));
        std::string w;
        while (rest >> w) b.add_edge(v, w);
    }
    return b.build();
}

}  // namespace vmc
