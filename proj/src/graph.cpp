#include "turanwheel/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tw {

bool Graph::is_consistent() const {
    const VertexSet all = vertices();
    for (int v = 0; v < order_; ++v) {
        if (adj_[v] & ~all) return false;
        if ((adj_[v] >> v) & 1) return false;
        VertexSet nb = adj_[v];
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (!has_edge(u, v)) return false;
        }
    }
    for (int v = order_; v < kMaxOrder; ++v)
        if (adj_[v]) return false;
    return true;
}

GraphBuilder::GraphBuilder(int order) {
    if (order < 0 || order > Graph::kMaxOrder)
        throw InvalidParameter("graph order must be in [0, 64]");
    g_.order_ = order;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g_.order_ || v >= g_.order_)
        throw InvalidParameter("edge endpoints must be distinct vertices");
    g_.adj_[u] |= vertex_bit(v);
    g_.adj_[v] |= vertex_bit(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g_.order_ || v >= g_.order_)
        throw InvalidParameter("edge endpoints must be distinct vertices");
    g_.adj_[u] &= ~vertex_bit(v);
    g_.adj_[v] &= ~vertex_bit(u);
}

int GraphBuilder::push_vertex(VertexSet neighbors) {
    if (g_.order_ >= Graph::kMaxOrder)
        throw CapacityExceeded("graph order cap of 64 exceeded");
    if (neighbors & ~full_vertex_set(g_.order_))
        throw InvalidParameter("neighbor set contains unknown vertices");
    const int v = g_.order_++;
    g_.adj_[v] = neighbors;
    VertexSet nb = neighbors;
    while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        g_.adj_[u] |= vertex_bit(v);
    }
    return v;
}

void GraphBuilder::pop_vertex() {
    if (g_.order_ == 0) throw InvalidParameter("pop_vertex on empty graph");
    const int v = --g_.order_;
    VertexSet nb = g_.adj_[v];
    g_.adj_[v] = 0;
    while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        g_.adj_[u] &= ~vertex_bit(v);
    }
}

Graph make_cycle(int t) {
    if (t < 3 || t > Graph::kMaxOrder)
        throw InvalidParameter("cycle length must be in [3, 64]");
    GraphBuilder b(t);
    for (int v = 0; v < t; ++v) b.add_edge(v, (v + 1) % t);
    return b.build();
}

Graph make_clique(int s) {
    if (s < 0 || s > Graph::kMaxOrder)
        throw InvalidParameter("clique size must be in [0, 64]");
    GraphBuilder b(s);
    for (int v = 1; v < s; ++v)
        for (int u = 0; u < v; ++u) b.add_edge(u, v);
    return b.build();
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng + nh > Graph::kMaxOrder)
        throw CapacityExceeded("join exceeds the 64-vertex cap");
    GraphBuilder b(ng + nh);
    for (int v = 0; v < ng; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) b.add_edge(u, v);
    for (int v = 0; v < nh; ++v)
        for (int u = 0; u < v; ++u)
            if (h.has_edge(u, v)) b.add_edge(ng + u, ng + v);
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < nh; ++y) b.add_edge(x, ng + y);
    return b.build();
}

PartSizes balanced_parts(int n, int r) {
    if (r < 1) throw InvalidParameter("part count must be positive");
    if (n < 0) throw InvalidParameter("order must be non-negative");
    PartSizes ps;
    ps.parts.resize(r);
    const int q = n / r, rem = n % r;
    for (int i = 0; i < r; ++i) ps.parts[i] = q + (i < rem ? 1 : 0);
    return ps;
}

Graph make_complete_multipartite(const PartSizes& parts) {
    if (parts.parts.empty()) throw InvalidParameter("part list must be non-empty");
    long long total = 0;
    for (int p : parts.parts) {
        if (p < 0) throw InvalidParameter("part sizes must be non-negative");
        total += p;
    }
    if (total > Graph::kMaxOrder)
        throw CapacityExceeded("multipartite order exceeds the 64-vertex cap");
    GraphBuilder b(static_cast<int>(total));
    int base = 0;
    for (int p : parts.parts) {
        for (int v = base + p; v < total; ++v)
            for (int u = base; u < base + p; ++u) b.add_edge(u, v);
        base += p;
    }
    return b.build();
}

VertexSet common_neighborhood(const Graph& g, VertexSet s) {
    if (s & ~g.vertices())
        throw InvalidParameter("vertex set not contained in V(G)");
    VertexSet acc = g.vertices();
    while (s) {
        int v = __builtin_ctzll(s);
        s &= s - 1;
        acc &= g.neighbors(v);
    }
    return acc;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int buf = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            buf = (buf << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(buf + 63));
                buf = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((buf << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    std::size_t pos = 0;
    auto sextet = [&s](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte outside graph6 alphabet", i);
        return c - 63;
    };

    if (s.empty()) throw Graph6ParseError("empty input", 0);
    long n;
    if (s[0] == '~') {
        if (s.size() < 4) throw Graph6ParseError("truncated order field", s.size());
        if (s[1] == '~') throw Graph6ParseError("order exceeds the 64-vertex cap", 1);
        n = (static_cast<long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > Graph::kMaxOrder)
        throw Graph6ParseError("order exceeds the 64-vertex cap", 0);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos < nbytes)
        throw Graph6ParseError("truncated edge bits", s.size());
    if (s.size() - pos > nbytes)
        throw Graph6ParseError("trailing bytes after edge bits", pos + nbytes);

    GraphBuilder b(static_cast<int>(n));
    int u = 0, v = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        const int x = sextet(pos + i);
        for (int j = 0; j < 6; ++j) {
            const std::size_t bit = i * 6 + j;
            const int val = (x >> (5 - j)) & 1;
            if (bit < nbits) {
                if (val) b.add_edge(u, v);
                if (++u == v) { u = 0; ++v; }
            } else if (val) {
                throw Graph6ParseError("nonzero padding bits", pos + i);
            }
        }
    }
    return b.build();
}

} // namespace tw
