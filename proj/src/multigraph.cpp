#include "multigraph.hpp"

#include <algorithm>

namespace hc {

DegreeProfile degree_profile(const MultiGraph& g) {
    DegreeProfile p;
    p.degrees.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        p.degrees[v] = g.degree(v);
        p.histogram[p.degrees[v]]++;
    }
    return p;
}

MultiGraph complement(const MultiGraph& g) {
    if (!g.simple()) throw std::invalid_argument("complement of a multigraph is undefined here");
    MultiGraph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

namespace {

// Vertices of `from`'s component inside `allowed`.
uint64_t reach(const MultiGraph& g, uint64_t allowed, int from) {
    uint64_t seen = uint64_t(1) << from, frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & allowed & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

int component_count(const MultiGraph& g, uint64_t allowed) {
    int comps = 0;
    uint64_t left = allowed;
    while (left) {
        int v = __builtin_ctzll(left);
        left &= ~reach(g, allowed, v);
        ++comps;
    }
    return comps;
}

// Max number of internally vertex-disjoint s-t paths (unit vertex capacities),
// via augmenting paths in the split digraph.
int vertex_flow(const MultiGraph& g, int s, int t) {
    int n = g.n();
    // node 2v = in-copy, 2v+1 = out-copy
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u) {
        uint64_t nb = g.neighbors(u);
        while (nb) {
            int v = __builtin_ctzll(nb);
            nb &= nb - 1;
            cap[2 * u + 1][2 * v] = n;
        }
    }
    int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(2 * n, -1);
        std::vector<int> queue{src};
        prev[src] = src;
        for (size_t qi = 0; qi < queue.size() && prev[dst] < 0; ++qi) {
            int x = queue[qi];
            for (int y = 0; y < 2 * n; ++y)
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        if (prev[dst] < 0) break;
        for (int y = dst; y != src; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_connected(const MultiGraph& g) {
    if (g.n() == 0) return true;
    return reach(g, g.vertex_mask(), 0) == g.vertex_mask();
}

bool is_bipartite(const MultiGraph& g) {
    std::vector<int> color(g.n(), -1);
    for (int start = 0; start < g.n(); ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int vertex_connectivity(const MultiGraph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs n >= 2");
    if (!is_connected(g)) return 0;

    // Cut sizes 1..3 by direct enumeration; that is all the desk-scale
    // classes distinguish, and it is exact.
    for (int size = 1; size <= 3 && size <= n - 2; ++size) {
        std::vector<int> cut(size);
        auto try_cuts = [&](auto&& self, int pos, int first) -> bool {
            if (pos == size) {
                uint64_t removed = 0;
                for (int c : cut) removed |= uint64_t(1) << c;
                uint64_t rest = g.vertex_mask() & ~removed;
                if (!rest) return false;
                return component_count(g, rest) > 1;
            }
            for (int v = first; v < n; ++v) {
                cut[pos] = v;
                if (self(self, pos + 1, v + 1)) return true;
            }
            return false;
        };
        if (try_cuts(try_cuts, 0, 0)) return size;
    }
    if (n <= 5) return n - 1;  // no cut of size <= 3 possible, graph on <= 5 vertices

    // Menger: kappa = min over non-adjacent pairs of the vertex flow.
    int best = n - 1;
    bool any_pair = false;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) {
                any_pair = true;
                best = std::min(best, vertex_flow(g, s, t));
            }
    if (!any_pair) return n - 1;  // complete graph
    return best;
}

MultiGraph complete_graph(int n) {
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

MultiGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    MultiGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

MultiGraph path_graph(int n) {
    MultiGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

MultiGraph complete_bipartite(int a, int b) {
    MultiGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

MultiGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

MultiGraph induced_subgraph(const MultiGraph& g, uint64_t mask, std::vector<int>* old_ids) {
    std::vector<int> ids;
    for (int v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1) ids.push_back(v);
    MultiGraph sub(int(ids.size()));
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) {
            int m = g.multiplicity(ids[i], ids[j]);
            if (m) sub.set_multiplicity(int(i), int(j), m);
        }
    if (old_ids) *old_ids = std::move(ids);
    return sub;
}

MultiGraph permuted(const MultiGraph& g, const std::vector<int>& perm) {
    MultiGraph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int m = g.multiplicity(u, v);
            if (m) h.set_multiplicity(perm[u], perm[v], m);
        }
    return h;
}

}  // namespace hc
