#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hc {

// Hard vertex cap: adjacency rows are single 64-bit masks.
inline constexpr int kMaxVertices = 64;

// Thrown when a configured or structural cap is exceeded (CLI exit code 4).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a construction's advertised postcondition fails validation
// (CLI exit code 3).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected labeled multigraph, no loops, edge multiplicity at most 2.
// Vertices are 0..n-1.  Two mask layers per vertex: `one_` holds neighbors
// with multiplicity >= 1, `two_` those with multiplicity == 2.
class MultiGraph {
public:
    MultiGraph() = default;

    explicit MultiGraph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw cap_error("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
        one_.fill(0);
        two_.fill(0);
    }

    int n() const { return n_; }

    int multiplicity(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return 0;
        return ((one_[u] >> v) & 1) + ((two_[u] >> v) & 1);
    }

    bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

    // Raises multiplicity of {u,v} by `m`.
    void add_edge(int u, int v, int m = 1) {
        set_multiplicity(u, v, multiplicity(u, v) + m);
    }

    void set_multiplicity(int u, int v, int m) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            if (m != 0) throw std::invalid_argument("loop at vertex " + std::to_string(u));
            return;
        }
        if (m < 0 || m > 2)
            throw std::invalid_argument("edge multiplicity " + std::to_string(m) +
                                        " outside 0..2 for pair " + std::to_string(u) + "-" +
                                        std::to_string(v));
        uint64_t bu = uint64_t(1) << u, bv = uint64_t(1) << v;
        one_[u] &= ~bv; one_[v] &= ~bu;
        two_[u] &= ~bv; two_[v] &= ~bu;
        if (m >= 1) { one_[u] |= bv; one_[v] |= bu; }
        if (m == 2) { two_[u] |= bv; two_[v] |= bu; }
    }

    // Removes one copy of {u,v}; throws if absent.
    void remove_edge_copy(int u, int v) {
        int m = multiplicity(u, v);
        if (m == 0)
            throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " to remove");
        set_multiplicity(u, v, m - 1);
    }

    // Mask of neighbors with multiplicity >= 1.
    uint64_t neighbors(int v) const { check_vertex(v); return one_[v]; }
    // Mask of neighbors joined by a doubled edge.
    uint64_t doubled(int v) const { check_vertex(v); return two_[v]; }

    // Degree counts each parallel copy once per endpoint.
    int degree(int v) const {
        check_vertex(v);
        return __builtin_popcountll(one_[v]) + __builtin_popcountll(two_[v]);
    }

    // Edge count with multiplicity.
    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    int simple_edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += __builtin_popcountll(one_[v]);
        return total / 2;
    }

    bool simple() const {
        for (int v = 0; v < n_; ++v)
            if (two_[v]) return false;
        return true;
    }

    uint64_t vertex_mask() const { return n_ == 64 ? ~uint64_t(0) : (uint64_t(1) << n_) - 1; }

    // Unique unordered pairs u < v with multiplicity >= 1.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            uint64_t rest = one_[u] >> (u + 1) << (u + 1);
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                out.push_back({u, v});
            }
        }
        return out;
    }

    bool operator==(const MultiGraph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (one_[v] != o.one_[v] || two_[v] != o.two_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." +
                                        std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::array<uint64_t, kMaxVertices> one_{};
    std::array<uint64_t, kMaxVertices> two_{};
};

// Multiset of vertex degrees plus the (k,l)-regularity predicates.
struct DegreeProfile {
    std::vector<int> degrees;       // per vertex
    std::map<int, int> histogram;   // degree -> count

    bool is_k_regular(int k) const {
        return histogram.size() == 1 && histogram.count(k) && !degrees.empty();
    }
    // Degrees k and l only, at least one vertex of each; k == l degrades to k-regular.
    bool is_kl_regular(int k, int l) const {
        if (k == l) return is_k_regular(k);
        return histogram.size() == 2 && histogram.count(k) && histogram.count(l);
    }
};

DegreeProfile degree_profile(const MultiGraph& g);

// Simple-graph complement; rejects multigraphs.
MultiGraph complement(const MultiGraph& g);

bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

// Exact vertex connectivity.  kappa <= 3 decided by explicit cut enumeration,
// larger values by unit-capacity vertex flows.  Requires n >= 2.
int vertex_connectivity(const MultiGraph& g);

// Builders used all over the test and construction code.
MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Induced subgraph on the vertices of `mask`, relabeled 0..k-1 in increasing
// original order.  `old_ids`, if given, receives the original labels.
MultiGraph induced_subgraph(const MultiGraph& g, uint64_t mask, std::vector<int>* old_ids = nullptr);

// Image of g under vertex relabeling v -> perm[v].
MultiGraph permuted(const MultiGraph& g, const std::vector<int>& perm);

}  // namespace hc
