#include "generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "canonical.hpp"
#include "surgery.hpp"

namespace hc {

namespace {

// Edge-augmentation generator over a fixed per-vertex degree target vector.
// Always extends the smallest unfinished vertex u by a neighbor above its
// previously added one; among untouched vertices of the same target class
// only the smallest may be used.  Every isomorphism class with the given
// target multiset admits a compliant labeling, so dedup at the leaves by
// canonical form yields exactly the class list.
struct TargetGenerator {
    int n;
    std::vector<int> target;
    bool connected, bipartite_only;
    MultiGraph g;
    std::vector<int> deg, last_nb;
    std::map<CanonicalForm, MultiGraph>* out;

    TargetGenerator(std::vector<int> targets, bool conn, bool bip,
                    std::map<CanonicalForm, MultiGraph>* sink)
        : n(int(targets.size())),
          target(std::move(targets)),
          connected(conn),
          bipartite_only(bip),
          g(n),
          deg(n, 0),
          last_nb(n, -1),
          out(sink) {}

    bool prefix_component_closed() const {
        // a component made of finished vertices can never grow again
        uint64_t all = g.vertex_mask();
        uint64_t left = all;
        while (left) {
            int v0 = __builtin_ctzll(left);
            uint64_t seen = uint64_t(1) << v0, frontier = seen;
            while (frontier) {
                uint64_t next = 0;
                while (frontier) {
                    int x = __builtin_ctzll(frontier);
                    frontier &= frontier - 1;
                    next |= g.neighbors(x) & ~seen;
                }
                seen |= next;
                frontier = next;
            }
            bool all_done = true;
            uint64_t scan = seen;
            while (scan && all_done) {
                int x = __builtin_ctzll(scan);
                scan &= scan - 1;
                all_done = deg[x] == target[x];
            }
            if (all_done && seen != all) return true;
            left &= ~seen;
        }
        return false;
    }

    void leaf() {
        if (connected && !is_connected(g)) return;
        if (bipartite_only && !is_bipartite(g)) return;
        out->emplace(canonical_form(g), g);
    }

    void rec() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < target[v]) {
                u = v;
                break;
            }
        if (u < 0) {
            leaf();
            return;
        }
        // candidates for u's next neighbor; untouched vertices of a class are
        // interchangeable, so only the smallest of each class branches, but
        // the feasibility count must include the whole class
        std::vector<int> cands;
        int potential = 0;
        std::map<int, int> first_untouched;  // target class -> smallest untouched vertex
        for (int w = u + 1; w < n; ++w)
            if (deg[w] == 0 && !first_untouched.count(target[w])) first_untouched[target[w]] = w;
        for (int w = std::max(u + 1, last_nb[u] + 1); w < n; ++w) {
            if (deg[w] >= target[w] || g.adjacent(u, w)) continue;
            ++potential;
            if (deg[w] == 0 && first_untouched[target[w]] != w) continue;
            cands.push_back(w);
        }
        int need = target[u] - deg[u];
        if (potential < need) return;
        for (int w : cands) {
            g.add_edge(u, w);
            deg[u]++;
            deg[w]++;
            int saved = last_nb[u];
            last_nb[u] = w;
            bool dead = false;
            if (connected && deg[u] == target[u]) dead = prefix_component_closed();
            if (!dead) rec();
            last_nb[u] = saved;
            deg[u]--;
            deg[w]--;
            g.remove_edge_copy(u, w);
        }
    }
};

void run_targets(std::vector<int> targets, bool connected, bool bipartite,
                 std::map<CanonicalForm, MultiGraph>& sink) {
    long long total = 0;
    for (int t : targets) total += t;
    if (total % 2) return;  // parity-infeasible assignment
    int n = int(targets.size());
    for (int t : targets)
        if (t < 0 || t >= n) return;
    TargetGenerator gen(std::move(targets), connected, bipartite, &sink);
    gen.rec();
}

std::vector<MultiGraph> collect(std::map<CanonicalForm, MultiGraph>& sink) {
    std::vector<MultiGraph> out;
    out.reserve(sink.size());
    for (auto& [form, g] : sink) out.push_back(g);
    return out;
}

}  // namespace

double generation_effort_log10(const GenerationSpec& spec) {
    // stub-pairing estimate: (S-1)!! / prod(target!)  with S = sum of targets
    double avg = spec.k;
    if (spec.kind == GenerationSpec::Kind::two_degrees) avg = (spec.k + spec.l) / 2.0;
    double stubs = avg * spec.n;
    double log10 = 0;
    for (double s = stubs - 1; s > 1; s -= 2) log10 += std::log10(s);
    log10 -= spec.n * std::lgamma(avg + 1) / std::log(10.0);
    return std::max(0.0, log10);
}

std::vector<MultiGraph> generate_graphs(const GenerationSpec& spec, const GenerationLimits& limits) {
    if (spec.n < 0 || spec.n > kMaxVertices) throw cap_error("order outside 0..64");
    if (spec.n > limits.max_n && !limits.force) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "generation cap %d exceeded by n = %d (estimated labeled space ~1e%.0f); "
                      "pass --force to override",
                      limits.max_n, spec.n, generation_effort_log10(spec));
        throw cap_error(buf);
    }
    int n = spec.n;
    std::map<CanonicalForm, MultiGraph> sink;
    switch (spec.kind) {
        case GenerationSpec::Kind::exactly_k: {
            if (spec.k < 0 || spec.k >= std::max(n, 1)) break;
            if (n >= 2 && spec.k > n - 1 - spec.k) {
                // dense side: generate the complement class (all graphs, not
                // just connected) and complement back
                GenerationSpec co = spec;
                co.k = n - 1 - spec.k;
                co.connected = false;
                co.bipartite_only = false;
                GenerationLimits free = limits;
                auto low = generate_graphs(co, free);
                for (const auto& h : low) {
                    MultiGraph c = complement(h);
                    if (spec.connected && !is_connected(c)) continue;
                    if (spec.bipartite_only && !is_bipartite(c)) continue;
                    sink.emplace(canonical_form(c), c);
                }
                break;
            }
            run_targets(std::vector<int>(n, spec.k), spec.connected, spec.bipartite_only, sink);
            break;
        }
        case GenerationSpec::Kind::two_degrees: {
            int hi = std::max(spec.k, spec.l), lo = std::min(spec.k, spec.l);
            if (hi == lo) throw std::invalid_argument("two_degrees needs distinct degrees");
            if (lo < 0 || hi >= std::max(n, 1)) break;
            for (int a = 1; a < n; ++a) {  // a vertices of the high degree, both present
                std::vector<int> t(n, lo);
                for (int i = 0; i < a; ++i) t[i] = hi;
                run_targets(std::move(t), spec.connected, spec.bipartite_only, sink);
            }
            break;
        }
        case GenerationSpec::Kind::nearly_k: {
            if (spec.k < 1 || spec.k >= std::max(n, 1) || n < 3) break;
            for (int t2 = 1; t2 <= spec.k - 1; ++t2)
                for (int t1 = 1; t1 <= t2; ++t1) {
                    std::vector<int> t(n, spec.k);
                    t[n - 2] = t2;
                    t[n - 1] = t1;
                    run_targets(std::move(t), spec.connected, spec.bipartite_only, sink);
                }
            break;
        }
    }
    return collect(sink);
}

HnResult compute_hn(int k, std::optional<int> l, int n, const GenerationLimits& limits,
                    const HamiltonConfig& cfg) {
    GenerationSpec spec;
    spec.n = n;
    spec.connected = true;
    if (l && *l != k) {
        spec.kind = GenerationSpec::Kind::two_degrees;
        spec.k = k;
        spec.l = *l;
    } else {
        spec.kind = GenerationSpec::Kind::exactly_k;
        spec.k = k;
    }
    auto graphs = generate_graphs(spec, limits);
    HnResult res;
    res.class_size = graphs.size();
    res.infinite = true;
    for (const auto& g : graphs) {
        BigInt c = count_ham_cycles(g, Algo::auto_pick, cfg).value;
        if (c == 0) continue;
        if (res.infinite || c < res.value) {
            res.infinite = false;
            res.value = c;
            res.witnesses.clear();
        }
        if (c == res.value) res.witnesses.push_back(g);
    }
    return res;
}

HnResult compute_hn2(int k, int n, const GenerationLimits& limits, const HamiltonConfig& cfg) {
    HnResult res;
    res.infinite = true;
    if (k < 3 || n < 2 * k) return res;

    // connected nearly-k sides, cached per order; orders k+1 .. n-k+1
    std::map<int, std::vector<MultiGraph>> sides;
    for (int na = k + 1; na <= n - k + 1; ++na) {
        GenerationSpec spec;
        spec.kind = GenerationSpec::Kind::nearly_k;
        spec.n = na;
        spec.k = k;
        spec.connected = true;
        sides[na] = generate_graphs(spec, limits);
        res.class_size += sides[na].size();
    }

    struct Side {
        const MultiGraph* g;
        int p, q;        // terminals
        BigInt paths;    // hamiltonian p-q path count
    };
    std::map<int, std::vector<Side>> prepared;
    for (auto& [na, graphs] : sides) {
        for (const auto& g : graphs) {
            std::vector<int> terms;
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) < k) terms.push_back(v);
            if (terms.size() != 2) continue;  // generator guarantees this
            Side s{&g, terms[0], terms[1], count_ham_st_paths(g, terms[0], terms[1], Algo::auto_pick, cfg).value};
            if (s.paths > 0) prepared[na].push_back(s);
        }
    }

    std::map<CanonicalForm, MultiGraph> witnesses;
    for (int na = k + 1; na <= n - k + 1; ++na) {
        int nb = n + 2 - na;
        if (nb < na || nb > n - k + 1) continue;
        for (size_t i = 0; i < prepared[na].size(); ++i) {
            size_t j0 = (na == nb) ? i : 0;
            for (size_t j = j0; j < prepared[nb].size(); ++j) {
                const Side& A = prepared[na][i];
                const Side& B = prepared[nb][j];
                BigInt product = A.paths * B.paths;
                if (!res.infinite && product > res.value) continue;
                // both terminal orientations can give different gluings
                for (int orient = 0; orient < 2; ++orient) {
                    int bu = orient ? B.q : B.p;
                    int bv = orient ? B.p : B.q;
                    if (A.g->degree(A.p) + B.g->degree(bu) != k) continue;
                    if (A.g->degree(A.q) + B.g->degree(bv) != k) continue;
                    if (A.g->adjacent(A.p, A.q) && B.g->adjacent(bu, bv)) continue;  // doubled edge
                    MultiGraph glued =
                        glue_at_terminals({*A.g, A.p, A.q}, {*B.g, bu, bv});
                    if (!glued.simple()) continue;
                    if (!degree_profile(glued).is_k_regular(k)) continue;
                    if (vertex_connectivity(glued) != 2) continue;
                    if (res.infinite || product < res.value) {
                        res.infinite = false;
                        res.value = product;
                        witnesses.clear();
                    }
                    if (product == res.value) witnesses.emplace(canonical_form(glued), glued);
                }
            }
        }
    }
    for (auto& [form, g] : witnesses) {
        if (count_ham_cycles(g, Algo::auto_pick, cfg).value != res.value)
            throw validation_error("compute_hn2: witness fails the direct recount");
        if (vertex_connectivity(g) != 2)
            throw validation_error("compute_hn2: witness is not connectivity-2");
        res.witnesses.push_back(g);
    }
    return res;
}

MultiGraph random_regular_graph(int n, int k, std::mt19937_64& rng) {
    if ((n * k) % 2 || k >= n) throw std::invalid_argument("infeasible regular degree sequence");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(n * k);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        MultiGraph g(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.adjacent(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_regular_graph: rejection sampling failed");
}

}  // namespace hc
