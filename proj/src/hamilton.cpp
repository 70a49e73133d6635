#include "hamilton.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace hc {

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::backtrack: return "backtrack";
        case Algo::held_karp: return "held_karp";
        case Algo::auto_pick: return "auto";
        case Algo::two_cut_product: return "two_cut_product";
    }
    return "?";
}

namespace {

using u128 = unsigned __int128;

BigInt to_bigint(u128 x) {
    BigInt hi = uint64_t(x >> 64);
    return (hi << 64) | uint64_t(x);
}

// ---------------------------------------------------------------------------
// Backtracking search.  Starts from the lowest-degree vertex, extends a path
// in all possible ways, prunes on degree availability of unvisited vertices
// and on reachability of the unvisited region.  Cycle symmetry is broken by
// requiring the first vertex of the path to be smaller than the last.
// Parallel edges contribute a factor 2 per doubled step, tracked as a shift.
// ---------------------------------------------------------------------------
struct Backtracker {
    int n;
    uint64_t all;
    std::vector<uint64_t> adj, dbl;
    bool cycle_mode;
    int start, target;  // target only in path mode
    u128 count = 0;
    u128 limit = 0;  // 0 = unlimited
    bool limit_hit = false;
    // enumeration hook: called with the vertex sequence (leaf weight handled by caller)
    std::function<void(const std::vector<int>&)> on_leaf;
    std::vector<int> path;

    explicit Backtracker(const MultiGraph& g) : n(g.n()), all(g.vertex_mask()) {
        adj.resize(n);
        dbl.resize(n);
        for (int v = 0; v < n; ++v) {
            adj[v] = g.neighbors(v);
            dbl[v] = g.doubled(v);
        }
    }

    bool prune(uint64_t unvisited, int end) {
        uint64_t end_bit = uint64_t(1) << end;
        if (cycle_mode) {
            uint64_t sbit = uint64_t(1) << start;
            // start still needs its closing edge
            if (!(adj[start] & (unvisited | end_bit))) return true;
            uint64_t scan = unvisited;
            while (scan) {
                int u = __builtin_ctzll(scan);
                scan &= scan - 1;
                if (__builtin_popcountll(adj[u] & (unvisited | end_bit | sbit)) < 2) return true;
            }
        } else {
            uint64_t tbit = uint64_t(1) << target;
            if (!((unvisited >> target) & 1) && end != target) return true;
            uint64_t scan = unvisited & ~tbit;
            while (scan) {
                int u = __builtin_ctzll(scan);
                scan &= scan - 1;
                if (__builtin_popcountll(adj[u] & (unvisited | end_bit | tbit)) < 2) return true;
            }
            if ((unvisited >> target) & 1) {
                if (!(adj[target] & ((unvisited & ~tbit) | end_bit))) return true;
            }
        }
        // unvisited region must be reachable from the path end
        uint64_t seen = end_bit, frontier = end_bit;
        uint64_t allowed = unvisited | end_bit;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & allowed & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return (unvisited & ~seen) != 0;
    }

    void add(u128 w) {
        count += w;
        if (limit && count >= limit) limit_hit = true;
    }

    // weight_shift: number of doubled steps so far (weight = 2^shift)
    void extend(uint64_t visited, int end, int weight_shift) {
        if (limit_hit) return;
        uint64_t unvisited = all & ~visited;
        if (!unvisited) {
            if (cycle_mode) {
                if ((adj[end] >> start & 1) && path[1] < end) {
                    int close_shift = weight_shift + int(dbl[end] >> start & 1);
                    if (!on_leaf) add(u128(1) << close_shift);
                    else emit_leaf(close_shift);
                }
            } else if (end == target) {
                if (!on_leaf) add(u128(1) << weight_shift);
                else emit_leaf(weight_shift);
            }
            return;
        }
        if (prune(unvisited, end)) return;
        uint64_t cand = adj[end] & unvisited;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (!cycle_mode && v == target && (unvisited & ~(uint64_t(1) << target))) continue;
            path.push_back(v);
            extend(visited | uint64_t(1) << v, v, weight_shift + int(dbl[end] >> v & 1));
            path.pop_back();
            if (limit_hit) return;
        }
    }

    void emit_leaf(int) {
        on_leaf(path);
        count += 1;  // leaf count, selector expansion handled by the hook
    }

    u128 run_cycles(int s, const std::vector<int>& first_steps = {}) {
        cycle_mode = true;
        start = s;
        path = {s};
        uint64_t sv = uint64_t(1) << s;
        std::vector<int> firsts = first_steps;
        if (firsts.empty()) {
            uint64_t cand = adj[s];
            while (cand) {
                int v = __builtin_ctzll(cand);
                cand &= cand - 1;
                firsts.push_back(v);
            }
        }
        for (int f : firsts) {
            path.push_back(f);
            extend(sv | uint64_t(1) << f, f, int(dbl[s] >> f & 1));
            path.pop_back();
            if (limit_hit) break;
        }
        return count;
    }

    u128 run_paths(int s, int t) {
        cycle_mode = false;
        start = s;
        target = t;
        path = {s};
        extend(uint64_t(1) << s, s, 0);
        return count;
    }
};

int lowest_degree_vertex(const MultiGraph& g) {
    int best = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

u128 backtrack_cycles(const MultiGraph& g, int jobs) {
    int s = lowest_degree_vertex(g);
    if (jobs <= 1) {
        Backtracker bt(g);
        return bt.run_cycles(s);
    }
    // split at the first branching level; per-task counts summed in task order
    std::vector<int> firsts;
    uint64_t cand = g.neighbors(s);
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        firsts.push_back(v);
    }
    std::vector<u128> parts(firsts.size(), 0);
    std::vector<std::thread> threads;
    std::atomic<size_t> next_task{0};
    int workers = std::min<int>(jobs, int(firsts.size()));
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&]() {
            while (true) {
                size_t i = next_task.fetch_add(1);
                if (i >= firsts.size()) break;
                Backtracker bt(g);
                parts[i] = bt.run_cycles(s, {firsts[i]});
            }
        });
    for (auto& t : threads) t.join();
    u128 total = 0;
    for (u128 p : parts) total += p;
    return total;
}

u128 backtrack_paths(const MultiGraph& g, int s, int t) {
    Backtracker bt(g);
    return bt.run_paths(s, t);
}

// ---------------------------------------------------------------------------
// Held-Karp subset dynamic programming.  dp[mask][j] = weighted directed
// hamiltonian paths from the fixed start s to vertex other[j] spanning
// mask ∪ {s}; doubled edges multiply transitions by 2.  Cycle totals are
// directed, halved at the end.
// ---------------------------------------------------------------------------
struct HeldKarp {
    const MultiGraph& g;
    int n, s;
    std::vector<int> others;       // vertices != s
    std::vector<int> slot;         // vertex -> index in others
    std::vector<u128> dp;          // dp[mask * k + j]
    int k;

    HeldKarp(const MultiGraph& graph, int start, int cap) : g(graph), n(graph.n()), s(start) {
        if (n > cap)
            throw cap_error("Held-Karp cap " + std::to_string(cap) + " exceeded by n = " +
                            std::to_string(n));
        k = n - 1;
        double bytes = double(sizeof(u128)) * k * (double(uint64_t(1) << k));
        if (bytes > 3.5e9) throw cap_error("Held-Karp table would need > 3.5 GB");
        others.reserve(k);
        slot.assign(n, -1);
        for (int v = 0; v < n; ++v)
            if (v != s) {
                slot[v] = int(others.size());
                others.push_back(v);
            }
        dp.assign(size_t(k) << k, 0);
        for (int j = 0; j < k; ++j) {
            int m = g.multiplicity(s, others[j]);
            if (m) dp[(size_t(uint64_t(1) << j) * k) + j] = u128(m);
        }
        for (uint64_t mask = 1; mask < (uint64_t(1) << k); ++mask) {
            size_t base = size_t(mask) * k;
            for (int j = 0; j < k; ++j) {
                u128 val = dp[base + j];
                if (!val) continue;
                uint64_t nb = g.neighbors(others[j]);
                while (nb) {
                    int v = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    if (v == s) continue;
                    int jj = slot[v];
                    if (mask >> jj & 1) continue;
                    uint64_t m2 = mask | uint64_t(1) << jj;
                    dp[size_t(m2) * k + jj] += val * u128(g.multiplicity(others[j], v));
                }
            }
        }
    }

    u128 cycles() const {
        if (k < 2) return 0;
        uint64_t full = (uint64_t(1) << k) - 1;
        u128 total = 0;
        for (int j = 0; j < k; ++j) {
            int m = g.multiplicity(others[j], s);
            if (m) total += dp[size_t(full) * k + j] * u128(m);
        }
        return total / 2;
    }

    u128 paths_to(int t) const {
        uint64_t full = (uint64_t(1) << k) - 1;
        return dp[size_t(full) * k + slot[t]];
    }
};

Algo pick_auto(const MultiGraph& g) { return g.n() <= 16 ? Algo::held_karp : Algo::backtrack; }

}  // namespace

CountResult count_ham_cycles(const MultiGraph& g, Algo algo, const HamiltonConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (g.n() == 0) throw std::invalid_argument("hamiltonian cycle count of the empty graph");
    CountResult r;
    if (g.n() <= 2) {
        // convention: two vertices joined by a doubled edge form one cycle
        r.value = (g.n() == 2 && g.multiplicity(0, 1) == 2) ? 1 : 0;
        r.algo = algo == Algo::auto_pick ? Algo::backtrack : algo;
        r.elapsed = std::chrono::steady_clock::now() - t0;
        return r;
    }
    if (algo == Algo::auto_pick) algo = pick_auto(g);
    switch (algo) {
        case Algo::backtrack:
            r.value = to_bigint(backtrack_cycles(g, cfg.jobs));
            break;
        case Algo::held_karp: {
            HeldKarp hk(g, 0, cfg.hk_cap);
            r.value = to_bigint(hk.cycles());
            break;
        }
        default:
            throw std::invalid_argument("unsupported algorithm for direct counting");
    }
    r.algo = algo;
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
}

CountResult count_ham_st_paths(const MultiGraph& g, int s, int t, Algo algo,
                               const HamiltonConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (s == t) throw std::invalid_argument("path endpoints must differ");
    if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw std::invalid_argument("endpoint out of range");
    CountResult r;
    if (g.n() == 2) {
        r.value = g.multiplicity(s, t);
        r.algo = algo == Algo::auto_pick ? Algo::backtrack : algo;
        r.elapsed = std::chrono::steady_clock::now() - t0;
        return r;
    }
    if (algo == Algo::auto_pick) algo = pick_auto(g);
    switch (algo) {
        case Algo::backtrack:
            r.value = to_bigint(backtrack_paths(g, s, t));
            break;
        case Algo::held_karp: {
            HeldKarp hk(g, s, cfg.hk_cap);
            r.value = to_bigint(hk.paths_to(t));
            break;
        }
        default:
            throw std::invalid_argument("unsupported algorithm for direct counting");
    }
    r.algo = algo;
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
}

CycleCertificate CycleCertificate::canonical() const {
    int n = int(verts.size());
    if (n == 0) return *this;
    // locate the minimum label (labels are contiguous, so this is 0)
    int i0 = int(std::min_element(verts.begin(), verts.end()) - verts.begin());
    auto at = [&](int i) { return verts[((i % n) + n) % n]; };
    auto copy_at = [&](int i) { return second_copy.empty() ? uint8_t(0) : second_copy[((i % n) + n) % n]; };
    bool forward = at(i0 + 1) < at(i0 - 1);
    CycleCertificate out;
    out.verts.resize(n);
    out.second_copy.resize(n);
    for (int i = 0; i < n; ++i) {
        if (forward) {
            out.verts[i] = at(i0 + i);
            out.second_copy[i] = copy_at(i0 + i);
        } else {
            out.verts[i] = at(i0 - i);
            // step i is edge {out.verts[i], out.verts[i+1]} = original step (i0-i-1)
            out.second_copy[i] = copy_at(i0 - i - 1);
        }
    }
    return out;
}

std::string CycleCertificate::to_line() const {
    std::string s;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(verts[i]);
    }
    if (std::any_of(second_copy.begin(), second_copy.end(), [](uint8_t b) { return b; })) {
        s += " [";
        for (uint8_t b : second_copy) s += char('0' + b);
        s += "]";
    }
    return s;
}

CycleCertificate CycleCertificate::from_line(const std::string& line) {
    CycleCertificate c;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '[') {
            std::string bits = tok.substr(1, tok.size() - 2);
            for (char b : bits) c.second_copy.push_back(b == '1');
        } else {
            c.verts.push_back(std::stoi(tok));
        }
    }
    if (c.second_copy.empty()) c.second_copy.assign(c.verts.size(), 0);
    return c;
}

std::vector<std::tuple<int, int, int>> CycleCertificate::edge_occurrences() const {
    std::vector<std::tuple<int, int, int>> out;
    int n = int(verts.size());
    for (int i = 0; i < n; ++i) {
        int u = verts[i], v = verts[(i + 1) % n];
        if (u > v) std::swap(u, v);
        out.push_back({u, v, second_copy.empty() ? 0 : int(second_copy[i])});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool certificate_valid(const MultiGraph& g, const CycleCertificate& h) {
    int n = int(h.verts.size());
    if (n != g.n() || n < 2) return false;
    std::vector<bool> seen(g.n(), false);
    for (int v : h.verts) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i) {
        int u = h.verts[i], v = h.verts[(i + 1) % n];
        int need = (h.second_copy.empty() ? 0 : h.second_copy[i]) ? 2 : 1;
        if (g.multiplicity(u, v) < need) return false;
    }
    if (n == 2 && g.multiplicity(h.verts[0], h.verts[1]) < 2) return false;
    return true;
}

std::vector<CycleCertificate> enumerate_ham_cycles(const MultiGraph& g) {
    std::vector<CycleCertificate> out;
    if (g.n() < 3) {
        if (g.n() == 2 && g.multiplicity(0, 1) == 2)
            out.push_back(CycleCertificate{{0, 1}, {0, 1}});
        return out;
    }
    Backtracker bt(g);
    bt.on_leaf = [&](const std::vector<int>& seq) {
        // expand parallel-edge selector combinations
        int n = int(seq.size());
        std::vector<int> doubled_steps;
        for (int i = 0; i < n; ++i) {
            int u = seq[i], v = seq[(i + 1) % n];
            if (g.multiplicity(u, v) == 2) doubled_steps.push_back(i);
        }
        for (uint64_t combo = 0; combo < (uint64_t(1) << doubled_steps.size()); ++combo) {
            CycleCertificate c;
            c.verts = seq;
            c.second_copy.assign(n, 0);
            for (size_t b = 0; b < doubled_steps.size(); ++b)
                c.second_copy[doubled_steps[b]] = (combo >> b) & 1;
            out.push_back(c.canonical());
        }
    };
    bt.run_cycles(lowest_degree_vertex(g));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
uint64_t clamp_limit(const BigInt& limit) {
    const BigInt big = BigInt(1) << 62;
    return limit >= big ? (uint64_t(1) << 62) : limit.convert_to<uint64_t>();
}
}  // namespace

BigInt count_ham_cycles_limited(const MultiGraph& g, const BigInt& limit) {
    if (g.n() == 0 || limit <= 0) return 0;
    if (g.n() <= 2) {
        BigInt v = (g.n() == 2 && g.multiplicity(0, 1) == 2) ? 1 : 0;
        return v > limit ? limit : v;
    }
    Backtracker bt(g);
    bt.limit = clamp_limit(limit);
    BigInt v = to_bigint(bt.run_cycles(lowest_degree_vertex(g)));
    return v > limit ? limit : v;
}

BigInt count_ham_st_paths_limited(const MultiGraph& g, int s, int t, const BigInt& limit) {
    if (limit <= 0) return 0;
    if (s == t || s < 0 || t < 0 || s >= g.n() || t >= g.n())
        throw std::invalid_argument("bad endpoints");
    if (g.n() == 2) {
        BigInt v = g.multiplicity(s, t);
        return v > limit ? limit : v;
    }
    Backtracker bt(g);
    bt.limit = clamp_limit(limit);
    BigInt v = to_bigint(bt.run_paths(s, t));
    return v > limit ? limit : v;
}

bool is_hamiltonian(const MultiGraph& g) { return count_ham_cycles_limited(g, 1) >= 1; }

bool is_uniquely_hamiltonian(const MultiGraph& g) {
    if (g.n() < 3) return g.n() == 2 && g.multiplicity(0, 1) == 2;
    return count_ham_cycles_limited(g, 2) == 1;
}

bool all_nonadjacent_pairs_traceable(const MultiGraph& g) {
    if (!g.simple()) throw std::invalid_argument("traceability test expects a simple graph");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v) && count_ham_st_paths_limited(g, u, v, 1) == 0) return false;
    return true;
}

}  // namespace hc
