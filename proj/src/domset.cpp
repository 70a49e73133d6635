#include "domset.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "canonical.hpp"
#include "surgery.hpp"

namespace hc {

RedGreenInstance RedGreenInstance::of(const MultiGraph& g, const CycleCertificate& h) {
    if (!certificate_valid(g, h))
        throw std::invalid_argument("red-green instance: cycle is not hamiltonian in the graph");
    RedGreenInstance inst;
    inst.full = g;
    inst.green = g;
    int n = g.n();
    for (int i = 0; i < n; ++i) inst.green.remove_edge_copy(h.verts[i], h.verts[(i + 1) % n]);
    inst.red = h.canonical();
    return inst;
}

RedGreenInstance RedGreenInstance::add_cycle(const MultiGraph& green, const CycleCertificate& h) {
    MultiGraph full = green;
    int n = green.n();
    if (int(h.verts.size()) != n)
        throw std::invalid_argument("red-green instance: cycle order mismatch");
    for (int i = 0; i < n; ++i) full.add_edge(h.verts[i], h.verts[(i + 1) % n]);
    RedGreenInstance inst;
    inst.full = full;
    inst.green = green;
    inst.red = h.canonical();
    return inst;
}

namespace {

struct DomSetEnum {
    int n;
    uint64_t all;
    std::vector<uint64_t> closed;  // closed neighborhoods
    std::vector<uint64_t> out;

    explicit DomSetEnum(const MultiGraph& g) : n(g.n()), all(g.vertex_mask()) {
        closed.resize(n);
        for (int v = 0; v < n; ++v) closed[v] = g.neighbors(v) | (uint64_t(1) << v);
    }

    // every chosen vertex keeps a private closed neighbor; privates only
    // shrink as the set grows, so failing once is final
    bool privates_ok(uint64_t set) const {
        uint64_t scan = set;
        while (scan) {
            int s = __builtin_ctzll(scan);
            scan &= scan - 1;
            bool has_private = false;
            uint64_t cand = closed[s];
            while (cand && !has_private) {
                int w = __builtin_ctzll(cand);
                cand &= cand - 1;
                has_private = (closed[w] & set) == (uint64_t(1) << s);
            }
            if (!has_private) return false;
        }
        return true;
    }

    void rec(uint64_t set, uint64_t dominated, uint64_t excluded) {
        if (dominated == all) {
            out.push_back(set);
            return;
        }
        int u = __builtin_ctzll(all & ~dominated);
        uint64_t branch = closed[u] & ~excluded;
        while (branch) {
            int x = __builtin_ctzll(branch);
            branch &= branch - 1;
            uint64_t set2 = set | uint64_t(1) << x;
            if (privates_ok(set2)) rec(set2, dominated | closed[x], excluded);
            excluded |= uint64_t(1) << x;  // later branches must avoid x
        }
    }
};

}  // namespace

std::vector<uint64_t> minimal_dominating_sets(const MultiGraph& g) {
    if (g.n() == 0) return {0};
    DomSetEnum e(g);
    e.rec(0, 0, 0);
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

namespace {

bool independent_in_cycle(uint64_t set, const CycleCertificate& h) {
    int n = int(h.verts.size());
    for (int i = 0; i < n; ++i) {
        uint64_t u = uint64_t(1) << h.verts[i];
        uint64_t v = uint64_t(1) << h.verts[(i + 1) % n];
        if ((set & u) && (set & v)) return false;
    }
    return true;
}

}  // namespace

HIndependent has_h_independent_dominating_set(const RedGreenInstance& inst) {
    for (uint64_t set : minimal_dominating_sets(inst.green))
        if (independent_in_cycle(set, inst.red)) return {true, set};
    return {false, 0};
}

namespace {

// cycles as edge sets, encoded as bitmasks over vertex pairs (u < v);
// 128 bits covers n <= 16
using PairMask = unsigned __int128;

int pair_index(int u, int v, int n) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

PairMask cycle_pair_mask(const CycleCertificate& h, int n) {
    PairMask mask = 0;
    int len = int(h.verts.size());
    for (int i = 0; i < len; ++i) {
        int u = h.verts[i], v = h.verts[(i + 1) % len];
        if (u > v) std::swap(u, v);
        mask |= PairMask(1) << pair_index(u, v, n);
    }
    return mask;
}

PairMask orbit_representative(PairMask mask, const std::vector<std::vector<int>>& autos, int n) {
    PairMask best = mask;
    for (const auto& sigma : autos) {
        PairMask image = 0;
        PairMask scan = mask;
        while (scan) {
            uint64_t low = uint64_t(scan);
            int bit = low ? __builtin_ctzll(low) : 64 + __builtin_ctzll(uint64_t(scan >> 64));
            scan &= scan - 1;
            int u = 0;
            while (pair_index(u, n - 1, n) < bit) ++u;
            int v = bit - pair_index(u, u + 1, n) + u + 1;
            int a = sigma[u], b = sigma[v];
            if (a > b) std::swap(a, b);
            image |= PairMask(1) << pair_index(a, b, n);
        }
        if (image < best) best = image;
    }
    return best;
}

}  // namespace

SearchPairsResult search_pairs(int r, int n, bool bipartite_only, const GenerationLimits& limits,
                               int jobs, bool connected_green) {
    if (n > 16)
        throw cap_error("search_pairs: pair masks cover n <= 16");
    GenerationSpec spec;
    spec.kind = GenerationSpec::Kind::exactly_k;
    spec.n = n;
    spec.k = r;
    spec.connected = connected_green;
    spec.bipartite_only = bipartite_only;
    auto greens = generate_graphs(spec, limits);

    SearchPairsResult result;
    result.green_classes = greens.size();

    struct PerGraph {
        long long labeled = 0, orbit = 0;
        std::vector<PairReport> reports;
    };
    std::vector<PerGraph> per(greens.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= greens.size()) break;
            const MultiGraph& green = greens[idx];
            auto mds = minimal_dominating_sets(green);
            auto autos = automorphisms(green);
            MultiGraph comp = complement(green);
            std::vector<PairMask> orbit_reps;
            for (const auto& h : enumerate_ham_cycles(comp)) {
                bool any_independent = false;
                for (uint64_t set : mds)
                    if (independent_in_cycle(set, h)) {
                        any_independent = true;
                        break;
                    }
                if (any_independent) continue;
                per[idx].labeled++;
                per[idx].reports.push_back({green, h, mds.size()});
                orbit_reps.push_back(orbit_representative(cycle_pair_mask(h, n), autos, n));
            }
            std::sort(orbit_reps.begin(), orbit_reps.end());
            orbit_reps.erase(std::unique(orbit_reps.begin(), orbit_reps.end()), orbit_reps.end());
            per[idx].orbit = (long long)orbit_reps.size();
        }
    };
    int workers = std::max(1, std::min<int>(jobs, int(greens.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& p : per) {
        result.labeled_pairs += p.labeled;
        result.orbit_pairs += p.orbit;
        for (auto& rep : p.reports) result.reports.push_back(std::move(rep));
    }
    return result;
}

RedGreenInstance amplify_family(const PairReport& report, int m) {
    RedGreenInstance base = RedGreenInstance::add_cycle(report.green, report.cycle);
    if (has_h_independent_dominating_set(base).exists)
        throw std::invalid_argument("amplify_family: instance has an independent dominating set");
    int eu = base.red.verts[0], ev = base.red.verts[1];
    auto [big, cycle] = chain_copies(base.full, base.red, eu, ev, m);
    RedGreenInstance out = RedGreenInstance::of(big, cycle);
    if (has_h_independent_dominating_set(out).exists)
        throw validation_error("amplify_family: amplified instance gained an independent dominating set");
    return out;
}

}  // namespace hc
