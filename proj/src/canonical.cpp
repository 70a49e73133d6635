#include "canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hc {

namespace {

std::string encode_order(const MultiGraph& g, const std::vector<int>& order) {
    int n = g.n();
    std::string enc;
    enc.reserve(1 + (n * (n - 1) / 2 + 3) / 4);
    enc.push_back(char(n));
    int bitpos = 0;
    uint8_t cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur |= uint8_t(g.multiplicity(order[i], order[j])) << bitpos;
            bitpos += 2;
            if (bitpos == 8) {
                enc.push_back(char(cur));
                cur = 0;
                bitpos = 0;
            }
        }
    if (bitpos) enc.push_back(char(cur));
    return enc;
}

// One round of color refinement; returns normalized colors 0..k-1 where the
// new ordering is by (old color, neighborhood signature).  Invariant under
// relabeling, which is what makes the canonical search correct.
std::vector<int> refine_colors(const MultiGraph& g, std::vector<int> colors) {
    int n = g.n();
    while (true) {
        // signature: old color followed by sorted (neighbor color, multiplicity)
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<std::pair<int, int>> nb;
            uint64_t mask = g.neighbors(v);
            while (mask) {
                int u = __builtin_ctzll(mask);
                mask &= mask - 1;
                nb.push_back({colors[u], g.multiplicity(v, u)});
            }
            std::sort(nb.begin(), nb.end());
            for (auto [c, m] : nb) {
                sig[v].push_back(c);
                sig[v].push_back(m);
            }
        }
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> fresh(n);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
            fresh[idx[i]] = next;
        }
        // classes only ever split (signatures start with the old color), so
        // an unchanged partition reproduces the exact same ids
        if (fresh == colors) break;
        colors = std::move(fresh);
    }
    return colors;
}

struct CanonSearch {
    const MultiGraph& g;
    int n;
    std::string best;
    std::vector<int> best_order;
    bool have_best = false;
    std::vector<std::vector<int>> autos;
    long nodes = 0;
    static constexpr long kNodeCap = 20'000'000;

    explicit CanonSearch(const MultiGraph& graph) : g(graph), n(graph.n()) {}

    void leaf(const std::vector<int>& colors) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[colors[v]] = v;
        std::string enc = encode_order(g, order);
        if (!have_best || enc < best) {
            best = std::move(enc);
            best_order = order;
            have_best = true;
        } else if (enc == best) {
            // two labelings with identical encodings compose to an automorphism
            std::vector<int> sigma(n);
            for (int i = 0; i < n; ++i) sigma[best_order[i]] = order[i];
            autos.push_back(std::move(sigma));
        }
    }

    void search(std::vector<int> colors, std::vector<int>& prefix) {
        if (++nodes > kNodeCap)
            throw cap_error("canonical labeling search exceeded node cap");
        colors = refine_colors(g, colors);
        int classes = n ? *std::max_element(colors.begin(), colors.end()) + 1 : 0;
        if (classes == n) {
            leaf(colors);
            return;
        }
        // first non-singleton cell in color order
        std::vector<int> count(classes, 0);
        for (int v = 0; v < n; ++v) count[colors[v]]++;
        int cell = 0;
        while (count[cell] == 1) ++cell;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (colors[v] == cell) members.push_back(v);

        std::vector<int> tried;
        for (int v : members) {
            bool skip = false;
            for (const auto& sigma : autos) {
                bool fixes_prefix = true;
                for (int p : prefix)
                    if (sigma[p] != p) {
                        fixes_prefix = false;
                        break;
                    }
                if (!fixes_prefix) continue;
                if (std::find(tried.begin(), tried.end(), sigma[v]) != tried.end()) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;
            tried.push_back(v);
            std::vector<int> child(n);
            for (int u = 0; u < n; ++u)
                child[u] = 2 * colors[u] + ((colors[u] == cell && u != v) ? 1 : 0);
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
        }
    }
};

bool all_pairs_equal(const MultiGraph& g) {
    if (g.n() < 2) return true;
    int m0 = g.multiplicity(0, 1);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.multiplicity(u, v) != m0) return false;
    return true;
}

}  // namespace

CanonicalForm encode_labeled(const MultiGraph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    return encode_order(g, order);
}

CanonicalForm canonical_form_exhaustive(const MultiGraph& g) {
    int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::string best = encode_order(g, order);
    while (std::next_permutation(order.begin(), order.end())) {
        std::string enc = encode_order(g, order);
        if (enc < best) best = std::move(enc);
    }
    return best;
}

CanonicalForm canonical_form(const MultiGraph& g) {
    int n = g.n();
    if (n <= 1 || all_pairs_equal(g)) return encode_labeled(g);
    if (n <= 5) return canonical_form_exhaustive(g);
    CanonSearch cs(g);
    std::vector<int> prefix;
    std::vector<int> init(n, 0);
    cs.search(init, prefix);
    return cs.best;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const MultiGraph& g) {
    int n = g.n();
    std::vector<std::vector<int>> out;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(image);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || deg[c] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = (g.multiplicity(u, v) == g.multiplicity(image[u], c));
            if (!ok) continue;
            image[v] = c;
            used[c] = true;
            self(self, v + 1);
            image[v] = -1;
            used[c] = false;
        }
    };
    if (n == 0) return {{}};
    rec(rec, 0);
    return out;
}

}  // namespace hc
