#include "surgery.hpp"

#include <algorithm>

#include "families.hpp"

namespace hc {

namespace {

MultiGraph remove_vertex(const MultiGraph& g, int v, std::vector<int>* old_to_new = nullptr) {
    uint64_t mask = g.vertex_mask() & ~(uint64_t(1) << v);
    std::vector<int> ids;
    MultiGraph out = induced_subgraph(g, mask, &ids);
    if (old_to_new) {
        old_to_new->assign(g.n(), -1);
        for (size_t i = 0; i < ids.size(); ++i) (*old_to_new)[ids[i]] = int(i);
    }
    return out;
}

// The two components of g - u - v, as vertex masks; throws unless exactly two.
std::pair<uint64_t, uint64_t> two_cut_components(const MultiGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cut vertices must differ");
    uint64_t rest = g.vertex_mask() & ~(uint64_t(1) << u) & ~(uint64_t(1) << v);
    std::vector<uint64_t> comps;
    uint64_t left = rest;
    while (left) {
        int w = __builtin_ctzll(left);
        uint64_t seen = uint64_t(1) << w, frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int x = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(x) & rest & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        comps.push_back(seen);
        left &= ~seen;
    }
    if (comps.size() != 2)
        throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                    "} does not cut the graph into exactly two components (found " +
                                    std::to_string(comps.size()) + ")");
    return {comps[0], comps[1]};
}

}  // namespace

MultiGraph glue_at_terminals(const TerminalGraph& a, const TerminalGraph& b) {
    int na = a.graph.n(), nb = b.graph.n();
    if (a.u == a.v || b.u == b.v) throw std::invalid_argument("terminals must be distinct");
    int n = na + nb - 2;
    MultiGraph out(n);
    for (auto [x, y] : a.graph.edges()) out.add_edge(x, y, a.graph.multiplicity(x, y));
    // b's vertices: terminals map onto a's, the rest are appended in order
    std::vector<int> map_b(nb, -1);
    map_b[b.u] = a.u;
    map_b[b.v] = a.v;
    int next = na;
    for (int x = 0; x < nb; ++x)
        if (map_b[x] < 0) map_b[x] = next++;
    for (auto [x, y] : b.graph.edges()) {
        int mult = b.graph.multiplicity(x, y);
        int total = out.multiplicity(map_b[x], map_b[y]) + mult;
        if (total > 2)
            throw std::invalid_argument("gluing would give the terminal pair multiplicity " +
                                        std::to_string(total));
        out.add_edge(map_b[x], map_b[y], mult);
    }
    return out;
}

CountResult count_via_2cut(const MultiGraph& g, int u, int v, const HamiltonConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto [c1, c2] = two_cut_components(g, u, v);
    uint64_t uv = (uint64_t(1) << u) | (uint64_t(1) << v);
    CountResult r;
    r.value = 1;
    for (uint64_t side : {c1, c2}) {
        std::vector<int> ids;
        MultiGraph part = induced_subgraph(g, side | uv, &ids);
        int pu = int(std::find(ids.begin(), ids.end(), u) - ids.begin());
        int pv = int(std::find(ids.begin(), ids.end(), v) - ids.begin());
        r.value *= count_ham_st_paths(part, pu, pv, Algo::auto_pick, cfg).value;
        if (r.value == 0) break;
    }
    r.algo = Algo::two_cut_product;
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
}

namespace {

// Certificates of the exactly-two-cycles precondition shared by (†) and the
// doubling operation.
std::vector<CycleCertificate> exactly_two_cycles(const MultiGraph& g, const char* op) {
    auto certs = enumerate_ham_cycles(g);
    if (certs.size() != 2)
        throw std::invalid_argument(std::string(op) + ": graph has " + std::to_string(certs.size()) +
                                    " hamiltonian cycles, needs exactly 2");
    return certs;
}

int unique_even_degree_vertex(const MultiGraph& g, const char* op) {
    int found = -1;
    for (int w = 0; w < g.n(); ++w)
        if (g.degree(w) % 2 == 0) {
            if (found >= 0)
                throw std::invalid_argument(std::string(op) + ": more than one even-degree vertex");
            found = w;
        }
    if (found < 0) throw std::invalid_argument(std::string(op) + ": no even-degree vertex");
    return found;
}

}  // namespace

MultiGraph dagger(const MultiGraph& g, int x, int eu, int ev, int copy) {
    auto certs = exactly_two_cycles(g, "dagger");
    if (eu > ev) std::swap(eu, ev);
    if (copy < 0 || copy >= g.multiplicity(eu, ev))
        throw std::invalid_argument("dagger: edge copy (" + std::to_string(eu) + "," +
                                    std::to_string(ev) + "," + std::to_string(copy) + ") not present");
    if (x == eu || x == ev) throw std::invalid_argument("dagger: edge is incident to x");
    int even = unique_even_degree_vertex(g, "dagger");
    if (even != x)
        throw std::invalid_argument("dagger: x must be the unique even-degree vertex (which is " +
                                    std::to_string(even) + ")");
    int on = 0;
    for (const auto& c : certs) {
        auto occ = c.edge_occurrences();
        if (std::find(occ.begin(), occ.end(), std::make_tuple(eu, ev, copy)) != occ.end()) ++on;
    }
    if (on != 1)
        throw std::invalid_argument("dagger: edge copy lies on " + std::to_string(on) +
                                    " of the two cycles, needs exactly 1");

    // g - e, then a Petersen-minus-vertex gadget: remove Petersen vertex 0
    // (neighbors 1, 4, 5), join eu-1', ev-4', and identify x with 5'.
    int n = g.n();
    MultiGraph out(n + 8);
    for (auto [a, b] : g.edges()) out.add_edge(a, b, g.multiplicity(a, b));
    out.remove_edge_copy(eu, ev);

    MultiGraph p = petersen();
    std::vector<int> map_p(10, -1);
    int next = n;
    for (int w = 1; w < 10; ++w) map_p[w] = (w == 5) ? x : next++;
    for (auto [a, b] : p.edges())
        if (a != 0 && b != 0) out.add_edge(map_p[a], map_p[b]);
    out.add_edge(eu, map_p[1]);
    out.add_edge(ev, map_p[4]);

    // postconditions, by enumeration
    auto out_certs = enumerate_ham_cycles(out);
    if (out_certs.size() != 2)
        throw validation_error("dagger: result has " + std::to_string(out_certs.size()) +
                               " hamiltonian cycles instead of 2");
    int even_out = unique_even_degree_vertex(out, "dagger(result)");
    if (even_out != x || out.degree(x) != g.degree(x) + 2)
        throw validation_error("dagger: even-degree vertex did not gain exactly 2");
    return out;
}

MultiGraph dagger_auto(const MultiGraph& g) {
    auto certs = exactly_two_cycles(g, "dagger");
    int x = unique_even_degree_vertex(g, "dagger");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int c = 0; c < g.multiplicity(u, v); ++c) {
                if (u == x || v == x) continue;
                int on = 0;
                for (const auto& cert : certs) {
                    auto occ = cert.edge_occurrences();
                    if (std::find(occ.begin(), occ.end(), std::make_tuple(u, v, c)) != occ.end()) ++on;
                }
                if (on == 1) return dagger(g, x, u, v, c);
            }
    throw std::invalid_argument("dagger: no admissible edge copy found");
}

MultiGraph double_rewire(const MultiGraph& g, std::optional<int> v_opt) {
    auto certs = exactly_two_cycles(g, "double_rewire");
    int n = g.n();

    auto cycle_neighbors_at = [&](const CycleCertificate& c, int v) {
        int len = int(c.verts.size());
        int i = int(std::find(c.verts.begin(), c.verts.end(), v) - c.verts.begin());
        int a = c.verts[(i + 1) % len], b = c.verts[(i + len - 1) % len];
        if (a > b) std::swap(a, b);
        return std::pair<int, int>{a, b};
    };

    std::vector<int> candidates;
    if (v_opt) candidates.push_back(*v_opt);
    else for (int v = 0; v < n; ++v) candidates.push_back(v);

    for (int v : candidates) {
        if (g.degree(v) != 3 || g.doubled(v) != 0) {
            if (v_opt) throw std::invalid_argument("double_rewire: vertex not cubic with simple edges");
            continue;
        }
        auto p1 = cycle_neighbors_at(certs[0], v);
        auto p2 = cycle_neighbors_at(certs[1], v);
        if (p1 == p2) {
            if (v_opt)
                throw std::invalid_argument("double_rewire: no valid (a,b,c) assignment at vertex " +
                                            std::to_string(v));
            continue;
        }
        // shared neighbor is role c; the cycle-1-only neighbor is a, cycle-2-only is b
        int c_nb = -1, a_nb = -1, b_nb = -1;
        for (int w : {p1.first, p1.second})
            if (w == p2.first || w == p2.second) c_nb = w;
            else a_nb = w;
        for (int w : {p2.first, p2.second})
            if (w != c_nb) b_nb = w;
        if (c_nb < 0) {
            // cycles disjoint at v would mean degree >= 4
            if (v_opt) throw std::invalid_argument("double_rewire: cycles share no edge at vertex");
            continue;
        }

        std::vector<int> ren;
        MultiGraph core = remove_vertex(g, v, &ren);
        int m = core.n();
        MultiGraph out(2 * m);
        for (auto [a, b] : core.edges()) {
            int mult = core.multiplicity(a, b);
            out.add_edge(a, b, mult);
            out.add_edge(a + m, b + m, mult);
        }
        int A = ren[a_nb], B = ren[b_nb], C = ren[c_nb];
        out.add_edge(A, C + m);
        out.add_edge(B, A + m);
        out.add_edge(C, B + m);

        if (count_ham_cycles_limited(out, 2) != 1)
            throw validation_error("double_rewire: result is not uniquely hamiltonian");
        return out;
    }
    throw std::invalid_argument("double_rewire: no vertex admits a valid (a,b,c) assignment");
}

MultiGraph expand_triangle(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("expand_triangle: bad vertex");
    if (g.degree(v) != 3 || g.doubled(v) != 0)
        throw std::invalid_argument("expand_triangle: vertex " + std::to_string(v) +
                                    " is not cubic with simple edges");
    int n = g.n();
    std::vector<int> nb;
    uint64_t mask = g.neighbors(v);
    while (mask) {
        nb.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    bool was_cubic = degree_profile(g).is_k_regular(3);
    BigInt before = was_cubic ? count_ham_cycles(g, Algo::backtrack).value : 0;

    MultiGraph out(n + 2);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(a, b, g.multiplicity(a, b));
    // v keeps its slot as one triangle corner, n and n+1 are the other two
    out.add_edge(v, nb[0]);
    out.add_edge(n, nb[1]);
    out.add_edge(n + 1, nb[2]);
    out.add_edge(v, n);
    out.add_edge(v, n + 1);
    out.add_edge(n, n + 1);

    if (was_cubic && count_ham_cycles(out, Algo::backtrack).value != before)
        throw validation_error("expand_triangle: cycle count changed on a cubic input");
    return out;
}

MultiGraph subdivide_cycle_edges(const MultiGraph& g, const CycleCertificate& h, bool keep_one) {
    if (!certificate_valid(g, h))
        throw std::invalid_argument("subdivide_cycle_edges: certificate is not a hamiltonian cycle of g");
    int n = g.n();
    int subdivided = keep_one ? n - 1 : n;
    MultiGraph out(n + subdivided);
    for (auto [a, b] : g.edges()) out.add_edge(a, b, g.multiplicity(a, b));
    int next = n;
    for (int i = 0; i < n; ++i) {
        if (keep_one && i == n - 1) continue;  // wraparound edge kept intact
        int u = h.verts[i], v = h.verts[(i + 1) % n];
        out.remove_edge_copy(u, v);
        out.add_edge(u, next);
        out.add_edge(next, v);
        ++next;
    }
    if (count_ham_cycles_limited(out, 2) != 1)
        throw validation_error("subdivide_cycle_edges: result is not uniquely hamiltonian");
    return out;
}

ChainResult chain_copies(const MultiGraph& g, const CycleCertificate& h, int eu, int ev, int m) {
    if (m < 2) throw std::invalid_argument("chain_copies: need m >= 2");
    if (!certificate_valid(g, h))
        throw std::invalid_argument("chain_copies: certificate is not a hamiltonian cycle of g");
    int n = g.n();
    if (eu > ev) std::swap(eu, ev);
    int step = -1;
    for (int i = 0; i < n && step < 0; ++i) {
        int a = h.verts[i], b = h.verts[(i + 1) % n];
        if (std::minmax(a, b) == std::minmax(eu, ev)) step = i;
    }
    if (step < 0) throw std::invalid_argument("chain_copies: edge not on the cycle");

    int exit_v = h.verts[step], entry_v = h.verts[(step + 1) % n];
    MultiGraph piece = g;
    piece.remove_edge_copy(eu, ev);

    MultiGraph out(n * m);
    for (int c = 0; c < m; ++c)
        for (auto [a, b] : piece.edges()) out.add_edge(a + c * n, b + c * n, piece.multiplicity(a, b));
    for (int c = 0; c < m; ++c) out.add_edge(exit_v + c * n, entry_v + ((c + 1) % m) * n);

    // stitched hamiltonian cycle: each copy's h-path from entry to exit,
    // ring edges in between
    CycleCertificate stitched;
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i) {
            int pos = (step + 1 + i) % n;
            stitched.verts.push_back(h.verts[pos] + c * n);
            bool last_of_copy = (i == n - 1);
            stitched.second_copy.push_back(last_of_copy ? 0 : h.second_copy[pos]);
        }
    stitched = stitched.canonical();
    if (!certificate_valid(out, stitched))
        throw validation_error("chain_copies: stitched cycle is not hamiltonian in the result");

    auto prof_in = degree_profile(g).histogram;
    auto prof_out = degree_profile(out).histogram;
    for (auto& [d, c] : prof_in) c *= m;
    if (prof_in != prof_out) throw validation_error("chain_copies: degree profile changed");
    return {out, stitched};
}

}  // namespace hc
