#ifndef GRAPH_EULER_GRAPH_ORACLE_HPP
#define GRAPH_EULER_GRAPH_ORACLE_HPP

#include "graph_euler/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graph_euler {

/// A finite multigraph given by half-edges: pairing[h] is the other half of
/// h's edge and vertex_of[h] the vertex it is attached to.  Edges are indexed
/// by their smaller half-edge in increasing order; `forest` lists edge indices.
struct HalfEdgeGraph {
    std::vector<int> pairing;
    std::vector<int> vertex_of;
    int vertex_count = 0;
    std::vector<int> forest;

    int half_edge_count() const { return static_cast<int>(pairing.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int euler_characteristic() const { return vertex_count - edge_count(); }

    /// (first, second) half-edges of every edge, first < second, sorted.
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int h = 0; h < half_edge_count(); ++h)
            if (h < pairing[h])
                out.emplace_back(h, pairing[h]);
        return out;
    }

    /// edge index of each half-edge
    std::vector<int> edge_of() const
    {
        std::vector<int> out(pairing.size(), -1);
        int e = 0;
        for (int h = 0; h < half_edge_count(); ++h)
            if (h < pairing[h]) {
                out[h] = e;
                out[pairing[h]] = e;
                ++e;
            }
        return out;
    }

    std::vector<int> degrees() const
    {
        std::vector<int> d(vertex_count, 0);
        for (int v : vertex_of)
            ++d[v];
        return d;
    }

    bool is_loop(int edge) const
    {
        auto [a, b] = edges()[edge];
        return vertex_of[a] == vertex_of[b];
    }

    int component_count() const;
    bool connected() const { return component_count() == 1; }

    /// Structural validity: pairing is a fixed-point-free involution, every
    /// vertex has valence >= 3, and the forest has no cycle.
    bool admissible() const;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

inline int permutation_sign(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

inline int cycle_count(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
            seen[j] = true;
    }
    return cycles;
}

} // namespace detail

inline int HalfEdgeGraph::component_count() const
{
    detail::UnionFind uf(vertex_count);
    int comps = vertex_count;
    for (int h = 0; h < half_edge_count(); ++h)
        if (uf.unite(vertex_of[h], vertex_of[pairing[h]]))
            --comps;
    return comps;
}

inline bool HalfEdgeGraph::admissible() const
{
    if (vertex_of.size() != pairing.size())
        return false;
    for (int h = 0; h < half_edge_count(); ++h) {
        const int p = pairing[h];
        if (p < 0 || p >= half_edge_count() || p == h || pairing[p] != h)
            return false;
        if (vertex_of[h] < 0 || vertex_of[h] >= vertex_count)
            return false;
    }
    for (int d : degrees())
        if (d < 3)
            return false;
    const auto es = edges();
    detail::UnionFind uf(vertex_count);
    for (int e : forest) {
        if (e < 0 || e >= static_cast<int>(es.size()))
            return false;
        if (!uf.unite(vertex_of[es[e].first], vertex_of[es[e].second]))
            return false;
    }
    return true;
}

/// Builds the graph with A[i][i] loops at i and A[i][j] parallel edges
/// between i and j; half-edges are numbered vertex by vertex.
inline HalfEdgeGraph graph_from_matrix(const std::vector<std::vector<int>>& a)
{
    const int n = static_cast<int>(a.size());
    HalfEdgeGraph g;
    g.vertex_count = n;
    std::vector<std::vector<int>> slots(n);
    int next = 0;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            deg[i] += (i == j ? 2 : 1) * a[i][j];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < deg[i]; ++k) {
            slots[i].push_back(next++);
            g.vertex_of.push_back(i);
        }
    g.pairing.assign(next, -1);
    std::vector<std::size_t> used(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < a[i][j]; ++k) {
                int x = slots[i][used[i]++];
                int y = slots[j][used[j]++];
                g.pairing[x] = y;
                g.pairing[y] = x;
            }
    return g;
}

/// Multiplicity matrix of a graph (loops on the diagonal).
inline std::vector<std::vector<int>> adjacency_matrix(const HalfEdgeGraph& g)
{
    std::vector<std::vector<int>> a(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (auto [x, y] : g.edges()) {
        int i = g.vertex_of[x], j = g.vertex_of[y];
        if (i == j)
            ++a[i][i];
        else {
            ++a[i][j];
            ++a[j][i];
        }
    }
    return a;
}

/// First canonical form: the lexicographically least upper triangle of the
/// multiplicity matrix over all vertex orders.  Ignores the forest.
inline std::vector<int> matrix_canonical_form(const std::vector<std::vector<int>>& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        code.push_back(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                code.push_back(a[perm[i]][perm[j]]);
        if (best.empty() || code < best)
            best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace detail {

// Calls visit(vertex_map, half_edge_map) for every relabeling in which the
// vertices are listed by nondecreasing degree and the half-edges of each
// vertex occupy a consecutive block in that order.  Returning false from
// visit stops the search.
inline void for_each_degree_sorted_labeling(const HalfEdgeGraph& g,
                                            const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit)
{
    const auto deg = g.degrees();
    std::vector<std::vector<int>> fiber(g.vertex_count);
    for (int h = 0; h < g.half_edge_count(); ++h)
        fiber[g.vertex_of[h]].push_back(h);

    std::vector<int> order(g.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b] || (deg[a] == deg[b] && a < b); });
    // permute only within blocks of equal degree
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < g.vertex_count;) {
        int j = i;
        while (j < g.vertex_count && deg[order[j]] == deg[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    std::vector<int> vertex_map(g.vertex_count), half_map(g.half_edge_count());
    bool stop = false;

    std::function<void(std::size_t)> permute_blocks;
    std::function<void(int, int)> permute_fibers;

    permute_fibers = [&](int pos, int offset) {
        if (stop)
            return;
        if (pos == g.vertex_count) {
            if (!visit(vertex_map, half_map))
                stop = true;
            return;
        }
        auto hs = fiber[order[pos]];
        std::sort(hs.begin(), hs.end());
        do {
            for (std::size_t k = 0; k < hs.size(); ++k)
                half_map[hs[k]] = offset + static_cast<int>(k);
            permute_fibers(pos + 1, offset + static_cast<int>(hs.size()));
            if (stop)
                return;
        } while (std::next_permutation(hs.begin(), hs.end()));
    };

    permute_blocks = [&](std::size_t b) {
        if (stop)
            return;
        if (b == blocks.size()) {
            for (int i = 0; i < g.vertex_count; ++i)
                vertex_map[order[i]] = i;
            permute_fibers(0, 0);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            permute_blocks(b + 1);
            if (stop)
                return;
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    permute_blocks(0);
}

inline HalfEdgeGraph relabel(const HalfEdgeGraph& g, const std::vector<int>& vertex_map, const std::vector<int>& half_map)
{
    HalfEdgeGraph out;
    out.vertex_count = g.vertex_count;
    out.pairing.assign(g.pairing.size(), -1);
    out.vertex_of.assign(g.vertex_of.size(), -1);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        out.pairing[half_map[h]] = half_map[g.pairing[h]];
        out.vertex_of[half_map[h]] = vertex_map[g.vertex_of[h]];
    }
    const auto old_edges = g.edges();
    const auto new_edge_of = out.edge_of();
    for (int e : g.forest)
        out.forest.push_back(new_edge_of[half_map[old_edges[e].first]]);
    std::sort(out.forest.begin(), out.forest.end());
    return out;
}

inline std::vector<int> encode(const HalfEdgeGraph& g)
{
    std::vector<int> code;
    code.push_back(g.vertex_count);
    code.push_back(g.half_edge_count());
    code.insert(code.end(), g.vertex_of.begin(), g.vertex_of.end());
    code.insert(code.end(), g.pairing.begin(), g.pairing.end());
    code.push_back(static_cast<int>(g.forest.size()));
    code.insert(code.end(), g.forest.begin(), g.forest.end());
    return code;
}

} // namespace detail

inline constexpr int max_oracle_half_edges = 14;

/// Second canonical form: the least encoding of (vertex_of, pairing, forest)
/// over all relabelings with vertices sorted by degree.
inline std::vector<int> canonical_form(const HalfEdgeGraph& g)
{
    if (g.half_edge_count() > max_oracle_half_edges)
        throw std::length_error("canonical_form: graph too large for brute force");
    std::vector<int> best;
    detail::for_each_degree_sorted_labeling(g, [&](const std::vector<int>& vm, const std::vector<int>& hm) {
        auto code = detail::encode(detail::relabel(g, vm, hm));
        if (best.empty() || code < best)
            best = std::move(code);
        return true;
    });
    return best;
}

/// The relabeled copy of g whose encoding is canonical_form(g).
inline HalfEdgeGraph canonicalize(const HalfEdgeGraph& g)
{
    std::vector<int> best;
    HalfEdgeGraph out;
    detail::for_each_degree_sorted_labeling(g, [&](const std::vector<int>& vm, const std::vector<int>& hm) {
        auto r = detail::relabel(g, vm, hm);
        auto code = detail::encode(r);
        if (best.empty() || code < best) {
            best = std::move(code);
            out = std::move(r);
        }
        return true;
    });
    return out;
}

inline HalfEdgeGraph disjoint_union(const HalfEdgeGraph& a, const HalfEdgeGraph& b)
{
    HalfEdgeGraph g = a;
    const int shift_h = a.half_edge_count();
    for (int h = 0; h < b.half_edge_count(); ++h) {
        g.pairing.push_back(b.pairing[h] + shift_h);
        g.vertex_of.push_back(b.vertex_of[h] + a.vertex_count);
    }
    g.vertex_count = a.vertex_count + b.vertex_count;
    g.forest = a.forest;
    for (int e : b.forest)
        g.forest.push_back(e + a.edge_count());
    return g;
}

/// One admissible graph per isomorphism class with Euler characteristic chi
/// (connected and disconnected), found by enumerating multiplicity matrices.
inline std::vector<HalfEdgeGraph> enumerate_graphs(int chi, int min_chi = -2)
{
    if (chi >= 0)
        throw std::invalid_argument("enumerate_graphs: admissible graphs have negative Euler characteristic");
    if (chi < min_chi)
        throw std::invalid_argument("enumerate_graphs: chi = " + std::to_string(chi) + " is below the enumeration guard "
                                    + std::to_string(min_chi));
    const int n = -chi;
    // sum of degrees 2E >= 3V with E = V + n gives V <= 2n
    std::map<std::vector<int>, HalfEdgeGraph> classes;
    for (int v = 1; v <= 2 * n; ++v) {
        const int e = v + n;
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j)
                cells.emplace_back(i, j);
        std::vector<std::vector<int>> a(v, std::vector<int>(v, 0));
        std::function<void(std::size_t, int)> fill = [&](std::size_t c, int left) {
            if (c == cells.size()) {
                if (left != 0)
                    return;
                for (int i = 0; i < v; ++i) {
                    int d = 0;
                    for (int j = 0; j < v; ++j)
                        d += (i == j ? 2 : 1) * a[i][j];
                    if (d < 3)
                        return;
                }
                auto key = matrix_canonical_form(a);
                if (!classes.count(key))
                    classes.emplace(std::move(key), graph_from_matrix(a));
                return;
            }
            auto [i, j] = cells[c];
            for (int k = 0; k <= left; ++k) {
                a[i][j] = a[j][i] = k;
                fill(c + 1, left - k);
            }
            a[i][j] = a[j][i] = 0;
        };
        fill(0, e);
    }
    std::vector<HalfEdgeGraph> out;
    for (auto& [key, g] : classes)
        out.push_back(std::move(g));
    return out;
}

/// Disconnected classes at chi = -2, built as unordered pairs (with
/// repetition) of connected chi = -1 classes.
inline std::vector<HalfEdgeGraph> disconnected_pairs_chi2()
{
    std::vector<HalfEdgeGraph> connected;
    for (auto& g : enumerate_graphs(-1))
        if (g.connected())
            connected.push_back(g);
    std::vector<HalfEdgeGraph> out;
    for (std::size_t i = 0; i < connected.size(); ++i)
        for (std::size_t j = i; j < connected.size(); ++j)
            out.push_back(disjoint_union(connected[i], connected[j]));
    return out;
}

/// Every acyclic set of edges (loops excluded), including the empty set.
inline std::vector<std::vector<int>> subforests(const HalfEdgeGraph& g)
{
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m > 30)
        throw std::length_error("subforests: too many edges");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        detail::UnionFind uf(g.vertex_count);
        bool acyclic = true;
        std::vector<int> chosen;
        for (int e = 0; e < m && acyclic; ++e) {
            if (!(mask >> e & 1u))
                continue;
            chosen.push_back(e);
            acyclic = uf.unite(g.vertex_of[es[e].first], g.vertex_of[es[e].second]);
        }
        if (acyclic)
            out.push_back(std::move(chosen));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    return out;
}

/// A half-edge permutation: perm[h] is the image of h.
struct GraphAutomorphism {
    std::vector<int> perm;

    friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
    friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;

    GraphAutomorphism then(const GraphAutomorphism& next) const
    {
        GraphAutomorphism out{std::vector<int>(perm.size())};
        for (std::size_t h = 0; h < perm.size(); ++h)
            out.perm[h] = next.perm[static_cast<std::size_t>(perm[h])];
        return out;
    }

    GraphAutomorphism inverse() const
    {
        GraphAutomorphism out{std::vector<int>(perm.size())};
        for (std::size_t h = 0; h < perm.size(); ++h)
            out.perm[static_cast<std::size_t>(perm[h])] = static_cast<int>(h);
        return out;
    }
};

/// Edge permutation induced by a half-edge permutation.
inline std::vector<int> induced_edge_permutation(const HalfEdgeGraph& g, const GraphAutomorphism& a)
{
    const auto es = g.edges();
    const auto edge_of = g.edge_of();
    std::vector<int> out(es.size());
    for (std::size_t e = 0; e < es.size(); ++e)
        out[e] = edge_of[a.perm[es[e].first]];
    return out;
}

inline bool preserves_forest(const HalfEdgeGraph& g, const GraphAutomorphism& a)
{
    const auto ep = induced_edge_permutation(g, a);
    std::vector<bool> in_forest(ep.size(), false);
    for (int e : g.forest)
        in_forest[e] = true;
    for (int e : g.forest)
        if (!in_forest[ep[e]])
            return false;
    return true;
}

/// All automorphisms of (G, forest): half-edge permutations that commute
/// with the pairing, carry vertex fibers onto vertex fibers and map forest
/// edges to forest edges.
inline std::vector<GraphAutomorphism> automorphism_group(const HalfEdgeGraph& g)
{
    if (g.half_edge_count() > max_oracle_half_edges)
        throw std::length_error("automorphism_group: more than " + std::to_string(max_oracle_half_edges) + " half-edges");
    const auto deg = g.degrees();
    std::vector<std::vector<int>> fiber(g.vertex_count);
    for (int h = 0; h < g.half_edge_count(); ++h)
        fiber[g.vertex_of[h]].push_back(h);

    std::vector<GraphAutomorphism> out;
    std::vector<int> vmap(g.vertex_count, -1);
    std::vector<bool> vused(g.vertex_count, false);
    std::vector<int> perm(g.half_edge_count(), -1);

    std::function<void(int)> map_fibers;
    std::function<void(int)> map_vertices = [&](int v) {
        if (v == g.vertex_count) {
            map_fibers(0);
            return;
        }
        for (int w = 0; w < g.vertex_count; ++w) {
            if (vused[w] || deg[w] != deg[v])
                continue;
            vused[w] = true;
            vmap[v] = w;
            map_vertices(v + 1);
            vused[w] = false;
        }
    };
    map_fibers = [&](int v) {
        if (v == g.vertex_count) {
            for (int h = 0; h < g.half_edge_count(); ++h)
                if (perm[g.pairing[h]] != g.pairing[perm[h]])
                    return;
            GraphAutomorphism a{perm};
            if (preserves_forest(g, a))
                out.push_back(std::move(a));
            return;
        }
        auto target = fiber[vmap[v]];
        std::sort(target.begin(), target.end());
        do {
            for (std::size_t k = 0; k < target.size(); ++k)
                perm[fiber[v][k]] = target[k];
            map_fibers(v + 1);
        } while (std::next_permutation(target.begin(), target.end()));
    };
    map_vertices(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of cycles of the automorphism on the forest edges, e_alpha(Phi).
inline int forest_edge_orbits(const HalfEdgeGraph& g, const GraphAutomorphism& a)
{
    const auto ep = induced_edge_permutation(g, a);
    std::vector<int> index(ep.size(), -1);
    for (std::size_t i = 0; i < g.forest.size(); ++i)
        index[g.forest[i]] = static_cast<int>(i);
    std::vector<int> restricted(g.forest.size());
    for (std::size_t i = 0; i < g.forest.size(); ++i)
        restricted[i] = index[ep[g.forest[i]]];
    return detail::cycle_count(restricted);
}

/// Sign of the induced permutation of the forest edges.
inline int forest_edge_sign(const HalfEdgeGraph& g, const GraphAutomorphism& a)
{
    const auto ep = induced_edge_permutation(g, a);
    std::vector<int> index(ep.size(), -1);
    for (std::size_t i = 0; i < g.forest.size(); ++i)
        index[g.forest[i]] = static_cast<int>(i);
    std::vector<int> restricted(g.forest.size());
    for (std::size_t i = 0; i < g.forest.size(); ++i)
        restricted[i] = index[ep[g.forest[i]]];
    return detail::permutation_sign(restricted);
}

/// The odd-orientation weight of an automorphism: the sign of its action on
/// the components of the forest, on the edges outside the forest, the
/// orientation flips of those edges, and (-1)^{e_alpha(Phi)}.
inline int odd_weight(const HalfEdgeGraph& g, const GraphAutomorphism& a)
{
    const auto es = g.edges();
    const auto edge_of = g.edge_of();
    std::vector<bool> in_forest(es.size(), false);
    for (int e : g.forest)
        in_forest[e] = true;

    detail::UnionFind uf(g.vertex_count);
    for (int e : g.forest)
        uf.unite(g.vertex_of[es[e].first], g.vertex_of[es[e].second]);
    std::map<int, int> comp_index;
    for (int v = 0; v < g.vertex_count; ++v)
        comp_index.emplace(uf.find(v), static_cast<int>(comp_index.size()));
    std::vector<int> vmap(g.vertex_count);
    for (int h = 0; h < g.half_edge_count(); ++h)
        vmap[g.vertex_of[h]] = g.vertex_of[a.perm[h]];
    std::vector<int> comp_perm(comp_index.size());
    for (int v = 0; v < g.vertex_count; ++v)
        comp_perm[comp_index[uf.find(v)]] = comp_index[uf.find(vmap[v])];

    std::vector<int> outside;
    std::vector<int> index(es.size(), -1);
    for (std::size_t e = 0; e < es.size(); ++e)
        if (!in_forest[e]) {
            index[e] = static_cast<int>(outside.size());
            outside.push_back(static_cast<int>(e));
        }
    std::vector<int> outside_perm(outside.size());
    int flips = 1;
    for (std::size_t i = 0; i < outside.size(); ++i) {
        auto [first, second] = es[outside[i]];
        const int image = edge_of[a.perm[first]];
        outside_perm[i] = index[image];
        if (a.perm[first] != es[image].first)
            flips = -flips;
    }
    const int orbit_sign = forest_edge_orbits(g, a) % 2 ? -1 : 1;
    return detail::permutation_sign(comp_perm) * detail::permutation_sign(outside_perm) * flips * orbit_sign;
}

/// A forested graph up to isomorphism, with the data the census reports.
struct ForestedClass {
    HalfEdgeGraph graph; // graph.forest is the chosen forest
    std::size_t aut_order = 0;
    bool even = false;        // no automorphism acts oddly on the forest edges
    int even_weight_sum = 0;  // sum over Aut(G, Phi) of (-1)^{e_alpha(Phi)}
    int odd_weight_sum = 0;   // sum over Aut(G, Phi) of odd_weight
};

/// All forested graphs with Euler characteristic chi, one per isomorphism
/// class, in a deterministic order.
inline std::vector<ForestedClass> forested_classes(int chi)
{
    std::vector<ForestedClass> out;
    for (const auto& base : enumerate_graphs(chi)) {
        std::set<std::vector<int>> seen;
        for (auto& phi : subforests(base)) {
            HalfEdgeGraph g = base;
            g.forest = phi;
            auto key = canonical_form(g);
            if (!seen.insert(std::move(key)).second)
                continue;
            ForestedClass c;
            const auto aut = automorphism_group(g);
            c.aut_order = aut.size();
            c.even = true;
            for (auto& a : aut) {
                if (forest_edge_sign(g, a) < 0)
                    c.even = false;
                c.even_weight_sum += forest_edge_orbits(g, a) % 2 ? -1 : 1;
                c.odd_weight_sum += odd_weight(g, a);
            }
            c.graph = std::move(g);
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace detail {

inline Rational oracle_sum(std::int64_t n, bool odd, bool connected_only = false)
{
    if (n < 1 || n > 2)
        throw std::invalid_argument("graph oracle: n must be 1 or 2");
    Rational total = 0;
    for (const auto& g : enumerate_graphs(static_cast<int>(-n))) {
        if (connected_only && !g.connected())
            continue;
        const auto aut = automorphism_group(g);
        Integer sum = 0;
        for (auto& phi : subforests(g)) {
            HalfEdgeGraph f = g;
            f.forest = phi;
            for (auto& a : aut) {
                if (!preserves_forest(f, a))
                    continue;
                sum += odd ? odd_weight(f, a) : (forest_edge_orbits(f, a) % 2 ? -1 : 1);
            }
        }
        total += Rational(sum) / Rational(static_cast<long>(aut.size()));
    }
    return total;
}

} // namespace detail

/// Direct evaluation of sum_{[G, Phi]} 1/|Aut(G, Phi)| sum_alpha (-1)^{e_alpha(Phi)}
/// over forested graphs with chi = -n.  Each class is reached through the
/// orbit of Phi under Aut(G), which is where the 1/|Aut G| comes from.
inline Rational e_hat_oracle(std::int64_t n) { return detail::oracle_sum(n, false); }

inline Rational e_hat_odd_oracle(std::int64_t n) { return detail::oracle_sum(n, true); }

/// Same double sum restricted to connected graphs: e(Out F_{n+1}).
inline Rational e_out_oracle(std::int64_t n) { return detail::oracle_sum(n, false, true); }

/// sum over even forested classes of (-1)^{e(Phi)}, optionally connected only.
inline Integer even_class_count(std::int64_t n, bool connected_only)
{
    Integer total = 0;
    for (auto& c : forested_classes(static_cast<int>(-n))) {
        if (!c.even || (connected_only && !c.graph.connected()))
            continue;
        total += c.graph.forest.size() % 2 ? -1 : 1;
    }
    return total;
}

/// Census rows for inspection and regression snapshots.
inline nlohmann::json census_json(int chi)
{
    auto rows = nlohmann::json::array();
    for (auto& c : forested_classes(chi)) {
        auto deg = c.graph.degrees();
        std::sort(deg.begin(), deg.end(), std::greater<>());
        rows.push_back({{"chi", chi},
                        {"connected", c.graph.connected()},
                        {"vertexDegrees", deg},
                        {"edgeCount", c.graph.edge_count()},
                        {"forestSize", c.graph.forest.size()},
                        {"autOrder", c.aut_order},
                        {"evenFlag", c.even}});
    }
    return rows;
}

} // namespace graph_euler

#endif
