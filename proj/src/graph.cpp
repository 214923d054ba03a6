#include "unienergy/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace unienergy {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::MultipleCycles: return "MultipleCycles";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
        case ErrorCode::OutOfClass: return "OutOfClass";
        case ErrorCode::NotAForest: return "NotAForest";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::PendantEdge: return "PendantEdge";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::MismatchedOrder: return "MismatchedOrder";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

LabeledGraph LabeledGraph::from_edges(int n, std::vector<Edge> es) {
    LabeledGraph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

void LabeledGraph::add_edge(int u, int v) {
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::InvalidGraph, "vertex index out of range");
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) throw Error(ErrorCode::InvalidGraph, "duplicate edge");
    edges.insert(it, e);
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool LabeledGraph::has_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n == b.n && a.edges == b.edges;
}

int max_degree(const LabeledGraph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            out[id].push_back(v);
            for (int w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const LabeledGraph& g) {
    if (g.n <= 1) return true;
    return connected_components(g).size() == 1;
}

bool is_bipartite(const LabeledGraph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.adj[v]) {
                if (color[w] < 0) {
                    color[w] = color[v] ^ 1;
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_forest(const LabeledGraph& g) {
    return g.edge_count() == g.n - static_cast<int>(connected_components(g).size());
}

LabeledGraph remove_edge(const LabeledGraph& g, Edge e) {
    Edge ne = make_edge(e.first, e.second);
    if (!g.has_edge(ne.first, ne.second)) throw Error(ErrorCode::InvalidGraph, "edge not present");
    LabeledGraph out(g.n);
    for (auto ed : g.edges)
        if (ed != ne) out.add_edge(ed.first, ed.second);
    return out;
}

LabeledGraph remove_vertices(const LabeledGraph& g, const std::vector<int>& vs) {
    std::vector<char> drop(g.n, 0);
    for (int v : vs) {
        if (v < 0 || v >= g.n) throw Error(ErrorCode::InvalidGraph, "vertex out of range");
        drop[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep) {
    std::vector<int> newid(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    LabeledGraph out(static_cast<int>(keep.size()));
    for (auto [u, v] : g.edges)
        if (newid[u] >= 0 && newid[v] >= 0) out.add_edge(newid[u], newid[v]);
    return out;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
    LabeledGraph out(a.n + b.n);
    for (auto [u, v] : a.edges) out.add_edge(u, v);
    for (auto [u, v] : b.edges) out.add_edge(u + a.n, v + a.n);
    return out;
}

LabeledGraph permute(const LabeledGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw Error(ErrorCode::InvalidGraph, "permutation size mismatch");
    LabeledGraph out(g.n);
    for (auto [u, v] : g.edges) out.add_edge(perm[u], perm[v]);
    return out;
}

std::optional<UnicyclicWitness> girth_and_cycle(const LabeledGraph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "girth_and_cycle needs a connected graph");
    if (g.n == 0 || g.edge_count() == g.n - 1) return std::nullopt;  // tree
    if (g.edge_count() > g.n)
        throw Error(ErrorCode::MultipleCycles, "more edges than vertices");

    // Exactly n edges: peel leaves until only the cycle remains.
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::deque<int> q;
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (deg[v] == 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        removed[v] = 1;
        for (int w : g.adj[v])
            if (!removed[w] && --deg[w] == 1) q.push_back(w);
    }

    int start = -1;
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) { start = v; break; }

    UnicyclicWitness w;
    int prev = -1, cur = start;
    do {
        w.cycle_vertices.push_back(cur);
        int next = -1;
        for (int x : g.adj[cur])
            if (!removed[x] && x != prev) { next = x; break; }
        prev = cur;
        cur = next;
    } while (cur != start);
    w.girth = static_cast<int>(w.cycle_vertices.size());
    return w;
}

namespace {

// Exhaustive matching search over the unmatched-vertex bitmask, memoized.
// Intended scale: n <= 64 with sparse graphs (the Delta <= 3 enumeration
// classes); the visited state space stays small there.
struct MatchSearch {
    const LabeledGraph& g;
    std::unordered_map<std::uint64_t, bool> memo;

    explicit MatchSearch(const LabeledGraph& g_) : g(g_) {}

    bool feasible(std::uint64_t mask) {
        if (mask == 0) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        bool ok = false;
        for (int u : g.adj[v]) {
            if (!(mask >> u & 1)) continue;
            if (feasible(mask & ~(1ull << v) & ~(1ull << u))) { ok = true; break; }
        }
        memo.emplace(mask, ok);
        return ok;
    }
};

}  // namespace

std::optional<Matching> has_perfect_matching(const LabeledGraph& g) {
    if (g.n % 2 != 0) return std::nullopt;
    if (g.n == 0) return Matching{};
    if (g.n > 64) throw Error(ErrorCode::SizeLimit, "perfect matching search limited to n <= 64");
    MatchSearch ms(g);
    std::uint64_t full = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    if (!ms.feasible(full)) return std::nullopt;
    Matching m;
    std::uint64_t mask = full;
    while (mask) {
        int v = std::countr_zero(mask);
        for (int u : g.adj[v]) {
            if (!(mask >> u & 1)) continue;
            std::uint64_t next = mask & ~(1ull << v) & ~(1ull << u);
            if (ms.feasible(next)) {
                m.edges.push_back(make_edge(v, u));
                mask = next;
                break;
            }
        }
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

namespace {

void collect_matchings(const LabeledGraph& g, std::uint64_t mask, std::vector<Edge>& cur,
                       std::vector<Matching>& out) {
    if (mask == 0) {
        Matching m{cur};
        std::sort(m.edges.begin(), m.edges.end());
        out.push_back(std::move(m));
        return;
    }
    int v = std::countr_zero(mask);
    for (int u : g.adj[v]) {
        if (!(mask >> u & 1)) continue;
        cur.push_back(make_edge(v, u));
        collect_matchings(g, mask & ~(1ull << v) & ~(1ull << u), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Matching> all_perfect_matchings(const LabeledGraph& g) {
    if (g.n % 2 != 0 || g.n == 0) return g.n == 0 ? std::vector<Matching>{Matching{}} : std::vector<Matching>{};
    if (g.n > 64) throw Error(ErrorCode::SizeLimit, "matching enumeration limited to n <= 64");
    std::vector<Matching> out;
    std::vector<Edge> cur;
    std::uint64_t full = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    collect_matchings(g, full, cur, out);
    return out;
}

std::vector<int> distances_to_cycle(const LabeledGraph& g, const UnicyclicWitness& w) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q;
    for (int v : w.cycle_vertices) {
        dist[v] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int x : g.adj[v])
            if (dist[x] < 0) {
                dist[x] = dist[v] + 1;
                q.push_back(x);
            }
    }
    return dist;
}

std::pair<int, int> cycle_distance_profile(const LabeledGraph& g, const UnicyclicWitness& w) {
    auto dist = distances_to_cycle(g, w);
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, dist[v]);
    int t = 0;
    for (int v = 0; v < g.n; ++v)
        if (dist[v] == d) ++t;
    return {d, t};
}

}  // namespace unienergy
