#ifndef UNIENERGY_GRAPH_HPP
#define UNIENERGY_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "unienergy/error.hpp"

namespace unienergy {

// Unordered edge, stored with u < v.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Treated as immutable once built; all operations below are pure.
struct LabeledGraph {
    int n = 0;
    std::vector<Edge> edges;              // normalized, sorted, unique
    std::vector<std::vector<int>> adj;    // sorted neighbor lists

    LabeledGraph() = default;
    explicit LabeledGraph(int n_) : n(n_), adj(n_) {
        if (n_ < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    }

    static LabeledGraph from_edges(int n, std::vector<Edge> es);

    void add_edge(int u, int v);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

bool operator==(const LabeledGraph& a, const LabeledGraph& b);

struct UnicyclicWitness {
    std::vector<int> cycle_vertices;  // in traversal order around the cycle
    int girth = 0;
};

struct Matching {
    std::vector<Edge> edges;  // pairwise vertex-disjoint
    bool is_perfect_for(int n) const { return static_cast<int>(edges.size()) * 2 == n; }
};

int max_degree(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);
std::vector<std::vector<int>> connected_components(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);
bool is_forest(const LabeledGraph& g);

// Structure modifications. All return new graphs; remove_vertices compacts
// labels (order of survivors preserved).
LabeledGraph remove_edge(const LabeledGraph& g, Edge e);
LabeledGraph remove_vertices(const LabeledGraph& g, const std::vector<int>& vs);
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep);
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);
LabeledGraph permute(const LabeledGraph& g, const std::vector<int>& perm);

// The unique cycle of a connected unicyclic graph; empty for a tree.
// Throws Disconnected / MultipleCycles per the graph's shape.
std::optional<UnicyclicWitness> girth_and_cycle(const LabeledGraph& g);

// Some perfect matching if one exists (deterministic witness), else nullopt.
std::optional<Matching> has_perfect_matching(const LabeledGraph& g);

// All perfect matchings; intended for small graphs (enumeration scale).
std::vector<Matching> all_perfect_matchings(const LabeledGraph& g);

// d = max distance from any vertex to the cycle, t = number of vertices
// attaining d.
std::pair<int, int> cycle_distance_profile(const LabeledGraph& g, const UnicyclicWitness& w);

// Distance from every vertex to the cycle vertex set (BFS).
std::vector<int> distances_to_cycle(const LabeledGraph& g, const UnicyclicWitness& w);

}  // namespace unienergy

#endif
